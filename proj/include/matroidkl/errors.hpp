// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROIDKL_ERRORS_HPP_
#define MATROIDKL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace matroidkl {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed construction parameters or input documents.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its precondition (coloop pivot, zero
// polynomial where a degree is required, incomparable flats, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The input is too large for the requested computation.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace matroidkl

#endif  // MATROIDKL_ERRORS_HPP_
