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

#ifndef MATROIDKL_INVARIANT_KIND_HPP_
#define MATROIDKL_INVARIANT_KIND_HPP_

#include <optional>
#include <string>
#include <string_view>

namespace matroidkl {

// P: Kazhdan-Lusztig, Z: Z-polynomial, Q: inverse KL, Y: inverse Z.
enum class PolyKind { kP, kZ, kQ, kY };

inline std::string to_string(PolyKind kind) {
  switch (kind) {
    case PolyKind::kP: return "P";
    case PolyKind::kZ: return "Z";
    case PolyKind::kQ: return "Q";
    case PolyKind::kY: return "Y";
  }
  return "?";
}

inline std::optional<PolyKind> parse_poly_kind(std::string_view s) {
  if (s == "P") return PolyKind::kP;
  if (s == "Z") return PolyKind::kZ;
  if (s == "Q") return PolyKind::kQ;
  if (s == "Y") return PolyKind::kY;
  return std::nullopt;
}

// Q and Y share every deletion-type formula; closed family formulas are only
// stated for these two.
inline bool is_inverse_kind(PolyKind kind) {
  return kind == PolyKind::kQ || kind == PolyKind::kY;
}

}  // namespace matroidkl

#endif  // MATROIDKL_INVARIANT_KIND_HPP_
