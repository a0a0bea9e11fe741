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

#ifndef MATROIDKL_MATROIDKL_HPP_
#define MATROIDKL_MATROIDKL_HPP_

#include "matroidkl/cache.hpp"
#include "matroidkl/conjectures.hpp"
#include "matroidkl/deletion.hpp"
#include "matroidkl/element_set.hpp"
#include "matroidkl/errors.hpp"
#include "matroidkl/exactpoly.hpp"
#include "matroidkl/families.hpp"
#include "matroidkl/incidence.hpp"
#include "matroidkl/invariant_kind.hpp"
#include "matroidkl/json_io.hpp"
#include "matroidkl/klcore.hpp"
#include "matroidkl/lattice.hpp"
#include "matroidkl/matroid.hpp"
#include "matroidkl/stressed.hpp"

#endif  // MATROIDKL_MATROIDKL_HPP_
