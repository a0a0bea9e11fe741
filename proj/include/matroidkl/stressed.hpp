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

// Stressed subsets: A such that both M|A and M/A are uniform.

#ifndef MATROIDKL_STRESSED_HPP_
#define MATROIDKL_STRESSED_HPP_

#include <map>

#include "matroidkl/element_set.hpp"
#include "matroidkl/errors.hpp"
#include "matroidkl/exactpoly.hpp"
#include "matroidkl/matroid.hpp"

namespace matroidkl {

// Upper bound on the number of candidate subsets any single enumeration may
// visit.
inline constexpr long long kStressedCandidateCap = 100000;

// rank r -> number of stressed subsets of rank r and size r + 1.
using StressedProfile = std::map<int, long long>;

namespace detail {

inline void check_candidate_count(int n, int k) {
  if (binomial(n, k) > kStressedCandidateCap) {
    throw CapacityError("enumerating " + binomial(n, k).str() + " subsets of size " +
                        std::to_string(k) + " exceeds the cap of " +
                        std::to_string(kStressedCandidateCap));
  }
}

// M|A is uniform of rank r: every r-subset of A is independent.
inline bool restriction_is_uniform(const Matroid& m, ElementSet a, int r) {
  check_candidate_count(cardinality(a), r);
  return for_each_subset_of_size(a, r, [&](ElementSet s) { return m.rank(s) == r; });
}

// M/A is uniform: every k'-subset of E − A is independent in the contraction.
inline bool contraction_is_uniform(const Matroid& m, ElementSet a, int rank_a) {
  const ElementSet rest = m.ground() & ~a;
  const int k = m.rank() - rank_a;
  check_candidate_count(cardinality(rest), k);
  return for_each_subset_of_size(rest, k,
                                 [&](ElementSet s) { return m.rank(a | s) - rank_a == k; });
}

}  // namespace detail

inline bool is_stressed(const Matroid& m, ElementSet a) {
  const int r = m.rank(a);
  return detail::restriction_is_uniform(m, a, r) && detail::contraction_is_uniform(m, a, r);
}

// Number of stressed A with |A| = h and rk(A) = r.
inline long long count_stressed(const Matroid& m, int r, int h) {
  if (h < 0 || h > m.size()) throw PreconditionError("count_stressed: size out of range");
  detail::check_candidate_count(m.size(), h);
  long long count = 0;
  for_each_subset_of_size(m.ground(), h, [&](ElementSet a) {
    if (m.rank(a) == r && is_stressed(m, a)) ++count;
    return true;
  });
  return count;
}

// λ_r for every r below the rank of M with a nonzero count. Spanning sets
// of size rk M + 1 are stressed trivially and never enter a correction.
inline StressedProfile stressed_profile(const Matroid& m) {
  StressedProfile profile;
  for (int r = 0; r < m.rank() && r + 1 <= m.size(); ++r) {
    long long c = count_stressed(m, r, r + 1);
    if (c != 0) profile[r] = c;
  }
  return profile;
}

}  // namespace matroidkl

#endif  // MATROIDKL_STRESSED_HPP_
