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

#ifndef MATROIDKL_ELEMENT_SET_HPP_
#define MATROIDKL_ELEMENT_SET_HPP_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace matroidkl {

// Subsets of a ground set {0, ..., n-1}, n <= 64, as machine words.
using ElementSet = std::uint64_t;

inline constexpr int kMaxGroundSet = 64;

constexpr ElementSet singleton(int e) { return ElementSet{1} << e; }

constexpr ElementSet full_set(int n) {
  return n >= 64 ? ~ElementSet{0} : (ElementSet{1} << n) - 1;
}

constexpr int cardinality(ElementSet s) { return std::popcount(s); }

constexpr bool contains(ElementSet s, int e) { return (s >> e) & 1U; }

constexpr bool is_subset(ElementSet a, ElementSet b) { return (a & ~b) == 0; }

constexpr int lowest_element(ElementSet s) { return std::countr_zero(s); }

inline std::vector<int> elements_of(ElementSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality(s)));
  while (s != 0) {
    out.push_back(lowest_element(s));
    s &= s - 1;
  }
  return out;
}

inline ElementSet set_of(const std::vector<int>& elements) {
  ElementSet s = 0;
  for (int e : elements) s |= singleton(e);
  return s;
}

inline std::string format_set(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

// Calls fn(subset) for every k-element subset of `universe`, in
// lexicographic order of element indices. Stops early when fn returns false.
template <typename Fn>
bool for_each_subset_of_size(ElementSet universe, int k, Fn&& fn) {
  std::vector<int> elems = elements_of(universe);
  const int m = static_cast<int>(elems.size());
  if (k < 0 || k > m) return true;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    ElementSet s = 0;
    for (int i : idx) s |= singleton(elems[static_cast<std::size_t>(i)]);
    if (!fn(s)) return false;
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - k + pos) --pos;
    if (pos < 0) return true;
    ++idx[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i) {
      idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
}

}  // namespace matroidkl

#endif  // MATROIDKL_ELEMENT_SET_HPP_
