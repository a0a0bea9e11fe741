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

#ifndef MATROIDKL_LATTICE_HPP_
#define MATROIDKL_LATTICE_HPP_

#include <algorithm>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "matroidkl/element_set.hpp"
#include "matroidkl/errors.hpp"
#include "matroidkl/exactpoly.hpp"
#include "matroidkl/matroid.hpp"

namespace matroidkl {

// Flats grouped by rank, generated by covers: the rank r+1 flats are the
// distinct closures of F + e over rank-r flats F and e outside F. `closure`
// maps an element set inside `ground` to its closure.
template <typename Closure>
std::vector<std::vector<ElementSet>> enumerate_flats(ElementSet ground, Closure&& closure) {
  std::vector<std::vector<ElementSet>> levels{{closure(ElementSet{0})}};
  while (levels.back().front() != ground) {
    std::set<ElementSet> next;
    for (ElementSet f : levels.back()) {
      ElementSet remaining = ground & ~f;
      while (remaining != 0) {
        int e = lowest_element(remaining);
        ElementSet g = closure(f | singleton(e));
        next.insert(g);
        // Elements already absorbed into g give the same cover.
        remaining &= ~g;
      }
    }
    levels.emplace_back(next.begin(), next.end());
  }
  return levels;
}

class FlatLattice {
 public:
  explicit FlatLattice(const std::vector<std::vector<ElementSet>>& levels) {
    for (std::size_t r = 0; r < levels.size(); ++r) {
      rank_start_.push_back(static_cast<int>(flats_.size()));
      for (ElementSet f : levels[r]) {
        index_.emplace(f, static_cast<int>(flats_.size()));
        flats_.push_back(f);
        ranks_.push_back(static_cast<int>(r));
      }
    }
    rank_start_.push_back(static_cast<int>(flats_.size()));
    up_.resize(flats_.size());
    for (std::size_t f = 0; f < flats_.size(); ++f) {
      for (std::size_t g = f; g < flats_.size(); ++g) {
        if (is_subset(flats_[f], flats_[g])) up_[f].push_back(static_cast<int>(g));
      }
    }
    mobius_ = std::make_shared<MobiusCache>();
    mobius_->rows.resize(flats_.size());
  }

  int size() const { return static_cast<int>(flats_.size()); }
  int rank() const { return ranks_.back(); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }

  ElementSet flat(int id) const { return flats_[static_cast<std::size_t>(id)]; }
  int rank_of(int id) const { return ranks_[static_cast<std::size_t>(id)]; }

  std::optional<int> find(ElementSet s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool is_flat(ElementSet s) const { return index_.count(s) != 0; }
  int id_of(ElementSet s) const {
    auto id = find(s);
    if (!id) throw PreconditionError(format_set(s) + " is not a flat");
    return *id;
  }

  // Ids of flats of rank r.
  std::vector<int> of_rank(int r) const {
    std::vector<int> out;
    if (r < 0 || r > rank()) return out;
    for (int i = rank_start_[static_cast<std::size_t>(r)];
         i < rank_start_[static_cast<std::size_t>(r) + 1]; ++i) {
      out.push_back(i);
    }
    return out;
  }
  std::size_t count_of_rank(int r) const {
    if (r < 0 || r > rank()) return 0;
    return static_cast<std::size_t>(rank_start_[static_cast<std::size_t>(r) + 1] -
                                    rank_start_[static_cast<std::size_t>(r)]);
  }

  // Flats containing f (including f), in increasing rank.
  const std::vector<int>& up(int f) const { return up_[static_cast<std::size_t>(f)]; }

  bool leq(int f, int g) const { return is_subset(flat(f), flat(g)); }

  // Flats h with f <= h <= g, in increasing rank.
  std::vector<int> interval(int f, int g) const {
    std::vector<int> out;
    if (!leq(f, g)) return out;
    for (int h : up(f)) {
      if (ranks_[static_cast<std::size_t>(h)] > rank_of(g)) break;
      if (is_subset(flat(h), flat(g))) out.push_back(h);
    }
    return out;
  }

  // Möbius function, memoized one bottom element at a time.
  BigInt mobius(int f, int g) const {
    if (!leq(f, g)) {
      throw PreconditionError("mobius: flats " + format_set(flat(f)) + " and " +
                              format_set(flat(g)) + " are not comparable");
    }
    const auto& row = mobius_row(f);
    const auto& ups = up(f);
    auto pos = std::lower_bound(ups.begin(), ups.end(), g) - ups.begin();
    return row[static_cast<std::size_t>(pos)];
  }

  // μ(f, g) for every g in up(f), aligned with up(f).
  const std::vector<BigInt>& mobius_row(int f) const {
    std::lock_guard<std::mutex> lock(mobius_->mutex);
    auto& slot = mobius_->rows[static_cast<std::size_t>(f)];
    if (!slot) {
      const auto& ups = up(f);
      std::vector<BigInt> row(ups.size());
      for (std::size_t j = 0; j < ups.size(); ++j) {
        if (j == 0) {
          row[j] = 1;
          continue;
        }
        BigInt sum = 0;
        for (std::size_t i = 0; i < j; ++i) {
          if (is_subset(flat(ups[i]), flat(ups[j]))) sum += row[i];
        }
        row[j] = -sum;
      }
      slot = std::move(row);
    }
    return *slot;
  }

 private:
  struct MobiusCache {
    std::mutex mutex;
    std::vector<std::optional<std::vector<BigInt>>> rows;
  };

  std::vector<ElementSet> flats_;
  std::vector<int> ranks_;
  std::vector<int> rank_start_;
  std::unordered_map<ElementSet, int> index_;
  std::vector<std::vector<int>> up_;
  std::shared_ptr<MobiusCache> mobius_;
};

inline FlatLattice flats(const Matroid& m) {
  if (m.closure(0) != 0) {
    throw PreconditionError("flats: " + m.description() +
                            " has loops; simplify before building the lattice");
  }
  return FlatLattice(enumerate_flats(m.ground(), [&](ElementSet a) { return m.closure(a); }));
}

inline BigInt mobius(const FlatLattice& lattice, ElementSet f, ElementSet g) {
  return lattice.mobius(lattice.id_of(f), lattice.id_of(g));
}

// Σ_F μ(∅, F) x^(rk M − rk F).
inline IntPoly char_poly(const FlatLattice& lattice) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(lattice.rank()) + 1);
  const auto& row = lattice.mobius_row(lattice.bottom());
  const auto& ups = lattice.up(lattice.bottom());
  for (std::size_t j = 0; j < ups.size(); ++j) {
    coeffs[static_cast<std::size_t>(lattice.rank() - lattice.rank_of(ups[j]))] += row[j];
  }
  return IntPoly(std::move(coeffs));
}

inline IntPoly char_poly(const Matroid& m) {
  if (m.closure(0) != 0) throw PreconditionError("char_poly: matroid has loops");
  return char_poly(flats(m));
}

inline BigInt mobius_invariant(const Matroid& m) { return char_poly(m).coefficient(0); }

namespace detail {

inline void require_loopless_non_coloop(const Matroid& m, int i) {
  if (i < 0 || i >= m.size()) throw std::out_of_range("element index out of range");
  if (m.closure(0) != 0) throw PreconditionError(m.description() + " has loops");
  if (m.rank(m.ground() & ~singleton(i)) < m.rank()) {
    throw PreconditionError("element " + std::to_string(i) + " is a coloop of " +
                            m.description());
  }
}

}  // namespace detail

// Flats F ⊊ E − i with F + i also a flat.
inline std::vector<ElementSet> S_set(const FlatLattice& lattice, ElementSet ground, int i) {
  std::vector<ElementSet> out;
  const ElementSet without_i = ground & ~singleton(i);
  for (int id = 0; id < lattice.size(); ++id) {
    ElementSet f = lattice.flat(id);
    if (contains(f, i) || f == without_i) continue;
    if (lattice.is_flat(f | singleton(i))) out.push_back(f);
  }
  return out;
}

// Flats F containing i with F − i not a flat.
inline std::vector<ElementSet> T_set(const FlatLattice& lattice, int i) {
  std::vector<ElementSet> out;
  for (int id = 0; id < lattice.size(); ++id) {
    ElementSet f = lattice.flat(id);
    if (contains(f, i) && !lattice.is_flat(f & ~singleton(i))) out.push_back(f);
  }
  return out;
}

inline std::vector<ElementSet> S_set(const Matroid& m, int i) {
  detail::require_loopless_non_coloop(m, i);
  return S_set(flats(m), m.ground(), i);
}

inline std::vector<ElementSet> T_set(const Matroid& m, int i) {
  detail::require_loopless_non_coloop(m, i);
  return T_set(flats(m), i);
}

}  // namespace matroidkl

#endif  // MATROIDKL_LATTICE_HPP_
