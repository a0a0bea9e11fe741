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

// Deletion recursions for P, Z, Q and Y, grounded at Boolean matroids.
//
// A minor of the ambient matroid is addressed by a pair (C, S): contract C,
// then restrict to S. Every pair is canonicalized before lookup: C is
// replaced by its closure (dropping the loops of the minor) and S keeps the
// smallest element of each parallel class, so memo entries always describe
// simple matroids.

#ifndef MATROIDKL_DELETION_HPP_
#define MATROIDKL_DELETION_HPP_

#include <array>
#include <mutex>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "matroidkl/element_set.hpp"
#include "matroidkl/errors.hpp"
#include "matroidkl/exactpoly.hpp"
#include "matroidkl/families.hpp"
#include "matroidkl/invariant_kind.hpp"
#include "matroidkl/lattice.hpp"
#include "matroidkl/matroid.hpp"

namespace matroidkl {

struct MinorKey {
  ElementSet contracted = 0;
  ElementSet kept = 0;

  friend bool operator==(const MinorKey&, const MinorKey&) = default;
};

struct MinorKeyHash {
  std::size_t operator()(const MinorKey& k) const {
    return std::hash<ElementSet>{}(k.contracted * 0x9E3779B97F4A7C15ULL ^ k.kept);
  }
};

struct CorrectionTerm {
  ElementSet flat = 0;
  BigInt tau;
  int exponent = 0;
  IntPoly minor_poly;
};

// One application of a deletion identity at pivot `element`. The value is
// deletion_term + contraction_term + sign · Σ tau · x^exponent · minor_poly.
struct DeletionStep {
  int element = -1;
  PolyKind kind = PolyKind::kP;
  // 𝒮ᵢ for P and Z, 𝒯ᵢ for Q and Y (as element sets of the simple minor).
  std::vector<ElementSet> flats;
  IntPoly deletion_term;
  IntPoly contraction_term;
  int sign = 1;
  std::vector<CorrectionTerm> corrections;

  IntPoly total() const {
    IntPoly out = deletion_term + contraction_term;
    for (const auto& t : corrections) {
      IntPoly term = t.tau * t.minor_poly.shifted(t.exponent);
      if (sign > 0) {
        out += term;
      } else {
        out -= term;
      }
    }
    return out;
  }
};

struct DeletionOptions {
  // Closed uniform values for Q, Y and τ, and splitting along connected
  // components. Off gives the bare recursion.
  bool fast_paths = true;
  // Enumeration budget for the uniformity test of a minor.
  long long uniform_test_cap = 20000;
};

class DeletionEngine {
 public:
  explicit DeletionEngine(Matroid ambient, DeletionOptions options = {})
      : m_(std::move(ambient)), options_(options) {
    ambient_uniform_ = std::holds_alternative<UniformTag>(m_.family());
  }

  const Matroid& ambient() const { return m_; }

  MinorKey canonical(ElementSet contracted, ElementSet kept) const {
    const ElementSet c = closure(contracted);
    const int rc = rank(c);
    ElementSet out = 0;
    for (int e : elements_of(kept & ~c)) {
      bool parallel = false;
      for (int f : elements_of(out)) {
        if (rank(c | singleton(e) | singleton(f)) == rc + 1) {
          parallel = true;
          break;
        }
      }
      if (!parallel) out |= singleton(e);
    }
    return {c, out};
  }

  // The whole ambient matroid, simplified.
  MinorKey root() const { return canonical(0, m_.ground()); }

  int minor_rank(const MinorKey& key) const {
    return rank(key.contracted | key.kept) - rank(key.contracted);
  }

  IntPoly value(ElementSet contracted, ElementSet kept, PolyKind kind) {
    return value(canonical(contracted, kept), kind);
  }

  IntPoly value(const MinorKey& key, PolyKind kind) {
    const auto slot = static_cast<std::size_t>(kind);
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end() && it->second.polys[slot]) return *it->second.polys[slot];
    }
    IntPoly result = evaluate(key, kind);
    std::lock_guard<std::mutex> lock(mutex_);
    memo_[key].polys[slot] = result;
    return result;
  }

  BigInt tau(ElementSet contracted, ElementSet kept) {
    return tau(canonical(contracted, kept));
  }

  BigInt tau(const MinorKey& key) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end() && it->second.tau) return *it->second.tau;
    }
    BigInt result = evaluate_tau(key);
    std::lock_guard<std::mutex> lock(mutex_);
    memo_[key].tau = result;
    return result;
  }

  // Applies the identity for `kind` at pivot i of the simple minor `key`;
  // i must lie in key.kept and must not be a coloop of the minor.
  DeletionStep step(const MinorKey& key, int i, PolyKind kind) {
    if (!contains(key.kept, i)) {
      throw PreconditionError("pivot " + std::to_string(i) + " is not an element of the minor");
    }
    const ElementSet c = key.contracted;
    const ElementSet s = key.kept;
    const ElementSet si = singleton(i);
    const int k = minor_rank(key);
    if (rank(c | (s & ~si)) - rank(c) != k) {
      throw PreconditionError("pivot " + std::to_string(i) + " is a coloop");
    }
    const MinorFlats fl = minor_flats(key);
    DeletionStep out;
    out.element = i;
    out.kind = kind;
    out.deletion_term = value(c, s & ~si, kind);
    if (kind == PolyKind::kP || kind == PolyKind::kZ) {
      if (kind == PolyKind::kP) out.contraction_term = -value(c | si, s & ~si, kind).shifted(1);
      out.sign = 1;
      for (std::size_t r = 0; r < fl.levels.size(); ++r) {
        for (ElementSet f : fl.levels[r]) {
          if (contains(f, i) || f == (s & ~si) || !fl.contains(f | si)) continue;
          out.flats.push_back(f);
          const int gap = k - static_cast<int>(r);
          // τ(N/(F+i)) lives on rank gap − 1 and vanishes unless that is odd.
          if (gap % 2 != 0) continue;
          BigInt t = tau(c | f | si, s & ~(f | si));
          if (t == 0) continue;
          out.corrections.push_back({f, t, gap / 2, value(c, f, kind)});
        }
      }
    } else {
      out.contraction_term = IntPoly::one_plus_x_pow(1) * value(c | si, s & ~si, kind);
      out.sign = -1;
      for (std::size_t r = 0; r < fl.levels.size(); ++r) {
        for (ElementSet f : fl.levels[r]) {
          if (!contains(f, i) || fl.contains(f & ~si)) continue;
          out.flats.push_back(f);
          // τ(N|F/i) lives on rank r − 1.
          if (r % 2 != 0) continue;
          BigInt t = tau(c | si, f & ~si);
          if (t == 0) continue;
          out.corrections.push_back({f, t, static_cast<int>(r) / 2, value(c | f, s & ~f, kind)});
        }
      }
    }
    return out;
  }

  std::size_t memo_size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return memo_.size();
  }

 private:
  struct Entry {
    std::array<std::optional<IntPoly>, 4> polys;
    std::optional<BigInt> tau;
  };

  struct MinorFlats {
    std::vector<std::vector<ElementSet>> levels;
    std::unordered_set<ElementSet> all;
    bool contains(ElementSet f) const { return all.count(f) != 0; }
  };

  int rank(ElementSet a) const { return m_.oracle().rank(a); }

  ElementSet closure(ElementSet a) const { return m_.closure(a); }

  MinorFlats minor_flats(const MinorKey& key) const {
    const ElementSet c = key.contracted;
    const ElementSet s = key.kept;
    auto minor_closure = [&](ElementSet a) {
      const int r = rank(c | a);
      ElementSet out = a;
      for (int e : elements_of(s & ~a)) {
        if (rank(c | a | singleton(e)) == r) out |= singleton(e);
      }
      return out;
    };
    MinorFlats out;
    out.levels = enumerate_flats(s, minor_closure);
    for (const auto& level : out.levels) out.all.insert(level.begin(), level.end());
    return out;
  }

  ElementSet coloops_of(const MinorKey& key, int k) const {
    ElementSet out = 0;
    const int rc = rank(key.contracted);
    for (int e : elements_of(key.kept)) {
      if (rank(key.contracted | (key.kept & ~singleton(e))) - rc == k - 1) out |= singleton(e);
    }
    return out;
  }

  // Simple minor of rank k on m elements: uniform iff every k-subset spans.
  bool is_uniform(const MinorKey& key, int k) const {
    if (ambient_uniform_) return true;
    const int m = cardinality(key.kept);
    if (binomial(m, k) > options_.uniform_test_cap) return false;
    const int target = rank(key.contracted) + k;
    return for_each_subset_of_size(key.kept, k, [&](ElementSet a) {
      return rank(key.contracted | a) == target;
    });
  }

  // Connected components of a coloop-free minor, from the fundamental
  // circuits of a greedy basis.
  std::vector<ElementSet> components(const MinorKey& key) const {
    const ElementSet c = key.contracted;
    const int rc = rank(c);
    ElementSet basis = 0;
    for (int e : elements_of(key.kept)) {
      if (rank(c | basis | singleton(e)) - rc == cardinality(basis) + 1) basis |= singleton(e);
    }
    std::vector<int> parent(kMaxGroundSet);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      }
      return x;
    };
    const int rb = cardinality(basis);
    for (int e : elements_of(key.kept & ~basis)) {
      for (int b : elements_of(basis)) {
        ElementSet swapped = (basis & ~singleton(b)) | singleton(e);
        if (rank(c | swapped) - rc == rb) {
          parent[static_cast<std::size_t>(find(e))] = find(b);
        }
      }
    }
    std::unordered_map<int, ElementSet> groups;
    for (int e : elements_of(key.kept)) groups[find(e)] |= singleton(e);
    std::vector<ElementSet> out;
    for (const auto& [root, set] : groups) out.push_back(set);
    std::sort(out.begin(), out.end());
    return out;
  }

  IntPoly evaluate(const MinorKey& key, PolyKind kind) {
    const int k = minor_rank(key);
    const int m = cardinality(key.kept);
    const bool z_like = kind == PolyKind::kZ || kind == PolyKind::kY;
    if (k == 0) return IntPoly::constant(1);
    const ElementSet coloops = coloops_of(key, k);
    if (coloops == key.kept) {
      return z_like ? IntPoly::one_plus_x_pow(m) : IntPoly::constant(1);
    }
    if (coloops != 0) {
      IntPoly rest = value(key.contracted, key.kept & ~coloops, kind);
      return z_like ? IntPoly::one_plus_x_pow(cardinality(coloops)) * rest : rest;
    }
    if (options_.fast_paths) {
      if (is_inverse_kind(kind) && is_uniform(key, k)) return uniform_value(k, m, kind);
      auto parts = components(key);
      if (parts.size() > 1) {
        IntPoly out = IntPoly::constant(1);
        for (ElementSet part : parts) out *= value(key.contracted, part, kind);
        return out;
      }
    }
    return step(key, lowest_element(key.kept), kind).total();
  }

  BigInt evaluate_tau(const MinorKey& key) {
    const int k = minor_rank(key);
    if (k % 2 == 0) return 0;
    if (options_.fast_paths) {
      const ElementSet coloops = coloops_of(key, k);
      if (coloops != 0 && coloops != key.kept) return 0;
      if (coloops == 0) {
        if (is_uniform(key, k)) return uniform_tau(k, cardinality(key.kept));
        if (components(key).size() > 1) return 0;
      }
    }
    return value(key, PolyKind::kP).coefficient((k - 1) / 2);
  }

  Matroid m_;
  DeletionOptions options_;
  bool ambient_uniform_ = false;
  mutable std::mutex mutex_;
  std::unordered_map<MinorKey, Entry, MinorKeyHash> memo_;
};

// Bare recursion unless options say otherwise.
inline IntPoly compute_by_deletion(const Matroid& m, PolyKind kind, DeletionOptions options) {
  DeletionEngine engine(m, options);
  return engine.value(engine.root(), kind);
}

inline IntPoly compute_by_deletion(const Matroid& m, PolyKind kind) {
  DeletionOptions options;
  options.fast_paths = false;
  return compute_by_deletion(m, kind, options);
}

namespace detail {

inline DeletionStep top_level_step(const Matroid& m, int i, PolyKind kind) {
  if (i < 0 || i >= m.size()) throw std::out_of_range("element index out of range");
  if (m.rank(m.ground() & ~singleton(i)) < m.rank()) {
    throw PreconditionError("element " + std::to_string(i) + " is a coloop of " + m.description());
  }
  DeletionEngine engine(m);
  const MinorKey key = engine.root();
  bool redundant = m.rank(singleton(i)) == 0;
  for (int j = 0; j < m.size() && !redundant; ++j) {
    redundant = j != i && m.rank(singleton(i) | singleton(j)) == 1;
  }
  if (redundant) {
    // A loop, or parallel to a smaller element: deleting i leaves the
    // lattice of flats unchanged.
    DeletionStep out;
    out.element = i;
    out.kind = kind;
    out.deletion_term = engine.value(key, kind);
    return out;
  }
  return engine.step(key, i, kind);
}

}  // namespace detail

inline DeletionStep deletion_step(const Matroid& m, int i, PolyKind kind) {
  return detail::top_level_step(m, i, kind);
}

inline IntPoly bv_step_P(const Matroid& m, int i) {
  return deletion_step(m, i, PolyKind::kP).total();
}
inline IntPoly bv_step_Z(const Matroid& m, int i) {
  return deletion_step(m, i, PolyKind::kZ).total();
}
inline IntPoly q_step(const Matroid& m, int i) { return deletion_step(m, i, PolyKind::kQ).total(); }
inline IntPoly y_step(const Matroid& m, int i) { return deletion_step(m, i, PolyKind::kY).total(); }

}  // namespace matroidkl

#endif  // MATROIDKL_DELETION_HPP_
