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

// Matroids on at most 64 elements, given by a rank oracle. Every backend is
// immutable; a Matroid is a cheap value handle around a shared backend.

#ifndef MATROIDKL_MATROID_HPP_
#define MATROIDKL_MATROID_HPP_

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "matroidkl/element_set.hpp"
#include "matroidkl/errors.hpp"

namespace matroidkl {

// Parts of a set partition of {0, ..., n-1}; part j occupies a consecutive
// block of element indices, in the order given.
struct PartitionSpec {
  std::vector<int> parts;

  int n() const { return std::accumulate(parts.begin(), parts.end(), 0); }
  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

// Construction provenance, used by closed-formula fast paths.
struct UniformTag {
  int k, n;
};
struct GluedCycleTag {
  int a, b;
};
struct PartitionTag {
  PartitionSpec spec;
};
struct ProjectiveTag {
  int r, q;
};
using FamilyTag =
    std::variant<std::monostate, UniformTag, GluedCycleTag, PartitionTag, ProjectiveTag>;

namespace detail {

class RankOracle {
 public:
  explicit RankOracle(int n) : n_(n) {}
  virtual ~RankOracle() = default;
  int size() const { return n_; }
  // `a` is already known to lie inside the ground set.
  virtual int rank(ElementSet a) const = 0;

 private:
  int n_;
};

}  // namespace detail

class Matroid {
 public:
  Matroid(std::shared_ptr<const detail::RankOracle> oracle, std::string description,
          FamilyTag family = {})
      : oracle_(std::move(oracle)),
        description_(std::move(description)),
        family_(std::move(family)) {
    full_rank_ = oracle_->rank(ground());
  }

  int size() const { return oracle_->size(); }
  ElementSet ground() const { return full_set(size()); }

  int rank(ElementSet a) const {
    if (!is_subset(a, ground())) {
      throw std::out_of_range("element set " + format_set(a) +
                              " leaves the ground set of size " + std::to_string(size()));
    }
    return oracle_->rank(a);
  }
  int rank() const { return full_rank_; }

  ElementSet closure(ElementSet a) const {
    const int r = rank(a);
    ElementSet out = a;
    for (int e : elements_of(ground() & ~a)) {
      if (oracle_->rank(a | singleton(e)) == r) out |= singleton(e);
    }
    return out;
  }

  bool is_independent(ElementSet a) const { return rank(a) == cardinality(a); }

  const std::string& description() const { return description_; }
  const FamilyTag& family() const { return family_; }
  const detail::RankOracle& oracle() const { return *oracle_; }
  const std::shared_ptr<const detail::RankOracle>& oracle_ptr() const { return oracle_; }

 private:
  std::shared_ptr<const detail::RankOracle> oracle_;
  std::string description_;
  FamilyTag family_;
  int full_rank_ = 0;
};

namespace detail {

inline void check_capacity(long long n) {
  if (n > kMaxGroundSet) {
    throw CapacityError("ground set of " + std::to_string(n) + " elements exceeds the " +
                        std::to_string(kMaxGroundSet) + "-element limit");
  }
}

class UniformOracle final : public RankOracle {
 public:
  UniformOracle(int k, int n) : RankOracle(n), k_(k) {}
  int rank(ElementSet a) const override { return std::min(cardinality(a), k_); }

 private:
  int k_;
};

class BasesOracle final : public RankOracle {
 public:
  BasesOracle(int n, std::vector<ElementSet> bases) : RankOracle(n), bases_(std::move(bases)) {}
  int rank(ElementSet a) const override {
    int best = 0;
    for (ElementSet b : bases_) best = std::max(best, cardinality(a & b));
    return best;
  }
  const std::vector<ElementSet>& bases() const { return bases_; }

 private:
  std::vector<ElementSet> bases_;
};

class GraphicOracle final : public RankOracle {
 public:
  GraphicOracle(int vertices, std::vector<std::pair<int, int>> edges)
      : RankOracle(static_cast<int>(edges.size())),
        vertices_(vertices),
        edges_(std::move(edges)) {}

  int rank(ElementSet a) const override {
    std::vector<int> parent(static_cast<std::size_t>(vertices_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) {
        auto& p = parent[static_cast<std::size_t>(v)];
        p = parent[static_cast<std::size_t>(p)];
        v = p;
      }
      return v;
    };
    int merges = 0;
    for (int e : elements_of(a)) {
      auto [u, v] = edges_[static_cast<std::size_t>(e)];
      int ru = find(u), rv = find(v);
      if (ru != rv) {
        parent[static_cast<std::size_t>(ru)] = rv;
        ++merges;
      }
    }
    return merges;
  }

 private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
};

// Dual of the loopless rank-2 matroid whose parallel classes are the parts.
class PartitionCorank2Oracle final : public RankOracle {
 public:
  explicit PartitionCorank2Oracle(const PartitionSpec& spec) : RankOracle(spec.n()) {
    ElementSet next = 0;
    int offset = 0;
    for (int size : spec.parts) {
      next = full_set(offset + size) & ~full_set(offset);
      part_masks_.push_back(next);
      offset += size;
    }
  }
  int rank(ElementSet a) const override {
    ElementSet rest = full_set(size()) & ~a;
    int touched = 0;
    for (ElementSet part : part_masks_) {
      if (rest & part) ++touched;
    }
    return cardinality(a) + std::min(touched, 2) - 2;
  }

 private:
  std::vector<ElementSet> part_masks_;
};

inline bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

class ProjectiveOracle final : public RankOracle {
 public:
  ProjectiveOracle(int r, int q, std::vector<std::vector<int>> points)
      : RankOracle(static_cast<int>(points.size())), r_(r), q_(q), points_(std::move(points)) {}

  int rank(ElementSet a) const override {
    std::vector<std::vector<int>> rows;
    for (int e : elements_of(a)) rows.push_back(points_[static_cast<std::size_t>(e)]);
    int rank = 0;
    for (int col = 0; col < r_ && rank < static_cast<int>(rows.size()); ++col) {
      auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                                [col](const auto& row) { return row[col] != 0; });
      if (pivot == rows.end()) continue;
      std::iter_swap(rows.begin() + rank, pivot);
      auto& prow = rows[static_cast<std::size_t>(rank)];
      int inv = inverse_mod(prow[static_cast<std::size_t>(col)]);
      for (int& v : prow) v = v * inv % q_;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(i) == rank || rows[i][static_cast<std::size_t>(col)] == 0) continue;
        int factor = rows[i][static_cast<std::size_t>(col)];
        for (int j = 0; j < r_; ++j) {
          auto& v = rows[i][static_cast<std::size_t>(j)];
          v = ((v - factor * prow[static_cast<std::size_t>(j)]) % q_ + q_) % q_;
        }
      }
      ++rank;
    }
    return rank;
  }

  const std::vector<std::vector<int>>& points() const { return points_; }

 private:
  int inverse_mod(int v) const {
    for (int t = 1; t < q_; ++t) {
      if (v * t % q_ == 1) return t;
    }
    throw InternalError("no inverse modulo " + std::to_string(q_));
  }

  int r_, q_;
  std::vector<std::vector<int>> points_;
};

class DirectSumOracle final : public RankOracle {
 public:
  explicit DirectSumOracle(std::vector<Matroid> parts)
      : RankOracle(total_size(parts)), parts_(std::move(parts)) {}
  int rank(ElementSet a) const override {
    int total = 0, offset = 0;
    for (const auto& m : parts_) {
      total += m.oracle().rank((a >> offset) & m.ground());
      offset += m.size();
    }
    return total;
  }
  const std::vector<Matroid>& parts() const { return parts_; }

 private:
  static int total_size(const std::vector<Matroid>& parts) {
    long long n = 0;
    for (const auto& m : parts) n += m.size();
    check_capacity(n);
    return static_cast<int>(n);
  }
  std::vector<Matroid> parts_;
};

class DualOracle final : public RankOracle {
 public:
  explicit DualOracle(Matroid primal) : RankOracle(primal.size()), primal_(std::move(primal)) {}
  int rank(ElementSet a) const override {
    return cardinality(a) + primal_.oracle().rank(primal_.ground() & ~a) - primal_.rank();
  }
  const Matroid& primal() const { return primal_; }

 private:
  Matroid primal_;
};

// Elements of the minor are relabelled 0..m-1 in increasing parent order.
class MinorOracle final : public RankOracle {
 public:
  MinorOracle(Matroid parent, ElementSet kept, ElementSet contracted)
      : RankOracle(cardinality(kept)),
        parent_(std::move(parent)),
        contracted_(contracted),
        labels_(elements_of(kept)) {
    contracted_rank_ = parent_.oracle().rank(contracted_);
  }
  int rank(ElementSet a) const override {
    ElementSet lifted = contracted_;
    for (int e : elements_of(a)) lifted |= singleton(labels_[static_cast<std::size_t>(e)]);
    return parent_.oracle().rank(lifted) - contracted_rank_;
  }

 private:
  Matroid parent_;
  ElementSet contracted_;
  std::vector<int> labels_;
  int contracted_rank_ = 0;
};

inline std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace detail

inline Matroid uniform(int k, int n) {
  if (n < 0 || k < 0 || k > n) {
    throw InvalidInput("uniform matroid needs 0 <= k <= n, got k=" + std::to_string(k) +
                       " n=" + std::to_string(n));
  }
  detail::check_capacity(n);
  return Matroid(std::make_shared<detail::UniformOracle>(k, n),
                 "U(" + std::to_string(k) + "," + std::to_string(n) + ")", UniformTag{k, n});
}

inline Matroid from_bases(int n, std::vector<ElementSet> bases) {
  detail::check_capacity(n);
  if (n < 0) throw InvalidInput("negative ground set size");
  if (bases.empty()) throw InvalidInput("a matroid needs at least one basis");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const int r = cardinality(bases.front());
  for (ElementSet b : bases) {
    if (!is_subset(b, full_set(n))) {
      throw InvalidInput("basis " + format_set(b) + " leaves the ground set");
    }
    if (cardinality(b) != r) throw InvalidInput("bases of unequal cardinality");
  }
  if (n <= 12) {
    std::unordered_set<ElementSet> family(bases.begin(), bases.end());
    for (ElementSet b1 : bases) {
      for (ElementSet b2 : bases) {
        for (int x : elements_of(b1 & ~b2)) {
          bool ok = false;
          for (int y : elements_of(b2 & ~b1)) {
            if (family.count((b1 & ~singleton(x)) | singleton(y))) {
              ok = true;
              break;
            }
          }
          if (!ok) {
            throw InvalidInput("basis exchange fails for " + format_set(b1) + " and " +
                               format_set(b2));
          }
        }
      }
    }
  }
  return Matroid(std::make_shared<detail::BasesOracle>(n, std::move(bases)),
                 "bases(n=" + std::to_string(n) + ")");
}

inline Matroid graphic(int vertices, std::vector<std::pair<int, int>> edges) {
  detail::check_capacity(static_cast<long long>(edges.size()));
  if (vertices < 0) throw InvalidInput("negative vertex count");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw InvalidInput("edge endpoint outside 0.." + std::to_string(vertices - 1));
    }
  }
  auto m = edges.size();
  return Matroid(std::make_shared<detail::GraphicOracle>(vertices, std::move(edges)),
                 "graphic(V=" + std::to_string(vertices) + ",E=" + std::to_string(m) + ")");
}

// Two cycles of lengths a and b sharing edge 0. Edges 1..a-1 close the first
// cycle, the remaining b-1 edges the second.
inline Matroid glued_cycle_graph(int a, int b) {
  if (a < 2 || b < 2) throw InvalidInput("glued cycles need lengths a, b >= 2");
  detail::check_capacity(static_cast<long long>(a) + b - 1);
  std::vector<std::pair<int, int>> edges{{0, 1}};
  int next_vertex = 2;
  for (int len : {a, b}) {
    int prev = 0;
    for (int step = 0; step < len - 2; ++step) {
      edges.emplace_back(prev, next_vertex);
      prev = next_vertex++;
    }
    edges.emplace_back(prev, 1);
  }
  Matroid g = graphic(next_vertex, std::move(edges));
  return Matroid(g.oracle_ptr(), "C(" + std::to_string(a) + "," + std::to_string(b) + ")",
                 GluedCycleTag{a, b});
}

inline Matroid partition_corank2(const PartitionSpec& spec) {
  if (spec.parts.size() < 2) {
    throw InvalidInput("a corank-2 partition matroid needs at least 2 parts");
  }
  for (int p : spec.parts) {
    if (p <= 0) throw InvalidInput("partition parts must be positive");
  }
  detail::check_capacity(spec.n());
  return Matroid(std::make_shared<detail::PartitionCorank2Oracle>(spec),
                 "partition_corank2(" + detail::join_ints(spec.parts) + ")", PartitionTag{spec});
}

// Points of PG(r-1, q): nonzero vectors of F_q^r whose first nonzero
// coordinate is 1, in lexicographic order.
inline Matroid pg(int r, int q) {
  if (!detail::is_prime(q)) throw InvalidInput("pg: q must be prime, got " + std::to_string(q));
  if (r < 1) throw InvalidInput("pg: rank must be at least 1");
  long long count = 0, power = 1;
  for (int i = 0; i < r; ++i) {
    count += power;
    power *= q;
    detail::check_capacity(count);
  }
  std::vector<std::vector<int>> points;
  std::vector<int> v(static_cast<std::size_t>(r), 0);
  while (true) {
    auto lead = std::find_if(v.begin(), v.end(), [](int c) { return c != 0; });
    if (lead != v.end() && *lead == 1) points.push_back(v);
    int pos = r - 1;
    while (pos >= 0 && v[static_cast<std::size_t>(pos)] == q - 1) {
      v[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++v[static_cast<std::size_t>(pos)];
  }
  return Matroid(std::make_shared<detail::ProjectiveOracle>(r, q, std::move(points)),
                 "PG(" + std::to_string(r - 1) + "," + std::to_string(q) + ")",
                 ProjectiveTag{r, q});
}

inline Matroid direct_sum(std::vector<Matroid> parts) {
  std::string desc = "sum(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) desc += ",";
    desc += parts[i].description();
  }
  desc += ")";
  return Matroid(std::make_shared<detail::DirectSumOracle>(std::move(parts)), desc);
}

inline Matroid dual(const Matroid& m) {
  if (auto* d = dynamic_cast<const detail::DualOracle*>(&m.oracle())) return d->primal();
  if (auto* b = dynamic_cast<const detail::BasesOracle*>(&m.oracle())) {
    std::vector<ElementSet> complements;
    for (ElementSet basis : b->bases()) complements.push_back(m.ground() & ~basis);
    return Matroid(std::make_shared<detail::BasesOracle>(m.size(), std::move(complements)),
                   "dual(" + m.description() + ")");
  }
  return Matroid(std::make_shared<detail::DualOracle>(m), "dual(" + m.description() + ")");
}

// General minor M \ deleted / contracted, relabelled onto the surviving
// elements in increasing order.
inline Matroid minor(const Matroid& m, ElementSet deleted, ElementSet contracted) {
  if (!is_subset(deleted | contracted, m.ground())) {
    throw std::out_of_range("minor: element set leaves the ground set");
  }
  if (deleted & contracted) throw InvalidInput("minor: deleted and contracted sets overlap");
  if (deleted == 0 && contracted == 0) return m;
  ElementSet kept = m.ground() & ~(deleted | contracted);
  std::string desc = m.description();
  if (deleted) desc += "\\" + format_set(deleted);
  if (contracted) desc += "/" + format_set(contracted);
  return Matroid(std::make_shared<detail::MinorOracle>(m, kept, contracted), desc);
}

inline Matroid delete_set(const Matroid& m, ElementSet a) { return minor(m, a, 0); }
inline Matroid contract_set(const Matroid& m, ElementSet a) { return minor(m, 0, a); }
inline Matroid restrict_to(const Matroid& m, ElementSet f) {
  if (!is_subset(f, m.ground())) throw std::out_of_range("restrict_to: set leaves the ground set");
  return minor(m, m.ground() & ~f, 0);
}

// Loops, then coloops.
inline std::pair<ElementSet, ElementSet> loops_and_coloops(const Matroid& m) {
  ElementSet loops = 0, coloops = 0;
  for (int e = 0; e < m.size(); ++e) {
    if (m.rank(singleton(e)) == 0) loops |= singleton(e);
    if (m.rank(m.ground() & ~singleton(e)) == m.rank() - 1) coloops |= singleton(e);
  }
  return {loops, coloops};
}

// Elements kept by simplification: non-loops, the smallest index of each
// parallel class.
inline ElementSet simplification_kept(const Matroid& m) {
  ElementSet kept = 0;
  for (int e = 0; e < m.size(); ++e) {
    if (m.rank(singleton(e)) == 0) continue;
    bool parallel = false;
    for (int f : elements_of(kept)) {
      if (m.rank(singleton(e) | singleton(f)) == 1) {
        parallel = true;
        break;
      }
    }
    if (!parallel) kept |= singleton(e);
  }
  return kept;
}

// Deletes loops and all but one element of every parallel class. The lattice
// of flats is unchanged up to isomorphism.
inline Matroid simplify(const Matroid& m) {
  ElementSet kept = simplification_kept(m);
  if (kept == m.ground()) return m;
  return delete_set(m, m.ground() & ~kept);
}

inline bool is_simple(const Matroid& m) { return simplification_kept(m) == m.ground(); }

}  // namespace matroidkl

#endif  // MATROIDKL_MATROID_HPP_
