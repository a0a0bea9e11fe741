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

// Incidence algebra of a lattice of flats with Z[x] entries.

#ifndef MATROIDKL_INCIDENCE_HPP_
#define MATROIDKL_INCIDENCE_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>

#include "matroidkl/errors.hpp"
#include "matroidkl/exactpoly.hpp"
#include "matroidkl/lattice.hpp"

namespace matroidkl {

// Assigns a polynomial to every interval [F, G] of one lattice. Unset
// entries read as zero.
class IncElement {
 public:
  explicit IncElement(std::shared_ptr<const FlatLattice> lattice)
      : lattice_(std::move(lattice)) {}

  static IncElement delta(std::shared_ptr<const FlatLattice> lattice) {
    IncElement out(std::move(lattice));
    for (int f = 0; f < out.lattice().size(); ++f) out.set(f, f, IntPoly::constant(1));
    return out;
  }

  const FlatLattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const FlatLattice>& lattice_ptr() const { return lattice_; }

  const IntPoly& at(int f, int g) const {
    static const IntPoly kZero;
    auto it = entries_.find(key(f, g));
    return it == entries_.end() ? kZero : it->second;
  }

  void set(int f, int g, IntPoly value) {
    if (!lattice_->leq(f, g)) {
      throw PreconditionError("incidence entry on an incomparable pair of flats");
    }
    if (value.is_zero()) {
      entries_.erase(key(f, g));
    } else {
      entries_[key(f, g)] = std::move(value);
    }
  }

  friend bool operator==(const IncElement& a, const IncElement& b) {
    return a.lattice_ == b.lattice_ && a.entries_ == b.entries_;
  }

 private:
  std::uint64_t key(int f, int g) const {
    return static_cast<std::uint64_t>(f) * static_cast<std::uint64_t>(lattice_->size()) +
           static_cast<std::uint64_t>(g);
  }

  std::shared_ptr<const FlatLattice> lattice_;
  std::unordered_map<std::uint64_t, IntPoly> entries_;
};

namespace detail {

inline void require_same_lattice(const IncElement& a, const IncElement& b) {
  if (a.lattice_ptr() != b.lattice_ptr()) {
    throw PreconditionError("incidence elements live on different lattices");
  }
}

}  // namespace detail

// (ab)_{FG} = Σ_{F ≤ H ≤ G} a_{FH} b_{HG}.
inline IncElement convolve(const IncElement& a, const IncElement& b) {
  detail::require_same_lattice(a, b);
  const FlatLattice& lattice = a.lattice();
  IncElement out(a.lattice_ptr());
  for (int f = 0; f < lattice.size(); ++f) {
    for (int g : lattice.up(f)) {
      IntPoly sum;
      for (int h : lattice.interval(f, g)) {
        const IntPoly& left = a.at(f, h);
        if (left.is_zero()) continue;
        sum += left * b.at(h, g);
      }
      out.set(f, g, std::move(sum));
    }
  }
  return out;
}

// Two-sided inverse; requires every diagonal entry to be ±1.
inline IncElement invert(const IncElement& a) {
  const FlatLattice& lattice = a.lattice();
  IncElement out(a.lattice_ptr());
  std::vector<BigInt> diagonal_inverse(static_cast<std::size_t>(lattice.size()));
  for (int f = 0; f < lattice.size(); ++f) {
    const IntPoly& d = a.at(f, f);
    if (d.is_zero() || d.degree() != 0 || boost::multiprecision::abs(d.leading()) != 1) {
      throw PreconditionError("invert: diagonal entry " + d.to_string() + " is not a unit");
    }
    diagonal_inverse[static_cast<std::size_t>(f)] = d.leading();
  }
  // b_{FG} = −a_{FF}^{-1} Σ_{F < H ≤ G} a_{FH} b_{HG}, filled from the top down.
  for (int f = lattice.size() - 1; f >= 0; --f) {
    const BigInt& inv = diagonal_inverse[static_cast<std::size_t>(f)];
    out.set(f, f, IntPoly::constant(inv));
    for (int g : lattice.up(f)) {
      if (g == f) continue;
      IntPoly sum;
      for (int h : lattice.interval(f, g)) {
        if (h == f) continue;
        const IntPoly& left = a.at(f, h);
        if (left.is_zero()) continue;
        sum += left * out.at(h, g);
      }
      out.set(f, g, BigInt(-inv) * sum);
    }
  }
  return out;
}

// (a^rev)_{FG}(x) = x^(rk G − rk F) a_{FG}(1/x).
inline IncElement rev(const IncElement& a) {
  const FlatLattice& lattice = a.lattice();
  IncElement out(a.lattice_ptr());
  for (int f = 0; f < lattice.size(); ++f) {
    for (int g : lattice.up(f)) {
      const IntPoly& entry = a.at(f, g);
      if (entry.is_zero()) continue;
      const int gap = lattice.rank_of(g) - lattice.rank_of(f);
      if (entry.degree() > gap) {
        throw PreconditionError("rev: entry of degree " + std::to_string(entry.degree()) +
                                " on an interval of rank " + std::to_string(gap));
      }
      out.set(f, g, reverse(entry, gap));
    }
  }
  return out;
}

inline bool is_kernel(const IncElement& a) {
  return convolve(rev(a), a) == IncElement::delta(a.lattice_ptr());
}

enum class IncKind { kP, kZ, kChi, kDelta };

// Maps an interval [F, G] (flat ids) to the invariant of the minor M|G / F.
using IntervalProvider = std::function<IntPoly(int, int)>;

inline IncElement from_provider(std::shared_ptr<const FlatLattice> lattice,
                                const IntervalProvider& provider) {
  IncElement out(lattice);
  for (int f = 0; f < lattice->size(); ++f) {
    for (int g : lattice->up(f)) out.set(f, g, provider(f, g));
  }
  return out;
}

// χ of the interval [F, G]: Σ_{F ≤ H ≤ G} μ(F, H) x^(rk G − rk H).
inline IntPoly interval_char_poly(const FlatLattice& lattice, int f, int g) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(lattice.rank_of(g) - lattice.rank_of(f)) +
                             1);
  for (int h : lattice.interval(f, g)) {
    coeffs[static_cast<std::size_t>(lattice.rank_of(g) - lattice.rank_of(h))] +=
        lattice.mobius(f, h);
  }
  return IntPoly(std::move(coeffs));
}

// P and Z need a provider; χ and δ are determined by the lattice alone.
inline IncElement build(IncKind kind, std::shared_ptr<const FlatLattice> lattice,
                        const IntervalProvider& provider = {}) {
  switch (kind) {
    case IncKind::kDelta:
      return IncElement::delta(std::move(lattice));
    case IncKind::kChi: {
      const FlatLattice& l = *lattice;
      return from_provider(lattice, [&](int f, int g) { return interval_char_poly(l, f, g); });
    }
    case IncKind::kP:
    case IncKind::kZ:
      if (!provider) throw PreconditionError("build: P and Z elements need an invariant provider");
      return from_provider(std::move(lattice), provider);
  }
  throw InternalError("build: unknown kind");
}

}  // namespace matroidkl

#endif  // MATROIDKL_INCIDENCE_HPP_
