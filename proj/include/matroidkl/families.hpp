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

// Closed formulas for inverse KL data of named families: uniform matroids,
// two cycles glued along an edge, projective geometries minus a point, and
// coloopless matroids of corank 2.

#ifndef MATROIDKL_FAMILIES_HPP_
#define MATROIDKL_FAMILIES_HPP_

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>
#include <vector>

#include "matroidkl/errors.hpp"
#include "matroidkl/exactpoly.hpp"
#include "matroidkl/invariant_kind.hpp"
#include "matroidkl/matroid.hpp"
#include "matroidkl/stressed.hpp"

namespace matroidkl {

namespace detail {

inline void require_uniform_params(int k, int n) {
  if (n < 0 || k < 0 || k > n) {
    throw InvalidInput("uniform parameters need 0 <= k <= n, got k=" + std::to_string(k) +
                       ", n=" + std::to_string(n));
  }
}

inline void require_inverse_kind(PolyKind which) {
  if (!is_inverse_kind(which)) {
    throw InvalidInput("family formulas exist for Q and Y only, not " + to_string(which));
  }
}

}  // namespace detail

inline IntPoly uniform_Q_closed(int k, int n) {
  detail::require_uniform_params(k, n);
  if (k == 0 || k == n) return IntPoly::constant(1);
  RatScratch acc;
  for (int j = 0; 2 * j <= k - 1; ++j) {
    Rational term(BigInt((n - k) * (k - 2 * j)), BigInt((n - k + j) * (n - j)));
    acc.add(j, term * Rational(binomial(n, k) * binomial(k, j)));
  }
  return acc.to_int_poly();
}

inline IntPoly uniform_Y_closed(int k, int n) {
  detail::require_uniform_params(k, n);
  if (k == 0) return IntPoly::constant(1);
  if (k == n) return IntPoly::one_plus_x_pow(n);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(k) + 1);
  for (int i = 0; 2 * i <= k; ++i) {
    coeffs[static_cast<std::size_t>(i)] += binomial(n, i) * binomial(n - i - 1, n - k);
  }
  for (int i = 0; 2 * i <= k - 1; ++i) {
    coeffs[static_cast<std::size_t>(k - i)] += binomial(n, i) * binomial(n - i - 1, n - k);
  }
  return IntPoly(std::move(coeffs));
}

// The rational expression vanishes at k = n; U_{1,1} still has τ = 1.
inline BigInt uniform_tau_closed(int k, int n) {
  detail::require_uniform_params(k, n);
  if (k % 2 == 0) return 0;
  if (k == n) return k == 1 ? 1 : 0;
  Rational value(binomial(n, k) * binomial(k, (k - 1) / 2) * 4 * (n - k),
                 BigInt(2 * n - k - 1) * BigInt(2 * n - k + 1));
  if (boost::multiprecision::denominator(value) != 1) {
    throw InternalError("tau(U_{" + std::to_string(k) + "," + std::to_string(n) +
                        "}) evaluated to a fraction");
  }
  return boost::multiprecision::numerator(value);
}

// Read-mostly memo of uniform values keyed (k, n, tag) with tag one of
// 'Q', 'Y', 't'; τ entries are stored as constant polynomials.
class UniformMemo {
 public:
  using Key = std::tuple<int, int, char>;

  std::optional<IntPoly> find(const Key& key) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const Key& key, IntPoly value) {
    std::unique_lock lock(mutex_);
    entries_.emplace(key, std::move(value));
  }

  std::map<Key, IntPoly> snapshot() const {
    std::shared_lock lock(mutex_);
    return entries_;
  }

  void replace_all(std::map<Key, IntPoly> entries) {
    std::unique_lock lock(mutex_);
    entries_ = std::move(entries);
  }

  void clear() { replace_all({}); }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, IntPoly> entries_;
};

inline UniformMemo& uniform_memo() {
  static UniformMemo memo;
  return memo;
}

// Evaluates one memo key from scratch.
inline IntPoly derive_uniform_entry(const UniformMemo::Key& key) {
  auto [k, n, tag] = key;
  switch (tag) {
    case 'Q': return uniform_Q_closed(k, n);
    case 'Y': return uniform_Y_closed(k, n);
    case 't': return IntPoly::constant(uniform_tau_closed(k, n));
  }
  throw InvalidInput(std::string("unknown uniform memo tag '") + tag + "'");
}

namespace detail {

inline IntPoly memoized_uniform(int k, int n, char tag) {
  UniformMemo::Key key{k, n, tag};
  if (auto hit = uniform_memo().find(key)) return *hit;
  IntPoly value = derive_uniform_entry(key);
  uniform_memo().insert(key, value);
  return value;
}

}  // namespace detail

inline IntPoly uniform_value(int k, int n, PolyKind which) {
  detail::require_inverse_kind(which);
  return detail::memoized_uniform(k, n, which == PolyKind::kQ ? 'Q' : 'Y');
}

inline BigInt uniform_tau(int k, int n) {
  return detail::memoized_uniform(k, n, 't').coefficient(0);
}

inline IntPoly uniform_recursion_step(int k, int n, PolyKind which) {
  detail::require_inverse_kind(which);
  if (k <= 0 || k >= n) {
    throw InvalidInput("uniform recursion needs 0 < k < n, got k=" + std::to_string(k) +
                       ", n=" + std::to_string(n));
  }
  IntPoly out = uniform_value(k, n - 1, which) +
                IntPoly::one_plus_x_pow(1) * uniform_value(k - 1, n - 1, which);
  if (k % 2 == 0) out -= IntPoly::monomial(uniform_tau(k - 1, n - 1), k / 2);
  return out;
}

namespace detail {

// V(U_{m-1,m}), the value of an m-cycle.
inline IntPoly cycle_value(int m, PolyKind which) { return uniform_value(m - 1, m, which); }

inline IntPoly glued_cycle_uncached(int a, int b, PolyKind which, bool with_tau) {
  if (a == 2) return cycle_value(b, which);
  if (b == 2) return cycle_value(a, which);
  const int n = a + b - 1;
  const IntPoly va = cycle_value(a - 1, which);
  const IntPoly vb = cycle_value(b - 1, which);
  IntPoly out = cycle_value(n - 1, which) + IntPoly::one_plus_x_pow(1) * va * vb;
  if (with_tau) {
    if (a % 2 == 1) out -= IntPoly::monomial(uniform_tau(a - 2, a - 1), (a - 1) / 2) * vb;
    if (b % 2 == 1) out -= IntPoly::monomial(uniform_tau(b - 2, b - 1), (b - 1) / 2) * va;
  }
  return out;
}

class GluedCycleMemo {
 public:
  IntPoly get(int a, int b, PolyKind which) {
    const auto key = std::make_tuple(std::min(a, b), std::max(a, b), which);
    {
      std::shared_lock lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end()) return it->second;
    }
    IntPoly value = glued_cycle_uncached(std::get<0>(key), std::get<1>(key), which, true);
    std::unique_lock lock(mutex_);
    entries_.emplace(key, value);
    return value;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::tuple<int, int, PolyKind>, IntPoly> entries_;
};

inline GluedCycleMemo& glued_cycle_memo() {
  static GluedCycleMemo memo;
  return memo;
}

inline void require_glued_params(int a, int b) {
  if (a < 2 || b < 2) {
    throw InvalidInput("glued cycles need a, b >= 2, got a=" + std::to_string(a) +
                       ", b=" + std::to_string(b));
  }
}

}  // namespace detail

// Q or Y of the graphic matroid of an a-cycle and a b-cycle sharing an edge.
inline IntPoly glued_cycle(int a, int b, PolyKind which) {
  detail::require_inverse_kind(which);
  detail::require_glued_params(a, b);
  return detail::glued_cycle_memo().get(a, b, which);
}

// Same value for even a and b, where the τ corrections are identically zero;
// this evaluates the shortened expression without them.
inline IntPoly glued_cycle_even(int a, int b, PolyKind which) {
  detail::require_inverse_kind(which);
  detail::require_glued_params(a, b);
  if (a % 2 != 0 || b % 2 != 0) {
    throw InvalidInput("glued_cycle_even needs even cycle lengths");
  }
  return detail::glued_cycle_uncached(a, b, which, false);
}

// [m]_q = (q^m − 1)/(q − 1).
inline BigInt q_integer(int m, int q) {
  if (q < 2 || m < 0) throw InvalidInput("q-integer needs q >= 2 and m >= 0");
  return (ipow(BigInt(q), static_cast<unsigned>(m)) - 1) / (q - 1);
}

// Q of PG(r−1, q) with one point deleted.
inline IntPoly pg_minus_point_Q(int r, int q) {
  if (r < 2 || q < 2) {
    throw InvalidInput("pg_minus_point_Q needs r >= 2 and q >= 2");
  }
  auto qpow = [q](long long e) { return ipow(BigInt(q), static_cast<unsigned>(e)); };
  auto c2 = [](long long m) { return m * (m - 1) / 2; };
  const BigInt top = qpow(c2(r - 1));
  return IntPoly({qpow(c2(r)) - top, q_integer(r - 1, q) * qpow(c2(r - 2)) - top});
}

namespace detail {

// Q_{C_{a,n+1−a}} − Q_{U_{a−1,a}} Q_{U_{n−a−1,n−a}}.
inline IntPoly corank2_term(int a, int n, PolyKind which) {
  return glued_cycle(a, n + 1 - a, which) - cycle_value(a, which) * cycle_value(n - a, which);
}

}  // namespace detail

// Value for a coloopless corank-2 matroid on n elements given λ_r counts.
inline IntPoly corank2(int n, const StressedProfile& profile, PolyKind which) {
  detail::require_inverse_kind(which);
  if (n < 2) throw InvalidInput("corank-2 matroids need n >= 2");
  IntPoly out = uniform_value(n - 2, n, which);
  for (const auto& [r, lambda] : profile) {
    if (lambda < 0 || r < 0) throw InvalidInput("stressed profile entries must be nonnegative");
    IntPoly inner;
    for (int a = 2; a <= n - r - 1; ++a) inner += detail::corank2_term(a, n, which);
    out -= BigInt(lambda) * inner;
  }
  return out;
}

inline IntPoly corank2(const Matroid& m, PolyKind which) {
  detail::require_inverse_kind(which);
  if (m.size() - m.rank() != 2) {
    throw PreconditionError("corank2: " + m.description() + " has corank " +
                            std::to_string(m.size() - m.rank()));
  }
  if (loops_and_coloops(m).second != 0) {
    throw PreconditionError("corank2: " + m.description() + " has coloops");
  }
  return corank2(m.size(), stressed_profile(m), which);
}

// λ_{n−1−s} = number of parts of size s, for s >= 2.
inline StressedProfile partition_profile(const PartitionSpec& spec) {
  StressedProfile profile;
  const int n = spec.n();
  for (int s : spec.parts) {
    if (s >= 2) ++profile[n - 1 - s];
  }
  return profile;
}

inline IntPoly partition_corank2_QY(const PartitionSpec& spec, PolyKind which) {
  detail::require_inverse_kind(which);
  if (spec.parts.size() < 2) throw InvalidInput("partition needs at least 2 parts");
  for (int p : spec.parts) {
    if (p <= 0) throw InvalidInput("partition parts must be positive");
  }
  const int n = spec.n();
  IntPoly out = uniform_value(n - 2, n, which);
  for (int s : spec.parts) {
    for (int a = 2; a <= s; ++a) out -= detail::corank2_term(a, n, which);
  }
  return out;
}

}  // namespace matroidkl

#endif  // MATROIDKL_FAMILIES_HPP_
