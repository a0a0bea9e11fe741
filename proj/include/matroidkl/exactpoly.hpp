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

// Dense univariate polynomials over arbitrary-precision integers, and the
// exact analytic checks run on them (palindromy, log-concavity, gamma
// vectors, Sturm root counting).

#ifndef MATROIDKL_EXACTPOLY_HPP_
#define MATROIDKL_EXACTPOLY_HPP_

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "matroidkl/errors.hpp"

namespace matroidkl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

// Coefficient i multiplies x^i. The zero polynomial stores no coefficients and
// the leading stored coefficient is never zero.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<BigInt> coeffs) : coeffs_(coeffs) { trim(); }
  explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static IntPoly constant(const BigInt& c) { return IntPoly({c}); }
  static IntPoly monomial(const BigInt& c, int k) {
    std::vector<BigInt> coeffs(static_cast<std::size_t>(k) + 1);
    coeffs[static_cast<std::size_t>(k)] = c;
    return IntPoly(std::move(coeffs));
  }
  static IntPoly x() { return monomial(1, 1); }
  // (1 + x)^n.
  static IntPoly one_plus_x_pow(int n) {
    std::vector<BigInt> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) coeffs.push_back(binomial(n, i));
    return IntPoly(std::move(coeffs));
  }

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  int degree() const {
    if (is_zero()) {
      throw PreconditionError("the zero polynomial has no degree");
    }
    return static_cast<int>(coeffs_.size()) - 1;
  }

  BigInt coefficient(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
  }
  const BigInt& leading() const {
    if (is_zero()) throw PreconditionError("zero polynomial has no leading term");
    return coeffs_.back();
  }
  std::span<const BigInt> coeffs() const { return coeffs_; }

  IntPoly& operator+=(const IntPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
      coeffs_[i] += other.coeffs_[i];
    }
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
      coeffs_[i] -= other.coeffs_[i];
    }
    trim();
    return *this;
  }
  IntPoly& operator*=(const IntPoly& other) {
    *this = *this * other;
    return *this;
  }

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return IntPoly(std::move(out));
  }
  friend IntPoly operator*(const BigInt& s, IntPoly p) {
    for (auto& c : p.coeffs_) c *= s;
    p.trim();
    return p;
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  // x^k * p.
  IntPoly shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> out(static_cast<std::size_t>(k), BigInt(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return IntPoly(std::move(out));
  }

  IntPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      out[i - 1] = coeffs_[i] * static_cast<unsigned long long>(i);
    }
    return IntPoly(std::move(out));
  }

  Rational evaluate(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * at + Rational(*it);
    }
    return acc;
  }

  // Terms of degree strictly below `bound`.
  IntPoly truncated(int bound) const {
    if (bound <= 0) return {};
    auto keep = std::min(coeffs_.size(), static_cast<std::size_t>(bound));
    return IntPoly(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + keep));
  }

  // Human-readable form, e.g. "1 + 2*x + x^2".
  friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
    return os << p.to_string();
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const BigInt& c = coeffs_[i];
      if (c == 0) continue;
      BigInt mag = boost::multiprecision::abs(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (i == 0 || mag != 1) {
        out += mag.str();
        if (i > 0) out += "*";
      }
      if (i == 1) out += "x";
      if (i > 1) out += "x^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

// Scratch polynomial with exact rational coefficients. Used where closed
// formulas pass through fractions before landing back in Z[x].
class RatScratch {
 public:
  void add(int degree, const Rational& value) {
    if (static_cast<std::size_t>(degree) >= coeffs_.size()) {
      coeffs_.resize(static_cast<std::size_t>(degree) + 1);
    }
    coeffs_[static_cast<std::size_t>(degree)] += value;
  }

  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) {
      return boost::multiprecision::denominator(r) == 1;
    });
  }

  IntPoly to_int_poly() const {
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const auto& r : coeffs_) {
      if (boost::multiprecision::denominator(r) != 1) {
        throw InternalError("fractional coefficient " + r.str() +
                            " where an integer was expected");
      }
      out.push_back(boost::multiprecision::numerator(r));
    }
    return IntPoly(std::move(out));
  }

 private:
  std::vector<Rational> coeffs_;
};

// x^d * p(1/x).
inline IntPoly reverse(const IntPoly& p, int d) {
  if (p.is_zero()) return {};
  if (d < p.degree()) {
    throw PreconditionError("reverse: degree " + std::to_string(p.degree()) +
                            " exceeds declared degree " + std::to_string(d));
  }
  std::vector<BigInt> out(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= p.degree(); ++i) {
    out[static_cast<std::size_t>(d - i)] = p.coefficient(i);
  }
  return IntPoly(std::move(out));
}

inline bool is_palindromic(const IntPoly& p, int d) { return reverse(p, d) == p; }

// Hadamard product of p with (1 + x)^deg(p).
inline IntPoly normalize_b(const IntPoly& p) {
  int s = p.degree();
  std::vector<BigInt> out;
  out.reserve(p.size());
  for (int i = 0; i <= s; ++i) out.push_back(binomial(s, i) * p.coefficient(i));
  return IntPoly(std::move(out));
}

// c_i^2 >= c_{i-1} c_{i+1} on the raw window [0, deg].
inline bool is_log_concave(const IntPoly& p) {
  int d = p.degree();
  for (int i = 1; i < d; ++i) {
    if (p.coefficient(i) * p.coefficient(i) <
        p.coefficient(i - 1) * p.coefficient(i + 1)) {
      return false;
    }
  }
  return true;
}

// Coordinates of a palindromic p of declared degree d in the basis
// x^i (1 + x)^(d - 2i), i = 0..floor(d/2).
inline std::vector<BigInt> gamma_vector(const IntPoly& p, int d) {
  if (d < 0 || (!p.is_zero() && p.degree() > d) || !is_palindromic(p, d)) {
    throw PreconditionError("gamma_vector: polynomial is not palindromic of degree " +
                            std::to_string(d));
  }
  std::vector<BigInt> gamma;
  IntPoly rest = p;
  for (int i = 0; 2 * i <= d; ++i) {
    BigInt g = rest.coefficient(i);
    gamma.push_back(g);
    if (g != 0) rest -= g * IntPoly::one_plus_x_pow(d - 2 * i).shifted(i);
  }
  if (!rest.is_zero()) {
    throw InternalError("gamma_vector: nonzero remainder " + rest.to_string());
  }
  return gamma;
}

inline BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) g = boost::multiprecision::gcd(g, c);
  return g;
}

// p divided by its (positive) content; signs are preserved.
inline IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  std::vector<BigInt> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : out) c /= g;
  return IntPoly(std::move(out));
}

// lc(b)^(deg a - deg b + 1) * a  mod  b, computed without fractions.
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  const int db = b.degree();
  if (a.is_zero() || a.degree() < db) return a;
  int delta = a.degree() - db + 1;
  const BigInt& lb = b.leading();
  IntPoly r = a;
  while (!r.is_zero() && r.degree() >= db) {
    IntPoly t = IntPoly::monomial(r.leading(), r.degree() - db) * b;
    r = lb * r - t;
    --delta;
  }
  if (delta > 0) r = ipow(lb, static_cast<unsigned>(delta)) * r;
  return r;
}

// Exact quotient a / b in Z[x]; throws if b does not divide a.
inline IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (a.is_zero()) return {};
  const int db = b.degree();
  if (a.degree() < db) throw InternalError("divide_exact: non-exact division");
  std::vector<BigInt> quotient(static_cast<std::size_t>(a.degree() - db) + 1);
  IntPoly r = a;
  while (!r.is_zero() && r.degree() >= db) {
    BigInt q, rem;
    boost::multiprecision::divide_qr(r.leading(), b.leading(), q, rem);
    if (rem != 0) throw InternalError("divide_exact: non-exact division");
    int shift = r.degree() - db;
    quotient[static_cast<std::size_t>(shift)] = q;
    r -= IntPoly::monomial(q, shift) * b;
  }
  if (!r.is_zero()) throw InternalError("divide_exact: non-exact division");
  return IntPoly(std::move(quotient));
}

// Primitive gcd with positive leading coefficient.
inline IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly u = primitive_part(a);
  IntPoly v = primitive_part(b);
  if (u.is_zero()) std::swap(u, v);
  if (u.is_zero()) return {};
  while (!v.is_zero()) {
    if (u.degree() < v.degree()) std::swap(u, v);
    IntPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = primitive_part(r);
  }
  if (u.leading() < 0) u = -u;
  return u;
}

inline IntPoly square_free_part(const IntPoly& p) {
  if (p.is_zero()) throw PreconditionError("square_free_part of the zero polynomial");
  IntPoly g = poly_gcd(p, p.derivative());
  if (g.is_zero()) return p;
  return primitive_part(divide_exact(p, g));
}

namespace detail {

inline int sign_of(const BigInt& v) { return v.sign(); }

inline int sign_variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace detail

// Sturm chain p, p', -rem(...), ... with every member scaled by a positive
// factor (pseudo-remainders followed by content stripping).
inline std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  if (p.is_zero()) throw PreconditionError("sturm_chain of the zero polynomial");
  std::vector<IntPoly> chain{primitive_part(p)};
  IntPoly d = primitive_part(p.derivative());
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    if (b.degree() == 0) break;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    int delta = a.degree() - b.degree() + 1;
    // prem = lc(b)^delta * rem; the chain needs -rem up to a positive factor.
    bool factor_negative = b.leading() < 0 && (delta % 2 == 1);
    IntPoly next = factor_negative ? r : -r;
    chain.push_back(primitive_part(next));
  }
  return chain;
}

// Number of distinct real roots.
inline int real_root_count(const IntPoly& p) {
  auto chain = sturm_chain(p);
  std::vector<int> at_neg, at_pos;
  for (const auto& s : chain) {
    int lead = detail::sign_of(s.leading());
    at_pos.push_back(lead);
    at_neg.push_back(s.degree() % 2 == 0 ? lead : -lead);
  }
  return detail::sign_variations(at_neg) - detail::sign_variations(at_pos);
}

inline bool is_real_rooted(const IntPoly& p) {
  IntPoly sf = square_free_part(p);
  return real_root_count(sf) == sf.degree();
}

}  // namespace matroidkl

#endif  // MATROIDKL_EXACTPOLY_HPP_
