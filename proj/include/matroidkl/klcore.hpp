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

// Kazhdan-Lusztig data P, Z, Q, Y and τ of a matroid, with method dispatch.
//
// Every entry point simplifies its input first; all four polynomials depend
// only on the lattice of flats.

#ifndef MATROIDKL_KLCORE_HPP_
#define MATROIDKL_KLCORE_HPP_

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "matroidkl/deletion.hpp"
#include "matroidkl/errors.hpp"
#include "matroidkl/exactpoly.hpp"
#include "matroidkl/families.hpp"
#include "matroidkl/incidence.hpp"
#include "matroidkl/invariant_kind.hpp"
#include "matroidkl/lattice.hpp"
#include "matroidkl/matroid.hpp"

namespace matroidkl {

enum class Method { kAuto, kDefining, kIncidence, kDeletion };

inline std::string to_string(Method m) {
  switch (m) {
    case Method::kAuto: return "auto";
    case Method::kDefining: return "defining";
    case Method::kIncidence: return "incidence";
    case Method::kDeletion: return "deletion";
  }
  return "?";
}

inline std::optional<Method> parse_method(std::string_view s) {
  if (s == "auto") return Method::kAuto;
  if (s == "defining") return Method::kDefining;
  if (s == "incidence") return Method::kIncidence;
  if (s == "deletion") return Method::kDeletion;
  return std::nullopt;
}

inline constexpr int kDefaultLatticeCap = 14;

struct ComputeOptions {
  Method method = Method::kAuto;
  // Ground-set limit (after simplification) for the lattice-based methods.
  int lattice_cap = kDefaultLatticeCap;
};

// With T = rev_d(R) − R for the known part R of a palindromic completion, the
// unknown part is the low half of T. For even d the middle coefficient of T
// must vanish, and T must equal P − rev_d(P).
inline IntPoly palindromic_completion(const IntPoly& known, int d) {
  const IntPoly t = reverse(known, d) - known;
  if (d % 2 == 0 && t.coefficient(d / 2) != 0) {
    throw InternalError("palindromic completion: nonzero middle coefficient " +
                        t.coefficient(d / 2).str() + " in degree " + std::to_string(d / 2));
  }
  IntPoly low = t.truncated((d + 1) / 2);
  if (low - reverse(low, d) != t) {
    throw InternalError("palindromic completion: " + t.to_string() +
                        " is not antisymmetric about degree " + std::to_string(d) + "/2");
  }
  return low;
}

namespace detail {

inline IntPoly sign_for_gap(int gap, const IntPoly& p) {
  return gap % 2 == 0 ? p : -p;
}

}  // namespace detail

// P on every upper interval [F, top], indexed by flat id.
inline std::vector<IntPoly> defining_P_upper(const FlatLattice& lattice) {
  std::vector<IntPoly> p(static_cast<std::size_t>(lattice.size()));
  const int top = lattice.top();
  for (int f = lattice.size() - 1; f >= 0; --f) {
    const int d = lattice.rank_of(top) - lattice.rank_of(f);
    if (d == 0) {
      p[static_cast<std::size_t>(f)] = IntPoly::constant(1);
      continue;
    }
    IntPoly r;
    for (int h : lattice.up(f)) {
      if (h == f) continue;
      r += p[static_cast<std::size_t>(h)].shifted(lattice.rank_of(h) - lattice.rank_of(f));
    }
    p[static_cast<std::size_t>(f)] = palindromic_completion(r, d);
  }
  return p;
}

// Q on every lower interval [bottom, G], indexed by flat id.
inline std::vector<IntPoly> defining_Q_lower(const FlatLattice& lattice) {
  std::vector<IntPoly> q(static_cast<std::size_t>(lattice.size()));
  const int bottom = lattice.bottom();
  for (int g = 0; g < lattice.size(); ++g) {
    const int d = lattice.rank_of(g);
    if (d == 0) {
      q[static_cast<std::size_t>(g)] = IntPoly::constant(1);
      continue;
    }
    IntPoly s;
    for (int h : lattice.interval(bottom, g)) {
      if (h == g) continue;
      const int gap = d - lattice.rank_of(h);
      s += detail::sign_for_gap(gap, lattice.mobius(h, g) * q[static_cast<std::size_t>(h)])
               .shifted(gap);
    }
    q[static_cast<std::size_t>(g)] = palindromic_completion(s, d);
  }
  return q;
}

// P on every interval: for each top G, fill [F, G] from F = G downwards.
inline IncElement defining_P_element(std::shared_ptr<const FlatLattice> lattice) {
  const FlatLattice& l = *lattice;
  IncElement out(lattice);
  for (int g = 0; g < l.size(); ++g) {
    for (int f = g; f >= 0; --f) {
      if (!l.leq(f, g)) continue;
      const int d = l.rank_of(g) - l.rank_of(f);
      if (d == 0) {
        out.set(f, g, IntPoly::constant(1));
        continue;
      }
      IntPoly r;
      for (int h : l.interval(f, g)) {
        if (h == f) continue;
        r += out.at(h, g).shifted(l.rank_of(h) - l.rank_of(f));
      }
      out.set(f, g, palindromic_completion(r, d));
    }
  }
  return out;
}

// Q on every interval: for each bottom F, fill [F, G] in increasing rank.
inline IncElement defining_Q_element(std::shared_ptr<const FlatLattice> lattice) {
  const FlatLattice& l = *lattice;
  IncElement out(lattice);
  for (int f = 0; f < l.size(); ++f) {
    for (int g : l.up(f)) {
      const int d = l.rank_of(g) - l.rank_of(f);
      if (d == 0) {
        out.set(f, g, IntPoly::constant(1));
        continue;
      }
      IntPoly s;
      for (int h : l.interval(f, g)) {
        if (h == g) continue;
        const int gap = l.rank_of(g) - l.rank_of(h);
        s += detail::sign_for_gap(gap, l.mobius(h, g) * out.at(f, h)).shifted(gap);
      }
      out.set(f, g, palindromic_completion(s, d));
    }
  }
  return out;
}

// Z_{FG} = Σ_{F ≤ H ≤ G} x^(rk H − rk F) P_{HG}.
inline IncElement z_element_from_P(const IncElement& p) {
  const FlatLattice& l = p.lattice();
  IncElement out(p.lattice_ptr());
  for (int f = 0; f < l.size(); ++f) {
    for (int g : l.up(f)) {
      IntPoly z;
      for (int h : l.interval(f, g)) z += p.at(h, g).shifted(l.rank_of(h) - l.rank_of(f));
      out.set(f, g, std::move(z));
    }
  }
  return out;
}

// Y_{FG} = Σ_{F ≤ H ≤ G} (−1)^(rk G − rk H) μ(H, G) x^(rk G − rk H) Q_{FH}.
inline IncElement y_element_from_Q(const IncElement& q) {
  const FlatLattice& l = q.lattice();
  IncElement out(q.lattice_ptr());
  for (int f = 0; f < l.size(); ++f) {
    for (int g : l.up(f)) {
      IntPoly y;
      for (int h : l.interval(f, g)) {
        const int gap = l.rank_of(g) - l.rank_of(h);
        y += detail::sign_for_gap(gap, l.mobius(h, g) * q.at(f, h)).shifted(gap);
      }
      out.set(f, g, std::move(y));
    }
  }
  return out;
}

// a_{FG} ↦ (−1)^(rk G − rk F) a_{FG}.
inline IncElement hat(const IncElement& a) {
  const FlatLattice& l = a.lattice();
  IncElement out(a.lattice_ptr());
  for (int f = 0; f < l.size(); ++f) {
    for (int g : l.up(f)) {
      out.set(f, g, detail::sign_for_gap(l.rank_of(g) - l.rank_of(f), a.at(f, g)));
    }
  }
  return out;
}

namespace detail {

inline std::shared_ptr<const FlatLattice> lattice_for(const Matroid& simple, int cap) {
  if (simple.size() > cap) {
    throw CapacityError("lattice methods are capped at " + std::to_string(cap) +
                        " elements; " + simple.description() + " has " +
                        std::to_string(simple.size()) + " after simplification");
  }
  return std::make_shared<const FlatLattice>(flats(simple));
}

inline IntPoly defining_value(const FlatLattice& l, PolyKind which) {
  const int top = l.top();
  const int d = l.rank();
  switch (which) {
    case PolyKind::kP: return defining_P_upper(l)[0];
    case PolyKind::kZ: {
      auto p = defining_P_upper(l);
      IntPoly z;
      for (int h = 0; h < l.size(); ++h) z += p[static_cast<std::size_t>(h)].shifted(l.rank_of(h));
      return z;
    }
    case PolyKind::kQ: return defining_Q_lower(l)[static_cast<std::size_t>(top)];
    case PolyKind::kY: {
      auto q = defining_Q_lower(l);
      IntPoly y;
      for (int h = 0; h < l.size(); ++h) {
        const int gap = d - l.rank_of(h);
        y += sign_for_gap(gap, l.mobius(h, top) * q[static_cast<std::size_t>(h)]).shifted(gap);
      }
      return y;
    }
  }
  throw InternalError("defining_value: unknown kind");
}

// Each polynomial is read off the inverse of its partner element:
// P = inverse of Q̂, Z = inverse of Ŷ, Q̂ = inverse of P, Ŷ = inverse of Z.
inline IntPoly incidence_value(const std::shared_ptr<const FlatLattice>& l, PolyKind which) {
  const int bottom = l->bottom(), top = l->top();
  switch (which) {
    case PolyKind::kP:
      return invert(hat(defining_Q_element(l))).at(bottom, top);
    case PolyKind::kZ:
      return invert(hat(y_element_from_Q(defining_Q_element(l)))).at(bottom, top);
    case PolyKind::kQ:
      return sign_for_gap(l->rank(), invert(defining_P_element(l)).at(bottom, top));
    case PolyKind::kY:
      return sign_for_gap(l->rank(),
                          invert(z_element_from_P(defining_P_element(l))).at(bottom, top));
  }
  throw InternalError("incidence_value: unknown kind");
}

inline std::optional<IntPoly> family_fast_path(const Matroid& m, PolyKind which) {
  if (!is_inverse_kind(which)) return std::nullopt;
  if (auto* u = std::get_if<UniformTag>(&m.family())) return uniform_value(u->k, u->n, which);
  if (auto* g = std::get_if<GluedCycleTag>(&m.family())) return glued_cycle(g->a, g->b, which);
  if (auto* p = std::get_if<PartitionTag>(&m.family())) return partition_corank2_QY(p->spec, which);
  return std::nullopt;
}

}  // namespace detail

namespace detail {

inline IntPoly dispatch(const Matroid& m, PolyKind which, const ComputeOptions& options) {
  switch (options.method) {
    case Method::kDefining: {
      auto l = detail::lattice_for(simplify(m), options.lattice_cap);
      return detail::defining_value(*l, which);
    }
    case Method::kIncidence:
      return detail::incidence_value(detail::lattice_for(simplify(m), options.lattice_cap), which);
    case Method::kDeletion:
      return compute_by_deletion(m, which);
    case Method::kAuto: {
      if (auto fast = detail::family_fast_path(m, which)) return *fast;
      DeletionEngine engine(m);
      return engine.value(engine.root(), which);
    }
  }
  throw InternalError("compute: unknown method");
}

}  // namespace detail

inline IntPoly compute(const Matroid& m, PolyKind which, const ComputeOptions& options = {}) {
  IntPoly out = detail::dispatch(m, which, options);
  if ((which == PolyKind::kZ || which == PolyKind::kY) && !is_palindromic(out, m.rank())) {
    throw InternalError(to_string(which) + " of " + m.description() + " = " + out.to_string() +
                        " is not palindromic of degree " + std::to_string(m.rank()));
  }
  return out;
}

inline BigInt tau_of(const IntPoly& p, int rank) {
  return rank % 2 == 1 ? p.coefficient((rank - 1) / 2) : BigInt(0);
}

inline BigInt compute_tau(const Matroid& m, const ComputeOptions& options = {}) {
  const int r = m.rank();
  if (r % 2 == 0) return 0;
  if (options.method == Method::kAuto) {
    if (auto* u = std::get_if<UniformTag>(&m.family())) return uniform_tau(u->k, u->n);
    DeletionEngine engine(m);
    return engine.tau(engine.root());
  }
  return tau_of(compute(m, PolyKind::kP, options), r);
}

inline IntPoly kl_P(const Matroid& m) { return compute(m, PolyKind::kP); }
inline IntPoly z_poly(const Matroid& m) { return compute(m, PolyKind::kZ); }
inline IntPoly inv_Q(const Matroid& m) { return compute(m, PolyKind::kQ); }
inline IntPoly y_poly(const Matroid& m) { return compute(m, PolyKind::kY); }
inline BigInt tau(const Matroid& m) { return compute_tau(m); }

struct KLBundle {
  IntPoly P, Z, Q, Y;
  BigInt tau;
  int rank = 0;
};

// Throws InternalError naming the first structural property that fails.
inline void validate(const KLBundle& b) {
  auto fail = [](const std::string& what) { throw InternalError("KL bundle check: " + what); };
  const int k = b.rank;
  for (const IntPoly* p : {&b.P, &b.Z, &b.Q, &b.Y}) {
    for (const auto& c : p->coeffs()) {
      if (c < 0) fail("negative coefficient in " + p->to_string());
    }
  }
  if (b.P.coefficient(0) <= 0 || b.Q.coefficient(0) <= 0) fail("constant term of P or Q is not positive");
  if (b.P.coefficient(0) != 1) fail("constant term of P is not 1");
  if (k > 0 && (2 * b.P.degree() >= k || 2 * b.Q.degree() >= k)) fail("degree bound on P or Q");
  if (b.Z.is_zero() || b.Z.degree() != k || !is_palindromic(b.Z, k)) fail("Z not palindromic of degree rank");
  if (b.Y.is_zero() || b.Y.degree() != k || !is_palindromic(b.Y, k)) fail("Y not palindromic of degree rank");
  if (b.Z.coefficient(0) != 1) fail("constant term of Z is not 1");
  if (b.tau != tau_of(b.P, k)) fail("tau disagrees with P");
}

inline KLBundle compute_bundle(const Matroid& m, const ComputeOptions& options = {}) {
  KLBundle b;
  b.rank = m.rank();
  b.P = compute(m, PolyKind::kP, options);
  b.Z = compute(m, PolyKind::kZ, options);
  b.Q = compute(m, PolyKind::kQ, options);
  b.Y = compute(m, PolyKind::kY, options);
  b.tau = tau_of(b.P, b.rank);
  validate(b);
  return b;
}

}  // namespace matroidkl

#endif  // MATROIDKL_KLCORE_HPP_
