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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any
// failure. Reference values come from the brute-force oracle in
// tests/support, never from the library under test.

#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "matroidkl/matroidkl.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

namespace {

using namespace matroidkl;

// Relative residual allowed when plugging the approximate complex root back
// into B(Q). Everything else is compared exactly.
constexpr long double kRootResidualTolerance = 1e-6L;
// Largest ground set for the uniform and Boolean oracle sweeps.
constexpr int kUniformOracleMaxN = 10;
constexpr int kBooleanMaxN = 12;
constexpr int kPartitionOracleMaxN = 8;
constexpr int kCleanScanN = 20;
constexpr int kCounterexampleScanN = 21;
constexpr int kLogConcaveScanMaxN = 25;

const PolyKind kKinds[] = {PolyKind::kP, PolyKind::kZ, PolyKind::kQ, PolyKind::kY};

IntPoly pick(const oracle::Result& r, PolyKind k) {
  switch (k) {
    case PolyKind::kP: return r.P;
    case PolyKind::kZ: return r.Z;
    case PolyKind::kQ: return r.Q;
    case PolyKind::kY: return r.Y;
  }
  return {};
}

// Collects the first few mismatches of one criterion.
class Log {
 public:
  void fail(const std::string& what) {
    ++failures_;
    if (lines_.size() < 5) lines_.push_back(what);
  }
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) fail(what);
  }
  void expect_eq(const IntPoly& got, const IntPoly& want, const std::string& what) {
    expect(got == want, what + ": got " + got.to_string() + ", want " + want.to_string());
  }
  bool ok() const { return failures_ == 0 && checks_ > 0; }
  long long checks() const { return checks_; }
  long long failures() const { return failures_; }
  const std::vector<std::string>& lines() const { return lines_; }

 private:
  long long checks_ = 0;
  long long failures_ = 0;
  std::vector<std::string> lines_;
};

int g_failed = 0;

void run(const std::string& name, const std::function<void(Log&)>& body) {
  Log log;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(log);
  } catch (const std::exception& e) {
    log.fail(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = log.ok();
  if (!ok) ++g_failed;
  std::printf("%s  %-48s %lld checks, %lld failed, %.1fs\n", ok ? "PASS" : "FAIL", name.c_str(),
              log.checks(), log.failures(), secs);
  for (const auto& line : log.lines()) std::printf("      %s\n", line.c_str());
  std::fflush(stdout);
}

ComputeOptions with(Method method) {
  ComputeOptions o;
  o.method = method;
  return o;
}

bool is_coloop(const Matroid& m, int i) { return m.rank(m.ground() & ~singleton(i)) < m.rank(); }

// Adds element n parallel to element `e`.
class ParallelExtension final : public detail::RankOracle {
 public:
  ParallelExtension(Matroid base, int e) : RankOracle(base.size() + 1), base_(std::move(base)), e_(e) {}
  int rank(ElementSet a) const override {
    const int extra = size() - 1;
    if (contains(a, extra)) a = (a & ~singleton(extra)) | singleton(e_);
    return base_.rank(a);
  }

 private:
  Matroid base_;
  int e_;
};

Matroid with_parallel(const Matroid& m, int e) {
  return Matroid(std::make_shared<ParallelExtension>(m, e), m.description() + "+parallel");
}

void counterexample(Log& log) {
  const CounterexampleVerdict v = verify_counterexample();
  for (const auto& d : v.diff) log.fail(d);
  std::vector<BigInt> q(counterexample_expected_q().begin(), counterexample_expected_q().end());
  std::vector<BigInt> bq(counterexample_expected_bq().begin(), counterexample_expected_bq().end());
  log.expect_eq(v.q, IntPoly(q), "Q of partition (4,4,4,3,3,3)");
  log.expect_eq(v.bq, IntPoly(bq), "B(Q)");
  log.expect(!is_real_rooted(v.bq), "B(Q) must not be real-rooted");
  log.expect(real_root_count(v.bq) == kCounterexampleRealRoots,
             "distinct real roots: " + std::to_string(real_root_count(v.bq)));
  log.expect(is_log_concave(v.q), "Q stays log-concave");
  // Same value through the stressed-profile form and through the generic
  // corank-2 evaluation.
  const auto& spec = counterexample_partition();
  log.expect_eq(corank2(spec.n(), partition_profile(spec), PolyKind::kQ), v.q, "profile form");
  log.expect(v.complex_root.has_value(), "one conjugate pair located");
  if (v.complex_root) {
    const std::complex<long double> z(v.complex_root->real(), v.complex_root->imag());
    std::complex<long double> acc = 0, scale = 0;
    for (int i = v.bq.degree(); i >= 0; --i) {
      const auto c = static_cast<long double>(v.bq.coefficient(i));
      acc = acc * z + c;
      scale = scale * std::abs(z) + std::abs(c);
    }
    log.expect(std::abs(acc) / std::abs(scale) < kRootResidualTolerance, "complex root residual");
  }
}

void method_agreement(Log& log) {
  for (const auto& item : corpus::full()) {
    const oracle::Result ref = oracle::compute(item.m);
    for (Method method : {Method::kDefining, Method::kIncidence, Method::kDeletion, Method::kAuto}) {
      for (PolyKind k : kKinds) {
        log.expect_eq(compute(item.m, k, with(method)), pick(ref, k),
                      item.name + " " + to_string(method) + " " + to_string(k));
      }
    }
    log.expect(compute_tau(item.m) == BigInt(ref.tau), item.name + " tau");
  }
}

void deletion_steps(Log& log) {
  for (const auto& item : corpus::full()) {
    const oracle::Result ref = oracle::compute(item.m);
    for (int i = 0; i < item.m.size(); ++i) {
      if (is_coloop(item.m, i)) continue;
      const std::string at = item.name + " pivot " + std::to_string(i);
      log.expect_eq(bv_step_P(item.m, i), ref.P, at + " P");
      log.expect_eq(bv_step_Z(item.m, i), ref.Z, at + " Z");
      log.expect_eq(q_step(item.m, i), ref.Q, at + " Q");
      log.expect_eq(y_step(item.m, i), ref.Y, at + " Y");
    }
  }
}

void uniform_family(Log& log) {
  for (int n = 1; n <= kUniformOracleMaxN; ++n) {
    for (int k = 1; k <= n; ++k) {
      const std::string at = "U(" + std::to_string(k) + "," + std::to_string(n) + ")";
      const oracle::Result ref = oracle::compute(uniform(k, n));
      log.expect_eq(uniform_Q_closed(k, n), ref.Q, at + " Q closed");
      log.expect_eq(uniform_Y_closed(k, n), ref.Y, at + " Y closed");
      log.expect(uniform_tau_closed(k, n) == BigInt(ref.tau), at + " tau closed");
      if (k >= 2 && k < n) {
        log.expect_eq(uniform_recursion_step(k, n, PolyKind::kQ), ref.Q, at + " Q recursion");
        log.expect_eq(uniform_recursion_step(k, n, PolyKind::kY), ref.Y, at + " Y recursion");
      }
    }
  }
  for (int n = 0; n <= kBooleanMaxN; ++n) {
    const oracle::Result ref = oracle::compute(uniform(n, n));
    log.expect_eq(ref.Q, IntPoly::constant(1), "Boolean Q oracle");
    log.expect_eq(ref.Y, IntPoly::one_plus_x_pow(n), "Boolean Y oracle");
    log.expect_eq(uniform_Q_closed(n, n), ref.Q, "Boolean Q closed n=" + std::to_string(n));
    log.expect_eq(uniform_Y_closed(n, n), ref.Y, "Boolean Y closed n=" + std::to_string(n));
  }
}

void glued_cycles(Log& log) {
  for (int a = 2; a <= 8; ++a) {
    for (int b = a; a + b - 1 <= 10; ++b) {
      const oracle::Result ref = oracle::compute(glued_cycle_graph(a, b));
      const std::string at = "C(" + std::to_string(a) + "," + std::to_string(b) + ")";
      log.expect_eq(glued_cycle(a, b, PolyKind::kQ), ref.Q, at + " Q");
      log.expect_eq(glued_cycle(a, b, PolyKind::kY), ref.Y, at + " Y");
      log.expect_eq(glued_cycle(b, a, PolyKind::kQ), ref.Q, at + " Q swapped");
    }
  }
  const oracle::Result ref44 = oracle::compute(glued_cycle_graph(4, 4));
  log.expect_eq(glued_cycle_even(4, 4, PolyKind::kQ), ref44.Q, "C(4,4) even form Q");
  log.expect_eq(glued_cycle_even(4, 4, PolyKind::kY), ref44.Y, "C(4,4) even form Y");
}

void projective(Log& log) {
  for (auto [r, q] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const Matroid m = delete_set(pg(r, q), singleton(0));
    log.expect_eq(pg_minus_point_Q(r, q), oracle::compute(m).Q,
                  "PG(" + std::to_string(r - 1) + "," + std::to_string(q) + ") minus a point");
  }
  log.expect_eq(oracle::compute(delete_set(pg(3, 2), singleton(0))).Q,
                IntPoly(std::vector<BigInt>{6, 1}), "Fano minus a point has Q = 6 + x");
}

void partitions(Log& log) {
  for (int n = 2; n <= kPartitionOracleMaxN; ++n) {
    for (const auto& spec : partitions_with_two_or_more_parts(n)) {
      const std::string at = partition_string(spec);
      const Matroid m = partition_corank2(spec);
      const oracle::Result ref = oracle::compute(m);
      for (PolyKind k : {PolyKind::kQ, PolyKind::kY}) {
        log.expect_eq(partition_corank2_QY(spec, k), pick(ref, k), at + " " + to_string(k));
        log.expect_eq(corank2(n, partition_profile(spec), k), pick(ref, k),
                      at + " profile " + to_string(k));
      }
      std::map<int, long long> sizes;
      for (int s : spec.parts) ++sizes[s];
      for (int s = 2; s <= n - 1; ++s) {
        const long long want = sizes.count(s) ? sizes[s] : 0;
        log.expect(count_stressed(m, n - 1 - s, n - s) == want,
                   at + " stressed count for parts of size " + std::to_string(s));
      }
    }
  }
}

void incidence_algebra(Log& log) {
  for (const auto& item : corpus::full()) {
    const Matroid s = simplify(item.m);
    auto l = std::make_shared<const FlatLattice>(flats(s));
    const IncElement delta = IncElement::delta(l);
    const IncElement chi = build(IncKind::kChi, l);
    log.expect(is_kernel(chi), item.name + " chi is a kernel");
    const IncElement p = defining_P_element(l);
    const IncElement q = defining_Q_element(l);
    log.expect(convolve(p, hat(q)) == delta, item.name + " P * Q-hat = delta");
    log.expect(convolve(p, invert(p)) == delta, item.name + " P * P^-1 = delta");
    log.expect(rev(p) == convolve(chi, p), item.name + " rev(P) = chi * P");
    const IncElement z = z_element_from_P(p);
    const IncElement y = y_element_from_Q(q);
    log.expect(hat(invert(z)) == y, item.name + " Z^-1 = Y-hat");
    const oracle::Result ref = oracle::compute(item.m);
    log.expect_eq(y.at(l->bottom(), l->top()), ref.Y, item.name + " Y top entry");
  }
}

void structure(Log& log) {
  for (const auto& item : corpus::full()) {
    const int k = item.m.rank();
    KLBundle b;
    try {
      b = compute_bundle(item.m);
    } catch (const InternalError& e) {
      log.fail(item.name + ": " + e.what());
      continue;
    }
    log.expect(true, item.name);
    log.expect(gamma_nonnegative(b.Z, k), item.name + " Z gamma-nonnegative");
    log.expect(is_palindromic(b.Z, k) && is_palindromic(b.Y, k), item.name + " palindromic");
    // A loop or a parallel copy leaves all four unchanged; a coloop
    // multiplies Z and Y by (1 + x).
    const Matroid looped = direct_sum({item.m, uniform(0, 1)});
    const Matroid doubled = with_parallel(item.m, item.m.size() - 1);
    const Matroid coloop = direct_sum({item.m, uniform(1, 1)});
    for (PolyKind kind : kKinds) {
      const IntPoly base = compute(item.m, kind);
      log.expect_eq(compute(looped, kind), base, item.name + " with a loop " + to_string(kind));
      log.expect_eq(compute(doubled, kind), base, item.name + " with a parallel " + to_string(kind));
      const IntPoly factor = kind == PolyKind::kZ || kind == PolyKind::kY ? IntPoly::one_plus_x_pow(1)
                                                                          : IntPoly::constant(1);
      log.expect_eq(compute(coloop, kind), factor * base, item.name + " with a coloop " + to_string(kind));
    }
  }
}

void clean_scan(Log& log) {
  const ScanResult r = scan_partitions(kCleanScanN, kCheckBqRealRooted, 1);
  log.expect(r.partitions_checked ==
                 static_cast<long long>(partitions_with_two_or_more_parts(kCleanScanN).size()),
             "all partitions visited");
  log.expect(r.violations.empty(),
             std::to_string(r.violations.size()) + " violations at n=" + std::to_string(kCleanScanN));
  for (const auto& e : r.violations) log.fail("violation " + partition_string(e.partition));
  const ScanResult r21 = scan_partitions(kCounterexampleScanN, kCheckBqRealRooted, 1);
  bool found = false;
  for (const auto& e : r21.violations) found |= e.partition == counterexample_partition();
  log.expect(found, "(4,4,4,3,3,3) among the n=21 violations");
}

void log_concavity(Log& log) {
  for (int n = 2; n <= kLogConcaveScanMaxN; ++n) {
    const ScanResult r = scan_partitions(n, kCheckQLogConcave | kCheckYLogConcave, 1);
    log.expect(r.violations.empty(), "log-concavity violations at n=" + std::to_string(n));
    for (const auto& e : r.violations) log.fail("violation " + partition_string(e.partition));
  }
}

}  // namespace

int main() {
  run("counterexample_partition_444333", counterexample);
  run("methods_agree_with_oracle_on_corpus", method_agreement);
  run("deletion_steps_at_every_pivot", deletion_steps);
  run("uniform_closed_forms_and_recursion", uniform_family);
  run("glued_cycle_formulas", glued_cycles);
  run("projective_point_deletion_Q", projective);
  run("partition_corank2_formulas_and_stressed_counts", partitions);
  run("incidence_algebra_identities", incidence_algebra);
  run("structural_properties_and_invariance", structure);
  run("bq_real_rootedness_scans_n20_n21", clean_scan);
  run("q_y_log_concavity_scans_to_n25", log_concavity);
  std::printf("%s: %d criteria failed\n", g_failed == 0 ? "ALL PASS" : "FAILURES", g_failed);
  return g_failed == 0 ? 0 : 1;
}
