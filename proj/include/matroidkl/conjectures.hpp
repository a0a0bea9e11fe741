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

// Positivity and real-rootedness checks on inverse KL data, and scans over
// corank-2 partition matroids.

#ifndef MATROIDKL_CONJECTURES_HPP_
#define MATROIDKL_CONJECTURES_HPP_

#include <algorithm>
#include <atomic>
#include <complex>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "matroidkl/exactpoly.hpp"
#include "matroidkl/families.hpp"
#include "matroidkl/klcore.hpp"
#include "matroidkl/matroid.hpp"

namespace matroidkl {

struct ConjectureReport {
  std::string descriptor;
  int rank = 0;
  IntPoly q_poly, y_poly, bq_poly;
  bool q_log_concave = false;
  bool y_log_concave = false;
  // Unset when Z was not computed (ground set above the lattice cap).
  std::optional<bool> z_gamma_nonneg;
  bool bq_real_rooted = false;
  int real_root_count_of_bq = 0;
};

inline bool gamma_nonnegative(const IntPoly& z, int d) {
  auto gamma = gamma_vector(z, d);
  return std::all_of(gamma.begin(), gamma.end(), [](const BigInt& g) { return g >= 0; });
}

inline ConjectureReport report_from(std::string descriptor, int rank, IntPoly q, IntPoly y,
                                    std::optional<IntPoly> z = std::nullopt) {
  ConjectureReport r;
  r.descriptor = std::move(descriptor);
  r.rank = rank;
  r.bq_poly = normalize_b(q);
  r.q_log_concave = is_log_concave(q);
  r.y_log_concave = is_log_concave(y);
  if (z) r.z_gamma_nonneg = gamma_nonnegative(*z, rank);
  r.bq_real_rooted = is_real_rooted(r.bq_poly);
  r.real_root_count_of_bq = real_root_count(r.bq_poly);
  r.q_poly = std::move(q);
  r.y_poly = std::move(y);
  return r;
}

inline ConjectureReport report(const Matroid& m, int lattice_cap = kDefaultLatticeCap) {
  std::optional<IntPoly> z;
  if (simplify(m).size() <= lattice_cap) z = compute(m, PolyKind::kZ);
  return report_from(m.description(), m.rank(), compute(m, PolyKind::kQ),
                     compute(m, PolyKind::kY), std::move(z));
}

// Partitions of n with at least two parts, parts nonincreasing, in reverse
// lexicographic order: (n−1,1), (n−2,2), (n−2,1,1), ...
inline std::vector<PartitionSpec> partitions_with_two_or_more_parts(int n) {
  std::vector<PartitionSpec> out;
  if (n < 2) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      if (current.size() >= 2) out.push_back({current});
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

enum ScanCheck : unsigned {
  kCheckBqRealRooted = 1u << 0,
  kCheckQLogConcave = 1u << 1,
  kCheckYLogConcave = 1u << 2,
};

struct ScanEntry {
  PartitionSpec partition;
  ConjectureReport report;
  bool violation = false;
};

struct ScanResult {
  int n = 0;
  long long partitions_checked = 0;
  std::vector<ScanEntry> violations;
};

inline std::string partition_string(const PartitionSpec& spec) {
  std::string out = "(";
  for (std::size_t i = 0; i < spec.parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(spec.parts[i]);
  }
  return out + ")";
}

inline ScanEntry scan_one(const PartitionSpec& spec, unsigned checks) {
  ScanEntry e;
  e.partition = spec;
  e.report = report_from("partition_corank2" + partition_string(spec), spec.n() - 2,
                         partition_corank2_QY(spec, PolyKind::kQ),
                         partition_corank2_QY(spec, PolyKind::kY));
  e.violation = ((checks & kCheckBqRealRooted) && !e.report.bq_real_rooted) ||
                ((checks & kCheckQLogConcave) && !e.report.q_log_concave) ||
                ((checks & kCheckYLogConcave) && !e.report.y_log_concave);
  return e;
}

// Workers evaluate partitions in any order; `on_entry` sees them in scan
// order on the calling thread.
inline ScanResult scan_partitions(int n, unsigned checks, int workers = 1,
                                  const std::function<void(const ScanEntry&)>& on_entry = {}) {
  if (n < 2) throw InvalidInput("scan needs n >= 2");
  if (workers < 1) throw InvalidInput("worker count must be positive");
  const auto parts = partitions_with_two_or_more_parts(n);
  ScanResult result;
  result.n = n;
  std::vector<std::optional<ScanEntry>> slots(parts.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;

  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= parts.size()) return;
      try {
        ScanEntry e = scan_one(parts[i], checks);
        std::lock_guard<std::mutex> lock(mutex);
        slots[i] = std::move(e);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mutex);
        if (!failure) failure = std::current_exception();
        next = parts.size();
      }
      ready.notify_all();
    }
  };

  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);

  for (std::size_t i = 0; i < parts.size(); ++i) {
    ScanEntry e;
    {
      std::unique_lock<std::mutex> lock(mutex);
      ready.wait(lock, [&] { return slots[i].has_value() || failure; });
      if (failure) break;
      e = std::move(*slots[i]);
      slots[i].reset();
    }
    ++result.partitions_checked;
    if (on_entry) on_entry(e);
    if (e.violation) result.violations.push_back(std::move(e));
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return result;
}

inline const PartitionSpec& counterexample_partition() {
  static const PartitionSpec spec{{4, 4, 4, 3, 3, 3}};
  return spec;
}

inline const std::vector<long long>& counterexample_expected_q() {
  static const std::vector<long long> q{163,    1790,   10323,  39217,  106659,
                                        215169, 323646, 350404, 232662, 71162};
  return q;
}

inline const std::vector<long long>& counterexample_expected_bq() {
  static const std::vector<long long> bq{163,      16110,    371628,   3294228,  13439034,
                                         27111294, 27186264, 12614544, 2093958,  71162};
  return bq;
}

inline constexpr int kCounterexampleRealRoots = 7;

struct CounterexampleVerdict {
  IntPoly q, bq;
  // One line per mismatching coefficient or verdict; empty when all agree.
  std::vector<std::string> diff;
  bool real_rooted = true;
  int real_root_count = 0;
  // Display only: the non-real roots of bq, when there are exactly two.
  std::optional<std::complex<double>> complex_root;

  bool ok() const { return diff.empty(); }
};

// Simultaneous Newton iteration on all roots; floating point, for display.
inline std::vector<std::complex<long double>> approximate_roots(const IntPoly& p) {
  using C = std::complex<long double>;
  const int d = p.degree();
  std::vector<long double> a(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    a[static_cast<std::size_t>(i)] = static_cast<long double>(p.coefficient(i)) /
                                     static_cast<long double>(p.leading());
  }
  auto eval = [&](C z) {
    C acc = 0;
    for (int i = d; i >= 0; --i) acc = acc * z + a[static_cast<std::size_t>(i)];
    return acc;
  };
  std::vector<C> roots(static_cast<std::size_t>(d));
  const C seed(0.4L, 0.9L);
  for (int i = 0; i < d; ++i) roots[static_cast<std::size_t>(i)] = std::pow(seed, i);
  for (int iter = 0; iter < 2000; ++iter) {
    long double moved = 0;
    for (int i = 0; i < d; ++i) {
      C denom = 1;
      for (int j = 0; j < d; ++j) {
        if (i != j) denom *= roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)];
      }
      C delta = eval(roots[static_cast<std::size_t>(i)]) / denom;
      roots[static_cast<std::size_t>(i)] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-18L) break;
  }
  return roots;
}

inline CounterexampleVerdict verify_counterexample() {
  CounterexampleVerdict v;
  v.q = partition_corank2_QY(counterexample_partition(), PolyKind::kQ);
  v.bq = normalize_b(v.q);
  auto compare = [&](const char* name, const IntPoly& got, const std::vector<long long>& want) {
    const int n = std::max(static_cast<int>(want.size()), static_cast<int>(got.size()));
    for (int i = 0; i < n; ++i) {
      BigInt expected = i < static_cast<int>(want.size()) ? BigInt(want[static_cast<std::size_t>(i)]) : BigInt(0);
      if (got.coefficient(i) != expected) {
        v.diff.push_back(std::string(name) + "[" + std::to_string(i) + "]: got " +
                         got.coefficient(i).str() + ", expected " + expected.str());
      }
    }
  };
  compare("Q", v.q, counterexample_expected_q());
  compare("B(Q)", v.bq, counterexample_expected_bq());
  v.real_rooted = is_real_rooted(v.bq);
  v.real_root_count = real_root_count(square_free_part(v.bq));
  if (v.real_rooted) v.diff.push_back("B(Q) is real-rooted, expected not");
  if (v.real_root_count != kCounterexampleRealRoots) {
    v.diff.push_back("B(Q) has " + std::to_string(v.real_root_count) +
                     " distinct real roots, expected " + std::to_string(kCounterexampleRealRoots));
  }
  if (v.bq.degree() - v.real_root_count == 2) {
    for (const auto& z : approximate_roots(v.bq)) {
      if (z.imag() > 1e-6L) {
        v.complex_root = std::complex<double>(static_cast<double>(z.real()),
                                              static_cast<double>(z.imag()));
      }
    }
  }
  return v;
}

}  // namespace matroidkl

#endif  // MATROIDKL_CONJECTURES_HPP_
