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

// matroidkl: command-line front end.
//
// Exit status: 0 success, 1 failed verdict or internal inconsistency,
// 2 usage or input error, 3 capacity error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matroidkl/matroidkl.hpp"

namespace mk = matroidkl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

struct Config {
  std::string file;
  std::string family;
  int k = -1, n = -1, a = -1, b = -1, r = -1, q = -1;
  std::vector<int> parts;
  std::string profile;
  std::string which = "Q";
  std::string method = "auto";
  std::string format = "json";
  int lattice_cap = mk::kDefaultLatticeCap;
  int workers = 1;
  std::vector<std::string> checks;
  std::string cache;
  bool timing = false;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw mk::InvalidInput(message);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const Config& cfg, const mk::Json& doc, const std::string& text) {
  if (cfg.format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

mk::Matroid matroid_from_config(const Config& cfg) {
  require(cfg.file.empty() != cfg.family.empty(), "give exactly one of --file and --family");
  if (!cfg.file.empty()) return mk::matroid_from_json_text(read_file(cfg.file));
  auto need = [](int v, const char* flag) {
    require(v >= 0, std::string("--family needs ") + flag);
    return v;
  };
  if (cfg.family == "uniform") return mk::uniform(need(cfg.k, "--k"), need(cfg.n, "--n"));
  if (cfg.family == "glued-cycle") {
    return mk::glued_cycle_graph(need(cfg.a, "--a"), need(cfg.b, "--b"));
  }
  if (cfg.family == "partition") {
    require(!cfg.parts.empty(), "--family partition needs --parts");
    return mk::partition_corank2({cfg.parts});
  }
  if (cfg.family == "pg") return mk::pg(need(cfg.r, "--r"), need(cfg.q, "--q"));
  if (cfg.family == "pg-minus-point") {
    return mk::delete_set(mk::pg(need(cfg.r, "--r"), need(cfg.q, "--q")), mk::singleton(0));
  }
  throw mk::InvalidInput("unknown family \"" + cfg.family + "\"");
}

mk::PolyKind inverse_kind(const std::string& which) {
  auto kind = mk::parse_poly_kind(which);
  require(kind && mk::is_inverse_kind(*kind), "--which must be Q or Y here, got " + which);
  return *kind;
}

// "16:3,17:3" -> {16: 3, 17: 3}.
mk::StressedProfile parse_profile(const std::string& text) {
  mk::StressedProfile out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto colon = item.find(':');
    require(colon != std::string::npos, "profile items look like rank:count, got " + item);
    try {
      out[std::stoi(item.substr(0, colon))] += std::stoll(item.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw mk::InvalidInput("malformed profile item " + item);
    }
  }
  return out;
}

template <typename Fn>
auto timed(Fn&& fn, double& ms) {
  auto start = std::chrono::steady_clock::now();
  auto result = fn();
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

int cmd_invariant(const Config& cfg) {
  mk::Matroid m = matroid_from_config(cfg);
  auto method = mk::parse_method(cfg.method);
  require(method.has_value(), "unknown method " + cfg.method);
  mk::ComputeOptions options{*method, cfg.lattice_cap};
  mk::Json doc;
  doc["matroid"] = m.description();
  doc["which"] = cfg.which;
  doc["method"] = cfg.method;
  doc["rank"] = m.rank();
  double ms = 0;
  std::string text;
  if (cfg.which == "tau") {
    mk::BigInt t = timed([&] { return mk::compute_tau(m, options); }, ms);
    doc["tau"] = t.str();
    text = "tau = " + t.str() + "\n";
  } else {
    auto kind = mk::parse_poly_kind(cfg.which);
    require(kind.has_value(), "--which must be one of P, Z, Q, Y, tau");
    mk::IntPoly p = timed([&] { return mk::compute(m, *kind, options); }, ms);
    doc["poly"] = mk::poly_to_json(p);
    text = cfg.which + " = " + p.to_string() + "\n";
  }
  if (cfg.timing) doc["ms"] = ms;
  emit(cfg, doc, text);
  return kExitOk;
}

int cmd_family(const Config& cfg, const std::string& name) {
  mk::Json doc;
  doc["family"] = name;
  doc["which"] = cfg.which;
  std::string label;
  auto need = [](int v, const char* flag) {
    require(v >= 0, std::string(flag) + " is required");
    return v;
  };
  if (name == "uniform" && cfg.which == "tau") {
    mk::BigInt t = mk::uniform_tau(need(cfg.k, "--k"), need(cfg.n, "--n"));
    doc["k"] = cfg.k;
    doc["n"] = cfg.n;
    doc["tau"] = t.str();
    emit(cfg, doc, "tau(U(" + std::to_string(cfg.k) + "," + std::to_string(cfg.n) + ")) = " + t.str() + "\n");
    return kExitOk;
  }
  mk::IntPoly p;
  if (name == "uniform") {
    const int k = need(cfg.k, "--k"), n = need(cfg.n, "--n");
    const mk::PolyKind kind = inverse_kind(cfg.which);
    p = mk::uniform_value(k, n, kind);
    doc["k"] = k;
    doc["n"] = n;
    label = "U(" + std::to_string(k) + "," + std::to_string(n) + ")";
  } else if (name == "glued-cycle") {
    const int a = need(cfg.a, "--a"), b = need(cfg.b, "--b");
    p = mk::glued_cycle(a, b, inverse_kind(cfg.which));
    doc["a"] = a;
    doc["b"] = b;
    label = "C(" + std::to_string(a) + "," + std::to_string(b) + ")";
  } else if (name == "pg-minus-point") {
    require(cfg.which == "Q", "pg-minus-point has a closed form for Q only");
    const int r = need(cfg.r, "--r"), q = need(cfg.q, "--q");
    p = mk::pg_minus_point_Q(r, q);
    doc["r"] = r;
    doc["q"] = q;
    label = "PG(" + std::to_string(r - 1) + "," + std::to_string(q) + ") minus a point";
  } else if (name == "partition") {
    require(!cfg.parts.empty(), "--parts is required");
    mk::PartitionSpec spec{cfg.parts};
    p = mk::partition_corank2_QY(spec, inverse_kind(cfg.which));
    doc["parts"] = cfg.parts;
    label = "partition" + mk::partition_string(spec);
  } else if (name == "corank2") {
    const int n = need(cfg.n, "--n");
    auto profile = parse_profile(cfg.profile);
    p = mk::corank2(n, profile, inverse_kind(cfg.which));
    doc["n"] = n;
    mk::Json lambda = mk::Json::object();
    for (const auto& [r, c] : profile) lambda[std::to_string(r)] = c;
    doc["profile"] = lambda;
    label = "corank2(n=" + std::to_string(n) + ")";
  } else {
    throw mk::InvalidInput("unknown family " + name);
  }
  doc["poly"] = mk::poly_to_json(p);
  emit(cfg, doc, cfg.which + "(" + label + ") = " + p.to_string() + "\n");
  return kExitOk;
}

std::string verdict_text(const mk::ConjectureReport& r) {
  std::string out;
  out += "matroid: " + r.descriptor + " (rank " + std::to_string(r.rank) + ")\n";
  out += "Q = " + r.q_poly.to_string() + "\n";
  out += "Y = " + r.y_poly.to_string() + "\n";
  out += "B(Q) = " + r.bq_poly.to_string() + "\n";
  auto yn = [](bool b) { return b ? std::string("true") : std::string("false"); };
  out += "q_log_concave: " + yn(r.q_log_concave) + "\n";
  out += "y_log_concave: " + yn(r.y_log_concave) + "\n";
  out += "z_gamma_nonneg: " + (r.z_gamma_nonneg ? yn(*r.z_gamma_nonneg) : "skipped") + "\n";
  out += "bq_real_rooted: " + yn(r.bq_real_rooted) + " (" +
         std::to_string(r.real_root_count_of_bq) + " distinct real roots)\n";
  return out;
}

int cmd_check(const Config& cfg) {
  mk::ConjectureReport r = mk::report(matroid_from_config(cfg), cfg.lattice_cap);
  emit(cfg, mk::report_to_json(r), verdict_text(r));
  return kExitOk;
}

int cmd_scan(const Config& cfg) {
  unsigned checks = 0;
  for (const auto& c : cfg.checks) {
    if (c == "bq-real-rooted") {
      checks |= mk::kCheckBqRealRooted;
    } else if (c == "q-log-concave") {
      checks |= mk::kCheckQLogConcave;
    } else if (c == "y-log-concave") {
      checks |= mk::kCheckYLogConcave;
    } else {
      throw mk::InvalidInput("unknown check " + c);
    }
  }
  require(checks != 0, "scan needs at least one --check");
  const bool text = cfg.format == "text";
  auto result = mk::scan_partitions(cfg.n, checks, cfg.workers, [&](const mk::ScanEntry& e) {
    if (!text) return;
    std::cout << mk::partition_string(e.partition)
              << " bq_real_rooted=" << (e.report.bq_real_rooted ? "true" : "false")
              << " q_log_concave=" << (e.report.q_log_concave ? "true" : "false")
              << " y_log_concave=" << (e.report.y_log_concave ? "true" : "false")
              << (e.violation ? " VIOLATION" : "") << "\n";
  });
  if (text) {
    std::cout << "checked " << result.partitions_checked << " partitions of " << result.n << "; "
              << result.violations.size() << " violation(s)";
    for (const auto& v : result.violations) std::cout << " " << mk::partition_string(v.partition);
    std::cout << "\n";
  } else {
    mk::Json doc;
    doc["n"] = result.n;
    doc["checks"] = cfg.checks;
    doc["partitions_checked"] = result.partitions_checked;
    mk::Json violations = mk::Json::array();
    for (const auto& v : result.violations) {
      violations.push_back({{"partition", v.partition.parts}, {"report", mk::report_to_json(v.report)}});
    }
    doc["violations"] = violations;
    std::cout << doc.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_reproduce(const Config& cfg) {
  mk::CounterexampleVerdict v = mk::verify_counterexample();
  mk::Json doc;
  doc["partition"] = mk::counterexample_partition().parts;
  doc["q_poly"] = mk::poly_to_json(v.q);
  doc["bq_poly"] = mk::poly_to_json(v.bq);
  doc["real_rooted"] = v.real_rooted;
  doc["real_root_count"] = v.real_root_count;
  doc["diff"] = v.diff;
  doc["ok"] = v.ok();
  std::ostringstream text;
  text << "partition " << mk::partition_string(mk::counterexample_partition()) << "\n"
       << "Q = " << v.q.to_string() << "\n"
       << "B(Q) = " << v.bq.to_string() << "\n"
       << "real_rooted: " << (v.real_rooted ? "true" : "false") << "\n"
       << "distinct real roots of B(Q): " << v.real_root_count << "\n";
  if (v.complex_root) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "complex pair (approximate): %.4f +/- %.4fi",
                  v.complex_root->real(), v.complex_root->imag());
    doc["complex_pair_approx"] = {v.complex_root->real(), v.complex_root->imag()};
    text << buf << "\n";
  }
  text << "diff: " << (v.diff.empty() ? "(none)" : "") << "\n";
  for (const auto& d : v.diff) text << "  " << d << "\n";
  emit(cfg, doc, text.str());
  return v.ok() ? kExitOk : kExitVerdict;
}

void add_matroid_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--file", cfg.file, "matroid JSON document");
  sub->add_option("--family", cfg.family, "uniform | glued-cycle | partition | pg | pg-minus-point");
  sub->add_option("--k", cfg.k, "rank of a uniform matroid");
  sub->add_option("--n", cfg.n, "ground set size of a uniform matroid");
  sub->add_option("--a", cfg.a, "first cycle length");
  sub->add_option("--b", cfg.b, "second cycle length");
  sub->add_option("--r", cfg.r, "projective rank");
  sub->add_option("--q", cfg.q, "field size (prime)");
  sub->add_option("--parts", cfg.parts, "partition parts, comma separated")->delimiter(',');
}

void add_common_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--format", cfg.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--cache", cfg.cache, "uniform memo cache file");
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  std::string family_name;
  CLI::App app{"Kazhdan-Lusztig invariants of matroids"};
  app.require_subcommand(1);

  auto* invariant = app.add_subcommand("invariant", "compute P, Z, Q, Y or tau");
  add_matroid_options(invariant, cfg);
  add_common_options(invariant, cfg);
  invariant->add_option("--which", cfg.which, "P | Z | Q | Y | tau")
      ->check(CLI::IsMember({"P", "Z", "Q", "Y", "tau"}));
  invariant->add_option("--method", cfg.method, "auto | defining | incidence | deletion")
      ->check(CLI::IsMember({"auto", "defining", "incidence", "deletion"}));
  invariant->add_option("--lattice-cap", cfg.lattice_cap, "element cap for lattice methods");
  invariant->add_flag("--timing", cfg.timing, "report wall time in ms");

  auto* family = app.add_subcommand("family", "closed family formulas");
  family->add_option("name", family_name, "uniform | glued-cycle | pg-minus-point | partition | corank2")
      ->required()
      ->check(CLI::IsMember({"uniform", "glued-cycle", "pg-minus-point", "partition", "corank2"}));
  family->add_option("--k", cfg.k);
  family->add_option("--n", cfg.n);
  family->add_option("--a", cfg.a);
  family->add_option("--b", cfg.b);
  family->add_option("--r", cfg.r);
  family->add_option("--q", cfg.q);
  family->add_option("--parts", cfg.parts)->delimiter(',');
  family->add_option("--profile", cfg.profile, "stressed counts as rank:count,...");
  family->add_option("--which", cfg.which, "Q | Y (uniform also tau)")
      ->check(CLI::IsMember({"Q", "Y", "tau"}));
  add_common_options(family, cfg);

  auto* check = app.add_subcommand("check", "conjecture report for one matroid");
  add_matroid_options(check, cfg);
  add_common_options(check, cfg);
  check->add_option("--lattice-cap", cfg.lattice_cap, "skip Z above this many elements");

  auto* scan = app.add_subcommand("scan", "scan corank-2 partition matroids");
  scan->add_option("--n", cfg.n, "ground set size")->required();
  scan->add_option("--check", cfg.checks, "bq-real-rooted | q-log-concave | y-log-concave")
      ->required();
  scan->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  add_common_options(scan, cfg);

  auto* reproduce = app.add_subcommand("reproduce-counterexample",
                                       "recompute the (4,4,4,3,3,3) counterexample");
  add_common_options(reproduce, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string cache_path = cfg.cache;
  if (cache_path.empty()) {
    if (const char* env = std::getenv(mk::kCacheEnvVar)) cache_path = env;
  }
  try {
    if (!cache_path.empty()) {
      auto loaded = mk::load_cache(cache_path);
      if (loaded.status == mk::CacheLoad::kRejected) {
        std::cerr << "warning: ignoring cache " << cache_path << ": " << loaded.message << "\n";
      }
    }
    int code = kExitOk;
    if (app.got_subcommand(invariant)) {
      code = cmd_invariant(cfg);
    } else if (app.got_subcommand(family)) {
      code = cmd_family(cfg, family_name);
    } else if (app.got_subcommand(check)) {
      code = cmd_check(cfg);
    } else if (app.got_subcommand(scan)) {
      code = cmd_scan(cfg);
    } else if (app.got_subcommand(reproduce)) {
      code = cmd_reproduce(cfg);
    }
    if (!cache_path.empty()) mk::save_cache(cache_path);
    return code;
  } catch (const mk::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const mk::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerdict;
  } catch (const mk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
