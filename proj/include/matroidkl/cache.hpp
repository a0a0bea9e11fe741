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

// On-disk persistence of the uniform-family memo.
//
//   {"format": "matroidkl-uniform-memo", "version": 1, "checksum": "<hex>",
//    "entries": [{"k": 2, "n": 4, "which": "Q", "coeffs": ["3"]}, ...]}
//
// Entries are sorted by (k, n, which). The checksum is FNV-1a over the
// compact dump of "entries". Loading re-derives a random 5% sample of the
// entries (at least one) and rejects the whole file on any disagreement.

#ifndef MATROIDKL_CACHE_HPP_
#define MATROIDKL_CACHE_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "matroidkl/families.hpp"
#include "matroidkl/json_io.hpp"

namespace matroidkl {

inline constexpr const char* kCacheFormat = "matroidkl-uniform-memo";
inline constexpr int kCacheVersion = 1;
inline constexpr const char* kCacheEnvVar = "MATROIDKL_CACHE";

enum class CacheLoad { kMissing, kLoaded, kRejected };

struct CacheLoadResult {
  CacheLoad status = CacheLoad::kMissing;
  std::size_t entries = 0;
  std::string message;
};

namespace detail {

inline std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string tag_name(char tag) {
  switch (tag) {
    case 'Q': return "Q";
    case 'Y': return "Y";
    case 't': return "tau";
  }
  throw InvalidInput("unknown memo tag");
}

inline char tag_from_name(const std::string& s) {
  if (s == "Q") return 'Q';
  if (s == "Y") return 'Y';
  if (s == "tau") return 't';
  throw InvalidInput("unknown memo entry kind \"" + s + "\"");
}

inline Json entries_to_json(const std::map<UniformMemo::Key, IntPoly>& entries) {
  Json out = Json::array();
  for (const auto& [key, value] : entries) {
    auto [k, n, tag] = key;
    out.push_back({{"k", k}, {"n", n}, {"which", tag_name(tag)}, {"coeffs", poly_to_json(value)}});
  }
  return out;
}

}  // namespace detail

inline std::string cache_document(const UniformMemo& memo) {
  Json entries = detail::entries_to_json(memo.snapshot());
  Json doc;
  doc["format"] = kCacheFormat;
  doc["version"] = kCacheVersion;
  doc["checksum"] = detail::fnv1a_hex(entries.dump());
  doc["entries"] = std::move(entries);
  return doc.dump(1) + "\n";
}

inline void save_cache(const std::filesystem::path& path, const UniformMemo& memo = uniform_memo()) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput("cannot write cache file " + path.string());
  out << cache_document(memo);
  if (!out) throw InvalidInput("failed writing cache file " + path.string());
}

// Parses and validates; throws InvalidInput describing the first problem.
inline std::map<UniformMemo::Key, IntPoly> parse_cache(const std::string& text,
                                                       std::uint32_t sample_seed) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("cache is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != kCacheFormat) {
    throw InvalidInput("cache has the wrong format tag");
  }
  if (!doc.contains("version") || doc["version"] != kCacheVersion) {
    throw InvalidInput("cache version is not " + std::to_string(kCacheVersion));
  }
  if (!doc.contains("entries") || !doc["entries"].is_array() || !doc.contains("checksum")) {
    throw InvalidInput("cache lacks entries or checksum");
  }
  const Json& entries = doc["entries"];
  if (doc["checksum"] != detail::fnv1a_hex(entries.dump())) {
    throw InvalidInput("cache checksum mismatch");
  }
  std::map<UniformMemo::Key, IntPoly> out;
  for (const auto& e : entries) {
    if (!e.is_object() || !e.contains("k") || !e.contains("n") || !e.contains("which") ||
        !e.contains("coeffs") || !e["k"].is_number_integer() || !e["n"].is_number_integer() ||
        !e["which"].is_string()) {
      throw InvalidInput("malformed cache entry " + e.dump());
    }
    const int k = e["k"].get<int>(), n = e["n"].get<int>();
    if (k < 0 || n < 0 || k > n || n > 4096) throw InvalidInput("cache entry out of range " + e.dump());
    UniformMemo::Key key{k, n, detail::tag_from_name(e["which"].get<std::string>())};
    if (!out.emplace(key, poly_from_json(e["coeffs"])).second) {
      throw InvalidInput("duplicate cache entry " + e.dump());
    }
  }
  if (!out.empty()) {
    std::vector<UniformMemo::Key> keys;
    for (const auto& kv : out) keys.push_back(kv.first);
    std::mt19937 rng(sample_seed);
    std::shuffle(keys.begin(), keys.end(), rng);
    const std::size_t sample = std::max<std::size_t>(1, (keys.size() + 19) / 20);
    for (std::size_t i = 0; i < sample; ++i) {
      if (derive_uniform_entry(keys[i]) != out.at(keys[i])) {
        auto [k, n, tag] = keys[i];
        throw InvalidInput("cache entry (" + std::to_string(k) + "," + std::to_string(n) + "," +
                           detail::tag_name(tag) + ") fails re-derivation");
      }
    }
  }
  return out;
}

// A missing file is a cold start; a corrupt one leaves the memo empty and
// reports why.
inline CacheLoadResult load_cache(const std::filesystem::path& path,
                                  UniformMemo& memo = uniform_memo(),
                                  std::uint32_t sample_seed = std::random_device{}()) {
  CacheLoadResult result;
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    result.message = "no cache at " + path.string();
    return result;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    auto entries = parse_cache(buffer.str(), sample_seed);
    result.entries = entries.size();
    memo.replace_all(std::move(entries));
    result.status = CacheLoad::kLoaded;
  } catch (const InvalidInput& e) {
    memo.clear();
    result.status = CacheLoad::kRejected;
    result.message = e.what();
  }
  return result;
}

}  // namespace matroidkl

#endif  // MATROIDKL_CACHE_HPP_
