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

// JSON ingestion of matroids and serialization of results.
//
// Matroid documents are objects with a "kind" field:
//   {"kind":"uniform","k":2,"n":4}
//   {"kind":"bases","n":5,"bases":[[0,1,2],...]}
//   {"kind":"graphic","vertices":4,"edges":[[0,1],...]}
//   {"kind":"glued_cycle","a":3,"b":3}
//   {"kind":"partition_corank2","parts":[4,4,4,3,3,3]}
//   {"kind":"pg","r":3,"q":2}
//   {"kind":"dual","of":{...}}
//   {"kind":"direct_sum","summands":[...]}
//   {"kind":"delete","of":{...},"set":[...]}   (likewise "contract")
// Polynomials are ascending arrays of decimal coefficient strings.

#ifndef MATROIDKL_JSON_IO_HPP_
#define MATROIDKL_JSON_IO_HPP_

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "matroidkl/conjectures.hpp"
#include "matroidkl/errors.hpp"
#include "matroidkl/exactpoly.hpp"
#include "matroidkl/matroid.hpp"

namespace matroidkl {

using Json = nlohmann::json;

inline Json poly_to_json(const IntPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

inline IntPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("polynomial must be an array of decimal strings");
  std::vector<BigInt> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw InvalidInput("polynomial coefficients must be strings");
    const std::string s = c.get<std::string>();
    const std::size_t digits_from = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == digits_from ||
        s.find_first_not_of("0123456789", digits_from) != std::string::npos) {
      throw InvalidInput("malformed coefficient \"" + s + "\"");
    }
    coeffs.emplace_back(s);
  }
  IntPoly p(coeffs);
  if (p.size() != coeffs.size()) throw InvalidInput("polynomial has trailing zero coefficients");
  return p;
}

namespace detail {

inline const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw InvalidInput(std::string("matroid document lacks field \"") + name + "\"");
  }
  return j.at(name);
}

inline int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw InvalidInput(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

inline std::vector<int> int_list(const Json& v, const char* what) {
  if (!v.is_array()) throw InvalidInput(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw InvalidInput(std::string(what) + " must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

inline ElementSet element_set_from(const std::vector<int>& elements, int n) {
  ElementSet s = 0;
  for (int e : elements) {
    if (e < 0 || e >= n || e >= kMaxGroundSet) {
      throw InvalidInput("element " + std::to_string(e) + " outside the ground set of size " +
                         std::to_string(n));
    }
    s |= singleton(e);
  }
  return s;
}

}  // namespace detail

inline Matroid matroid_from_json(const Json& j) {
  const Json& kind_field = detail::field(j, "kind");
  if (!kind_field.is_string()) throw InvalidInput("\"kind\" must be a string");
  const std::string kind = kind_field.get<std::string>();
  if (kind == "uniform") return uniform(detail::int_field(j, "k"), detail::int_field(j, "n"));
  if (kind == "bases") {
    const int n = detail::int_field(j, "n");
    if (n < 0 || n > kMaxGroundSet) throw CapacityError("bases: n out of range");
    std::vector<ElementSet> bases;
    const Json& list = detail::field(j, "bases");
    if (!list.is_array()) throw InvalidInput("\"bases\" must be an array");
    for (const auto& b : list) bases.push_back(detail::element_set_from(detail::int_list(b, "basis"), n));
    return from_bases(n, std::move(bases));
  }
  if (kind == "graphic") {
    std::vector<std::pair<int, int>> edges;
    const Json& list = detail::field(j, "edges");
    if (!list.is_array()) throw InvalidInput("\"edges\" must be an array");
    for (const auto& e : list) {
      auto ends = detail::int_list(e, "edge");
      if (ends.size() != 2) throw InvalidInput("an edge needs exactly two endpoints");
      edges.emplace_back(ends[0], ends[1]);
    }
    return graphic(detail::int_field(j, "vertices"), std::move(edges));
  }
  if (kind == "glued_cycle") {
    return glued_cycle_graph(detail::int_field(j, "a"), detail::int_field(j, "b"));
  }
  if (kind == "partition_corank2") {
    return partition_corank2({detail::int_list(detail::field(j, "parts"), "parts")});
  }
  if (kind == "pg") return pg(detail::int_field(j, "r"), detail::int_field(j, "q"));
  if (kind == "dual") return dual(matroid_from_json(detail::field(j, "of")));
  if (kind == "direct_sum") {
    const Json& list = detail::field(j, "summands");
    if (!list.is_array()) throw InvalidInput("\"summands\" must be an array");
    std::vector<Matroid> parts;
    for (const auto& s : list) parts.push_back(matroid_from_json(s));
    return direct_sum(std::move(parts));
  }
  if (kind == "delete" || kind == "contract") {
    Matroid of = matroid_from_json(detail::field(j, "of"));
    ElementSet s = detail::element_set_from(detail::int_list(detail::field(j, "set"), "set"),
                                            of.size());
    return kind == "delete" ? delete_set(of, s) : contract_set(of, s);
  }
  throw InvalidInput("unknown matroid kind \"" + kind + "\"");
}

inline Matroid matroid_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  return matroid_from_json(j);
}

inline Json report_to_json(const ConjectureReport& r) {
  Json out;
  out["matroid"] = r.descriptor;
  out["rank"] = r.rank;
  out["q_poly"] = poly_to_json(r.q_poly);
  out["y_poly"] = poly_to_json(r.y_poly);
  out["bq_poly"] = poly_to_json(r.bq_poly);
  out["q_log_concave"] = r.q_log_concave;
  out["y_log_concave"] = r.y_log_concave;
  out["z_gamma_nonneg"] = r.z_gamma_nonneg ? Json(*r.z_gamma_nonneg) : Json(nullptr);
  out["bq_real_rooted"] = r.bq_real_rooted;
  out["real_root_count_of_bq"] = r.real_root_count_of_bq;
  return out;
}

}  // namespace matroidkl

#endif  // MATROIDKL_JSON_IO_HPP_
