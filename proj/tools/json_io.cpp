// Copyright 2026 The demikit Authors.
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

#include "json_io.hpp"

#include <fstream>
#include <span>
#include <utility>

#include "demikit/constructions.hpp"
#include "demikit/errors.hpp"
#include "demikit/subset.hpp"

namespace demikit::cli {
namespace {

int require_n(const Json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw MalformedInput("input needs an integer \"n\"");
  }
  const int n = j["n"].get<int>();
  if (n < 0 || n > kMaxGroundSet) {
    throw MalformedInput("n = " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxGroundSet) + "]");
  }
  return n;
}

std::vector<Mask> subset_list(const Json& j, int n, const char* key) {
  if (!j[key].is_array()) throw MalformedInput(std::string("\"") + key + "\" must be an array");
  std::vector<Mask> out;
  for (const Json& s : j[key]) out.push_back(subset_from_json(s, n));
  return out;
}

std::vector<std::int64_t> int64_row(const Json& j) {
  if (!j.is_array()) throw MalformedInput("matrix rows must be arrays");
  std::vector<std::int64_t> row;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw MalformedInput("matrix entries must be integers");
    row.push_back(v.get<std::int64_t>());
  }
  return row;
}

}  // namespace

Json subset_json(Mask m) {
  Json out = Json::array();
  for (int e : elements_of(m)) out.push_back(e);
  return out;
}

Mask subset_from_json(const Json& j, int n) {
  if (!j.is_array()) throw MalformedInput("a subset must be an array of elements");
  Mask m = 0;
  for (const Json& e : j) {
    if (!e.is_number_integer()) throw MalformedInput("subset elements must be integers");
    const int v = e.get<int>();
    if (v < 1 || v > n) {
      throw MalformedInput("element " + std::to_string(v) + " outside [1, " +
                           std::to_string(n) + "]");
    }
    m |= element_bit(v);
  }
  return m;
}

Input parse_input(const Json& raw) {
  if (!raw.is_object()) throw MalformedInput("input must be a JSON object");
  const Json& j = raw.contains("input") ? raw["input"] : raw;
  if (!j.is_object()) throw MalformedInput("\"input\" must be a JSON object");

  if (j.contains("p") && j.contains("rows")) {
    if (!j["p"].is_number_integer()) throw MalformedInput("\"p\" must be an integer");
    if (!j["rows"].is_array()) throw MalformedInput("\"rows\" must be an array");
    std::vector<std::vector<std::int64_t>> rows;
    for (const Json& r : j["rows"]) rows.push_back(int64_row(r));
    PrimeMatrix h = PrimeMatrix::from_rows(j["p"].get<int>(), rows);
    RankTable table = parity_matroid(h);
    return {"code", std::move(table), std::nullopt, std::move(h)};
  }

  const int n = require_n(j);
  if (j.contains("ranks")) {
    if (!j["ranks"].is_array()) throw MalformedInput("\"ranks\" must be an array");
    std::vector<int> ranks;
    for (const Json& v : j["ranks"]) {
      if (!v.is_number_integer()) throw MalformedInput("ranks must be integers");
      ranks.push_back(v.get<int>());
    }
    return {"rank_table", RankTable::from_values(n, std::move(ranks)), std::nullopt,
            std::nullopt};
  }
  if (j.contains("bases")) {
    const std::vector<Mask> bases = subset_list(j, n, "bases");
    return {"bases", from_matroid_bases(n, bases), std::nullopt, std::nullopt};
  }
  if (j.contains("facets")) {
    Complex delta = Complex::from_facets(n, subset_list(j, n, "facets"));
    RankTable table = complex_to_demimatroid(delta);
    return {"facets", std::move(table), std::move(delta), std::nullopt};
  }
  if (j.contains("nonfaces")) {
    const std::vector<Mask> nonfaces = subset_list(j, n, "nonfaces");
    Complex delta = Complex::from_minimal_nonfaces(n, nonfaces);
    RankTable table = complex_to_demimatroid(delta);
    return {"nonfaces", std::move(table), std::move(delta), std::nullopt};
  }
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw MalformedInput("\"edges\" must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw MalformedInput("edges must be pairs of vertices");
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return {"graph", graph_demimatroid(n, edges), std::nullopt, std::nullopt};
  }
  if (j.contains("d")) {
    if (!j["d"].is_array()) throw MalformedInput("\"d\" must be an array");
    std::vector<int> d;
    for (const Json& v : j["d"]) {
      if (!v.is_number_integer()) throw MalformedInput("Wei numbers must be integers");
      d.push_back(v.get<int>());
    }
    return {"wei", from_wei_sequence(n, d), std::nullopt, std::nullopt};
  }
  throw MalformedInput(
      "unrecognized input: expected ranks, bases, facets, nonfaces, edges, d or p/rows");
}

Input read_input(const std::string& path) { return parse_input(read_json_file(path)); }

Json table_json(const RankTable& m) {
  Json out;
  out["n"] = m.n();
  out["ranks"] = Json(std::vector<int>(m.values().begin(), m.values().end()));
  out["kind"] = std::string(to_string(validate(m).kind));
  return out;
}

Json betti_json(const BettiTable& b) {
  Json out = Json::object();
  for (const auto& [key, value] : b.beta) {
    out[std::to_string(key.first) + "," + std::to_string(key.second)] = value;
  }
  return out;
}

Json int_list(const std::vector<int>& v) { return Json(v); }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace demikit::cli
