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

#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <utility>

#include "demikit/codes.hpp"
#include "demikit/constructions.hpp"
#include "demikit/errors.hpp"
#include "demikit/hamming.hpp"
#include "demikit/ops.hpp"
#include "demikit/tutte.hpp"
#include "demikit/weights.hpp"

namespace demikit::cli {
namespace {

constexpr std::size_t kMaxWitnesses = 20;

std::vector<std::string> poly_strings(const std::vector<LaurentPoly>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.str());
  return out;
}

// Subsets sorted by size, then lexicographically by elements.
Json sorted_subsets(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
    if (cardinality(a) != cardinality(b)) return cardinality(a) < cardinality(b);
    return elements_of(a) < elements_of(b);
  });
  Json out = Json::array();
  for (Mask m : masks) out.push_back(subset_json(m));
  return out;
}

std::vector<Mask> bases_of(const RankTable& m) {
  std::vector<Mask> out;
  for (Mask s = 0; s <= m.ground(); ++s) {
    if (cardinality(s) == m.total_rank() && m(s) == m.total_rank()) out.push_back(s);
  }
  return out;
}

const Complex& require_complex(const Input& input, const char* what) {
  if (!input.complex) {
    throw InvalidArgument(std::string(what) + " needs a complex input (facets or nonfaces)");
  }
  return *input.complex;
}

Json tutte_report(const RankTable& m) {
  Json out;
  try {
    const LaurentPoly t = tutte(m);
    out["polynomial"] = t.str();
    out["agreement"] = {{"deletion_contraction", tutte_by_deletion_contraction(m) == t},
                        {"dual_swap", tutte_dual_check(m)}};
  } catch (const UnsupportedSubstitution& e) {
    out["polynomial"] = nullptr;
    out["note"] = e.what();
  }
  return out;
}

Json whitney_report(const RankTable& m) {
  const LaurentPoly f = whitney_f(m);
  Json out;
  out["polynomial"] = f.str();
  bool recurrence = true;
  for (int p = 1; p <= m.n(); ++p) recurrence = recurrence && whitney_recurrence(m, p) == f;
  out["agreement"] = {{"recurrence", recurrence}};
  return out;
}

Json hamming_report(const RankTable& m) {
  const LaurentPoly w = hamming_subset_sum(m);
  Json out;
  out["polynomial"] = w.str();
  out["dual"] = macwilliams(m).str();
  bool recurrence = true;
  for (int p = 1; p <= m.n(); ++p) recurrence = recurrence && hamming_recurrence(m, p) == w;
  out["agreement"] = {{"tutte", hamming_via_tutte(m) == w},
                      {"p_polynomials", hamming_from_p(m) == w},
                      {"recurrence", recurrence},
                      {"tutte_from_hamming", tutte_from_hamming(m) == tutte(m)}};
  if (m.total_nullity() >= 1) {
    const HammingCoefficients a = a_coefficients(m);
    out["delta"] = a.delta;
    out["c"] = a.c;
    out["A"] = poly_strings(a.a);
  }
  return out;
}

Json wei_report(const RankTable& m) {
  Json out;
  for (Operator op : kOperators) {
    const WeiProfile w = wei_hierarchy(apply(op, m));
    out[std::string(to_string(op))] = {{"d", w.lower}, {"dUp", w.upper}};
  }
  out["duality"] = check_wei_duality(m).holds();
  out["singleton"] = singleton_bounds_hold(wei_hierarchy(m));
  out["full"] = is_full(m);
  out["uniform"] = is_uniform_demimatroid(m);
  out["ghw"] = generalized_hamming_weights(m);
  return out;
}

Json betti_report(const RankTable& m, FieldSpec field) {
  const std::vector<BettiTable> tables = betti_of_elongations(m, field);
  Json out;
  out["field"] = field.name();
  out["tables"] = Json::array();
  std::vector<std::string> polys;
  for (const BettiTable& b : tables) {
    out["tables"].push_back(betti_json(b));
    polys.push_back(b.polynomial().str());
  }
  out["polynomials"] = polys;
  const LaurentPoly w = w_from_betti(tables, m.n());
  out["w"] = w.str();
  out["agreement"] = w == hamming_subset_sum(m);
  return out;
}

Json ghwe_report(const RankTable& m) {
  Json out;
  Json values = Json::array();
  bool agree = true;
  for (int r = 0; r <= m.total_nullity(); ++r) {
    try {
      const LaurentPoly w = generalized_w(m, r);
      agree = agree && generalized_w_from_tutte(m, r) == w;
      values.push_back(w.str());
    } catch (const InexactDivision& e) {
      values.push_back({{"inexact", true}, {"remainder", e.remainder()}});
    }
  }
  out["W"] = values;
  out["agreement"] = agree;
  try {
    const ConjectureReport c = conjecture_check(m);
    out["conjecture"] = {{"supported", c.supported},
                         {"holds", c.holds},
                         {"rhs", c.supported ? Json(c.rhs.str()) : Json(nullptr)},
                         {"note", c.note}};
  } catch (const InexactDivision& e) {
    out["conjecture"] = {{"supported", false}, {"holds", false}, {"note", e.what()}};
  }
  return out;
}

Json fpoly_report(const Complex& delta) {
  const LaurentPoly f = f_polynomial(delta);
  Json out;
  out["polynomial"] = f.str();
  out["h"] = h_polynomial(delta).str();
  out["agreement"] = f_polynomial_via_hamming(delta) == f;
  return out;
}

std::vector<int> by_size(const RankTable& m) { return ranks_by_size(m); }

Json minor_actual(const RankTable& m, const Json& item) {
  if (!item.is_object()) throw MalformedInput("minors entries must be objects");
  Json out;
  Input minor;
  minor.construction = "rank_table";
  if (item.contains("delete")) {
    out["delete"] = item["delete"];
    minor.table = deletion(m, subset_from_json(item["delete"], m.n())).table;
  } else if (item.contains("contract")) {
    out["contract"] = item["contract"];
    minor.table = contraction(m, subset_from_json(item["contract"], m.n())).table;
  } else {
    throw MalformedInput("a minor needs \"delete\" or \"contract\"");
  }
  Json rest = item;
  rest.erase("delete");
  rest.erase("contract");
  const Json values = fixture_actual(minor, rest);
  for (const auto& [key, value] : values.items()) out[key] = value;
  return out;
}

using Identity = std::function<bool(const RankTable&, const RankTable&, Mask)>;

bool all_elements(const RankTable& m, const std::function<bool(int)>& f) {
  for (int p = 1; p <= m.n(); ++p) {
    if (!f(p)) return false;
  }
  return true;
}

std::vector<std::pair<std::string, Identity>> identity_battery() {
  return {
      {"group_law",
       [](const RankTable& m, const RankTable&, Mask) {
         for (Operator a : kOperators) {
           for (Operator b : kOperators) {
             if (compose_check(a, b, m) != compose(a, b)) return false;
           }
         }
         return dual(dual(m)) == m;
       }},
      {"rank_sum",
       [](const RankTable& m, const RankTable&, Mask) {
         return m.total_rank() + dual(m).total_rank() == m.n();
       }},
      {"operator_relations",
       [](const RankTable& m, const RankTable&, Mask) {
         return dual(nullity_operator(m)) == supplement(m) &&
                nullity_operator(dual(m)) == supplement(m);
       }},
      {"minor_duality",
       [](const RankTable& m, const RankTable&, Mask a) {
         return dual(deletion(m, a).table) == contraction(dual(m), a).table &&
                dual(contraction(m, a).table) == deletion(dual(m), a).table;
       }},
      {"lattice",
       [](const RankTable& m, const RankTable& other, Mask) {
         const RankTable j = join(m, other);
         const RankTable w = meet(m, other);
         return is_demimatroid(j) && is_demimatroid(w) && join(m, w) == m &&
                meet(m, j) == m && pointwise_leq(w, j);
       }},
      {"elongation",
       [](const RankTable& m, const RankTable&, Mask) {
         const int eta = m.total_nullity();
         const RankTable top = elongate(m, eta);
         for (Mask x = 0; x <= top.ground(); ++x) {
           if (top(x) != cardinality(x)) return false;
         }
         for (int i = 0; i <= eta; ++i) {
           const RankTable e = elongate(m, i);
           if ((e.total_nullity() == 0) != (eta <= i)) return false;
           if (i >= 1 && e != elongate(elongate(m, 1), i - 1)) return false;
         }
         return true;
       }},
      {"elongation_distance",
       [](const RankTable& m, const RankTable&, Mask) {
         for (int r = 0; r < m.total_nullity(); ++r) {
           if (!elongation_distance_check(m, r).equal()) return false;
         }
         return true;
       }},
      {"wei_duality",
       [](const RankTable& m, const RankTable&, Mask) { return check_wei_duality(m).holds(); }},
      {"singleton_bounds",
       [](const RankTable& m, const RankTable&, Mask) {
         return singleton_bounds_hold(wei_hierarchy(m)) &&
                singleton_bounds_hold(wei_hierarchy(dual(m)));
       }},
      {"nullity_corank_sum",
       [](const RankTable& m, const RankTable&, Mask) {
         for (int r = 1; r <= m.total_nullity(); ++r) {
           if (nullity_corank_sum(m, r) != m.n()) return false;
         }
         return true;
       }},
      {"tutte_recurrence",
       [](const RankTable& m, const RankTable&, Mask) {
         const LaurentPoly t = tutte(m);
         return all_elements(m, [&](int p) { return tutte_recurrence(m, p) == t; }) &&
                tutte_by_deletion_contraction(m) == t;
       }},
      {"tutte_duality",
       [](const RankTable& m, const RankTable&, Mask) {
         return tutte_dual_check(m) && tutte(dual(m)) == tutte(m).swap(Var::x, Var::y);
       }},
      {"whitney_recurrence",
       [](const RankTable& m, const RankTable&, Mask) {
         const LaurentPoly f = whitney_f(m);
         return all_elements(m, [&](int p) { return whitney_recurrence(m, p) == f; });
       }},
      {"characteristic",
       [](const RankTable& m, const RankTable&, Mask) {
         // characteristic() compares the subset sum with T(1-t, 0) itself;
         // the alternating sum over all subsets vanishes at t = 1.
         return characteristic(m).evaluate({0, 0, 1, 0}) == 0;
       }},
      {"hamming_routes",
       [](const RankTable& m, const RankTable&, Mask) {
         const LaurentPoly w = hamming_subset_sum(m);
         return hamming_via_tutte(m) == w && hamming_from_p(m) == w;
       }},
      {"hamming_recurrence",
       [](const RankTable& m, const RankTable&, Mask) {
         const LaurentPoly w = hamming_subset_sum(m);
         return all_elements(m, [&](int p) { return hamming_recurrence(m, p) == w; });
       }},
      {"macwilliams",
       [](const RankTable& m, const RankTable&, Mask) {
         return macwilliams_transform(hamming_subset_sum(m), m.total_nullity()) ==
                hamming_subset_sum(dual(m));
       }},
      {"equivalence",
       [](const RankTable& m, const RankTable&, Mask) {
         return tutte_from_hamming(m) == tutte(m);
       }},
      {"betti_route",
       [](const RankTable& m, const RankTable&, Mask) {
         return w_via_betti(m) == hamming_subset_sum(m);
       }},
  };
}

}  // namespace

Json RunManifest::to_json() const {
  Json out;
  out["command"] = command;
  out["input"] = input.empty() ? Json(nullptr) : Json(input);
  out["construction"] = construction.empty() ? Json(nullptr) : Json(construction);
  out["invariants"] = invariants;
  out["field"] = field;
  out["output"] = output.empty() ? Json(nullptr) : Json(output);
  out["seed"] = seed ? Json(*seed) : Json(nullptr);
  out["n"] = n ? Json(*n) : Json(nullptr);
  out["samples"] = samples ? Json(*samples) : Json(nullptr);
  return out;
}

std::vector<std::string> applicable_invariants(const Input& input) {
  if (!is_demimatroid(input.table)) return {"tutte", "whitney"};
  std::vector<std::string> out = {"tutte", "whitney", "hamming", "wei",
                                  "betti", "charpoly", "ghwe"};
  if (input.complex) out.push_back("fpoly");
  return out;
}

Json compute(const Input& input, const std::vector<std::string>& invariants, FieldSpec field) {
  const RankTable& m = input.table;
  Json out;
  out["input"] = table_json(m);
  if (input.complex) out["complex"] = {{"facets", sorted_subsets(input.complex->facets())}};
  for (const std::string& name : invariants) {
    if (name == "tutte") {
      out["tutte"] = tutte_report(m);
    } else if (name == "whitney") {
      out["whitney"] = whitney_report(m);
    } else if (name == "hamming") {
      out["hamming"] = hamming_report(m);
    } else if (name == "wei") {
      out["wei"] = wei_report(m);
    } else if (name == "betti") {
      out["betti"] = betti_report(m, field);
    } else if (name == "charpoly") {
      out["charpoly"] = characteristic(m).str();
    } else if (name == "ghwe") {
      out["ghwe"] = ghwe_report(m);
    } else if (name == "fpoly") {
      out["fpoly"] = fpoly_report(require_complex(input, "fpoly"));
    } else {
      throw InvalidArgument("unknown invariant \"" + name + "\"");
    }
  }
  return out;
}

Json fixture_actual(const Input& input, const Json& expected) {
  if (!expected.is_object()) throw MalformedInput("\"expected\" must be an object");
  const RankTable& m = input.table;
  Json out;
  for (const auto& [key, want] : expected.items()) {
    if (key == "kind") {
      out[key] = std::string(to_string(validate(m).kind));
    } else if (key == "ranks_by_size") {
      out[key] = by_size(m);
    } else if (key == "operator_rows_by_size") {
      for (Operator op : kOperators) {
        out[key][std::string(to_string(op))] = by_size(apply(op, m));
      }
    } else if (key == "wei") {
      for (Operator op : kOperators) {
        out[key][std::string(to_string(op))] = wei_hierarchy(apply(op, m)).lower;
      }
    } else if (key == "wei_upper") {
      for (Operator op : kOperators) {
        out[key][std::string(to_string(op))] = wei_hierarchy(apply(op, m)).upper;
      }
    } else if (key == "tutte") {
      out[key] = tutte(m).str();
    } else if (key == "hamming") {
      out[key] = hamming_subset_sum(m).str();
    } else if (key == "hamming_routes") {
      const LaurentPoly w = hamming_subset_sum(m);
      out[key] = {{"tutte", hamming_via_tutte(m).str()},
                  {"p_polynomials", hamming_from_p(m).str()},
                  {"betti", w_via_betti(m).str()}};
    } else if (key == "charpoly") {
      out[key] = characteristic(m).str();
    } else if (key == "fpoly") {
      const Complex& delta = require_complex(input, "fpoly");
      out[key] = {{"faces", f_polynomial(delta).str()},
                  {"hamming", f_polynomial_via_hamming(delta).str()}};
    } else if (key == "betti") {
      if (!want.is_object()) throw MalformedInput("\"betti\" must map fields to lists");
      for (const auto& [field, unused] : want.items()) {
        std::vector<std::string> polys;
        for (const BettiTable& b : betti_of_elongations(m, FieldSpec::parse(field))) {
          polys.push_back(b.polynomial().str());
        }
        out[key][field] = polys;
      }
    } else if (key == "complex_betti") {
      const Complex& delta = require_complex(input, "complex_betti");
      for (const auto& [field, unused] : want.items()) {
        out[key][field] = hochster_betti(delta, FieldSpec::parse(field)).polynomial().str();
      }
    } else if (key == "minimal_nonfaces") {
      const Complex delta = input.complex ? *input.complex : independence_complex(m);
      out[key] = sorted_subsets(stanley_reisner_generators(delta));
    } else if (key == "bases") {
      out[key] = sorted_subsets(bases_of(m));
    } else if (key == "ghwe") {
      // One entry per listed r, so fixtures may include terms past eta(E).
      if (!want.is_array()) throw MalformedInput("\"ghwe\" must be an array");
      std::vector<std::string> values;
      for (int r = 0; r < static_cast<int>(want.size()); ++r) {
        values.push_back(generalized_w(m, r).str());
      }
      out[key] = values;
    } else if (key == "conjecture") {
      const ConjectureReport c = conjecture_check(m);
      out[key] = {{"holds", c.supported && c.holds}, {"rhs", c.rhs.str()}};
    } else if (key == "ghw") {
      out[key] = generalized_hamming_weights(m);
    } else if (key == "code_ghw") {
      if (!input.matrix) throw InvalidArgument("code_ghw needs a matrix input");
      const LinearCodeView code = LinearCodeView::from_parity_check(*input.matrix);
      std::vector<int> d;
      for (int r = 1; r <= code.dimension(); ++r) d.push_back(code_ghw_bruteforce(code, r));
      out[key] = d;
    } else if (key == "minors") {
      if (!want.is_array()) throw MalformedInput("\"minors\" must be an array");
      out[key] = Json::array();
      for (const Json& item : want) out[key].push_back(minor_actual(m, item));
    } else {
      throw MalformedInput("unknown expected key \"" + key + "\"");
    }
  }
  return out;
}

VerifyResult verify_random(std::uint64_t seed, int n, int samples) {
  if (n < 1 || n > kMaxVerifyN) {
    throw InvalidArgument("--n must be in [1, " + std::to_string(kMaxVerifyN) + "]");
  }
  if (samples < 1) throw InvalidArgument("--samples must be positive");
  std::mt19937_64 rng(seed);
  const auto battery = identity_battery();
  std::map<std::string, std::pair<int, int>> counts;
  Json failures = Json::array();
  std::size_t failure_count = 0;
  for (int s = 0; s < samples; ++s) {
    const RankTable m = random_demimatroid(n, rng);
    const RankTable other = random_demimatroid(n, rng);
    const Mask a = std::uniform_int_distribution<Mask>(0, full_mask(n))(rng);
    for (const auto& [name, identity] : battery) {
      bool ok = false;
      std::string detail;
      try {
        ok = identity(m, other, a);
      } catch (const Error& e) {
        detail = e.what();
      }
      auto& [passed, failed] = counts[name];
      if (ok) {
        ++passed;
        continue;
      }
      ++failed;
      if (failure_count++ < kMaxWitnesses) {
        failures.push_back({{"identity", name},
                            {"sample", s},
                            {"table", table_json(m)},
                            {"subset", subset_json(a)},
                            {"detail", detail}});
      }
    }
  }
  Json identities = Json::object();
  for (const auto& [name, unused] : battery) {
    identities[name] = {{"passed", counts[name].first}, {"failed", counts[name].second}};
  }
  VerifyResult result;
  result.ok = failure_count == 0;
  result.report["identities"] = identities;
  result.report["failures"] = failures;
  result.report["ok"] = result.ok;
  return result;
}

VerifyResult verify_fixtures(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InvalidArgument(dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InvalidArgument("no fixture files in " + dir);

  VerifyResult result;
  result.ok = true;
  Json fixtures = Json::array();
  for (const fs::path& path : files) {
    Json entry;
    entry["name"] = path.stem().string();
    try {
      const Json j = read_json_file(path.string());
      if (!j.contains("expected")) throw MalformedInput("fixture has no \"expected\" block");
      const Json& expected = j["expected"];
      const Json actual = fixture_actual(parse_input(j), expected);
      Json mismatches = Json::array();
      for (const auto& [key, want] : expected.items()) {
        if (actual.at(key) != want) {
          mismatches.push_back({{"key", key}, {"expected", want}, {"got", actual.at(key)}});
        }
      }
      entry["checked"] = expected.size();
      entry["mismatches"] = mismatches;
      if (!mismatches.empty()) result.ok = false;
    } catch (const Error& e) {
      entry["error"] = e.what();
      result.ok = false;
    }
    fixtures.push_back(entry);
  }
  result.report["fixtures"] = fixtures;
  result.report["ok"] = result.ok;
  return result;
}

RankTable apply_op(const std::string& verb, const RankTable& m, Mask elements, int i) {
  if (verb == "dual") return dual(m);
  if (verb == "nullity") return nullity_operator(m);
  if (verb == "supplement") return supplement(m);
  if (verb == "delete") return deletion(m, elements).table;
  if (verb == "contract") return contraction(m, elements).table;
  if (verb == "elongate") return elongate(m, i);
  throw InvalidArgument("unknown operator \"" + verb + "\"");
}

}  // namespace demikit::cli
