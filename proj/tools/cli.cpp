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

#include "cli.hpp"

#include <cstdint>
#include <exception>
#include <optional>

#include "CLI11.hpp"
#include "commands.hpp"
#include "demikit/errors.hpp"
#include "demikit/poly.hpp"
#include "json_io.hpp"

namespace demikit::cli {
namespace {

struct Options {
  std::string in;
  std::string out;
  std::string field = "Q";
  bool all = false;
  std::vector<std::string> invariants;
  std::string fixtures;
  std::uint64_t seed = 1;
  int n = 5;
  int samples = 50;
  std::string verb;
  std::vector<int> elements;
  int i = 0;
};

Mask mask_from_elements(const std::vector<int>& elements, int n) {
  Json list = Json::array();
  for (int e : elements) list.push_back(e);
  return subset_from_json(list, n);
}

// Writes the report to --out when given, otherwise to stdout.
void emit(const Json& report, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << report.dump(2) << '\n';
  } else {
    write_json_file(path, report);
  }
}

Json error_json(const char* type, const std::string& message, const RunManifest& manifest) {
  Json out;
  out["error"] = {{"type", type}, {"message", message}};
  out["manifest"] = manifest.to_json();
  return out;
}

const char* construction_for(const std::string& verb) {
  if (verb == "from-code") return "code";
  if (verb == "from-facets") return "facets";
  if (verb == "from-graph") return "graph";
  return "wei";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of combinatroids and demimatroids", "demikit"};
  app.require_subcommand(1);
  Options opt;
  RunManifest manifest;

  CLI::App* compute_cmd = app.add_subcommand("compute", "Compute invariants of one input");
  compute_cmd->add_option("--in", opt.in, "Input JSON file")->required();
  compute_cmd->add_option("--out", opt.out, "Write the report here instead of stdout");
  compute_cmd->add_option("--field", opt.field, "Homology field: Q or a prime");
  compute_cmd->add_flag("--all", opt.all, "Every invariant that applies to the input");
  for (const std::string& name : kInvariantNames) {
    compute_cmd->add_flag_callback("--" + name, [&opt, name] { opt.invariants.push_back(name); },
                               "Compute " + name);
  }

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the identity battery or golden fixtures");
  verify_cmd->add_option("--fixtures", opt.fixtures, "Directory of fixture JSON files");
  verify_cmd->add_option("--seed", opt.seed, "Seed for the random battery");
  verify_cmd->add_option("--n", opt.n, "Ground-set size of the random samples");
  verify_cmd->add_option("--samples", opt.samples, "Number of random samples");
  verify_cmd->add_option("--out", opt.out, "Write the report here instead of stdout");

  CLI::App* op_cmd = app.add_subcommand("op", "Apply an operator and print the rank table");
  op_cmd->add_option("verb", opt.verb, "dual | nullity | supplement | delete | contract | elongate")
      ->required()
      ->check(CLI::IsMember({"dual", "nullity", "supplement", "delete", "contract", "elongate"}));
  op_cmd->add_option("--in", opt.in, "Input JSON file")->required();
  op_cmd->add_option("--elements", opt.elements, "Elements to delete or contract, e.g. 1,3")
      ->delimiter(',');
  op_cmd->add_option("--i", opt.i, "Elongation index");
  op_cmd->add_option("--out", opt.out, "Write the table here instead of stdout");

  std::vector<CLI::App*> builders;
  for (const char* verb : {"from-code", "from-facets", "from-graph", "from-wei"}) {
    CLI::App* b = app.add_subcommand(verb, std::string("Rank table of a ") +
                                               construction_for(verb) + " input");
    b->add_option("--in", opt.in, "Input JSON file")->required();
    b->add_option("--out", opt.out, "Write the table here instead of stdout");
    builders.push_back(b);
  }

  std::vector<const char*> argv = {"demikit"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    manifest.command = args.empty() ? "" : args.front();
    out << error_json("usage", e.what(), manifest).dump(2) << '\n';
    return kExitUsage;
  }

  manifest.input = opt.in;
  manifest.output = opt.out;
  manifest.field = opt.field;
  try {
    if (compute_cmd->parsed()) {
      manifest.command = "compute";
      const Input input = read_input(opt.in);
      manifest.construction = input.construction;
      std::vector<std::string> names = opt.invariants;
      if (opt.all || names.empty()) names = applicable_invariants(input);
      manifest.invariants = names;
      const FieldSpec field = FieldSpec::parse(opt.field);
      Json report;
      report["manifest"] = manifest.to_json();
      const Json body = compute(input, names, field);
      for (const auto& [key, value] : body.items()) report[key] = value;
      emit(report, opt.out, out);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      manifest.command = "verify";
      VerifyResult result;
      if (!opt.fixtures.empty()) {
        manifest.input = opt.fixtures;
        result = verify_fixtures(opt.fixtures);
      } else {
        manifest.seed = opt.seed;
        manifest.n = opt.n;
        manifest.samples = opt.samples;
        result = verify_random(opt.seed, opt.n, opt.samples);
      }
      Json report;
      report["manifest"] = manifest.to_json();
      for (auto& [key, value] : result.report.items()) report[key] = value;
      emit(report, opt.out, out);
      return result.ok ? kExitOk : kExitInvariant;
    }
    if (op_cmd->parsed()) {
      manifest.command = "op " + opt.verb;
      const Input input = read_input(opt.in);
      manifest.construction = input.construction;
      const Mask elements = mask_from_elements(opt.elements, input.table.n());
      const RankTable result = apply_op(opt.verb, input.table, elements, opt.i);
      Json report;
      report["manifest"] = manifest.to_json();
      const Json body = table_json(result);
      for (const auto& [key, value] : body.items()) report[key] = value;
      emit(report, opt.out, out);
      return kExitOk;
    }
    for (CLI::App* b : builders) {
      if (!b->parsed()) continue;
      manifest.command = b->get_name();
      const Input input = read_input(opt.in);
      manifest.construction = input.construction;
      if (input.construction != construction_for(b->get_name())) {
        throw MalformedInput(b->get_name() + " expects a " + construction_for(b->get_name()) +
                             " input, got " + input.construction);
      }
      Json report;
      report["manifest"] = manifest.to_json();
      const Json body = table_json(input.table);
      for (const auto& [key, value] : body.items()) report[key] = value;
      emit(report, opt.out, out);
      return kExitOk;
    }
  } catch (const InvariantViolation& e) {
    out << error_json("invariant_violation", e.what(), manifest).dump(2) << '\n';
    return kExitInvariant;
  } catch (const InexactDivision& e) {
    out << error_json("inexact_division", e.what(), manifest).dump(2) << '\n';
    return kExitInvariant;
  } catch (const MalformedInput& e) {
    out << error_json("malformed_input", e.what(), manifest).dump(2) << '\n';
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    out << error_json("invalid_argument", e.what(), manifest).dump(2) << '\n';
    return kExitUsage;
  } catch (const UnsupportedSubstitution& e) {
    out << error_json("unsupported_substitution", e.what(), manifest).dump(2) << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    out << error_json("malformed_input", e.what(), manifest).dump(2) << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "demikit: " << e.what() << '\n';
    out << error_json("internal", e.what(), manifest).dump(2) << '\n';
    return kExitInvariant;
  }
  return kExitUsage;
}

}  // namespace demikit::cli
