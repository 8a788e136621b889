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

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "propcon/axioms.hpp"
#include "propcon/constraints.hpp"
#include "propcon/error.hpp"
#include "propcon/fixtures.hpp"
#include "propcon/greedy_cohesive.hpp"
#include "propcon/io.hpp"
#include "propcon/pav.hpp"
#include "propcon/phragmen.hpp"
#include "propcon/priceability.hpp"

namespace {

using propcon::Json;

int exit_code(propcon::ErrorCode code) {
  using propcon::ErrorCode;
  switch (code) {
    case ErrorCode::kParse:
      return 2;
    case ErrorCode::kNTooSmall:
    case ErrorCode::kBadN:
    case ErrorCode::kUnknownFixture:
      return 4;
    case ErrorCode::kEnumerationCapExceeded:
      return 5;
    case ErrorCode::kSearchExhausted:
      return 1;
    default:
      return 3;
  }
}

std::string read_input(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) {
      throw propcon::Error(propcon::ErrorCode::kParse, "cannot open " + path);
    }
    buffer << in.rdbuf();
  }
  return buffer.str();
}

std::vector<std::string> split_ids(const std::string& list) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream in(list);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct Loaded {
  Json doc;
  propcon::Election election;
};

Loaded load(const std::string& path) {
  Json doc = propcon::parse_json(read_input(path));
  propcon::Election election = propcon::election_from_json(doc);
  return {std::move(doc), std::move(election)};
}

// "reference" picks the outcome stored in a fixture file.
propcon::CandidateSet resolve_outcome(const Loaded& in, const std::string& spec) {
  if (spec == "reference") {
    if (!in.doc.contains("reference") ||
        !in.doc["reference"].contains("outcome")) {
      throw propcon::Error(propcon::ErrorCode::kInvalidArgument,
                           "file has no reference outcome");
    }
    return propcon::set_from_json(in.election, in.doc["reference"]["outcome"]);
  }
  return in.election.to_set(split_ids(spec));
}

struct Options {
  std::string format = "json";
  std::uint64_t cap = propcon::kDefaultEnumerationCap;

  std::string rule;
  std::string file;
  std::string axiom;
  std::string outcome;
  int k = 0;
  std::string groups = "reduced";
  std::string enumeration = "auto";

  std::string set;
  std::string prices;
  std::string mode;
  std::string group;
  int ell = 1;
  int alpha = 0;
  std::string beta = "1";

  std::string fixture;
  std::optional<int> n;
  std::optional<int> g;
  std::optional<int> s;
  std::optional<std::string> epsilon;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> variant;
  int m = 4;
  std::string family = "committee";
  std::string density = "1/2";
  bool weighted = false;
};

propcon::AuditOptions audit_options(const Options& o) {
  propcon::AuditOptions a;
  a.cap = o.cap;
  if (o.groups == "all") {
    a.groups = propcon::GroupSearch::kAllSubsets;
  } else if (o.groups != "reduced") {
    throw propcon::Error(propcon::ErrorCode::kInvalidArgument,
                         "--groups: reduced or all");
  }
  if (o.enumeration == "plain") {
    a.enumeration = propcon::Enumeration::kPlain;
  } else if (o.enumeration == "symmetric") {
    a.enumeration = propcon::Enumeration::kSymmetric;
  } else if (o.enumeration != "auto") {
    throw propcon::Error(propcon::ErrorCode::kInvalidArgument,
                         "--enumeration: auto, plain or symmetric");
  }
  return a;
}

Json report(const std::string& command, Json echo, Json result) {
  Json out;
  out["schema"] = propcon::kSchemaVersion;
  Json head{{"command", command}};
  head.update(echo);
  out["command"] = head;
  out["result"] = result;
  return out;
}

std::string ids_text(const Json& ids) {
  std::string out = "{";
  for (std::size_t j = 0; j < ids.size(); ++j) {
    out += (j ? "," : "") + ids[j].get<std::string>();
  }
  return out + "}";
}

std::string text_of(const std::string& command, const Json& result) {
  std::ostringstream out;
  if (command == "rule") {
    if (result.contains("winners")) {
      out << "score " << result["score"].get<std::string>() << "\n";
      for (const auto& w : result["winners"]) out << "winner " << ids_text(w) << "\n";
    } else {
      out << "outcome " << ids_text(result["outcome"]) << "\n";
    }
  } else if (command == "audit") {
    out << result["axiom"].get<std::string>() << ": "
        << (result["satisfied"].get<bool>() ? "satisfied" : "violated");
    if (result.contains("violation")) {
      out << " by group " << ids_text(result["violation"]["group"]);
    }
    out << "\n";
  } else {
    out << result.dump() << "\n";
  }
  return out.str();
}

void emit(const Options& o, const std::string& command, const Json& echo,
          const Json& result) {
  if (o.format == "text") {
    std::cout << text_of(command, result);
  } else {
    std::cout << propcon::dump_json(report(command, echo, result));
  }
}

void run_rule(const Options& o) {
  Loaded in = load(o.file);
  const propcon::Election& e = in.election;
  Json result;
  if (o.rule == "pav") {
    result = propcon::pav_to_json(e, propcon::solve_pav_exact(e, o.cap));
  } else if (o.rule == "phragmen") {
    result = propcon::trace_to_json(e, propcon::run_phragmen(e));
  } else if (o.rule == "phragmen-weighted") {
    result = propcon::trace_to_json(e, propcon::run_phragmen_weighted(e));
  } else if (o.rule == "greedy-cohesive") {
    propcon::AuditOptions a;
    a.cap = o.cap;
    propcon::CohesivePartition p = propcon::greedy_cohesive_partition(e, a);
    result["partition"] = propcon::partition_to_json(e, p);
    result["outcome"] =
        propcon::set_to_json(e, propcon::construct_fjr_outcome(e, p, a));
  } else {
    throw propcon::Error(propcon::ErrorCode::kInvalidArgument,
                         "unknown rule " + o.rule);
  }
  emit(o, "rule", {{"rule", o.rule}, {"file", o.file}}, result);
}

void run_audit(const Options& o) {
  Loaded in = load(o.file);
  auto axiom = propcon::parse_axiom(o.axiom);
  if (!axiom) {
    throw propcon::Error(propcon::ErrorCode::kInvalidArgument,
                         "unknown axiom " + o.axiom);
  }
  propcon::CandidateSet w = resolve_outcome(in, o.outcome);
  propcon::AuditReport r =
      propcon::audit(in.election, w, *axiom, o.k, audit_options(o));
  emit(o, "audit",
       {{"axiom", o.axiom},
        {"file", o.file},
        {"outcome", propcon::set_to_json(in.election, w)}},
       propcon::audit_to_json(in.election, r));
}

void run_check(const Options& o, const std::string& what) {
  Loaded in = load(o.file);
  const propcon::Election& e = in.election;
  Json echo{{"check", what}, {"file", o.file}};
  Json result;
  if (what == "matroid") {
    auto witness = propcon::check_exchange_property(e.feasibility(), o.cap);
    result["is_matroid"] = !witness.has_value();
    if (witness) result["witness"] = propcon::witness_to_json(e, *witness);
  } else if (what == "feasible") {
    propcon::CandidateSet w = e.to_set(split_ids(o.set));
    echo["set"] = propcon::set_to_json(e, w);
    result["feasible"] = e.feasibility().is_feasible(w);
    result["maximal"] = result["feasible"].get<bool>() &&
                        propcon::is_maximal(e.feasibility(), w);
  } else if (what == "sp") {
    propcon::CandidateSet w =
        resolve_outcome(in, o.outcome.empty() ? "reference" : o.outcome);
    Json prices_doc;
    if (!o.prices.empty()) {
      prices_doc = propcon::parse_json(read_input(o.prices));
    } else if (in.doc.contains("reference") &&
               in.doc["reference"].contains("price_system")) {
      prices_doc = in.doc["reference"]["price_system"];
    } else {
      throw propcon::Error(propcon::ErrorCode::kInvalidArgument,
                           "no price system given");
    }
    propcon::PriceSystem ps = propcon::price_system_from_json(e, prices_doc);
    propcon::SpMode mode = propcon::SpMode::kSp4Producer;
    if (o.mode == "exhaustive") {
      mode = propcon::SpMode::kExhaustive;
    } else if (!o.mode.empty() && o.mode != "sp4-producer") {
      throw propcon::Error(propcon::ErrorCode::kInvalidArgument,
                           "--mode: sp4-producer or exhaustive");
    }
    echo["outcome"] = propcon::set_to_json(e, w);
    result = propcon::sp_report_to_json(e, propcon::verify_sp(e, w, ps, mode, o.cap));
  } else if (what == "deserves") {
    std::vector<int> group = propcon::voters_from_ids(e, split_ids(o.group));
    echo["group"] = propcon::voters_to_json(e, group);
    echo["ell"] = o.ell;
    result = propcon::claim_check_to_json(
        e, propcon::deserves(e, group, o.ell, audit_options(o)));
  } else if (what == "cohesive") {
    std::vector<int> group = propcon::voters_from_ids(e, split_ids(o.group));
    propcon::CohesionMode mode = propcon::CohesionMode::kFixed;
    if (o.mode == "adaptive") {
      mode = propcon::CohesionMode::kAdaptive;
    } else if (!o.mode.empty() && o.mode != "fixed") {
      throw propcon::Error(propcon::ErrorCode::kInvalidArgument,
                           "--mode: fixed or adaptive");
    }
    propcon::Rational beta = propcon::parse_rational(o.beta);
    echo["group"] = propcon::voters_to_json(e, group);
    echo["alpha"] = o.alpha;
    echo["beta"] = propcon::to_string(beta);
    result = propcon::claim_check_to_json(
        e, propcon::cohesive(e, group, o.alpha, beta, mode, audit_options(o)));
  }
  emit(o, "check", echo, result);
}

void run_fixture(const Options& o) {
  propcon::FixtureParams p;
  p.n = o.n;
  p.g = o.g;
  p.s = o.s;
  if (o.epsilon) p.epsilon = propcon::parse_rational(*o.epsilon);
  p.seed = o.seed;
  p.variant = o.variant;
  if (o.n) p.random.n = *o.n;
  p.random.m = o.m;
  p.random.k = o.k;
  p.random.density = propcon::parse_rational(o.density);
  p.random.weighted = o.weighted;
  bool known = false;
  for (propcon::SystemKind kind :
       {propcon::SystemKind::kCommittee, propcon::SystemKind::kPublicDecisions,
        propcon::SystemKind::kDisjointAttributes, propcon::SystemKind::kBudget,
        propcon::SystemKind::kExplicit}) {
    if (propcon::system_kind_name(kind) == o.family) {
      p.random.family = kind;
      known = true;
    }
  }
  if (!known) {
    throw propcon::Error(propcon::ErrorCode::kInvalidArgument,
                         "unknown family " + o.family);
  }
  std::cout << propcon::dump_json(
      propcon::fixture_to_json(propcon::make_fixture(o.fixture, p)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proportionality audits and rules for elections with feasibility constraints"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cap", o.cap, "Enumeration cap");

  auto* rule = app.add_subcommand("rule", "Run a voting rule");
  rule->add_option("rule", o.rule, "pav, phragmen, phragmen-weighted or greedy-cohesive")
      ->required();
  rule->add_option("file", o.file, "Election file, - for stdin")->required();

  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_option("--groups", o.groups, "Group search: reduced or all");
    cmd->add_option("--enumeration", o.enumeration,
                    "T enumeration: auto, plain or symmetric");
  };

  auto* audit = app.add_subcommand("audit", "Audit an outcome");
  audit->add_option("axiom", o.axiom, "ejr, pjr, fjr, fjr-adaptive, core, "
                                      "restrained-ejr, ejr-weighted, pjr-weighted")
      ->required();
  audit->add_option("file", o.file, "Election file, - for stdin")->required();
  audit->add_option("--outcome", o.outcome,
                    "Comma-separated ids, or 'reference'")
      ->required();
  audit->add_option("--k", o.k, "Committee size for restrained-ejr");
  add_search_flags(audit);

  auto* check = app.add_subcommand("check", "Check a property");
  check->require_subcommand(1);
  check->fallthrough();
  std::vector<std::pair<std::string, CLI::App*>> checks;
  for (const char* name : {"matroid", "feasible", "sp", "deserves", "cohesive"}) {
    CLI::App* sub = check->add_subcommand(name);
    sub->add_option("file", o.file, "Election file, - for stdin")->required();
    checks.emplace_back(name, sub);
  }
  checks[1].second->add_option("--set", o.set, "Comma-separated ids")->required();
  checks[2].second->add_option("--prices", o.prices, "Price system file");
  checks[2].second->add_option("--outcome", o.outcome,
                               "Comma-separated ids, or 'reference'");
  checks[2].second->add_option("--mode", o.mode, "sp4-producer or exhaustive");
  checks[3].second->add_option("--group", o.group, "Comma-separated voter ids")
      ->required();
  checks[3].second->add_option("--ell", o.ell, "Claimed number of candidates");
  add_search_flags(checks[3].second);
  checks[4].second->add_option("--group", o.group, "Comma-separated voter ids")
      ->required();
  checks[4].second->add_option("--alpha", o.alpha, "Size of X");
  checks[4].second->add_option("--beta", o.beta, "Utility threshold");
  checks[4].second->add_option("--mode", o.mode, "fixed or adaptive");
  add_search_flags(checks[4].second);

  auto* fixture = app.add_subcommand("fixture", "Emit a fixture election");
  fixture->add_option("id", o.fixture, "Fixture id")->required();
  fixture->add_option("--n", o.n, "Number of voters");
  fixture->add_option("--g", o.g, "Number of candidate groups");
  fixture->add_option("--s", o.s, "Size of the cohesive group");
  fixture->add_option("--epsilon", o.epsilon, "Rational epsilon");
  fixture->add_option("--seed", o.seed, "Random seed");
  fixture->add_option("--variant", o.variant, "repaired or literal");
  fixture->add_option("--m", o.m, "Number of candidates (random)");
  fixture->add_option("--k", o.k, "Committee size (random)");
  fixture->add_option("--family", o.family, "Constraint family (random)");
  fixture->add_option("--density", o.density, "Approval probability (random)");
  fixture->add_flag("--weighted", o.weighted, "Random weights (random)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rule->parsed()) {
      run_rule(o);
    } else if (audit->parsed()) {
      run_audit(o);
    } else if (check->parsed()) {
      for (const auto& [name, sub] : checks) {
        if (sub->parsed()) run_check(o, name);
      }
    } else if (fixture->parsed()) {
      run_fixture(o);
    }
  } catch (const propcon::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e.code());
  }
  return 0;
}
