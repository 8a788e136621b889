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

#include "propcon/io.hpp"

#include <algorithm>

#include "propcon/error.hpp"

namespace propcon {
namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParse, (path.empty() ? "/" : path) + ": " + what);
}

const Json& field(const Json& obj, const std::string& key,
                  const std::string& path) {
  if (!obj.is_object()) bad(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(path, "missing \"" + key + "\"");
  return *it;
}

const Json* optional_field(const Json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

std::string get_string(const Json& v, const std::string& path) {
  if (!v.is_string()) bad(path, "expected a string");
  return v.get<std::string>();
}

int get_int(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) bad(path, "expected an integer");
  return v.get<int>();
}

Rational get_rational(const Json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) bad(path, "expected a rational \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

std::vector<std::string> get_strings(const Json& v, const std::string& path) {
  if (!v.is_array()) bad(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    out.push_back(get_string(v[j], path + "/" + std::to_string(j)));
  }
  return out;
}

std::vector<std::vector<std::string>> get_string_lists(const Json& v,
                                                       const std::string& path) {
  if (!v.is_array()) bad(path, "expected an array of arrays");
  std::vector<std::vector<std::string>> out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    out.push_back(get_strings(v[j], path + "/" + std::to_string(j)));
  }
  return out;
}

Json ids_json(const std::vector<std::string>& ids) {
  Json out = Json::array();
  for (const auto& id : ids) out.push_back(id);
  return out;
}

Json rationals_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

UtilityMode parse_mode(const std::string& name, const std::string& path) {
  for (UtilityMode m :
       {UtilityMode::kApproval, UtilityMode::kAdditive, UtilityMode::kTable}) {
    if (utility_mode_name(m) == name) return m;
  }
  bad(path, "unknown utility mode \"" + name + "\"");
}

}  // namespace

std::string dump_json(const Json& value) { return value.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse,
                "byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json constraints_to_json(const ConstraintSpec& spec) {
  Json out;
  out["kind"] = std::string(system_kind_name(spec_kind(spec)));
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CommitteeSpec>) {
          out["k"] = s.k;
        } else if constexpr (std::is_same_v<T, PublicDecisionsSpec>) {
          Json issues = Json::array();
          for (const auto& [yes, no] : s.issues) issues.push_back({yes, no});
          out["issues"] = issues;
        } else if constexpr (std::is_same_v<T, DisjointAttributesSpec>) {
          out["k"] = s.k;
          Json groups = Json::array();
          for (const auto& g : s.groups) {
            Json j;
            j["members"] = ids_json(g.members);
            j["lower"] = g.lower;
            j["upper"] = g.upper;
            groups.push_back(j);
          }
          out["groups"] = groups;
        } else if constexpr (std::is_same_v<T, BudgetSpec>) {
          Json limits = Json::array();
          for (const auto& l : s.limits) {
            Json j;
            j["members"] = ids_json(l.members);
            j["limit"] = to_string(l.limit);
            limits.push_back(j);
          }
          out["limits"] = limits;
        } else if constexpr (std::is_same_v<T, ExplicitSpec>) {
          Json sets = Json::array();
          for (const auto& f : s.feasible) sets.push_back(ids_json(f));
          out["feasible"] = sets;
        } else if constexpr (std::is_same_v<T, RankingSpec>) {
          out["items"] = ids_json(s.items);
        } else if constexpr (std::is_same_v<T, NegativeVotesSpec>) {
          out["items"] = ids_json(s.items);
          out["k"] = s.k;
        } else if constexpr (std::is_same_v<T, JudgmentSpec>) {
          out["variables"] = ids_json(s.variables);
          Json clauses = Json::array();
          for (const auto& c : s.clauses) clauses.push_back(ids_json(c));
          out["clauses"] = clauses;
        }
      },
      spec);
  return out;
}

ConstraintSpec constraints_from_json(const Json& doc) {
  const std::string p = "/constraints";
  std::string kind = get_string(field(doc, "kind", p), p + "/kind");
  if (kind == "committee") {
    return CommitteeSpec{get_int(field(doc, "k", p), p + "/k")};
  }
  if (kind == "public-decisions") {
    PublicDecisionsSpec s;
    auto issues = get_string_lists(field(doc, "issues", p), p + "/issues");
    for (std::size_t j = 0; j < issues.size(); ++j) {
      if (issues[j].size() != 2) {
        bad(p + "/issues/" + std::to_string(j), "an issue has two options");
      }
      s.issues.emplace_back(issues[j][0], issues[j][1]);
    }
    return s;
  }
  if (kind == "disjoint-attributes") {
    DisjointAttributesSpec s;
    s.k = get_int(field(doc, "k", p), p + "/k");
    const Json& groups = field(doc, "groups", p);
    if (!groups.is_array()) bad(p + "/groups", "expected an array");
    for (std::size_t j = 0; j < groups.size(); ++j) {
      std::string gp = p + "/groups/" + std::to_string(j);
      s.groups.push_back(
          {get_strings(field(groups[j], "members", gp), gp + "/members"),
           get_int(field(groups[j], "lower", gp), gp + "/lower"),
           get_int(field(groups[j], "upper", gp), gp + "/upper")});
    }
    return s;
  }
  if (kind == "budget") {
    BudgetSpec s;
    const Json& limits = field(doc, "limits", p);
    if (!limits.is_array()) bad(p + "/limits", "expected an array");
    for (std::size_t j = 0; j < limits.size(); ++j) {
      std::string lp = p + "/limits/" + std::to_string(j);
      BudgetLimitSpec l;
      if (const Json* members = optional_field(limits[j], "members")) {
        l.members = get_strings(*members, lp + "/members");
      }
      l.limit = get_rational(field(limits[j], "limit", lp), lp + "/limit");
      s.limits.push_back(l);
    }
    return s;
  }
  if (kind == "explicit") {
    return ExplicitSpec{
        get_string_lists(field(doc, "feasible", p), p + "/feasible")};
  }
  if (kind == "ranking") {
    return RankingSpec{get_strings(field(doc, "items", p), p + "/items")};
  }
  if (kind == "negative-votes") {
    return NegativeVotesSpec{get_strings(field(doc, "items", p), p + "/items"),
                             get_int(field(doc, "k", p), p + "/k")};
  }
  if (kind == "judgment") {
    return JudgmentSpec{
        get_strings(field(doc, "variables", p), p + "/variables"),
        get_string_lists(field(doc, "clauses", p), p + "/clauses")};
  }
  bad(p + "/kind", "unknown constraint kind \"" + kind + "\"");
}

Json election_to_json(const Election& election) {
  Json out;
  out["schema"] = kSchemaVersion;
  out["utility_mode"] = std::string(utility_mode_name(election.utility_mode()));
  Json candidates = Json::array();
  for (const Candidate& c : election.candidates()) {
    Json j;
    j["id"] = c.id;
    if (c.weight != 1) j["weight"] = to_string(c.weight);
    candidates.push_back(j);
  }
  out["candidates"] = candidates;
  Json voters = Json::array();
  for (const VoterSpec& v : election.voter_specs()) {
    Json j;
    j["id"] = v.id;
    switch (election.utility_mode()) {
      case UtilityMode::kApproval:
        j["approves"] = ids_json(v.approvals);
        break;
      case UtilityMode::kAdditive: {
        Json values = Json::object();
        for (const auto& [id, value] : v.values) values[id] = to_string(value);
        j["utilities"] = values;
        break;
      }
      case UtilityMode::kTable: {
        Json table = Json::array();
        for (const TableEntry& t : v.table) {
          Json entry;
          entry["set"] = ids_json(t.subset);
          entry["value"] = to_string(t.value);
          table.push_back(entry);
        }
        j["table"] = table;
        break;
      }
    }
    voters.push_back(j);
  }
  out["voters"] = voters;
  out["constraints"] = constraints_to_json(election.constraint_spec());
  return out;
}

Election election_from_json(const Json& doc) {
  if (!doc.is_object()) bad("", "expected an election object");
  if (const Json* schema = optional_field(doc, "schema")) {
    if (get_int(*schema, "/schema") != kSchemaVersion) {
      bad("/schema", "unsupported schema version");
    }
  }
  UtilityMode mode = UtilityMode::kApproval;
  if (const Json* m = optional_field(doc, "utility_mode")) {
    mode = parse_mode(get_string(*m, "/utility_mode"), "/utility_mode");
  }
  ConstraintSpec spec = constraints_from_json(field(doc, "constraints", ""));

  std::vector<Candidate> candidates;
  if (const Json* list = optional_field(doc, "candidates")) {
    if (!list->is_array()) bad("/candidates", "expected an array");
    for (std::size_t j = 0; j < list->size(); ++j) {
      std::string cp = "/candidates/" + std::to_string(j);
      const Json& c = (*list)[j];
      Candidate cand;
      cand.id = get_string(field(c, "id", cp), cp + "/id");
      if (const Json* w = optional_field(c, "weight")) {
        cand.weight = get_rational(*w, cp + "/weight");
      }
      candidates.push_back(cand);
    }
  } else {
    std::optional<EncodedDomain> domain;
    if (auto* r = std::get_if<RankingSpec>(&spec)) {
      domain = encode_ranking(r->items);
    } else if (auto* nv = std::get_if<NegativeVotesSpec>(&spec)) {
      domain = encode_negative_votes(nv->items, nv->k);
    } else if (auto* js = std::get_if<JudgmentSpec>(&spec)) {
      domain = encode_judgment(js->variables, js->clauses);
    } else {
      bad("", "missing \"candidates\"");
    }
    candidates = unit_candidates(domain->universe);
  }

  std::vector<VoterSpec> voters;
  const Json& list = field(doc, "voters", "");
  if (!list.is_array()) bad("/voters", "expected an array");
  for (std::size_t j = 0; j < list.size(); ++j) {
    std::string vp = "/voters/" + std::to_string(j);
    const Json& v = list[j];
    VoterSpec spec_v;
    spec_v.id = get_string(field(v, "id", vp), vp + "/id");
    switch (mode) {
      case UtilityMode::kApproval:
        spec_v.approvals =
            get_strings(field(v, "approves", vp), vp + "/approves");
        break;
      case UtilityMode::kAdditive: {
        const Json& u = field(v, "utilities", vp);
        if (!u.is_object()) bad(vp + "/utilities", "expected an object");
        for (auto it = u.begin(); it != u.end(); ++it) {
          spec_v.values.emplace_back(
              it.key(), get_rational(it.value(), vp + "/utilities/" + it.key()));
        }
        break;
      }
      case UtilityMode::kTable: {
        const Json& t = field(v, "table", vp);
        if (!t.is_array()) bad(vp + "/table", "expected an array");
        for (std::size_t e = 0; e < t.size(); ++e) {
          std::string ep = vp + "/table/" + std::to_string(e);
          spec_v.table.push_back(
              {get_strings(field(t[e], "set", ep), ep + "/set"),
               get_rational(field(t[e], "value", ep), ep + "/value")});
        }
        break;
      }
    }
    voters.push_back(spec_v);
  }
  return build_election(std::move(candidates), std::move(voters), mode,
                        std::move(spec));
}

Json set_to_json(const Election& election, const CandidateSet& w) {
  return ids_json(election.ids_of(w));
}

CandidateSet set_from_json(const Election& election, const Json& doc) {
  return election.to_set(get_strings(doc, "/set"));
}

Json voters_to_json(const Election& election, const std::vector<int>& voters) {
  Json out = Json::array();
  for (int i : voters) out.push_back(election.voter_id(i));
  return out;
}

std::vector<int> voters_from_ids(const Election& election,
                                 const std::vector<std::string>& ids) {
  std::vector<int> out;
  for (const auto& id : ids) {
    int found = -1;
    for (int i = 0; i < election.num_voters(); ++i) {
      if (election.voter_id(i) == id) found = i;
    }
    if (found < 0) throw Error(ErrorCode::kUnknownVoter, id);
    out.push_back(found);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Json price_system_to_json(const Election& election, const PriceSystem& ps) {
  Json out;
  Json prices = Json::object();
  for (int c = 0; c < election.num_candidates(); ++c) {
    prices[election.candidate(c).id] = to_string(ps.prices[c]);
  }
  out["prices"] = prices;
  Json payments = Json::object();
  for (int i = 0; i < election.num_voters(); ++i) {
    Json row = Json::object();
    for (int c = 0; c < election.num_candidates(); ++c) {
      if (ps.payments[i][c] != 0) {
        row[election.candidate(c).id] = to_string(ps.payments[i][c]);
      }
    }
    if (!row.empty()) payments[election.voter_id(i)] = row;
  }
  out["payments"] = payments;
  return out;
}

PriceSystem price_system_from_json(const Election& election, const Json& doc) {
  const int m = election.num_candidates();
  const int n = election.num_voters();
  PriceSystem ps;
  ps.prices.assign(m, Rational(0));
  ps.payments.assign(n, std::vector<Rational>(m, Rational(0)));
  const Json& prices = field(doc, "prices", "");
  if (!prices.is_object()) bad("/prices", "expected an object");
  std::vector<bool> seen(m, false);
  for (auto it = prices.begin(); it != prices.end(); ++it) {
    int c = election.candidate_index(it.key());
    ps.prices[c] = get_rational(it.value(), "/prices/" + it.key());
    seen[c] = true;
  }
  for (int c = 0; c < m; ++c) {
    if (!seen[c]) bad("/prices", "missing price for " + election.candidate(c).id);
  }
  if (const Json* payments = optional_field(doc, "payments")) {
    if (!payments->is_object()) bad("/payments", "expected an object");
    for (auto it = payments->begin(); it != payments->end(); ++it) {
      int i = voters_from_ids(election, {it.key()}).front();
      const Json& row = it.value();
      if (!row.is_object()) bad("/payments/" + it.key(), "expected an object");
      for (auto jt = row.begin(); jt != row.end(); ++jt) {
        ps.payments[i][election.candidate_index(jt.key())] =
            get_rational(jt.value(), "/payments/" + it.key() + "/" + jt.key());
      }
    }
  }
  return ps;
}

Json pav_to_json(const Election& election, const PavResult& result) {
  Json out;
  out["score"] = to_string(result.score);
  Json winners = Json::array();
  for (const CandidateSet& w : result.winners) {
    winners.push_back(set_to_json(election, w));
  }
  out["winners"] = winners;
  out["stats"] = {{"nodes", result.stats.nodes},
                  {"pruned", result.stats.pruned}};
  return out;
}

Json trace_to_json(const Election& election, const PhragmenTrace& trace) {
  Json out;
  out["weighted"] = trace.weighted;
  out["outcome"] = set_to_json(election, trace.outcome);
  Json events = Json::array();
  for (const PurchaseEvent& ev : trace.events) {
    Json j;
    j["time"] = to_string(ev.time);
    j["candidate"] = election.candidate(ev.candidate).id;
    j["price"] = to_string(ev.price);
    Json pay = Json::object();
    for (const auto& [i, amount] : ev.payments) {
      pay[election.voter_id(i)] = to_string(amount);
    }
    j["payments"] = pay;
    j["reset"] = voters_to_json(election, ev.reset);
    events.push_back(j);
  }
  out["events"] = events;
  Json removals = Json::array();
  for (const Removal& r : trace.removals) {
    removals.push_back({{"time", to_string(r.time)},
                        {"candidate", election.candidate(r.candidate).id},
                        {"after_events", r.after_events}});
  }
  out["removals"] = removals;
  Json unsupported = Json::array();
  for (int c : trace.unsupported) unsupported.push_back(election.candidate(c).id);
  out["unsupported"] = unsupported;
  out["end_time"] = to_string(trace.end_time);
  Json stranded = Json::object();
  for (int i = 0; i < election.num_voters(); ++i) {
    if (trace.stranded[i] != 0) {
      stranded[election.voter_id(i)] = to_string(trace.stranded[i]);
    }
  }
  out["stranded"] = stranded;
  return out;
}

Json partition_to_json(const Election& election,
                       const CohesivePartition& partition) {
  Json out = Json::array();
  for (const CohesiveGroup& g : partition.groups) {
    out.push_back({{"voters", voters_to_json(election, g.voters)},
                   {"alpha", g.alpha},
                   {"beta", to_string(g.beta)}});
  }
  return out;
}

Json claim_to_json(const Election& election, const GroupClaim& claim) {
  Json out;
  out["group"] = voters_to_json(election, claim.group);
  if (claim.ell) out["ell"] = *claim.ell;
  if (claim.alpha) out["alpha"] = to_string(*claim.alpha);
  if (!claim.beta.empty()) out["beta"] = rationals_json(claim.beta);
  return out;
}

Json audit_to_json(const Election& election, const AuditReport& report) {
  Json out;
  out["axiom"] = std::string(axiom_name(report.axiom));
  out["satisfied"] = report.satisfied;
  if (report.violation) {
    Json v = claim_to_json(election, report.violation->claim);
    v["utilities"] = rationals_json(report.violation->utilities);
    out["violation"] = v;
  }
  out["stats"] = {{"groups_examined", report.stats.groups_examined},
                  {"sets_examined", report.stats.sets_examined}};
  return out;
}

Json claim_check_to_json(const Election& election, const ClaimCheck& check) {
  Json out;
  out["holds"] = check.holds;
  if (check.refuting_set) {
    out["refuting_set"] = set_to_json(election, *check.refuting_set);
  }
  out["sets_examined"] = check.sets_examined;
  return out;
}

Json sp_report_to_json(const Election& election, const SpReport& report) {
  auto condition = [&](const ConditionResult& r) {
    Json j;
    j["holds"] = r.holds;
    if (r.candidate) j["candidate"] = election.candidate(*r.candidate).id;
    if (r.voter) j["voter"] = election.voter_id(*r.voter);
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
  };
  Json out;
  out["passes"] = report.passes();
  out["well_formed"] = condition(report.well_formed);
  out["sp1"] = condition(report.sp1);
  out["sp2"] = condition(report.sp2);
  out["sp3"] = condition(report.sp3);
  out["sp4"] = condition(report.sp4);
  return out;
}

Json witness_to_json(const Election& election, const MatroidWitness& witness) {
  return {{"x", set_to_json(election, witness.x)},
          {"y", set_to_json(election, witness.y)}};
}

Json fixture_to_json(const FixtureOutput& fixture) {
  Json out = election_to_json(fixture.election);
  Json provenance;
  provenance["id"] = fixture.id;
  Json params = Json::object();
  for (const auto& [key, value] : fixture.provenance) params[key] = value;
  provenance["params"] = params;
  out["fixture"] = provenance;
  if (fixture.outcome || fixture.prices) {
    Json reference;
    if (fixture.outcome) {
      reference["outcome"] = set_to_json(fixture.election, *fixture.outcome);
    }
    if (fixture.prices) {
      reference["price_system"] =
          price_system_to_json(fixture.election, *fixture.prices);
    }
    out["reference"] = reference;
  }
  return out;
}

}  // namespace propcon
