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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Every verdict from the library is checked against the
// brute-force oracles in oracle.hpp or a direct count in this file.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "instances.hpp"
#include "oracle.hpp"
#include "propcon/axioms.hpp"
#include "propcon/error.hpp"
#include "propcon/fixtures.hpp"
#include "propcon/greedy_cohesive.hpp"
#include "propcon/pav.hpp"
#include "propcon/phragmen.hpp"
#include "propcon/priceability.hpp"

namespace {

using namespace propcon;
using oracle::Mask;
using testing_support::random_instance;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few problems and a running summary.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) problems_ << (failures_ > 1 ? "; " : "") << what;
  }
  Outcome done(const std::string& summary) const {
    if (failures_ == 0) {
      std::string text = summary;
      while (!text.empty() && (text.back() == ' ' || text.back() == ';')) text.pop_back();
      return {true, text};
    }
    return {false, std::to_string(failures_) + " failures: " + problems_.str()};
  }

 private:
  int failures_ = 0;
  std::ostringstream problems_;
};

std::string where(SystemKind family, std::uint64_t seed) {
  return std::string(system_kind_name(family)) + "/" + std::to_string(seed);
}

std::string ids(const Election& e, const CandidateSet& w) {
  std::string out;
  for (const auto& id : e.ids_of(w)) out += (out.empty() ? "" : ",") + id;
  return "{" + out + "}";
}

// Committee systems: the worst T of size t avoids the jointly approved set A
// as far as the universe allows; X then fills the k - t free seats from A.
bool committee_deserves(int m, int k, int n, int s, int a, int ell) {
  for (int t = 0; t <= k; ++t) {
    int overlap = std::max(0, t - (m - a));
    int reach = std::min(a, overlap + (k - t));
    bool ratio = static_cast<long long>(s) * (t + ell) > static_cast<long long>(n) * ell;
    if (!ratio && reach < ell) return false;
  }
  return true;
}

Outcome criterion_1() {
  Check check;
  Election e = committee_demo();
  const std::vector<int> group{0, 1, 2};
  bool three = deserves(e, group, 3).holds;
  bool four = deserves(e, group, 4).holds;
  check.expect(three, "ell=3 should hold");
  check.expect(!four, "ell=4 should fail");
  CandidateSet common = e.universe();
  for (int i : group) common &= e.ballot(i);
  int a = common.size();
  for (int ell = 1; ell <= 6; ++ell) {
    bool expected = committee_deserves(e.num_candidates(), 10, e.num_voters(), 3, a, ell);
    check.expect(deserves(e, group, ell).holds == expected,
                 "ell=" + std::to_string(ell) + " disagrees with the seat count");
  }
  return check.done("ell=3 true, ell=4 false");
}

// Quota systems with two groups: T is described by its per-group sizes and
// its overlap with A in each group; every combination is realizable.
bool quota_deserves(const Election& e, const std::vector<int>& group, int ell) {
  const auto& spec = std::get<DisjointAttributesSpec>(e.constraint_spec());
  CandidateSet common = e.universe();
  for (int i : group) common &= e.ballot(i);
  struct Part {
    int size, a, quota;
  };
  std::vector<Part> parts;
  for (const auto& g : spec.groups) {
    CandidateSet members = e.to_set(g.members);
    parts.push_back({members.size(), members.intersection_size(common), g.upper});
  }
  const long long s = static_cast<long long>(group.size());
  const long long n = e.num_voters();
  const Part& p = parts[0];
  const Part& q = parts[1];
  for (int t1 = 0; t1 <= p.quota; ++t1) {
    for (int t2 = 0; t2 <= q.quota; ++t2) {
      if (t1 + t2 > spec.k) continue;
      bool ratio = s * (t1 + t2 + ell) > n * ell;
      if (ratio) continue;
      for (int o1 = std::max(0, t1 - (p.size - p.a)); o1 <= std::min(t1, p.a); ++o1) {
        for (int o2 = std::max(0, t2 - (q.size - q.a)); o2 <= std::min(t2, q.a); ++o2) {
          int reach = std::min(p.a, o1 + (p.quota - t1)) + std::min(q.a, o2 + (q.quota - t2));
          if (reach < ell) return false;
        }
      }
    }
  }
  return true;
}

Outcome criterion_2() {
  Check check;
  AuditOptions symmetric;
  symmetric.enumeration = Enumeration::kSymmetric;
  for (bool extended : {false, true}) {
    Election e = quota_demo(extended);
    std::vector<int> group = e.supporters(e.candidate_index("y1"));
    check.expect(group.size() == 41, "group size " + std::to_string(group.size()));
    int target = extended ? 10 : 8;
    bool holds = deserves(e, group, target, symmetric).holds;
    bool next = deserves(e, group, target + 1, symmetric).holds;
    check.expect(holds, (extended ? "extended " : "") + std::string("target fails"));
    check.expect(holds == quota_deserves(e, group, target), "count oracle disagrees");
    check.expect(next == quota_deserves(e, group, target + 1), "count oracle disagrees at +1");
  }
  return check.done("41% group deserves 8; with C1 approvals deserves 10");
}

Outcome criterion_3() {
  Check check;
  int instances = 0;
  int winners = 0;
  for (SystemKind family : testing_support::kMatroidFamilies) {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      Election e = random_instance(family, 8, 8, seed);
      oracle::Brute brute(e);
      PavResult r = solve_pav_exact(e);
      auto [score, expected] = brute.pav();
      check.expect(r.score == score, "PAV score " + where(family, seed));
      check.expect(r.winners.size() == expected.size(), "PAV ties " + where(family, seed));
      for (const CandidateSet& w : r.winners) {
        ++winners;
        check.expect(audit_ejr(e, w).satisfied, "EJR fails " + where(family, seed));
        check.expect(brute.ejr(oracle::to_mask(w)), "oracle EJR fails " + where(family, seed));
      }
      ++instances;
    }
  }
  return check.done(std::to_string(instances) + " instances, " + std::to_string(winners) +
                    " winners pass EJR");
}

// The reported violation is confirmed without the library's search: the
// group deserves ell by the brute-force oracle and no member reaches ell.
bool confirm_ejr_violation(const Election& e, const CandidateSet& w, const AuditReport& r) {
  if (r.satisfied || !r.violation) return false;
  const GroupClaim& c = r.violation->claim;
  oracle::Brute brute(e);
  if (!brute.deserves(c.group, *c.ell)) return false;
  for (int i : c.group) {
    if (e.approved_count(i, w) >= *c.ell) return false;
  }
  return true;
}

bool confirm_pjr_violation(const Election& e, const CandidateSet& w, const AuditReport& r) {
  if (r.satisfied || !r.violation) return false;
  const GroupClaim& c = r.violation->claim;
  oracle::Brute brute(e);
  if (!brute.deserves(c.group, *c.ell)) return false;
  CandidateSet covered;
  for (int i : c.group) covered |= e.ballot(i);
  return covered.intersection_size(w) < *c.ell;
}

Outcome criterion_4() {
  Check check;
  std::ostringstream summary;
  for (const char* id : {"pav-ejr-ranking", "pav-ejr-negative", "pav-ejr-judgment"}) {
    FixtureOutput f = make_fixture(id, {});
    check.expect(check_exchange_property(f.election.feasibility()).has_value(),
                 std::string(id) + " is a matroid");
    PavResult r = solve_pav_exact(f.election);
    bool failing = false;
    for (const CandidateSet& w : r.winners) {
      AuditReport a = audit_ejr(f.election, w);
      if (confirm_ejr_violation(f.election, w, a)) {
        failing = true;
        summary << id << " winner " << ids(f.election, w) << " fails (ell "
                << *a.violation->claim.ell << "); ";
        break;
      }
    }
    check.expect(failing, std::string(id) + ": no PAV winner fails EJR");
  }
  return check.done(summary.str());
}

Outcome criterion_5() {
  Check check;
  int instances = 0;
  for (SystemKind family : testing_support::kMatroidFamilies) {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      Election e = random_instance(family, 8, 8, seed);
      oracle::Brute brute(e);
      PhragmenTrace t = run_phragmen(e);
      check.expect(trace_audit(t, e).ok, "trace " + where(family, seed));
      check.expect(oracle::to_mask(t.outcome) == brute.phragmen(false),
                   "outcome " + where(family, seed));
      check.expect(audit_pjr(e, t.outcome).satisfied, "PJR fails " + where(family, seed));
      check.expect(brute.pjr(oracle::to_mask(t.outcome)), "oracle PJR " + where(family, seed));
      ++instances;
    }
  }
  std::ostringstream summary;
  summary << instances << " matroid instances pass PJR; ";
  for (const char* id : {"phragmen-pjr-ranking", "phragmen-pjr-negative",
                         "phragmen-pjr-judgment"}) {
    FixtureOutput f = make_fixture(id, {});
    PhragmenTrace t = run_phragmen(f.election);
    AuditReport a = audit_pjr(f.election, t.outcome);
    bool failing = confirm_pjr_violation(f.election, t.outcome, a);
    check.expect(failing, std::string(id) + ": Phragmen outcome passes PJR");
    if (failing) summary << id << " " << ids(f.election, t.outcome) << " fails; ";
  }
  return check.done(summary.str());
}

Outcome criterion_6() {
  Check check;
  long long claims_checked = 0;
  int outcomes = 0;
  for (SystemKind family : testing_support::kMatroidFamilies) {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      Election e = random_instance(family, 8, 8, seed);
      oracle::Brute brute(e);
      auto claims = brute.deserving_claims();
      auto satisfied = [&](Mask w, const oracle::Brute::Claim& c) {
        long long total = 0;
        for (int i : c.group) total += oracle::popcount(brute.ballot(i) & w);
        return 2 * total >= static_cast<long long>(c.group.size()) * (c.ell - 1);
      };
      std::vector<Mask> ejr_outcomes;
      for (Mask w : brute.maximal_sets()) {
        bool ejr = true;
        for (const auto& c : claims) {
          bool served = false;
          for (int i : c.group) served = served || oracle::popcount(brute.ballot(i) & w) >= c.ell;
          ejr = ejr && served;
        }
        if (ejr) ejr_outcomes.push_back(w);
      }
      ejr_outcomes.push_back(oracle::to_mask(run_phragmen(e).outcome));
      for (Mask w : ejr_outcomes) {
        ++outcomes;
        for (const auto& c : claims) {
          ++claims_checked;
          bool ok = satisfied(w, c);
          check.expect(ok, "average satisfaction " + where(family, seed));
          check.expect(ok == check_avg_satisfaction(e, oracle::to_set(w), c.group, c.ell),
                       "library disagrees " + where(family, seed));
        }
      }
    }
  }
  return check.done(std::to_string(outcomes) + " EJR/Phragmen outcomes, " +
                    std::to_string(claims_checked) + " claim checks");
}

Outcome criterion_7() {
  Check check;
  int instances = 0;
  for (SystemKind family : testing_support::kAllRandomFamilies) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      Election e = random_instance(family, 6, 6, seed);
      try {
        CandidateSet w = construct_fjr_outcome(e);
        check.expect(e.feasibility().is_feasible(w), "infeasible " + where(family, seed));
        check.expect(audit_fjr(e, w).satisfied, "FJR fails " + where(family, seed));
        check.expect(oracle::Brute(e).fjr(oracle::to_mask(w), false),
                     "oracle FJR fails " + where(family, seed));
      } catch (const Error& err) {
        check.expect(false, std::string(err.what()) + " " + where(family, seed));
      }
      ++instances;
    }
  }
  return check.done(std::to_string(instances) + " instances, all outcomes pass FJR");
}

Outcome criterion_8() {
  Check check;
  int instances = 0;
  int outcomes = 0;
  auto run = [&](SystemKind family, std::uint64_t seed, SearchMode mode) {
    Election e = random_instance(family, 5, 5, seed);
    oracle::Brute brute(e);
    for (const StablePriceable& sp : search_stable_priceable(e, mode)) {
      ++outcomes;
      check.expect(verify_sp(e, sp.outcome, sp.prices).passes(),
                   "not stable-priceable " + where(family, seed));
      check.expect(audit_ejr(e, sp.outcome).satisfied, "EJR fails " + where(family, seed));
      check.expect(brute.ejr(oracle::to_mask(sp.outcome)),
                   "oracle EJR fails " + where(family, seed));
    }
    ++instances;
  };
  for (SystemKind family : testing_support::kAllRandomFamilies) {
    for (std::uint64_t seed = 1; seed <= 24; ++seed) run(family, seed, SearchMode::kUniform);
  }
  for (SystemKind family : testing_support::kMatroidFamilies) {
    for (std::uint64_t seed = 101; seed <= 116; ++seed) run(family, seed, SearchMode::kGeneral);
  }
  return check.done(std::to_string(instances) + " instances, " + std::to_string(outcomes) +
                    " stable-priceable outcomes pass EJR");
}

Outcome criterion_9() {
  Check check;
  SpFixture f = gen_sp_not_fjr(30);
  SpReport r = verify_sp(f.election, f.outcome, f.prices);
  check.expect(r.passes(), "reference system fails verify_sp");
  AuditOptions symmetric;
  symmetric.enumeration = Enumeration::kSymmetric;
  AuditReport a = audit_fjr(f.election, f.outcome, CohesionMode::kAdaptive, symmetric);
  check.expect(!a.satisfied, "adaptive FJR holds");
  std::string summary;
  if (!a.satisfied) {
    const GroupClaim& c = a.violation->claim;
    check.expect(c.beta.size() == 1 && c.beta[0] == 5,
                 "witness beta " + (c.beta.empty() ? std::string("?") : to_string(c.beta[0])));
    // S is the 2 x n/30 voters approving A plus B or E.
    std::vector<int> s;
    for (int i = 0; i < f.election.num_voters(); ++i) {
      if (f.election.ballot(i).contains(f.election.candidate_index("a1"))) s.push_back(i);
    }
    check.expect(c.group == s, "witness group is not S");
    check.expect(cohesive(f.election, s, 0, Rational(5), CohesionMode::kAdaptive, symmetric).holds,
                 "S not adaptively (., 5)-cohesive on recheck");
    int best = 0;
    for (int i : s) best = std::max(best, f.election.approved_count(i, f.outcome));
    check.expect(best == 4, "S members reach " + std::to_string(best));
    summary = "SP1-SP4 pass; S (" + std::to_string(s.size()) +
              " voters, max utility 4) is owed beta=5";
  }
  return check.done(summary);
}

Outcome criterion_10() {
  Check check;
  int instances = 0;
  long long claims = 0;
  const SystemKind families[] = {SystemKind::kBudget, SystemKind::kCommittee,
                                 SystemKind::kExplicit};
  for (SystemKind family : families) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      Election e = random_instance(family, 6, 6, seed, true);
      oracle::Brute brute(e);
      PhragmenTrace t = run_phragmen_weighted(e);
      check.expect(trace_audit(t, e).ok, "trace " + where(family, seed));
      Mask w = oracle::to_mask(t.outcome);
      check.expect(w == brute.phragmen(true), "outcome " + where(family, seed));
      const int n = e.num_voters();
      for (const auto& c : brute.strongly_cohesive_claims()) {
        ++claims;
        const int s = static_cast<int>(c.group.size());
        int bound = c.beta * (n - s) / n;
        check.expect(oracle::popcount(brute.united(c.group) & w) >= bound,
                     "coverage " + where(family, seed));
      }
      for (const GroupClaim& c : strongly_cohesive_claims(e)) {
        check.expect(brute.strongly_cohesive(c.group, *c.alpha, c.beta[0].convert_to<int>()),
                     "library claim unsound " + where(family, seed));
      }
      ++instances;
    }
  }
  std::ostringstream summary;
  summary << instances << " weighted instances, " << claims << " claims; ";

  Election big = gen_weighted_phragmen_failure(100, Rational(1, 100), 250, 124);
  PhragmenTrace t = run_phragmen_weighted(big);
  CandidateSet as;
  for (int g = 1; g <= 100; ++g) as.insert(big.candidate_index("a" + std::to_string(g)));
  check.expect(t.outcome == as, "g=100 outcome is not the a-candidates");
  check.expect(trace_audit(t, big).ok, "g=100 trace");
  if (t.outcome == as) summary << "g=100 selects the 100 a-candidates; ";

  Election small = gen_weighted_phragmen_failure(4, Rational(1, 100), 250, 124);
  PhragmenTrace ts = run_phragmen_weighted(small);
  AuditReport a = audit_pjr_weighted(small, ts.outcome);
  check.expect(!a.satisfied, "g=4 passes weighted PJR");
  if (!a.satisfied) {
    const GroupClaim& c = a.violation->claim;
    int beta = c.beta[0].convert_to<int>();
    check.expect(deserves_weighted(small, c.group, *c.alpha, beta).holds,
                 "g=4 claim does not recheck");
    CandidateSet covered;
    for (int i : c.group) covered |= small.ballot(i);
    check.expect(covered.intersection_size(ts.outcome) < beta, "g=4 coverage");
    summary << "g=4 fails weighted PJR (alpha " << to_string(*c.alpha) << ", beta " << beta
            << ")";
  }
  return check.done(summary.str());
}

Outcome criterion_11() {
  Check check;
  int instances = 0;
  int ejr_outcomes = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Election e = random_instance(SystemKind::kCommittee, 6, 6, seed);
    int k = std::get<CommitteeSpec>(e.constraint_spec()).k;
    oracle::Brute brute(e);
    for (Mask w : brute.maximal_sets()) {
      CandidateSet ws = oracle::to_set(w);
      if (!audit_ejr(e, ws).satisfied) continue;
      ++ejr_outcomes;
      check.expect(audit_restrained_ejr(e, ws, k).satisfied,
                   "restrained EJR fails, seed " + std::to_string(seed));
      check.expect(brute.restrained_ejr(w, k), "oracle restrained EJR, seed " + std::to_string(seed));
    }
    ++instances;
  }
  auto [e, w] = restrained_divergence();
  bool strict = !audit_ejr(e, w).satisfied && audit_restrained_ejr(e, w, 4).satisfied;
  oracle::Brute brute(e);
  bool strict_oracle = !brute.ejr(oracle::to_mask(w)) && brute.restrained_ejr(oracle::to_mask(w), 4);
  check.expect(strict && strict_oracle, "divergence instance is not strict");
  return check.done(std::to_string(instances) + " instances, " + std::to_string(ejr_outcomes) +
                    " EJR outcomes pass restrained EJR; " + ids(e, w) +
                    " passes restrained EJR and fails EJR");
}

Outcome criterion_12() {
  Check check;
  int outcomes = 0;
  int strict_steps[3] = {0, 0, 0};
  for (SystemKind family : testing_support::kAllRandomFamilies) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      Election e = random_instance(family, 6, 6, seed);
      oracle::Brute brute(e);
      for (Mask w : brute.feasible_sets()) {
        CandidateSet ws = oracle::to_set(w);
        bool core = audit_core(e, ws).satisfied;
        bool fjr = audit_fjr(e, ws).satisfied;
        bool ejr = audit_ejr(e, ws).satisfied;
        bool pjr = audit_pjr(e, ws).satisfied;
        check.expect(!core || fjr, "core without FJR " + where(family, seed));
        check.expect(!fjr || ejr, "FJR without EJR " + where(family, seed));
        check.expect(!ejr || pjr, "EJR without PJR " + where(family, seed));
        strict_steps[0] += fjr && !core;
        strict_steps[1] += ejr && !fjr;
        strict_steps[2] += pjr && !ejr;
        ++outcomes;
      }
    }
  }
  // Oracle agreement on a slice keeps the chain honest.
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Election e = random_instance(SystemKind::kExplicit, 5, 5, seed);
    oracle::Brute brute(e);
    for (Mask w : brute.feasible_sets()) {
      CandidateSet ws = oracle::to_set(w);
      check.expect(audit_core(e, ws).satisfied == brute.core(w), "core oracle");
      check.expect(audit_fjr(e, ws).satisfied == brute.fjr(w, false), "FJR oracle");
    }
  }
  std::ostringstream summary;
  summary << outcomes << " outcomes; strict steps core/FJR " << strict_steps[0] << ", FJR/EJR "
          << strict_steps[1] << ", EJR/PJR " << strict_steps[2];
  return check.done(summary.str());
}

Outcome criterion_13() {
  Check check;
  AuditOptions all;
  all.groups = GroupSearch::kAllSubsets;
  int outcomes = 0;
  for (SystemKind family : testing_support::kAllRandomFamilies) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      Election e = random_instance(family, 8, 6, seed);
      for (const CandidateSet& w : enumerate_maximal(e.feasibility())) {
        check.expect(audit_ejr(e, w).satisfied == audit_ejr(e, w, all).satisfied,
                     "EJR closure " + where(family, seed));
        check.expect(audit_pjr(e, w).satisfied == audit_pjr(e, w, all).satisfied,
                     "PJR closure " + where(family, seed));
        ++outcomes;
      }
    }
  }
  AuditOptions plain;
  plain.enumeration = Enumeration::kPlain;
  AuditOptions symmetric;
  symmetric.enumeration = Enumeration::kSymmetric;
  long long verdicts = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Election e = random_instance(SystemKind::kDisjointAttributes, 5, 10, seed);
    oracle::Brute brute(e);
    for (const auto& group : brute.groups()) {
      for (int ell = 1; ell <= e.num_candidates(); ++ell) {
        bool p = deserves(e, group, ell, plain).holds;
        bool s = deserves(e, group, ell, symmetric).holds;
        check.expect(p == s, "symmetric vs plain, seed " + std::to_string(seed));
        ++verdicts;
      }
    }
  }
  return check.done(std::to_string(outcomes) + " outcomes closure = all subsets; " +
                    std::to_string(verdicts) + " deserve verdicts symmetric = plain");
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "committee-demo deserves 3 not 4", 1, criterion_1},
      {2, "quota-demo deserves 8 and 10 (symmetric)", 10, criterion_2},
      {3, "PAV winners satisfy EJR on matroids", 300, criterion_3},
      {4, "PAV fails EJR on non-matroid witnesses", 0, criterion_4},
      {5, "Phragmen PJR on matroids, failure on witnesses", 0, criterion_5},
      {6, "average satisfaction of EJR and Phragmen outcomes", 0, criterion_6},
      {7, "constructed outcomes satisfy FJR", 0, criterion_7},
      {8, "stable-priceable outcomes satisfy EJR", 0, criterion_8},
      {9, "SP fixture: priceable but not adaptive FJR", 30, criterion_9},
      {10, "weighted Phragmen coverage bound and failure", 0, criterion_10},
      {11, "EJR implies restrained EJR, strictly", 0, criterion_11},
      {12, "core => FJR => EJR => PJR", 0, criterion_12},
      {13, "closure vs all subsets, symmetric vs plain", 0, criterion_13},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      out.pass = false;
      out.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) +
                    " s limit)";
    }
    std::printf("%s %2d %s [%.2fs] %s\n", out.pass ? "PASS" : "FAIL", c.number, c.name,
                seconds, out.detail.c_str());
    std::fflush(stdout);
    failed += out.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
