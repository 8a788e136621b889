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

#include <gtest/gtest.h>

#include "instances.hpp"
#include "oracle.hpp"
#include "propcon/axioms.hpp"
#include "propcon/error.hpp"
#include "propcon/fixtures.hpp"

namespace propcon {
namespace {

using oracle::Mask;
using testing_support::random_instance;

AuditOptions with_enumeration(Enumeration how) {
  AuditOptions o;
  o.enumeration = how;
  return o;
}

TEST(Deserves, CommitteeDemo) {
  Election e = committee_demo();
  EXPECT_TRUE(deserves(e, {0, 1, 2}, 3).holds);
  ClaimCheck four = deserves(e, {0, 1, 2}, 4);
  EXPECT_FALSE(four.holds);
  ASSERT_TRUE(four.refuting_set.has_value());
  // Re-check the counter-proposal by hand: 3 members of 10, |T| + 4 <= 40/3.
  EXPECT_LE(3 * (four.refuting_set->size() + 4), 10 * 4);
}

TEST(Deserves, ValidatesGroup) {
  Election e = committee_demo();
  EXPECT_THROW(deserves(e, {}, 1), Error);
  EXPECT_THROW(deserves(e, {1, 0}, 1), Error);
  EXPECT_THROW(deserves(e, {0, 99}, 1), Error);
}

TEST(Deserves, MatchesBruteForcePlainAndSymmetric) {
  for (SystemKind family : testing_support::kAllRandomFamilies) {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      Election e = random_instance(family, 5, 6, seed);
      oracle::Brute brute(e);
      for (const auto& group : brute.groups()) {
        for (int ell = 1; ell <= e.num_candidates(); ++ell) {
          bool expected = brute.deserves(group, ell);
          for (Enumeration how : {Enumeration::kPlain, Enumeration::kSymmetric,
                                  Enumeration::kAuto}) {
            ASSERT_EQ(deserves(e, group, ell, with_enumeration(how)).holds, expected)
                << system_kind_name(family) << " seed " << seed << " ell " << ell;
          }
        }
      }
    }
  }
}

TEST(Deserves, RefutingSetIsACounterexample) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Election e = random_instance(SystemKind::kDisjointAttributes, 5, 7, seed);
    oracle::Brute brute(e);
    for (const auto& group : brute.groups()) {
      ClaimCheck c = deserves(e, group, 2);
      if (c.holds) continue;
      ASSERT_TRUE(c.refuting_set.has_value());
      Mask t = oracle::to_mask(*c.refuting_set);
      EXPECT_TRUE(brute.feasible(t));
      EXPECT_LT(brute.best_cover(brute.common(group))[t], 2);
    }
  }
}

TEST(Audit, AgreesWithBruteForceOnEveryFeasibleOutcome) {
  int violations = 0;
  for (SystemKind family : testing_support::kAllRandomFamilies) {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
      Election e = random_instance(family, 4, 5, seed);
      oracle::Brute brute(e);
      for (Mask w : brute.feasible_sets()) {
        CandidateSet ws = oracle::to_set(w);
        AuditReport ejr = audit_ejr(e, ws);
        AuditReport pjr = audit_pjr(e, ws);
        AuditReport fjr = audit_fjr(e, ws);
        AuditReport fjr_adaptive = audit_fjr(e, ws, CohesionMode::kAdaptive);
        AuditReport core = audit_core(e, ws);
        ASSERT_EQ(ejr.satisfied, brute.ejr(w)) << system_kind_name(family) << seed;
        ASSERT_EQ(pjr.satisfied, brute.pjr(w)) << system_kind_name(family) << seed;
        ASSERT_EQ(fjr.satisfied, brute.fjr(w, false)) << system_kind_name(family) << seed;
        ASSERT_EQ(fjr_adaptive.satisfied, brute.fjr(w, true))
            << system_kind_name(family) << seed;
        ASSERT_EQ(core.satisfied, brute.core(w)) << system_kind_name(family) << seed;
        for (const AuditReport* r : {&ejr, &pjr, &fjr, &fjr_adaptive, &core}) {
          if (r->satisfied) continue;
          ++violations;
          ASSERT_TRUE(r->violation.has_value());
          EXPECT_TRUE(recheck_violation(e, ws, *r));
        }
      }
    }
  }
  EXPECT_GT(violations, 0);
}

TEST(Audit, GroupSearchModesAgree) {
  AuditOptions all;
  all.groups = GroupSearch::kAllSubsets;
  for (SystemKind family : testing_support::kAllRandomFamilies) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      Election e = random_instance(family, 6, 5, seed);
      for (const CandidateSet& w : enumerate_maximal(e.feasibility())) {
        for (Axiom a : {Axiom::kEjr, Axiom::kPjr, Axiom::kFjr, Axiom::kCore}) {
          EXPECT_EQ(audit(e, w, a).satisfied, audit(e, w, a, 0, all).satisfied)
              << axiom_name(a);
        }
      }
    }
  }
}

TEST(Audit, RejectsInfeasibleOutcome) {
  Election e = committee_demo();
  CandidateSet too_big = CandidateSet::prefix(11);
  try {
    audit_ejr(e, too_big);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kInfeasibleOutcome);
  }
}

TEST(Audit, EjrViolationOnCommitteeDemo) {
  Election e = committee_demo();
  // Only one of the three shared candidates.
  CandidateSet w = e.to_set({"c1", "c4", "c5", "c6", "c7", "c8", "c9", "c10",
                             "c11", "c12"});
  AuditReport r = audit_ejr(e, w);
  ASSERT_FALSE(r.satisfied);
  EXPECT_EQ(r.violation->claim.group, (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(recheck_violation(e, w, r));
}

TEST(AxiomNames, RoundTrip) {
  for (Axiom a : {Axiom::kEjr, Axiom::kPjr, Axiom::kFjr, Axiom::kFjrAdaptive,
                  Axiom::kCore, Axiom::kRestrainedEjr, Axiom::kEjrWeighted,
                  Axiom::kPjrWeighted}) {
    EXPECT_EQ(parse_axiom(axiom_name(a)), a);
  }
  EXPECT_FALSE(parse_axiom("nope").has_value());
}

TEST(RestrainedEjr, MatchesBruteForce) {
  int compared = 0;
  int failing = 0;
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    Election e = random_instance(SystemKind::kCommittee, 5, 6, seed);
    int k = std::get<CommitteeSpec>(e.constraint_spec()).k;
    oracle::Brute brute(e);
    for (Mask w : brute.feasible_sets()) {
      if (oracle::popcount(w) != k) continue;
      bool expected = brute.restrained_ejr(w, k);
      ASSERT_EQ(audit_restrained_ejr(e, oracle::to_set(w), k).satisfied, expected)
          << "seed " << seed;
      ++compared;
      failing += expected ? 0 : 1;
    }
  }
  EXPECT_GT(compared, 100);
  EXPECT_GT(failing, 0);
}

TEST(RestrainedEjr, DivergenceInstance) {
  auto [e, w] = restrained_divergence();
  EXPECT_FALSE(audit_ejr(e, w).satisfied);
  EXPECT_TRUE(audit_restrained_ejr(e, w, 4).satisfied);
  oracle::Brute brute(e);
  EXPECT_FALSE(brute.ejr(oracle::to_mask(w)));
  EXPECT_TRUE(brute.restrained_ejr(oracle::to_mask(w), 4));
}

TEST(Weighted, ClaimsAreSoundAgainstBruteForce) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Election e = random_instance(SystemKind::kBudget, 4, 5, seed);
    oracle::Brute brute(e);
    for (const GroupClaim& c : strongly_cohesive_claims(e)) {
      ASSERT_TRUE(c.alpha.has_value());
      EXPECT_TRUE(brute.strongly_cohesive(c.group, *c.alpha,
                                          static_cast<int>(c.beta[0].convert_to<int>())));
    }
  }
}

TEST(Weighted, AuditsMatchBruteForce) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Election e = random_instance(SystemKind::kBudget, 4, 5, seed);
    oracle::Brute brute(e);
    auto claims = brute.strongly_cohesive_claims();
    for (Mask w : brute.maximal_sets()) {
      bool ejr = true;
      bool pjr = true;
      for (const auto& c : claims) {
        bool served = false;
        for (int i : c.group) {
          if (oracle::popcount(brute.ballot(i) & w) >= c.beta) served = true;
        }
        ejr = ejr && served;
        pjr = pjr && oracle::popcount(brute.united(c.group) & w) >= c.beta;
      }
      CandidateSet ws = oracle::to_set(w);
      EXPECT_EQ(audit_ejr_weighted(e, ws).satisfied, ejr) << seed;
      EXPECT_EQ(audit_pjr_weighted(e, ws).satisfied, pjr) << seed;
    }
  }
}

TEST(Claims, DeservingClaimsMatchBruteForce) {
  for (SystemKind family : testing_support::kMatroidFamilies) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      Election e = random_instance(family, 5, 6, seed);
      oracle::Brute brute(e);
      std::set<std::pair<std::vector<int>, int>> expected;
      for (const auto& c : brute.deserving_claims()) expected.insert({c.group, c.ell});
      std::set<std::pair<std::vector<int>, int>> got;
      for (const GroupClaim& c : deserving_claims(e)) got.insert({c.group, *c.ell});
      EXPECT_EQ(got, expected);
    }
  }
}

TEST(Claims, AverageSatisfaction) {
  Election e = committee_demo();
  CandidateSet w = e.to_set({"c1", "c2", "c3"});
  EXPECT_TRUE(check_avg_satisfaction(e, w, {0, 1, 2}, 3));
  EXPECT_TRUE(check_avg_satisfaction(e, w, {0, 1, 2}, 7));
  EXPECT_FALSE(check_avg_satisfaction(e, w, {0, 1, 2}, 8));
}

TEST(Claims, BallotClosure) {
  Election e = build_approval_election(unit_candidates({"a", "b", "c"}),
                                       {{"a", "b"}, {"b", "c"}, {"a"}},
                                       CommitteeSpec{2});
  std::vector<CandidateSet> closure = ballot_closure(e);
  std::vector<CandidateSet> expected{e.to_set({"a"}), e.to_set({"a", "b"}),
                                     e.to_set({"b"}), e.to_set({"b", "c"})};
  EXPECT_EQ(closure, expected);
}

TEST(Cohesive, AdditiveUtilitiesFjr) {
  // Two voters valuing a at 3; a second candidate only for the first voter.
  VoterSpec v1{"v1", {}, {{"a", Rational(3)}, {"b", Rational(1)}}, {}};
  VoterSpec v2{"v2", {}, {{"a", Rational(3)}}, {}};
  Election e = build_election(unit_candidates({"a", "b"}), {v1, v2},
                              UtilityMode::kAdditive, CommitteeSpec{1});
  EXPECT_TRUE(cohesive(e, {0, 1}, 1, Rational(3), CohesionMode::kFixed).holds);
  EXPECT_FALSE(cohesive(e, {0, 1}, 1, Rational(4), CohesionMode::kFixed).holds);
  EXPECT_FALSE(audit_fjr(e, e.to_set({"b"})).satisfied);
  EXPECT_TRUE(audit_fjr(e, e.to_set({"a"})).satisfied);
  oracle::Brute brute(e);
  EXPECT_FALSE(brute.fjr(oracle::to_mask(e.to_set({"b"})), false));
}

}  // namespace
}  // namespace propcon
