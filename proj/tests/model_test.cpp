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

#include <algorithm>
#include <set>

#include "instances.hpp"
#include "oracle.hpp"
#include "propcon/constraints.hpp"
#include "propcon/error.hpp"
#include "propcon/fixtures.hpp"
#include "propcon/model.hpp"
#include "propcon/rational.hpp"

namespace propcon {
namespace {

using oracle::Mask;

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kSearchExhausted;
}

TEST(Rational, PrintsLowestTerms) {
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(-2, 1)), "-2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, ParsesAndRejects) {
  EXPECT_EQ(parse_rational("10/4"), Rational(5, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  for (const char* bad : {"", "1/0", "a", "1.5", "1/", "/2", "1//2"}) {
    EXPECT_EQ(code_of([&] { parse_rational(bad); }), ErrorCode::kParse) << bad;
  }
}

TEST(Rational, Harmonic) {
  EXPECT_EQ(harmonic(0), Rational(0));
  EXPECT_EQ(harmonic(3), Rational(11, 6));
}

TEST(CandidateSet, LexicographicOrder) {
  CandidateSet a{0};
  CandidateSet ab{0, 1};
  CandidateSet b{1};
  CandidateSet empty;
  EXPECT_LT(empty, a);
  EXPECT_LT(a, ab);
  EXPECT_LT(ab, b);
  EXPECT_LT(CandidateSet({0, 2}), CandidateSet({1}));
  EXPECT_LT(CandidateSet({0, 70}), CandidateSet({0, 71}));
}

TEST(CandidateSet, SetAlgebra) {
  CandidateSet s{1, 3, 100};
  EXPECT_EQ(s.size(), 3);
  EXPECT_EQ(s.max_element(), 100);
  EXPECT_TRUE(CandidateSet({3}).is_subset_of(s));
  EXPECT_EQ((s - CandidateSet{3}).indices(), (std::vector<int>{1, 100}));
  EXPECT_EQ((s & CandidateSet{100, 5}).indices(), (std::vector<int>{100}));
  EXPECT_EQ(s.intersection_size(CandidateSet{1, 2, 3}), 2);
}

TEST(Election, RejectsBadInput) {
  EXPECT_EQ(code_of([] {
              build_approval_election(unit_candidates({"a", "a"}), {{"a"}},
                                      CommitteeSpec{1});
            }),
            ErrorCode::kDuplicateId);
  EXPECT_EQ(code_of([] {
              build_approval_election(unit_candidates({"a"}), {{"b"}},
                                      CommitteeSpec{1});
            }),
            ErrorCode::kUnknownCandidate);
  EXPECT_EQ(code_of([] {
              build_approval_election(unit_candidates({"a", "b"}), {{"a"}},
                                      DisjointAttributesSpec{2, {{{"a"}, 0, 1},
                                                                 {{"a", "b"}, 0, 1}}});
            }),
            ErrorCode::kOverlappingGroups);
  EXPECT_EQ(code_of([] {
              build_approval_election(unit_candidates({"a", "b"}), {{"a"}},
                                      DisjointAttributesSpec{2, {{{"a"}, 2, 2}}});
            }),
            ErrorCode::kUnsatisfiableQuotas);
}

TEST(Election, RejectsNonMonotoneTable) {
  VoterSpec v;
  v.id = "v";
  v.table = {{{"a"}, Rational(2)}, {{"a", "b"}, Rational(1)}};
  EXPECT_EQ(code_of([&] {
              build_election(unit_candidates({"a", "b"}), {v}, UtilityMode::kTable,
                             CommitteeSpec{2});
            }),
            ErrorCode::kNonMonotone);
}

TEST(Election, VoterTypes) {
  Election e = build_approval_election(unit_candidates({"a", "b"}),
                                       {{"a"}, {"b"}, {"a"}}, CommitteeSpec{1});
  EXPECT_EQ(e.num_types(), 2);
  EXPECT_EQ(e.type_of(0), e.type_of(2));
  EXPECT_EQ(e.supporters(0), (std::vector<int>{0, 2}));
  EXPECT_EQ(e.voter_id(2), "v3");
}

TEST(Election, AdditiveUtilities) {
  VoterSpec v;
  v.id = "v";
  v.values = {{"a", Rational(1, 2)}, {"b", Rational(3)}};
  Election e = build_election(unit_candidates({"a", "b", "c"}), {v},
                              UtilityMode::kAdditive, CommitteeSpec{2});
  EXPECT_EQ(e.utility(0, CandidateSet{0, 1}), Rational(7, 2));
  EXPECT_EQ(e.ballot(0), (CandidateSet{0, 1}));
}

// The feasibility oracles agree with the parameter-level definitions
// rebuilt in the test oracle.
TEST(Feasibility, MatchesBruteForceAcrossFamilies) {
  for (SystemKind family : testing_support::kAllRandomFamilies) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      Election e = testing_support::random_instance(family, 3, 8, seed);
      oracle::Brute brute(e);
      for (Mask x = 0;; ++x) {
        ASSERT_EQ(e.feasibility().is_feasible(oracle::to_set(x)), brute.feasible(x))
            << system_kind_name(family) << " seed " << seed << " set " << x;
        if (x == brute.full()) break;
      }
    }
  }
}

TEST(Feasibility, DownwardClosed) {
  for (SystemKind family : testing_support::kAllRandomFamilies) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Election e = testing_support::random_instance(family, 2, 7, seed);
      for (const CandidateSet& w : enumerate_feasible(e.feasibility())) {
        w.for_each([&](int c) {
          CandidateSet smaller = w;
          smaller.erase(c);
          EXPECT_TRUE(e.feasibility().is_feasible(smaller));
        });
      }
    }
  }
}

TEST(Feasibility, EnumerationMatchesOracleInLexOrder) {
  Election e = testing_support::random_instance(SystemKind::kBudget, 2, 7, 5);
  oracle::Brute brute(e);
  std::vector<CandidateSet> expected;
  for (Mask x : brute.feasible_sets()) expected.push_back(oracle::to_set(x));
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(enumerate_feasible(e.feasibility()), expected);

  std::vector<CandidateSet> maximal;
  for (Mask x : brute.maximal_sets()) maximal.push_back(oracle::to_set(x));
  std::sort(maximal.begin(), maximal.end());
  EXPECT_EQ(enumerate_maximal(e.feasibility()), maximal);
}

TEST(Feasibility, CapIsEnforced) {
  Election e = build_approval_election(
      unit_candidates({"a", "b", "c", "d", "e"}), {{"a"}}, CommitteeSpec{5});
  EXPECT_EQ(code_of([&] { enumerate_feasible(e.feasibility(), 31); }),
            ErrorCode::kEnumerationCapExceeded);
  EXPECT_EQ(enumerate_feasible(e.feasibility(), 32).size(), 32u);
}

TEST(Feasibility, CanExtendRejectsInfeasibleBase) {
  Election e = build_approval_election(unit_candidates({"a", "b"}), {{"a"}},
                                       CommitteeSpec{1});
  EXPECT_EQ(code_of([&] { e.feasibility().can_extend(CandidateSet{0, 1}, 0); }),
            ErrorCode::kInfeasibleOutcome);
}

// Swapping two members of a symmetry class maps feasible sets to feasible
// sets.
TEST(Feasibility, SymmetryClassesArePreserved) {
  for (SystemKind family : testing_support::kAllRandomFamilies) {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      Election e = testing_support::random_instance(family, 2, 7, seed);
      oracle::Brute brute(e);
      for (const auto& cls : e.feasibility().symmetry_classes()) {
        for (std::size_t a = 0; a + 1 < cls.size(); ++a) {
          int x = cls[a];
          int y = cls[a + 1];
          for (Mask s : brute.feasible_sets()) {
            Mask swapped = s & ~((Mask{1} << x) | (Mask{1} << y));
            if (s >> x & 1) swapped |= Mask{1} << y;
            if (s >> y & 1) swapped |= Mask{1} << x;
            ASSERT_TRUE(brute.feasible(swapped)) << system_kind_name(family);
          }
        }
      }
    }
  }
}

TEST(Encodings, RankingUniverseAndAcyclicity) {
  EncodedDomain d = encode_ranking({"1", "2", "3"});
  EXPECT_EQ(d.universe.size(), 6u);
  Election e = build_approval_election(unit_candidates(d.universe), {{}}, d.spec);
  EXPECT_TRUE(e.feasibility().is_feasible(e.to_set({"1>2", "2>3", "1>3"})));
  EXPECT_FALSE(e.feasibility().is_feasible(e.to_set({"1>2", "2>3", "3>1"})));
  EXPECT_FALSE(e.feasibility().is_feasible(e.to_set({"1>2", "2>1"})));
}

TEST(Encodings, NegativeVotes) {
  EncodedDomain d = encode_negative_votes({"c1", "c2"}, 1);
  Election e = build_approval_election(unit_candidates(d.universe), {{}}, d.spec);
  EXPECT_TRUE(e.feasibility().is_feasible(e.to_set({"c1", "!c2"})));
  EXPECT_FALSE(e.feasibility().is_feasible(e.to_set({"c1", "c2"})));
  EXPECT_FALSE(e.feasibility().is_feasible(e.to_set({"c1", "!c1"})));
  EXPECT_FALSE(e.feasibility().is_feasible(e.to_set({"!c1", "!c2"})));
}

TEST(Encodings, JudgmentClauses) {
  EncodedDomain d = encode_judgment({"x", "y"}, {{"!x", "!y"}});
  Election e = build_approval_election(unit_candidates(d.universe), {{}}, d.spec);
  EXPECT_TRUE(e.feasibility().is_feasible(e.to_set({"x=T", "y=F"})));
  EXPECT_FALSE(e.feasibility().is_feasible(e.to_set({"x=T", "y=T"})));
  EXPECT_FALSE(e.feasibility().is_feasible(e.to_set({"x=T", "x=F"})));
  EXPECT_EQ(code_of([] { encode_judgment({"x"}, {{"x"}, {"!x"}}); }),
            ErrorCode::kUnsatisfiableClauses);
}

// Brute-force exchange property straight from the definition.
bool brute_exchange(const oracle::Brute& b) {
  for (Mask x : b.feasible_sets()) {
    for (Mask y : b.feasible_sets()) {
      if (oracle::popcount(y) <= oracle::popcount(x)) continue;
      bool found = false;
      for (int c = 0; c < b.m(); ++c) {
        Mask bit = Mask{1} << c;
        if ((y & bit) && !(x & bit) && b.feasible(x | bit)) found = true;
      }
      if (!found) return false;
    }
  }
  return true;
}

TEST(Exchange, AgreesWithDefinition) {
  for (SystemKind family : testing_support::kAllRandomFamilies) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      Election e = testing_support::random_instance(family, 2, 6, seed);
      oracle::Brute brute(e);
      auto witness = check_exchange_property(e.feasibility());
      EXPECT_EQ(!witness.has_value(), brute_exchange(brute))
          << system_kind_name(family) << " seed " << seed;
      if (witness) {
        EXPECT_TRUE(validate_witness(e.feasibility(), *witness));
      }
    }
  }
}

TEST(Exchange, MatroidFamiliesHaveNoWitness) {
  for (SystemKind family : testing_support::kMatroidFamilies) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Election e = testing_support::random_instance(family, 2, 8, seed);
      EXPECT_FALSE(check_exchange_property(e.feasibility()).has_value());
    }
  }
}

TEST(Exchange, WitnessSystemsAreReproduced) {
  for (const WitnessSystem& w : {small_explicit_witness(), ranking_witness(),
                                 negative_votes_witness(), judgment_witness()}) {
    Election e = build_approval_election(w.candidates, {{}}, w.spec);
    MatroidWitness given{e.to_set(w.x), e.to_set(w.y)};
    EXPECT_TRUE(validate_witness(e.feasibility(), given));
    auto found = check_exchange_property(e.feasibility());
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(found->x.size(), given.x.size());
  }
  WitnessSystem w = small_explicit_witness();
  Election e = build_approval_election(w.candidates, {{}}, w.spec);
  auto found = check_exchange_property(e.feasibility());
  EXPECT_EQ(e.ids_of(found->x), w.x);
  EXPECT_EQ(e.ids_of(found->y), w.y);
}

TEST(Exchange, RejectsBogusWitness) {
  Election e = build_approval_election(unit_candidates({"a", "b", "c"}), {{}},
                                       CommitteeSpec{2});
  EXPECT_FALSE(validate_witness(e.feasibility(), {CandidateSet{0}, CandidateSet{1, 2}}));
  EXPECT_FALSE(validate_witness(e.feasibility(), {CandidateSet{0, 1}, CandidateSet{2}}));
}

TEST(OneSwap, FindsReplacementInMatroid) {
  Election e = build_approval_election(
      unit_candidates({"a", "b", "c", "d"}), {{}},
      PublicDecisionsSpec{{{"a", "b"}, {"c", "d"}}});
  // W = {a, c}, W' = {a, c}, c = b: only a can go.
  EXPECT_EQ(one_swap(e.feasibility(), CandidateSet{0, 2}, CandidateSet{0, 2}, 1), 0);
  EXPECT_EQ(code_of([&] {
              one_swap(e.feasibility(), CandidateSet{0, 2}, CandidateSet{2}, 1);
            }),
            ErrorCode::kInvalidArgument);
}

TEST(OneSwap, NonMatroidFailure) {
  WitnessSystem w = small_explicit_witness();
  Election e = build_approval_election(w.candidates, {{}}, w.spec);
  // W = {y1, y2}, W' = {y1}: (W \ {y1}) + x1 = {y2, x1} is infeasible.
  CandidateSet y = e.to_set(w.y);
  CandidateSet y1 = e.to_set({w.y[0]});
  int x1 = e.candidate_index(w.x[0]);
  EXPECT_ANY_THROW(one_swap(e.feasibility(), y, y1, x1));
}

}  // namespace
}  // namespace propcon
