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

#ifndef PROPCON_FIXTURES_HPP_
#define PROPCON_FIXTURES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "propcon/candidate_set.hpp"
#include "propcon/constraints.hpp"
#include "propcon/model.hpp"
#include "propcon/priceability.hpp"
#include "propcon/rational.hpp"

namespace propcon {

// A non-matroid system together with an exchange-property witness.
struct WitnessSystem {
  std::vector<Candidate> candidates;
  ConstraintSpec spec;
  std::vector<std::string> x;
  std::vector<std::string> y;
};

// {∅, {x1}, {y1}, {y2}, {y1, y2}} with X = {x1}, Y = {y1, y2}.
WitnessSystem small_explicit_witness();
// Rankings of three items: X = {1>2, 2>3}, Y = {3>2, 2>1, 3>1}.
WitnessSystem ranking_witness();
// Negative votes, k = 1 over items c1, c2: X = {c1}, Y = {!c1, c2}.
WitnessSystem negative_votes_witness();
// Judgment over x, y with x => !y: X = {x=T}, Y = {x=F, y=T}.
WitnessSystem judgment_witness();

// ell = |X|. floor(ell n / (ell + 1)) + 1 voters approve X and the rest
// approve Y \ X. Throws kNTooSmall unless swapping the first member of X for
// the first two members of Y \ X raises the PAV score.
Election gen_pav_ejr_counterexample(const WitnessSystem& witness, int n);

// ell = |Y|. Everyone approves X; floor(ell n / (ell + 1)) + 1 voters also
// approve Y.
Election gen_phragmen_pjr_counterexample(const WitnessSystem& witness, int n);

// g groups {a_i (2 + eps), b_i, c_i, d_i (1)} with a cost cap of 3 per group.
// `s` of the n voters approve every b, c, d; everyone approves every a.
Election gen_weighted_phragmen_failure(int g, const Rational& epsilon, int n,
                                       int s);

enum class SpFixtureVariant {
  // V1 approves C1 \ A and V2 approves C2 \ (B ∪ E).
  kRepaired,
  // V1 approves all of C1 and V2 all of C2; the reference prices then fail
  // SP3 at a5.
  kLiteral,
};

struct SpFixture {
  Election election;
  CandidateSet outcome;
  PriceSystem prices;
};

// n must be a positive multiple of 30 (kBadN otherwise).
SpFixture gen_sp_not_fjr(int n, SpFixtureVariant variant = SpFixtureVariant::kRepaired);

// Committee k = 10 over c1..c20 with ten voters; v1..v3 approve {c1, c2, c3}.
Election committee_demo();
// Quotas 10 of C1 and 20 of C2 (100 candidates each), 100 voters; 41 of them
// approve 11 candidates of C2, plus 4 of C1 when `with_c1` is set.
Election quota_demo(bool with_c1);
// Gender quota instance where EJR and restrained EJR disagree; the reference
// outcome is {m3, m4, f1, f2}.
std::pair<Election, CandidateSet> restrained_divergence();

struct RandomParams {
  int n = 4;
  int m = 4;
  SystemKind family = SystemKind::kCommittee;
  // Committee size / quota total; 0 picks one at random.
  int k = 0;
  Rational density{1, 2};
  // Random integer weights in 1..3 instead of unit weights.
  bool weighted = false;
};

// Families: committee, public-decisions, disjoint-attributes, budget,
// explicit. Deterministic in the seed; only raw mt19937_64 outputs are used.
Election gen_random(const RandomParams& params, std::uint64_t seed);

struct FixtureParams {
  std::optional<int> n;
  std::optional<int> g;
  std::optional<int> s;
  std::optional<Rational> epsilon;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> variant;
  RandomParams random;
};

struct FixtureOutput {
  std::string id;
  Election election;
  std::optional<CandidateSet> outcome;
  std::optional<PriceSystem> prices;
  // Echo of the resolved parameters.
  std::vector<std::pair<std::string, std::string>> provenance;
};

std::vector<std::string> fixture_ids();
// Throws kUnknownFixture for an unknown id.
FixtureOutput make_fixture(const std::string& id, const FixtureParams& params);

}  // namespace propcon

#endif  // PROPCON_FIXTURES_HPP_
