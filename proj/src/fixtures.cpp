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

#include "propcon/fixtures.hpp"

#include <algorithm>
#include <random>

#include "propcon/error.hpp"
#include "propcon/pav.hpp"

namespace propcon {
namespace {

std::vector<std::string> numbered(const std::string& prefix, int count) {
  std::vector<std::string> out;
  for (int j = 1; j <= count; ++j) out.push_back(prefix + std::to_string(j));
  return out;
}

std::vector<std::string> concat(std::vector<std::string> a,
                                const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<std::string> minus(const std::vector<std::string>& a,
                               const std::vector<std::string>& b) {
  std::vector<std::string> out;
  for (const auto& s : a) {
    if (std::find(b.begin(), b.end(), s) == b.end()) out.push_back(s);
  }
  return out;
}

// Resolves the witness and checks that it really breaks the exchange
// property.
FeasibilitySystem checked_system(const WitnessSystem& w, CandidateSet& x,
                                 CandidateSet& y) {
  std::vector<std::string> ids;
  std::vector<Rational> weights;
  for (const Candidate& c : w.candidates) {
    ids.push_back(c.id);
    weights.push_back(c.weight);
  }
  FeasibilitySystem system = build_system(w.spec, ids, weights);
  auto resolve = [&](const std::vector<std::string>& names) {
    CandidateSet out;
    for (const auto& name : names) {
      auto it = std::find(ids.begin(), ids.end(), name);
      if (it == ids.end()) throw Error(ErrorCode::kUnknownCandidate, name);
      out.insert(static_cast<int>(it - ids.begin()));
    }
    return out;
  };
  x = resolve(w.x);
  y = resolve(w.y);
  if (!validate_witness(system, MatroidWitness{x, y})) {
    throw Error(ErrorCode::kInvalidWitness,
                "(X, Y) is not an exchange-property witness");
  }
  return system;
}

int majority_size(int ell, int n) {
  return static_cast<int>(static_cast<long long>(ell) * n / (ell + 1)) + 1;
}

}  // namespace

WitnessSystem small_explicit_witness() {
  WitnessSystem w;
  w.candidates = unit_candidates({"x1", "y1", "y2"});
  w.spec = ExplicitSpec{{{"x1"}, {"y1", "y2"}}};
  w.x = {"x1"};
  w.y = {"y1", "y2"};
  return w;
}

WitnessSystem ranking_witness() {
  EncodedDomain d = encode_ranking({"1", "2", "3"});
  WitnessSystem w;
  w.candidates = unit_candidates(d.universe);
  w.spec = d.spec;
  w.x = {ranking_pair_id("1", "2"), ranking_pair_id("2", "3")};
  w.y = {ranking_pair_id("3", "2"), ranking_pair_id("2", "1"),
         ranking_pair_id("3", "1")};
  return w;
}

WitnessSystem negative_votes_witness() {
  EncodedDomain d = encode_negative_votes({"c1", "c2"}, 1);
  WitnessSystem w;
  w.candidates = unit_candidates(d.universe);
  w.spec = d.spec;
  w.x = {"c1"};
  w.y = {negated_id("c1"), "c2"};
  return w;
}

WitnessSystem judgment_witness() {
  EncodedDomain d = encode_judgment({"x", "y"}, {{"!x", "!y"}});
  WitnessSystem w;
  w.candidates = unit_candidates(d.universe);
  w.spec = d.spec;
  w.x = {judgment_id("x", true)};
  w.y = {judgment_id("x", false), judgment_id("y", true)};
  return w;
}

Election gen_pav_ejr_counterexample(const WitnessSystem& witness, int n) {
  CandidateSet x;
  CandidateSet y;
  checked_system(witness, x, y);
  const int ell = x.size();
  std::vector<std::string> rest = minus(witness.y, witness.x);
  if (n < 2) throw Error(ErrorCode::kNTooSmall, "need n >= 2");
  const int s1 = majority_size(ell, n);
  if (s1 >= n || rest.size() < 2) {
    throw Error(ErrorCode::kNTooSmall, "second group would be empty");
  }
  std::vector<std::vector<std::string>> ballots;
  for (int i = 0; i < n; ++i) ballots.push_back(i < s1 ? witness.x : rest);
  Election e =
      build_approval_election(witness.candidates, ballots, witness.spec);
  CandidateSet swapped = e.to_set(witness.x);
  swapped.erase(e.candidate_index(witness.x.front()));
  swapped.insert(e.candidate_index(rest[0]));
  swapped.insert(e.candidate_index(rest[1]));
  if (pav_score(e, swapped) <= pav_score(e, e.to_set(witness.x))) {
    throw Error(ErrorCode::kNTooSmall,
                "score gap " +
                    to_string(pav_score(e, swapped) -
                              pav_score(e, e.to_set(witness.x))) +
                    " is not positive");
  }
  return e;
}

Election gen_phragmen_pjr_counterexample(const WitnessSystem& witness, int n) {
  CandidateSet x;
  CandidateSet y;
  checked_system(witness, x, y);
  const int ell = y.size();
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "need n >= 1");
  const int s = std::min(n, majority_size(ell, n));
  std::vector<std::vector<std::string>> ballots;
  for (int i = 0; i < n; ++i) {
    ballots.push_back(i < s ? concat(witness.x, minus(witness.y, witness.x))
                            : witness.x);
  }
  return build_approval_election(witness.candidates, ballots, witness.spec);
}

Election gen_weighted_phragmen_failure(int g, const Rational& epsilon, int n,
                                       int s) {
  if (g < 1 || epsilon <= 0 || epsilon >= 1 || n < 1 || s < 1 || s >= n) {
    throw Error(ErrorCode::kInvalidArgument,
                "need g >= 1, 0 < epsilon < 1 and 0 < s < n");
  }
  std::vector<Candidate> candidates;
  BudgetSpec spec;
  std::vector<std::string> as;
  std::vector<std::string> others;
  for (int i = 1; i <= g; ++i) {
    std::string tag = std::to_string(i);
    candidates.push_back({"a" + tag, Rational(2) + epsilon});
    BudgetLimitSpec limit{{"a" + tag}, Rational(3)};
    for (const char* p : {"b", "c", "d"}) {
      candidates.push_back({p + tag, Rational(1)});
      limit.members.push_back(p + tag);
      others.push_back(p + tag);
    }
    as.push_back("a" + tag);
    spec.limits.push_back(limit);
  }
  std::vector<std::vector<std::string>> ballots;
  for (int i = 0; i < n; ++i) ballots.push_back(i < s ? concat(as, others) : as);
  return build_approval_election(candidates, ballots, spec);
}

SpFixture gen_sp_not_fjr(int n, SpFixtureVariant variant) {
  if (n <= 0 || n % 30 != 0) {
    throw Error(ErrorCode::kBadN, "n must be a positive multiple of 30");
  }
  const std::vector<std::string> a = numbered("a", 5);
  const std::vector<std::string> p = numbered("p", 36);
  const std::vector<std::string> b = numbered("b", 5);
  const std::vector<std::string> e = numbered("e", 5);
  const std::vector<std::string> q = numbered("q", 40);
  const std::vector<std::string> c1 = concat(a, p);
  const std::vector<std::string> c2 = concat(concat(b, e), q);
  DisjointAttributesSpec spec;
  spec.k = 80;
  spec.groups = {{c1, 0, 40}, {c2, 0, 40}};

  const int v1 = 3 * n / 5;
  const int v2 = n / 3;
  const int half = n / 30;
  std::vector<VoterSpec> voters;
  bool literal = variant == SpFixtureVariant::kLiteral;
  for (int i = 1; i <= v1; ++i) {
    voters.push_back({"v1_" + std::to_string(i), literal ? c1 : p, {}, {}});
  }
  for (int i = 1; i <= v2; ++i) {
    voters.push_back({"v2_" + std::to_string(i), literal ? c2 : q, {}, {}});
  }
  for (int i = 1; i <= half; ++i) {
    voters.push_back({"sb_" + std::to_string(i), concat(a, b), {}, {}});
  }
  for (int i = 1; i <= half; ++i) {
    voters.push_back({"se_" + std::to_string(i), concat(a, e), {}, {}});
  }
  SpFixture out{build_election(unit_candidates(concat(c1, c2)), voters,
                               UtilityMode::kApproval, spec),
                CandidateSet{}, PriceSystem{}};
  const Election& el = out.election;
  out.outcome = el.to_set(concat(concat({a[0], a[1], a[2], a[3]}, p), q));

  const Rational pi1(n, 60);
  const Rational pi2(n, 120);
  const int m = el.num_candidates();
  out.prices.prices.resize(m);
  for (int c = 0; c < m; ++c) {
    out.prices.prices[c] = c < static_cast<int>(c1.size()) ? pi1 : pi2;
  }
  out.prices.payments.assign(n, std::vector<Rational>(m, Rational(0)));
  // S splits its budget over a1..a4; V1 and V2 spread theirs evenly.
  for (int i = 0; i < n; ++i) {
    if (i < v1) {
      for (const auto& id : p) out.prices.payments[i][el.candidate_index(id)] = Rational(1, 36);
    } else if (i < v1 + v2) {
      for (const auto& id : q) out.prices.payments[i][el.candidate_index(id)] = Rational(1, 40);
    } else {
      for (int j = 0; j < 4; ++j) {
        out.prices.payments[i][el.candidate_index(a[j])] = Rational(1, 4);
      }
    }
  }
  return out;
}

Election committee_demo() {
  std::vector<std::vector<std::string>> ballots;
  for (int i = 0; i < 10; ++i) {
    if (i < 3) {
      ballots.push_back({"c1", "c2", "c3"});
    } else {
      ballots.push_back({"c" + std::to_string(i + 1), "c" + std::to_string(i + 8)});
    }
  }
  return build_approval_election(unit_candidates(numbered("c", 20)), ballots,
                                 CommitteeSpec{10});
}

Election quota_demo(bool with_c1) {
  const std::vector<std::string> c1 = numbered("x", 100);
  const std::vector<std::string> c2 = numbered("y", 100);
  DisjointAttributesSpec spec;
  spec.k = 30;
  spec.groups = {{c1, 10, 10}, {c2, 20, 20}};
  std::vector<std::string> joint(c2.begin(), c2.begin() + 11);
  if (with_c1) joint = concat(joint, {c1[0], c1[1], c1[2], c1[3]});
  std::vector<std::vector<std::string>> ballots;
  for (int i = 0; i < 100; ++i) {
    if (i < 41) {
      ballots.push_back(joint);
    } else {
      ballots.push_back({c1[10 + i % 50], c2[20 + i % 50]});
    }
  }
  return build_approval_election(unit_candidates(concat(c1, c2)), ballots, spec);
}

std::pair<Election, CandidateSet> restrained_divergence() {
  const std::vector<std::string> men = numbered("m", 4);
  const std::vector<std::string> women = numbered("f", 4);
  DisjointAttributesSpec spec;
  spec.k = 4;
  spec.groups = {{men, 2, 2}, {women, 2, 2}};
  Election e = build_approval_election(
      unit_candidates(concat(men, women)),
      {{"m1", "m2"}, {"m1", "m2"}, {"f1", "f2"}, {"f1", "f2"}}, spec);
  CandidateSet w = e.to_set({"m3", "m4", "f1", "f2"});
  return {std::move(e), w};
}

Election gen_random(const RandomParams& params, std::uint64_t seed) {
  const int n = params.n;
  const int m = params.m;
  if (n < 1 || m < 1 || m > 64) {
    throw Error(ErrorCode::kInvalidArgument, "need n >= 1 and 1 <= m <= 64");
  }
  if (params.density < 0 || params.density > 1) {
    throw Error(ErrorCode::kInvalidArgument, "density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t bound) { return rng() % bound; };
  const std::uint64_t num =
      static_cast<std::uint64_t>(numerator_of(params.density));
  const std::uint64_t den =
      static_cast<std::uint64_t>(denominator_of(params.density));

  const std::vector<std::string> ids = numbered("c", m);
  std::vector<Candidate> candidates = unit_candidates(ids);
  bool weighted = params.weighted || params.family == SystemKind::kBudget;
  if (weighted) {
    for (Candidate& c : candidates) c.weight = Rational(1 + static_cast<int>(below(3)));
  }

  ConstraintSpec spec;
  switch (params.family) {
    case SystemKind::kCommittee: {
      int k = params.k > 0 ? params.k : 1 + static_cast<int>(below(m));
      spec = CommitteeSpec{k};
      break;
    }
    case SystemKind::kPublicDecisions: {
      if (m % 2 != 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "public decisions need an even number of candidates");
      }
      PublicDecisionsSpec pd;
      for (int j = 0; j < m; j += 2) pd.issues.emplace_back(ids[j], ids[j + 1]);
      spec = pd;
      break;
    }
    case SystemKind::kDisjointAttributes: {
      int groups = m >= 2 ? 2 : 1;
      int first = groups == 2 ? 1 + static_cast<int>(below(m - 1)) : m;
      std::vector<std::vector<std::string>> parts{
          std::vector<std::string>(ids.begin(), ids.begin() + first)};
      if (groups == 2) parts.emplace_back(ids.begin() + first, ids.end());
      DisjointAttributesSpec da;
      int lower_sum = 0;
      int upper_sum = 0;
      for (const auto& part : parts) {
        int size = static_cast<int>(part.size());
        int upper = 1 + static_cast<int>(below(size));
        int lower = static_cast<int>(below(upper + 1));
        da.groups.push_back({part, lower, upper});
        lower_sum += lower;
        upper_sum += upper;
      }
      if (params.k > 0) {
        if (params.k > m) {
          throw Error(ErrorCode::kInvalidArgument, "k exceeds the candidates");
        }
        if (params.k > upper_sum) {
          for (auto& g : da.groups) g.upper = static_cast<int>(g.members.size());
        }
        if (params.k < lower_sum) {
          for (auto& g : da.groups) g.lower = 0;
        }
        da.k = params.k;
      } else {
        int low = std::max(1, lower_sum);
        da.k = low + static_cast<int>(below(upper_sum - low + 1));
      }
      spec = da;
      break;
    }
    case SystemKind::kBudget: {
      Rational total = 0;
      Rational heaviest = 0;
      for (const Candidate& c : candidates) {
        total += c.weight;
        heaviest = std::max(heaviest, c.weight);
      }
      int span = static_cast<int>(total - heaviest) + 1;
      spec = BudgetSpec{{{{}, heaviest + static_cast<int>(below(span))}}};
      break;
    }
    case SystemKind::kExplicit: {
      ExplicitSpec ex;
      int sets = 1 + static_cast<int>(below(3));
      for (int s = 0; s < sets; ++s) {
        std::vector<std::string> members;
        for (int c = 0; c < m; ++c) {
          if (below(2) == 1) members.push_back(ids[c]);
        }
        if (members.empty()) members.push_back(ids[below(m)]);
        ex.feasible.push_back(members);
      }
      spec = ex;
      break;
    }
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  "random generation supports committee, public-decisions, "
                  "disjoint-attributes, budget and explicit");
  }

  std::vector<std::vector<std::string>> ballots(n);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < m; ++c) {
      if (below(den) < num) ballots[i].push_back(ids[c]);
    }
  }
  return build_approval_election(std::move(candidates), ballots, spec);
}

std::vector<std::string> fixture_ids() {
  return {"pav-ejr-cex",          "pav-ejr-ranking",
          "pav-ejr-negative",     "pav-ejr-judgment",
          "phragmen-pjr-cex",     "phragmen-pjr-ranking",
          "phragmen-pjr-negative", "phragmen-pjr-judgment",
          "weighted-phragmen-failure", "sp-not-fjr",
          "committee-demo",       "quota-demo",
          "quota-demo-extended",  "restrained-divergence",
          "random"};
}

FixtureOutput make_fixture(const std::string& id, const FixtureParams& params) {
  FixtureOutput out{id, Election{}, std::nullopt, std::nullopt, {}};
  auto echo = [&](const std::string& key, const std::string& value) {
    out.provenance.emplace_back(key, value);
  };
  auto witness_for = [](const std::string& suffix) {
    if (suffix == "cex") return small_explicit_witness();
    if (suffix == "ranking") return ranking_witness();
    if (suffix == "negative") return negative_votes_witness();
    return judgment_witness();
  };
  const std::string pav_prefix = "pav-ejr-";
  const std::string phr_prefix = "phragmen-pjr-";
  auto ids = fixture_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    throw Error(ErrorCode::kUnknownFixture, id);
  }
  if (id.rfind(pav_prefix, 0) == 0) {
    int n = params.n.value_or(id == "pav-ejr-cex" ? 12 : 30);
    echo("n", std::to_string(n));
    out.election = gen_pav_ejr_counterexample(
        witness_for(id.substr(pav_prefix.size())), n);
  } else if (id.rfind(phr_prefix, 0) == 0) {
    int n = params.n.value_or(9);
    echo("n", std::to_string(n));
    out.election = gen_phragmen_pjr_counterexample(
        witness_for(id.substr(phr_prefix.size())), n);
  } else if (id == "weighted-phragmen-failure") {
    int g = params.g.value_or(4);
    Rational eps = params.epsilon.value_or(Rational(1, 100));
    int n = params.n.value_or(250);
    int s = params.s.value_or(124);
    echo("g", std::to_string(g));
    echo("epsilon", to_string(eps));
    echo("n", std::to_string(n));
    echo("s", std::to_string(s));
    out.election = gen_weighted_phragmen_failure(g, eps, n, s);
  } else if (id == "sp-not-fjr") {
    int n = params.n.value_or(30);
    std::string variant = params.variant.value_or("repaired");
    if (variant != "repaired" && variant != "literal") {
      throw Error(ErrorCode::kInvalidArgument, "variant: repaired or literal");
    }
    echo("n", std::to_string(n));
    echo("variant", variant);
    SpFixture f = gen_sp_not_fjr(n, variant == "literal"
                                        ? SpFixtureVariant::kLiteral
                                        : SpFixtureVariant::kRepaired);
    out.election = std::move(f.election);
    out.outcome = f.outcome;
    out.prices = std::move(f.prices);
  } else if (id == "committee-demo") {
    out.election = committee_demo();
  } else if (id == "quota-demo" || id == "quota-demo-extended") {
    out.election = quota_demo(id == "quota-demo-extended");
  } else if (id == "restrained-divergence") {
    auto [e, w] = restrained_divergence();
    out.election = std::move(e);
    out.outcome = w;
  } else {
    std::uint64_t seed = params.seed.value_or(1);
    const RandomParams& rp = params.random;
    echo("seed", std::to_string(seed));
    echo("n", std::to_string(rp.n));
    echo("m", std::to_string(rp.m));
    echo("family", std::string(system_kind_name(rp.family)));
    echo("k", std::to_string(rp.k));
    echo("density", to_string(rp.density));
    echo("weighted", rp.weighted ? "true" : "false");
    out.election = gen_random(rp, seed);
  }
  return out;
}

}  // namespace propcon
