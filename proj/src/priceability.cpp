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

#include "propcon/priceability.hpp"

#include <algorithm>
#include <map>

#include "propcon/error.hpp"
#include "propcon/lp.hpp"

namespace propcon {

Rational remaining_budget(const PriceSystem& ps, int voter) {
  Rational left = 1;
  for (const Rational& p : ps.payments[voter]) left -= p;
  return left;
}

namespace {

ConditionResult fail(std::string detail, std::optional<int> candidate = {},
                     std::optional<int> voter = {}) {
  ConditionResult r;
  r.holds = false;
  r.candidate = candidate;
  r.voter = voter;
  r.detail = std::move(detail);
  return r;
}

void require_approval(const Election& e) {
  if (e.utility_mode() != UtilityMode::kApproval) {
    throw Error(ErrorCode::kInvalidArgument,
                "price systems are defined for approval ballots");
  }
}

}  // namespace

Rational max_feasible_price(const FeasibilitySystem& system,
                            const std::vector<Rational>& prices,
                            std::uint64_t cap) {
  const int m = system.universe_size();
  std::map<Rational, int> price_key;
  std::vector<int> key(m);
  for (int c = 0; c < m; ++c) {
    key[c] = price_key.emplace(prices[c], price_key.size()).first->second;
  }
  auto classes = refine_partition_by_key(system.symmetry_classes(), key);
  Rational best = 0;
  if (static_cast<int>(classes.size()) < m) {
    CountSpace space(system, classes);
    std::vector<Rational> class_price(space.num_classes());
    for (int k = 0; k < space.num_classes(); ++k) {
      class_price[k] = prices[space.members(k).front()];
    }
    space.for_each_feasible(
        [&](const std::vector<int>& t) {
          Rational total = 0;
          for (int k = 0; k < space.num_classes(); ++k) {
            if (t[k] != 0) total += class_price[k] * t[k];
          }
          best = std::max(best, total);
          return true;
        },
        cap);
    return best;
  }
  for_each_feasible(
      system,
      [&](const CandidateSet& w) {
        Rational total = 0;
        w.for_each([&](int c) { total += prices[c]; });
        best = std::max(best, total);
        return true;
      },
      cap);
  return best;
}

SpReport verify_sp(const Election& election, const CandidateSet& w,
                   const PriceSystem& ps, SpMode mode, std::uint64_t cap) {
  require_approval(election);
  const int n = election.num_voters();
  const int m = election.num_candidates();
  if (!election.feasibility().is_feasible(w)) {
    throw Error(ErrorCode::kInfeasibleOutcome, "W is not feasible");
  }
  SpReport report;
  if (static_cast<int>(ps.prices.size()) != m ||
      static_cast<int>(ps.payments.size()) != n) {
    report.well_formed = fail("dimensions do not match the election");
    report.sp1 = report.sp2 = report.sp3 = report.sp4 =
        fail("not evaluated");
    return report;
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(ps.payments[i].size()) != m) {
      report.well_formed = fail("payment row has wrong length", {}, i);
      report.sp1 = report.sp2 = report.sp3 = report.sp4 =
          fail("not evaluated");
      return report;
    }
  }
  for (int c = 0; c < m && report.well_formed.holds; ++c) {
    if (ps.prices[c] <= 0) report.well_formed = fail("price not positive", c);
  }
  for (int i = 0; i < n && report.well_formed.holds; ++i) {
    for (int c = 0; c < m; ++c) {
      if (ps.payments[i][c] < 0) {
        report.well_formed = fail("negative payment", c, i);
        break;
      }
    }
    if (report.well_formed.holds && remaining_budget(ps, i) < 0) {
      report.well_formed = fail("budget exceeded", {}, i);
    }
  }

  for (int i = 0; i < n && report.sp1.holds; ++i) {
    for (int c = 0; c < m; ++c) {
      if (!w.contains(c) && ps.payments[i][c] != 0) {
        report.sp1 = fail("payment for an unselected candidate", c, i);
        break;
      }
    }
  }

  for (int c : w.indices()) {
    Rational total = 0;
    for (int i = 0; i < n; ++i) total += ps.payments[i][c];
    if (total != ps.prices[c]) {
      report.sp2 = fail("payments " + to_string(total) + " vs price " +
                            to_string(ps.prices[c]),
                        c);
      break;
    }
  }

  std::vector<Rational> top(n);
  for (int i = 0; i < n; ++i) {
    top[i] = remaining_budget(ps, i);
    w.for_each([&](int c) { top[i] = std::max(top[i], ps.payments[i][c]); });
  }
  for (int c = 0; c < m; ++c) {
    if (w.contains(c)) continue;
    Rational total = 0;
    for (int i : election.supporters(c)) total += top[i];
    if (total > ps.prices[c]) {
      report.sp3 = fail("supporters could raise " + to_string(total) +
                            " vs price " + to_string(ps.prices[c]),
                        c);
      break;
    }
  }

  if (mode == SpMode::kExhaustive) {
    for (int c = 0; c < m; ++c) {
      if (!w.contains(c) && election.feasibility().can_extend(w, c)) {
        report.sp4 = fail("W is not exhaustive", c);
        break;
      }
    }
  } else if (report.well_formed.holds) {
    Rational own = 0;
    w.for_each([&](int c) { own += ps.prices[c]; });
    Rational best = max_feasible_price(election.feasibility(), ps.prices, cap);
    if (best > own) {
      report.sp4 = fail("a feasible set has total price " + to_string(best) +
                        " > " + to_string(own));
    }
  } else {
    report.sp4 = fail("not evaluated");
  }
  return report;
}

std::optional<PriceSystem> find_payments(const Election& election,
                                         const CandidateSet& w,
                                         const PaymentRequest& request) {
  require_approval(election);
  const int n = election.num_voters();
  const int m = election.num_candidates();
  if (!election.feasibility().is_feasible(w)) {
    throw Error(ErrorCode::kInfeasibleOutcome, "W is not feasible");
  }
  if (request.mode == PriceMode::kGiven) {
    if (static_cast<int>(request.prices.size()) != m) {
      throw Error(ErrorCode::kInvalidArgument, "one price per candidate needed");
    }
    for (const Rational& p : request.prices) {
      if (p <= 0) throw Error(ErrorCode::kInvalidArgument, "prices must be positive");
    }
  }

  // Voters of one type share a payment vector: averaging any solution over
  // the members of a type keeps SP1-SP3, since SP3 is convex in payments.
  LinearProgram lp;
  const int types = election.num_types();
  std::vector<std::map<int, int>> pay(types);
  std::vector<int> slack_var(types, -1);
  for (int t = 0; t < types; ++t) {
    const CandidateSet& ballot = election.ballot(election.type_members(t).front());
    (ballot & w).for_each([&](int c) { pay[t][c] = lp.add_variable(); });
    if (!(ballot - w).empty()) slack_var[t] = lp.add_variable();
  }

  // price(c) as a linear expression: constant + terms.
  std::vector<int> price_var(m, -1);
  int scale_var = -1;
  int floor_var = -1;
  switch (request.mode) {
    case PriceMode::kGiven:
      break;
    case PriceMode::kUniform:
    case PriceMode::kProportional:
      scale_var = lp.add_variable();
      break;
    case PriceMode::kFree:
      for (int c = 0; c < m; ++c) price_var[c] = lp.add_variable();
      break;
  }
  if (request.mode != PriceMode::kGiven) floor_var = lp.add_variable();

  auto price_terms = [&](int c, const Rational& coef, std::vector<Term>& terms,
                         Rational& constant) {
    switch (request.mode) {
      case PriceMode::kGiven:
        constant += coef * request.prices[c];
        break;
      case PriceMode::kUniform:
        terms.push_back({scale_var, coef});
        break;
      case PriceMode::kProportional:
        terms.push_back({scale_var, coef * election.weight(c)});
        break;
      case PriceMode::kFree:
        terms.push_back({price_var[c], coef});
        break;
    }
  };

  for (int t = 0; t < types; ++t) {
    std::vector<Term> budget;
    for (auto [c, v] : pay[t]) budget.push_back({v, Rational(1)});
    if (!budget.empty()) {
      lp.add_constraint(budget, Relation::kLessEqual, Rational(1));
    }
    if (slack_var[t] >= 0) {
      // m_t >= r_t and m_t >= p_t(c) for every selected c.
      std::vector<Term> rest = budget;
      rest.push_back({slack_var[t], Rational(1)});
      lp.add_constraint(rest, Relation::kGreaterEqual, Rational(1));
      for (auto [c, v] : pay[t]) {
        lp.add_constraint({{slack_var[t], Rational(1)}, {v, Rational(-1)}},
                          Relation::kGreaterEqual, Rational(0));
      }
    }
  }
  for (int c = 0; c < m; ++c) {
    std::vector<Term> terms;
    Rational constant = 0;
    if (w.contains(c)) {
      for (int t = 0; t < types; ++t) {
        auto it = pay[t].find(c);
        if (it != pay[t].end()) {
          terms.push_back(
              {it->second, Rational(static_cast<int>(election.type_members(t).size()))});
        }
      }
      price_terms(c, Rational(-1), terms, constant);
      lp.add_constraint(terms, Relation::kEqual, -constant);
    } else {
      for (int t = 0; t < types; ++t) {
        if (slack_var[t] >= 0 &&
            election.ballot(election.type_members(t).front()).contains(c)) {
          terms.push_back({slack_var[t],
                           Rational(static_cast<int>(election.type_members(t).size()))});
        }
      }
      price_terms(c, Rational(-1), terms, constant);
      lp.add_constraint(terms, Relation::kLessEqual, -constant);
    }
  }
  for (const CandidateSet& rival : request.competitors) {
    std::vector<Term> terms;
    Rational constant = 0;
    for (int c = 0; c < m; ++c) {
      int coef = (rival.contains(c) ? 1 : 0) - (w.contains(c) ? 1 : 0);
      if (coef != 0) price_terms(c, Rational(coef), terms, constant);
    }
    lp.add_constraint(terms, Relation::kLessEqual, -constant);
  }
  if (floor_var >= 0) {
    // floor <= price(c) for all c, floor <= 1; positive prices iff max > 0.
    for (int c = 0; c < m; ++c) {
      std::vector<Term> terms{{floor_var, Rational(1)}};
      Rational constant = 0;
      price_terms(c, Rational(-1), terms, constant);
      lp.add_constraint(terms, Relation::kLessEqual, -constant);
    }
    lp.add_constraint({{floor_var, Rational(1)}}, Relation::kLessEqual,
                      Rational(1));
    lp.maximize({{floor_var, Rational(1)}});
  }

  LpResult solved = solve_lp(lp);
  if (solved.status != LpStatus::kOptimal) return std::nullopt;
  if (floor_var >= 0 && solved.point[floor_var] <= 0) return std::nullopt;

  PriceSystem ps;
  ps.prices.resize(m);
  for (int c = 0; c < m; ++c) {
    switch (request.mode) {
      case PriceMode::kGiven:
        ps.prices[c] = request.prices[c];
        break;
      case PriceMode::kUniform:
        ps.prices[c] = solved.point[scale_var];
        break;
      case PriceMode::kProportional:
        ps.prices[c] = solved.point[scale_var] * election.weight(c);
        break;
      case PriceMode::kFree:
        ps.prices[c] = solved.point[price_var[c]];
        break;
    }
  }
  ps.payments.assign(n, std::vector<Rational>(m, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (auto [c, v] : pay[election.type_of(i)]) {
      ps.payments[i][c] = solved.point[v];
    }
  }
  return ps;
}

std::vector<StablePriceable> search_stable_priceable(const Election& election,
                                                     SearchMode mode,
                                                     std::uint64_t cap) {
  require_approval(election);
  std::vector<CandidateSet> maximal =
      enumerate_maximal(election.feasibility(), cap);
  int largest = 0;
  for (const CandidateSet& w : maximal) largest = std::max(largest, w.size());
  std::vector<StablePriceable> out;
  for (const CandidateSet& w : maximal) {
    PaymentRequest request;
    switch (mode) {
      case SearchMode::kUniform:
        if (w.size() != largest) continue;
        request.mode = PriceMode::kUniform;
        break;
      case SearchMode::kGeneral:
        request.mode = PriceMode::kFree;
        request.competitors = maximal;
        break;
      case SearchMode::kExhaustive:
        request.mode = PriceMode::kProportional;
        break;
    }
    if (auto ps = find_payments(election, w, request)) {
      out.push_back({w, std::move(*ps)});
    }
  }
  return out;
}

std::optional<GroupClaim> weighted_sp_bound_failure(
    const Election& election, const CandidateSet& w,
    const AuditOptions& options) {
  const long long n = election.num_voters();
  for (const GroupClaim& claim : strongly_cohesive_claims(election, options)) {
    const long long s = static_cast<long long>(claim.group.size());
    const Rational& beta = claim.beta.front();
    bool met = false;
    for (int i : claim.group) {
      if (Rational(election.approved_count(i, w) * n) >= beta * (n - s)) {
        met = true;
        break;
      }
    }
    if (!met) return claim;
  }
  return std::nullopt;
}

bool check_weighted_sp_bound(const Election& election, const CandidateSet& w,
                             const PriceSystem& ps,
                             const AuditOptions& options) {
  if (!verify_sp(election, w, ps, SpMode::kExhaustive, options.cap).passes()) {
    throw Error(ErrorCode::kInvalidArgument,
                "price system is not stable in exhaustive mode");
  }
  return !weighted_sp_bound_failure(election, w, options).has_value();
}

}  // namespace propcon
