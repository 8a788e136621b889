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

#ifndef PROPCON_PRICEABILITY_HPP_
#define PROPCON_PRICEABILITY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "propcon/axioms.hpp"
#include "propcon/candidate_set.hpp"
#include "propcon/constraints.hpp"
#include "propcon/model.hpp"
#include "propcon/rational.hpp"

namespace propcon {

// prices[c] for every candidate; payments[i][c] is what voter i pays for c.
// Every voter holds a budget of one unit.
struct PriceSystem {
  std::vector<Rational> prices;
  std::vector<std::vector<Rational>> payments;
};

// r_i = 1 - sum of voter i's payments.
Rational remaining_budget(const PriceSystem& ps, int voter);

enum class SpMode { kSp4Producer, kExhaustive };

struct ConditionResult {
  bool holds = true;
  std::optional<int> candidate;
  std::optional<int> voter;
  std::string detail;
};

struct SpReport {
  // Dimensions, positive prices, nonnegative payments, budgets.
  ConditionResult well_formed;
  ConditionResult sp1;
  ConditionResult sp2;
  ConditionResult sp3;
  // Total price maximal among feasible sets, or exhaustiveness.
  ConditionResult sp4;
  bool passes() const {
    return well_formed.holds && sp1.holds && sp2.holds && sp3.holds &&
           sp4.holds;
  }
};

SpReport verify_sp(const Election& election, const CandidateSet& w,
                   const PriceSystem& ps, SpMode mode = SpMode::kSp4Producer,
                   std::uint64_t cap = kDefaultEnumerationCap);

// Largest total price of a feasible set. Uses count vectors over the symmetry
// classes refined by price when that shrinks the search.
Rational max_feasible_price(const FeasibilitySystem& system,
                            const std::vector<Rational>& prices,
                            std::uint64_t cap = kDefaultEnumerationCap);

enum class PriceMode { kGiven, kUniform, kProportional, kFree };

struct PaymentRequest {
  PriceMode mode = PriceMode::kUniform;
  // Required in kGiven mode, one per candidate.
  std::vector<Rational> prices;
  // Each adds sum_{c in W'} price(c) <= sum_{c in W} price(c).
  std::vector<CandidateSet> competitors;
};

// Payments satisfying SP1-SP3 (and the competitor rows), or nullopt. Voters
// pay only for selected candidates they approve.
std::optional<PriceSystem> find_payments(const Election& election,
                                         const CandidateSet& w,
                                         const PaymentRequest& request);

enum class SearchMode { kUniform, kGeneral, kExhaustive };

struct StablePriceable {
  CandidateSet outcome;
  PriceSystem prices;
};

// kUniform: maximum-cardinality maximal sets, one common price.
// kGeneral: all maximal sets, free prices, SP4 rows against every maximal set.
// kExhaustive: maximal (exhaustive) sets, prices proportional to weight.
std::vector<StablePriceable> search_stable_priceable(
    const Election& election, SearchMode mode,
    std::uint64_t cap = kDefaultEnumerationCap);

// For every strongly cohesive (S, alpha, beta): some i in S has
// |W ∩ A_i| >= beta (n - |S|) / n. Returns the first failing claim.
std::optional<GroupClaim> weighted_sp_bound_failure(
    const Election& election, const CandidateSet& w,
    const AuditOptions& options = {});
bool check_weighted_sp_bound(const Election& election, const CandidateSet& w,
                             const PriceSystem& ps,
                             const AuditOptions& options = {});

}  // namespace propcon

#endif  // PROPCON_PRICEABILITY_HPP_
