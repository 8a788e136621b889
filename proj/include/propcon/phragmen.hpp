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

#ifndef PROPCON_PHRAGMEN_HPP_
#define PROPCON_PHRAGMEN_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "propcon/candidate_set.hpp"
#include "propcon/model.hpp"
#include "propcon/rational.hpp"

namespace propcon {

struct PurchaseEvent {
  Rational time;
  int candidate = 0;
  Rational price;
  // (voter, amount) for every supporter, ascending by voter.
  std::vector<std::pair<int, Rational>> payments;
  std::vector<int> reset;
};

struct Removal {
  Rational time;
  int candidate = 0;
  // Number of purchases made when the candidate was removed.
  int after_events = 0;
};

struct PhragmenTrace {
  bool weighted = false;
  std::vector<PurchaseEvent> events;
  std::vector<Removal> removals;
  // Candidates nobody approves; never bought.
  std::vector<int> unsupported;
  CandidateSet outcome;
  Rational end_time;
  // Money each voter still holds at end_time.
  std::vector<Rational> stranded;
};

// Unit prices.
PhragmenTrace run_phragmen(const Election& election);
// price(c) = weight(c).
PhragmenTrace run_phragmen_weighted(const Election& election);

struct TraceAudit {
  bool ok = true;
  // One of time-order, payer-support, payment-sum, budget-conservation,
  // reset-bookkeeping, prefix-feasibility, removal-justification, coverage,
  // outcome-mismatch.
  std::string failure;
  std::optional<int> index;
};

TraceAudit trace_audit(const PhragmenTrace& trace, const Election& election);

}  // namespace propcon

#endif  // PROPCON_PHRAGMEN_HPP_
