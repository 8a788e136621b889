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

#ifndef PROPCON_GREEDY_COHESIVE_HPP_
#define PROPCON_GREEDY_COHESIVE_HPP_

#include <vector>

#include "propcon/axioms.hpp"
#include "propcon/candidate_set.hpp"
#include "propcon/model.hpp"
#include "propcon/rational.hpp"

namespace propcon {

struct CohesiveGroup {
  std::vector<int> voters;
  int alpha = 0;
  Rational beta;
};

// Disjoint groups covering all voters, in extraction order.
struct CohesivePartition {
  std::vector<CohesiveGroup> groups;
};

// Repeatedly takes the (alpha, beta)-cohesive group (fixed mode, original n)
// among the remaining voters with the largest beta, then the smallest alpha,
// then the most voters, then the lexicographically smallest voter list.
CohesivePartition greedy_cohesive_partition(const Election& election,
                                            const AuditOptions& options = {});

// Picks W_r with |W_r| <= alpha_r and u_i(W_r) >= beta_r for every group so
// that the union is feasible, then extends the union to a maximal feasible
// set. Throws kSearchExhausted when no such choice exists.
CandidateSet construct_fjr_outcome(const Election& election,
                                   const CohesivePartition& partition,
                                   const AuditOptions& options = {});
CandidateSet construct_fjr_outcome(const Election& election,
                                   const AuditOptions& options = {});

}  // namespace propcon

#endif  // PROPCON_GREEDY_COHESIVE_HPP_
