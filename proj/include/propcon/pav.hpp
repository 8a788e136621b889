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

#ifndef PROPCON_PAV_HPP_
#define PROPCON_PAV_HPP_

#include <cstdint>
#include <vector>

#include "propcon/candidate_set.hpp"
#include "propcon/constraints.hpp"
#include "propcon/model.hpp"
#include "propcon/rational.hpp"

namespace propcon {

struct PavStats {
  std::uint64_t nodes = 0;
  std::uint64_t pruned = 0;
};

struct PavResult {
  Rational score;
  // Every inclusion-maximal feasible set with the optimal score, in
  // lexicographic order.
  std::vector<CandidateSet> winners;
  PavStats stats;
};

// sum_i H(|W ∩ A_i|).
Rational pav_score(const Election& election, const CandidateSet& w);

// Branch and bound over feasible sets. A subtree is cut when even crediting
// every remaining candidate with its current marginal gain cannot reach the
// best score.
PavResult solve_pav_exact(const Election& election,
                          std::uint64_t cap = kDefaultEnumerationCap);

// Applies the first strictly improving feasible swap (c out, c' in, both in
// ascending order) until none is left. `start` must be feasible and maximal.
CandidateSet pav_swap_search(const Election& election, const CandidateSet& start);

}  // namespace propcon

#endif  // PROPCON_PAV_HPP_
