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

#include "propcon/pav.hpp"

#include <functional>

#include "propcon/error.hpp"

namespace propcon {

Rational pav_score(const Election& election, const CandidateSet& w) {
  Rational score = 0;
  for (int i = 0; i < election.num_voters(); ++i) {
    score += harmonic(election.approved_count(i, w));
  }
  return score;
}

PavResult solve_pav_exact(const Election& election, std::uint64_t cap) {
  const int m = election.num_candidates();
  const int n = election.num_voters();
  const FeasibilitySystem& system = election.feasibility();
  std::vector<std::vector<int>> supporters(m);
  for (int c = 0; c < m; ++c) supporters[c] = election.supporters(c);
  std::vector<Rational> step(m + 1);
  for (int k = 0; k < static_cast<int>(step.size()); ++k) {
    step[k] = Rational(1, k + 1);
  }

  PavResult result;
  bool have_best = false;
  std::vector<int> count(n, 0);
  CandidateSet current;
  Rational score = 0;

  auto gain = [&](int c) {
    Rational g = 0;
    for (int i : supporters[c]) g += step[count[i]];
    return g;
  };

  std::function<void(int)> visit = [&](int next) {
    if (++result.stats.nodes > cap) {
      throw Error(ErrorCode::kEnumerationCapExceeded, "PAV search");
    }
    bool maximal = true;
    for (int c = 0; c < m && maximal; ++c) {
      if (!current.contains(c) && system.can_extend(current, c)) maximal = false;
    }
    if (maximal) {
      if (!have_best || score > result.score) {
        have_best = true;
        result.score = score;
        result.winners.clear();
      }
      if (score == result.score) result.winners.push_back(current);
    }
    if (have_best) {
      Rational bound = score;
      for (int c = next; c < m; ++c) bound += gain(c);
      if (bound < result.score) {
        ++result.stats.pruned;
        return;
      }
    }
    for (int c = next; c < m; ++c) {
      if (!system.can_extend(current, c)) continue;
      Rational g = gain(c);
      current.insert(c);
      for (int i : supporters[c]) ++count[i];
      score += g;
      visit(c + 1);
      score -= g;
      for (int i : supporters[c]) --count[i];
      current.erase(c);
    }
  };
  visit(0);
  return result;
}

CandidateSet pav_swap_search(const Election& election, const CandidateSet& start) {
  const FeasibilitySystem& system = election.feasibility();
  if (!system.is_feasible(start) || !is_maximal(system, start)) {
    throw Error(ErrorCode::kInvalidArgument,
                "swap search needs a feasible maximal start");
  }
  const int m = election.num_candidates();
  CandidateSet w = start;
  Rational score = pav_score(election, w);
  bool improved = true;
  while (improved) {
    improved = false;
    for (int out : w.indices()) {
      for (int in = 0; in < m && !improved; ++in) {
        if (w.contains(in)) continue;
        CandidateSet next = w;
        next.erase(out);
        next.insert(in);
        if (!system.is_feasible(next)) continue;
        Rational s = pav_score(election, next);
        if (s > score) {
          w = next;
          score = s;
          improved = true;
        }
      }
      if (improved) break;
    }
  }
  return w;
}

}  // namespace propcon
