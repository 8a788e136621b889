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

#include "propcon/greedy_cohesive.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "propcon/error.hpp"

namespace propcon {
namespace {

constexpr int kMaxVoters = 20;

// k-subsets of `pool` in lexicographic order until `visit` returns false.
bool for_each_subset(const std::vector<int>& pool, int k,
                     const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> current;
  std::function<bool(int)> rec = [&](int start) {
    if (static_cast<int>(current.size()) == k) return visit(current);
    for (int j = start;
         j + (k - static_cast<int>(current.size())) <= static_cast<int>(pool.size());
         ++j) {
      current.push_back(pool[j]);
      bool go_on = rec(j + 1);
      current.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return rec(0);
}

std::vector<Rational> achievable_for(const Election& election,
                                     const std::vector<int>& voters,
                                     const std::vector<Rational>& all) {
  // Restrict the global grid to values some remaining voter can reach.
  std::set<Rational> reach;
  for (int i : voters) {
    Rational top = election.utility(i, election.universe());
    for (const Rational& v : all) {
      if (v <= top) reach.insert(v);
    }
  }
  return {reach.begin(), reach.end()};
}

std::vector<CandidateSet> minimal_good_sets(const Election& election,
                                            const CohesiveGroup& group,
                                            std::uint64_t cap) {
  if (group.beta <= 0) return {CandidateSet{}};
  CandidateSet relevant;
  if (election.utility_mode() == UtilityMode::kTable) {
    relevant = election.universe();
  } else {
    for (int i : group.voters) relevant |= election.ballot(i);
  }
  std::vector<int> pool = relevant.indices();
  std::vector<CandidateSet> good;
  std::uint64_t seen = 0;
  for (int size = 0; size <= std::min<int>(group.alpha, pool.size()); ++size) {
    for_each_subset(pool, size, [&](const std::vector<int>& members) {
      if (++seen > cap) {
        throw Error(ErrorCode::kEnumerationCapExceeded, "good sets");
      }
      CandidateSet x;
      for (int c : members) x.insert(c);
      for (const CandidateSet& g : good) {
        if (g.is_subset_of(x)) return true;
      }
      for (int i : group.voters) {
        if (election.utility(i, x) < group.beta) return true;
      }
      good.push_back(x);
      return true;
    });
  }
  return good;
}

}  // namespace

CohesivePartition greedy_cohesive_partition(const Election& election,
                                            const AuditOptions& options) {
  if (election.num_voters() > kMaxVoters) {
    throw Error(ErrorCode::kEnumerationCapExceeded,
                "greedy partition needs at most 20 voters");
  }
  const int m = election.num_candidates();
  const std::vector<Rational> grid = achievable_utilities(election, options.cap);
  CohesivePartition partition;
  std::vector<int> remaining(election.num_voters());
  for (int i = 0; i < election.num_voters(); ++i) remaining[i] = i;

  while (!remaining.empty()) {
    std::vector<Rational> betas = achievable_for(election, remaining, grid);
    std::optional<CohesiveGroup> chosen;
    for (auto b = betas.rbegin(); b != betas.rend() && !chosen; ++b) {
      if (*b <= 0) break;
      for (int alpha = 0; alpha <= m && !chosen; ++alpha) {
        for (int size = static_cast<int>(remaining.size()); size >= 1 && !chosen;
             --size) {
          for_each_subset(remaining, size, [&](const std::vector<int>& group) {
            if (!cohesive(election, group, alpha, *b, CohesionMode::kFixed,
                          options)
                     .holds) {
              return true;
            }
            chosen = CohesiveGroup{group, alpha, *b};
            return false;
          });
        }
      }
    }
    if (!chosen) chosen = CohesiveGroup{remaining, 0, Rational(0)};
    std::vector<int> rest;
    std::set_difference(remaining.begin(), remaining.end(),
                        chosen->voters.begin(), chosen->voters.end(),
                        std::back_inserter(rest));
    remaining = std::move(rest);
    partition.groups.push_back(std::move(*chosen));
  }
  return partition;
}

CandidateSet construct_fjr_outcome(const Election& election,
                                   const CohesivePartition& partition,
                                   const AuditOptions& options) {
  const FeasibilitySystem& system = election.feasibility();
  std::vector<std::vector<CandidateSet>> options_per_group;
  for (const CohesiveGroup& g : partition.groups) {
    options_per_group.push_back(minimal_good_sets(election, g, options.cap));
  }
  std::uint64_t steps = 0;
  CandidateSet chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t r) {
    if (r == options_per_group.size()) return true;
    for (const CandidateSet& x : options_per_group[r]) {
      if (++steps > options.cap) {
        throw Error(ErrorCode::kEnumerationCapExceeded, "outcome assembly");
      }
      CandidateSet next = chosen | x;
      if (!system.is_feasible(next)) continue;
      CandidateSet saved = chosen;
      chosen = next;
      if (rec(r + 1)) return true;
      chosen = saved;
    }
    return false;
  };
  if (!rec(0)) {
    throw Error(ErrorCode::kSearchExhausted,
                "no feasible combination of group outcomes");
  }
  for (int c = 0; c < election.num_candidates(); ++c) {
    if (!chosen.contains(c) && system.can_extend(chosen, c)) chosen.insert(c);
  }
  return chosen;
}

CandidateSet construct_fjr_outcome(const Election& election,
                                   const AuditOptions& options) {
  return construct_fjr_outcome(
      election, greedy_cohesive_partition(election, options), options);
}

}  // namespace propcon
