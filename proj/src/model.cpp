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

#include "propcon/model.hpp"

#include <map>
#include <set>

#include "propcon/error.hpp"

namespace propcon {

std::string_view utility_mode_name(UtilityMode mode) {
  switch (mode) {
    case UtilityMode::kApproval:
      return "approval";
    case UtilityMode::kAdditive:
      return "additive";
    case UtilityMode::kTable:
      return "table";
  }
  return "unknown";
}

int Election::candidate_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw Error(ErrorCode::kUnknownCandidate, "'" + id + "'");
  }
  return it->second;
}

std::optional<int> Election::find_candidate(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CandidateSet Election::to_set(const std::vector<std::string>& ids) const {
  CandidateSet out;
  for (const std::string& id : ids) out.insert(candidate_index(id));
  return out;
}

std::vector<std::string> Election::ids_of(const CandidateSet& w) const {
  std::vector<std::string> out;
  w.for_each([&](int c) { out.push_back(ids_[c]); });
  return out;
}

Rational Election::utility(int i, const CandidateSet& w) const {
  switch (mode_) {
    case UtilityMode::kApproval:
      return ballots_[i].intersection_size(w);
    case UtilityMode::kAdditive: {
      Rational total = 0;
      w.for_each([&](int c) { total += values_[i][c]; });
      return total;
    }
    case UtilityMode::kTable: {
      std::size_t mask = 0;
      w.for_each([&](int c) { mask |= std::size_t{1} << c; });
      return tables_[i][mask];
    }
  }
  return 0;
}

std::vector<int> Election::supporters(int c) const {
  if (c < 0 || c >= num_candidates()) {
    throw Error(ErrorCode::kUnknownCandidate, "index " + std::to_string(c));
  }
  std::vector<int> out;
  for (int i = 0; i < num_voters(); ++i) {
    if (ballots_[i].contains(c)) out.push_back(i);
  }
  return out;
}

Rational Election::weight(const CandidateSet& w) const {
  if (unit_weights_) return w.size();
  Rational total = 0;
  w.for_each([&](int c) { total += candidates_[c].weight; });
  return total;
}

Election build_election(std::vector<Candidate> candidates,
                        std::vector<VoterSpec> voters, UtilityMode mode,
                        ConstraintSpec spec) {
  Election e;
  if (candidates.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "an election needs a candidate");
  }
  if (voters.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "an election needs a voter");
  }
  const int m = static_cast<int>(candidates.size());
  if (m > kMaxCandidates) {
    throw Error(ErrorCode::kInvalidArgument, "too many candidates");
  }
  if (mode == UtilityMode::kTable && m > kMaxTableCandidates) {
    throw Error(ErrorCode::kInvalidArgument,
                "table utilities need at most 16 candidates");
  }
  for (int c = 0; c < m; ++c) {
    if (candidates[c].weight <= 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "weight of '" + candidates[c].id + "' must be positive");
    }
    if (!e.index_.emplace(candidates[c].id, c).second) {
      throw Error(ErrorCode::kDuplicateId,
                  "candidate id '" + candidates[c].id + "'");
    }
    e.ids_.push_back(candidates[c].id);
    if (candidates[c].weight != 1) e.unit_weights_ = false;
  }
  std::set<std::string> voter_seen;
  for (const VoterSpec& v : voters) {
    if (!voter_seen.insert(v.id).second) {
      throw Error(ErrorCode::kDuplicateId, "voter id '" + v.id + "'");
    }
  }
  e.candidates_ = std::move(candidates);
  e.mode_ = mode;

  for (const VoterSpec& v : voters) {
    e.voter_ids_.push_back(v.id);
    CandidateSet ballot;
    switch (mode) {
      case UtilityMode::kApproval:
        for (const std::string& id : v.approvals) {
          ballot.insert(e.candidate_index(id));
        }
        break;
      case UtilityMode::kAdditive: {
        std::vector<Rational> values(m, 0);
        for (const auto& [id, value] : v.values) {
          if (value < 0) {
            throw Error(ErrorCode::kNonMonotone,
                        "negative value for '" + id + "'");
          }
          values[e.candidate_index(id)] = value;
        }
        for (int c = 0; c < m; ++c) {
          if (values[c] > 0) ballot.insert(c);
        }
        e.values_.push_back(std::move(values));
        break;
      }
      case UtilityMode::kTable: {
        std::size_t size = std::size_t{1} << m;
        std::vector<Rational> table(size, 0);
        for (const TableEntry& entry : v.table) {
          std::size_t mask = 0;
          for (const std::string& id : entry.subset) {
            mask |= std::size_t{1} << e.candidate_index(id);
          }
          table[mask] = entry.value;
        }
        for (std::size_t mask = 0; mask < size; ++mask) {
          for (int c = 0; c < m; ++c) {
            std::size_t bit = std::size_t{1} << c;
            if ((mask & bit) == 0 && table[mask | bit] < table[mask]) {
              throw Error(ErrorCode::kNonMonotone,
                          "utility table of voter '" + v.id + "'");
            }
          }
        }
        for (int c = 0; c < m; ++c) {
          if (table[std::size_t{1} << c] > table[0]) ballot.insert(c);
        }
        e.tables_.push_back(std::move(table));
        break;
      }
    }
    e.ballots_.push_back(ballot);
  }
  e.voter_specs_ = std::move(voters);

  std::vector<Rational> weights;
  for (const Candidate& c : e.candidates_) weights.push_back(c.weight);
  e.system_ = build_system(spec, e.ids_, weights);
  e.spec_ = std::move(spec);

  // Voter types.
  const int n = e.num_voters();
  e.type_of_.assign(n, -1);
  std::map<CandidateSet, int> by_ballot;
  std::map<std::vector<Rational>, int> by_function;
  for (int i = 0; i < n; ++i) {
    int t = static_cast<int>(e.type_members_.size());
    bool fresh = false;
    if (mode == UtilityMode::kApproval) {
      auto [it, inserted] = by_ballot.emplace(e.ballots_[i], t);
      fresh = inserted;
      t = it->second;
    } else {
      const std::vector<Rational>& key =
          mode == UtilityMode::kAdditive ? e.values_[i] : e.tables_[i];
      auto [it, inserted] = by_function.emplace(key, t);
      fresh = inserted;
      t = it->second;
    }
    if (fresh) e.type_members_.emplace_back();
    e.type_members_[t].push_back(i);
    e.type_of_[i] = t;
  }
  return e;
}

Election build_approval_election(
    std::vector<Candidate> candidates,
    const std::vector<std::vector<std::string>>& ballots,
    ConstraintSpec spec) {
  std::vector<VoterSpec> voters;
  for (std::size_t i = 0; i < ballots.size(); ++i) {
    VoterSpec v;
    v.id = "v" + std::to_string(i + 1);
    v.approvals = ballots[i];
    voters.push_back(std::move(v));
  }
  return build_election(std::move(candidates), std::move(voters),
                        UtilityMode::kApproval, std::move(spec));
}

std::vector<Candidate> unit_candidates(const std::vector<std::string>& ids) {
  std::vector<Candidate> out;
  for (const std::string& id : ids) out.push_back(Candidate{id, 1});
  return out;
}

}  // namespace propcon
