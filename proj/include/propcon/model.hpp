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

#ifndef PROPCON_MODEL_HPP_
#define PROPCON_MODEL_HPP_

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "propcon/candidate_set.hpp"
#include "propcon/constraints.hpp"
#include "propcon/rational.hpp"

namespace propcon {

enum class UtilityMode { kApproval, kAdditive, kTable };

std::string_view utility_mode_name(UtilityMode mode);

// Explicit tables are stored densely over all 2^m subsets.
inline constexpr int kMaxTableCandidates = 16;

struct Candidate {
  std::string id;
  Rational weight = 1;
};

struct TableEntry {
  std::vector<std::string> subset;
  Rational value;
};

// Only the field matching the election's utility mode is read. Unlisted
// additive values and table entries are 0.
struct VoterSpec {
  std::string id;
  std::vector<std::string> approvals;
  std::vector<std::pair<std::string, Rational>> values;
  std::vector<TableEntry> table;
};

class Election {
 public:
  int num_candidates() const { return static_cast<int>(candidates_.size()); }
  int num_voters() const { return static_cast<int>(voter_ids_.size()); }

  const std::vector<Candidate>& candidates() const { return candidates_; }
  const Candidate& candidate(int c) const { return candidates_[c]; }
  const std::vector<std::string>& candidate_ids() const { return ids_; }
  const std::string& voter_id(int i) const { return voter_ids_[i]; }
  const std::vector<VoterSpec>& voter_specs() const { return voter_specs_; }

  // Throws kUnknownCandidate.
  int candidate_index(const std::string& id) const;
  std::optional<int> find_candidate(const std::string& id) const;
  CandidateSet to_set(const std::vector<std::string>& ids) const;
  std::vector<std::string> ids_of(const CandidateSet& w) const;
  CandidateSet universe() const { return CandidateSet::prefix(num_candidates()); }

  UtilityMode utility_mode() const { return mode_; }
  const ConstraintSpec& constraint_spec() const { return spec_; }
  const FeasibilitySystem& feasibility() const { return system_; }

  // Approval mode: A_i. Other modes: candidates with positive singleton gain.
  const CandidateSet& ballot(int i) const { return ballots_[i]; }
  int approved_count(int i, const CandidateSet& w) const {
    return ballots_[i].intersection_size(w);
  }
  Rational utility(int i, const CandidateSet& w) const;
  const std::vector<Rational>& additive_values(int i) const {
    return values_[i];
  }

  // N(c), ascending. Throws kUnknownCandidate.
  std::vector<int> supporters(int c) const;

  const Rational& weight(int c) const { return candidates_[c].weight; }
  Rational weight(const CandidateSet& w) const;
  bool has_unit_weights() const { return unit_weights_; }

  // Voters with identical utility functions share a type; types are numbered
  // by their first member.
  int num_types() const { return static_cast<int>(type_members_.size()); }
  int type_of(int voter) const { return type_of_[voter]; }
  const std::vector<int>& type_members(int t) const { return type_members_[t]; }

 private:
  friend Election build_election(std::vector<Candidate> candidates,
                                 std::vector<VoterSpec> voters,
                                 UtilityMode mode, ConstraintSpec spec);

  std::vector<Candidate> candidates_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::string> voter_ids_;
  std::vector<VoterSpec> voter_specs_;
  UtilityMode mode_ = UtilityMode::kApproval;
  ConstraintSpec spec_;
  FeasibilitySystem system_;
  std::vector<CandidateSet> ballots_;
  std::vector<std::vector<Rational>> values_;
  std::vector<std::vector<Rational>> tables_;
  bool unit_weights_ = true;
  std::vector<int> type_of_;
  std::vector<std::vector<int>> type_members_;
};

// Validates ids, ballots, weights and utility monotonicity, and builds the
// feasibility system.
Election build_election(std::vector<Candidate> candidates,
                        std::vector<VoterSpec> voters, UtilityMode mode,
                        ConstraintSpec spec);

// Convenience for approval elections: ballots[i] lists candidate ids; voters
// are named v1..vn.
Election build_approval_election(
    std::vector<Candidate> candidates,
    const std::vector<std::vector<std::string>>& ballots, ConstraintSpec spec);

std::vector<Candidate> unit_candidates(const std::vector<std::string>& ids);

}  // namespace propcon

#endif  // PROPCON_MODEL_HPP_
