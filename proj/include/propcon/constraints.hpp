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

#ifndef PROPCON_CONSTRAINTS_HPP_
#define PROPCON_CONSTRAINTS_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "propcon/candidate_set.hpp"
#include "propcon/rational.hpp"

namespace propcon {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

enum class SystemKind {
  kCommittee,
  kPublicDecisions,
  kDisjointAttributes,
  kBudget,
  kExplicit,
  kRanking,
  kNegativeVotes,
  kJudgment,
};

std::string_view system_kind_name(SystemKind kind);

// At most k candidates.
struct CommitteeSpec {
  int k = 0;
};

// One candidate per (yes, no) issue; the issues partition the universe.
struct PublicDecisionsSpec {
  std::vector<std::pair<std::string, std::string>> issues;
};

struct AttributeGroupSpec {
  std::vector<std::string> members;
  int lower = 0;
  int upper = 0;
};

// Exactly k candidates with lower/upper quotas per group, normalized to the
// downward closure.
struct DisjointAttributesSpec {
  int k = 0;
  std::vector<AttributeGroupSpec> groups;
};

// Candidate weights are costs. An empty member list means the whole universe.
struct BudgetLimitSpec {
  std::vector<std::string> members;
  Rational limit;
};

struct BudgetSpec {
  std::vector<BudgetLimitSpec> limits;
};

// Listed sets and all their subsets.
struct ExplicitSpec {
  std::vector<std::vector<std::string>> feasible;
};

// Universe {"a>b" : a != b}; feasible iff the selected pairs are acyclic.
struct RankingSpec {
  std::vector<std::string> items;
};

// Universe {c} and {"!c"}; exactly k items are elected, the rest rejected.
struct NegativeVotesSpec {
  std::vector<std::string> items;
  int k = 0;
};

// Universe {"x=T", "x=F"}; clauses in CNF over literals "x" and "!x".
struct JudgmentSpec {
  std::vector<std::string> variables;
  std::vector<std::vector<std::string>> clauses;
};

using ConstraintSpec =
    std::variant<CommitteeSpec, PublicDecisionsSpec, DisjointAttributesSpec,
                 BudgetSpec, ExplicitSpec, RankingSpec, NegativeVotesSpec,
                 JudgmentSpec>;

SystemKind spec_kind(const ConstraintSpec& spec);

namespace detail {
class Oracle;
}  // namespace detail

// Immutable downward-closed feasibility oracle over candidates 0..m-1.
class FeasibilitySystem {
 public:
  FeasibilitySystem() = default;
  explicit FeasibilitySystem(std::shared_ptr<const detail::Oracle> oracle);

  SystemKind kind() const;
  int universe_size() const;
  const ConstraintSpec& spec() const;

  // Throws kUnknownCandidate if w mentions an index outside the universe.
  bool is_feasible(const CandidateSet& w) const;
  // Throws kInfeasibleOutcome if w itself is infeasible.
  bool can_extend(const CandidateSet& w, int c) const;

  // Classes of candidates that the system treats interchangeably. Every
  // permutation inside a class maps feasible sets to feasible sets.
  const std::vector<std::vector<int>>& symmetry_classes() const;

 private:
  std::shared_ptr<const detail::Oracle> oracle_;
};

// Resolves candidate ids against the universe (ids[i] is candidate i) and
// validates the parameters. weights[i] is used by budget systems.
FeasibilitySystem build_system(const ConstraintSpec& spec,
                               const std::vector<std::string>& ids,
                               const std::vector<Rational>& weights);

struct EncodedDomain {
  std::vector<std::string> universe;
  // meaning[i] describes universe[i] in terms of the source domain.
  std::vector<std::string> meaning;
  ConstraintSpec spec;
};

std::string ranking_pair_id(std::string_view above, std::string_view below);
std::string negated_id(std::string_view item);
std::string judgment_id(std::string_view variable, bool value);

EncodedDomain encode_ranking(const std::vector<std::string>& items);
EncodedDomain encode_negative_votes(const std::vector<std::string>& items,
                                    int k);
// Throws kUnsatisfiableClauses if no assignment satisfies every clause.
EncodedDomain encode_judgment(
    const std::vector<std::string>& variables,
    const std::vector<std::vector<std::string>>& clauses);

// Depth-first enumeration in lexicographic order; stops early when `visit`
// returns false. Throws kEnumerationCapExceeded once more than `cap` sets
// have been produced.
void for_each_feasible(const FeasibilitySystem& system,
                       const std::function<bool(const CandidateSet&)>& visit,
                       std::uint64_t cap = kDefaultEnumerationCap);
std::vector<CandidateSet> enumerate_feasible(
    const FeasibilitySystem& system, std::uint64_t cap = kDefaultEnumerationCap);
std::vector<CandidateSet> enumerate_maximal(
    const FeasibilitySystem& system, std::uint64_t cap = kDefaultEnumerationCap);
bool is_maximal(const FeasibilitySystem& system, const CandidateSet& w);

struct MatroidWitness {
  CandidateSet x;
  CandidateSet y;
};

// Returns the witness with |Y| = |X| + 1 minimizing |X|, then |Y \ X|, then
// (X, Y) lexicographically; nullopt when the exchange property holds.
std::optional<MatroidWitness> check_exchange_property(
    const FeasibilitySystem& system, std::uint64_t cap = kDefaultEnumerationCap);
bool validate_witness(const FeasibilitySystem& system,
                      const MatroidWitness& witness);

// Returns the first c' in w_prime with (w \ {c'}) + c feasible. Throws
// kNotAMatroid when none exists and kInvalidArgument on a broken
// precondition.
int one_swap(const FeasibilitySystem& system, const CandidateSet& w,
             const CandidateSet& w_prime, int c);

// Splits every class by membership in each of `sets`.
std::vector<std::vector<int>> refine_partition(
    const std::vector<std::vector<int>>& classes,
    const std::vector<CandidateSet>& sets);
// Splits every class by key[c].
std::vector<std::vector<int>> refine_partition_by_key(
    const std::vector<std::vector<int>>& classes, const std::vector<int>& key);

// Sets described by how many members of each class they take. Valid when the
// classes refine the system's symmetry classes; the representative of a count
// vector takes the first t members of each class.
class CountSpace {
 public:
  CountSpace(FeasibilitySystem system, std::vector<std::vector<int>> classes);

  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_size(int k) const {
    return static_cast<int>(classes_[k].size());
  }
  const std::vector<int>& members(int k) const { return classes_[k]; }
  const FeasibilitySystem& system() const { return system_; }

  CandidateSet representative(const std::vector<int>& counts) const;
  bool is_feasible(const std::vector<int>& counts) const;
  // Per-class counts of an arbitrary set.
  std::vector<int> counts_of(const CandidateSet& w) const;

  // Every feasible count vector, lexicographic in the counts; stops early
  // when `visit` returns false.
  void for_each_feasible(
      const std::function<bool(const std::vector<int>&)>& visit,
      std::uint64_t cap = kDefaultEnumerationCap) const;

 private:
  FeasibilitySystem system_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

}  // namespace propcon

#endif  // PROPCON_CONSTRAINTS_HPP_
