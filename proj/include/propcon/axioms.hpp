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

#ifndef PROPCON_AXIOMS_HPP_
#define PROPCON_AXIOMS_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "propcon/candidate_set.hpp"
#include "propcon/model.hpp"
#include "propcon/rational.hpp"

namespace propcon {

// kReduced searches the maximal groups derived from the intersection closure
// of the ballots (or unions of voter types); kAllSubsets tries every voter
// subset and serves as the reference.
enum class GroupSearch { kReduced, kAllSubsets };

// kSymmetric enumerates counter-proposals T as count vectors over the
// system's symmetry classes refined by the sets relevant to a claim. kAuto
// uses it whenever some class has more than one member and the utilities
// allow it.
enum class Enumeration { kAuto, kPlain, kSymmetric };

struct AuditOptions {
  GroupSearch groups = GroupSearch::kReduced;
  Enumeration enumeration = Enumeration::kAuto;
  std::uint64_t cap = kDefaultEnumerationCap;
};

enum class Axiom {
  kEjr,
  kPjr,
  kFjr,
  kFjrAdaptive,
  kCore,
  kRestrainedEjr,
  kEjrWeighted,
  kPjrWeighted,
};

std::string_view axiom_name(Axiom axiom);
std::optional<Axiom> parse_axiom(std::string_view name);

enum class CohesionMode { kFixed, kAdaptive };

// The fields used depend on the axiom:
//   EJR, PJR:       ell
//   FJR:            alpha (size, unset in adaptive mode), beta[0]
//   core:           alpha, beta[j] for group[j]
//   weighted:       alpha (weight budget), beta[0] (count)
//   restrained EJR: ell (required common approvals), alpha (endowment k')
struct GroupClaim {
  std::vector<int> group;
  std::optional<int> ell;
  std::optional<Rational> alpha;
  std::vector<Rational> beta;
};

struct ClaimCheck {
  bool holds = false;
  // For a refuted claim, the counter-proposal T (or the sub-outcome that
  // defeats a blocking coalition).
  std::optional<CandidateSet> refuting_set;
  std::uint64_t sets_examined = 0;
};

struct AuditStats {
  std::uint64_t groups_examined = 0;
  std::uint64_t sets_examined = 0;
};

struct Violation {
  GroupClaim claim;
  // u_i(W) for each member, in group order.
  std::vector<Rational> utilities;
};

struct AuditReport {
  Axiom axiom = Axiom::kEjr;
  bool satisfied = true;
  std::optional<Violation> violation;
  AuditStats stats;
};

// Def. of a deserving group: for every feasible T, some X inside the common
// approvals with |X| >= ell keeps T + X feasible, or |S|/n > ell/(|T|+ell).
ClaimCheck deserves(const Election& election, const std::vector<int>& group,
                    int ell, const AuditOptions& options = {});

// Strong cohesiveness: X inside the common approvals with weight(X) <= alpha
// and |X| >= beta, or |S|/n > alpha/(weight(T)+alpha).
ClaimCheck deserves_weighted(const Election& election,
                             const std::vector<int>& group,
                             const Rational& alpha, int beta,
                             const AuditOptions& options = {});

// Fixed mode: |X| = alpha, u_i(X) >= beta for all members, with T + X
// feasible or |S|/n > alpha/(|T|+alpha). Adaptive mode ignores alpha and
// lets |X| take its place in the inequality.
ClaimCheck cohesive(const Election& election, const std::vector<int>& group,
                    int alpha, const Rational& beta, CohesionMode mode,
                    const AuditOptions& options = {});

// Fixed-size cohesiveness with a threshold per member (beta[j] for
// group[j]).
ClaimCheck cohesive_per_voter(const Election& election,
                              const std::vector<int>& group, int alpha,
                              const std::vector<Rational>& beta,
                              const AuditOptions& options = {});

// Whether `group` blocks W with committee size k: endowment
// k' = floor(|S| k / n), and every k'-completable sub-outcome of W with at
// most k - k' members can be completed with at most k' candidates so that
// the common approvals reach max u_i(W) + 1.
ClaimCheck blocks_restrained(const Election& election, const CandidateSet& w,
                             const std::vector<int>& group, int k,
                             const AuditOptions& options = {});

AuditReport audit_ejr(const Election& election, const CandidateSet& w,
                      const AuditOptions& options = {});
AuditReport audit_pjr(const Election& election, const CandidateSet& w,
                      const AuditOptions& options = {});
AuditReport audit_fjr(const Election& election, const CandidateSet& w,
                      CohesionMode mode = CohesionMode::kFixed,
                      const AuditOptions& options = {});
AuditReport audit_core(const Election& election, const CandidateSet& w,
                       const AuditOptions& options = {});
AuditReport audit_restrained_ejr(const Election& election,
                                 const CandidateSet& w, int k,
                                 const AuditOptions& options = {});
AuditReport audit_ejr_weighted(const Election& election, const CandidateSet& w,
                               const AuditOptions& options = {});
AuditReport audit_pjr_weighted(const Election& election, const CandidateSet& w,
                               const AuditOptions& options = {});

// Dispatches on the axiom; `k` is only read for restrained EJR.
AuditReport audit(const Election& election, const CandidateSet& w, Axiom axiom,
                  int k = 0, const AuditOptions& options = {});

// Re-derives a violation from scratch through the claim oracles.
bool recheck_violation(const Election& election, const CandidateSet& w,
                       const AuditReport& report, int k = 0,
                       const AuditOptions& options = {});

// (1/|S|) sum_i |A_i ∩ W| >= (ell - 1)/2.
bool check_avg_satisfaction(const Election& election, const CandidateSet& w,
                            const std::vector<int>& group, int ell);

// Every (S, ell) with deserves(S, ell), over all nonempty voter subsets.
std::vector<GroupClaim> deserving_claims(const Election& election,
                                         const AuditOptions& options = {});

// Every (S, alpha, beta) with deserves_weighted, alpha ranging over weights
// of beta-subsets of the common approvals.
std::vector<GroupClaim> strongly_cohesive_claims(
    const Election& election, const AuditOptions& options = {});

// Sorted union over voters of {u_i(X) : X subset of C}.
std::vector<Rational> achievable_utilities(const Election& election,
                                           std::uint64_t cap =
                                               kDefaultEnumerationCap);

// Intersection closure of the ballots, empty set excluded, sorted.
std::vector<CandidateSet> ballot_closure(const Election& election);

}  // namespace propcon

#endif  // PROPCON_AXIOMS_HPP_
