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

#include "propcon/constraints.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "propcon/error.hpp"

namespace propcon {
namespace detail {

class Oracle {
 public:
  Oracle(SystemKind kind, int m, ConstraintSpec spec)
      : kind_(kind), m_(m), spec_(std::move(spec)) {}
  virtual ~Oracle() = default;

  virtual bool feasible(const CandidateSet& w) const = 0;

  SystemKind kind() const { return kind_; }
  int m() const { return m_; }
  const ConstraintSpec& spec() const { return spec_; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }

 protected:
  void set_singleton_classes() {
    classes_.clear();
    for (int c = 0; c < m_; ++c) classes_.push_back({c});
  }

  std::vector<std::vector<int>> classes_;

 private:
  SystemKind kind_;
  int m_;
  ConstraintSpec spec_;
};

}  // namespace detail

namespace {

using detail::Oracle;

class IdIndex {
 public:
  explicit IdIndex(const std::vector<std::string>& ids) {
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) {
      if (!index_.emplace(ids[i], i).second) {
        throw Error(ErrorCode::kDuplicateId, "candidate id '" + ids[i] + "'");
      }
    }
  }
  int at(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
      throw Error(ErrorCode::kUnknownCandidate, "'" + id + "'");
    }
    return it->second;
  }
  bool contains(const std::string& id) const { return index_.count(id) > 0; }

 private:
  std::unordered_map<std::string, int> index_;
};

class CommitteeOracle : public Oracle {
 public:
  CommitteeOracle(int m, ConstraintSpec spec, int k)
      : Oracle(SystemKind::kCommittee, m, std::move(spec)), k_(k) {
    classes_.emplace_back();
    for (int c = 0; c < m; ++c) classes_.back().push_back(c);
    if (m == 0) classes_.clear();
  }
  bool feasible(const CandidateSet& w) const override {
    return w.size() <= k_;
  }

 private:
  int k_;
};

class PublicDecisionsOracle : public Oracle {
 public:
  PublicDecisionsOracle(int m, ConstraintSpec spec,
                        std::vector<std::pair<int, int>> pairs)
      : Oracle(SystemKind::kPublicDecisions, m, std::move(spec)),
        pairs_(std::move(pairs)) {
    set_singleton_classes();
  }
  bool feasible(const CandidateSet& w) const override {
    for (auto [yes, no] : pairs_) {
      if (w.contains(yes) && w.contains(no)) return false;
    }
    return true;
  }

 private:
  std::vector<std::pair<int, int>> pairs_;
};

class DisjointAttributesOracle : public Oracle {
 public:
  struct Group {
    CandidateSet members;
    int lower;
    int cap;  // min(upper, |members|)
  };

  DisjointAttributesOracle(int m, ConstraintSpec spec, int k,
                           std::vector<Group> groups,
                           std::vector<std::vector<int>> classes)
      : Oracle(SystemKind::kDisjointAttributes, m, std::move(spec)),
        k_(k),
        groups_(std::move(groups)) {
    classes_ = std::move(classes);
  }

  bool feasible(const CandidateSet& w) const override {
    int total = w.size();
    if (total > k_) return false;
    int needed = 0;
    for (const Group& g : groups_) {
      int count = w.intersection_size(g.members);
      if (count > g.cap) return false;
      needed += std::max(count, g.lower);
    }
    return needed <= k_;
  }

 private:
  int k_;
  std::vector<Group> groups_;
};

class BudgetOracle : public Oracle {
 public:
  struct Limit {
    CandidateSet members;
    Rational limit;
  };

  BudgetOracle(int m, ConstraintSpec spec, std::vector<Rational> costs,
               std::vector<Limit> limits, std::vector<std::vector<int>> classes)
      : Oracle(SystemKind::kBudget, m, std::move(spec)),
        costs_(std::move(costs)),
        limits_(std::move(limits)) {
    classes_ = std::move(classes);
  }

  bool feasible(const CandidateSet& w) const override {
    for (const Limit& l : limits_) {
      Rational spent = 0;
      bool over = false;
      (w & l.members).for_each([&](int c) {
        if (over) return;
        spent += costs_[c];
        if (spent > l.limit) over = true;
      });
      if (over) return false;
    }
    return true;
  }

 private:
  std::vector<Rational> costs_;
  std::vector<Limit> limits_;
};

class ExplicitOracle : public Oracle {
 public:
  ExplicitOracle(int m, ConstraintSpec spec, std::vector<CandidateSet> sets)
      : Oracle(SystemKind::kExplicit, m, std::move(spec)),
        sets_(std::move(sets)) {
    set_singleton_classes();
  }
  bool feasible(const CandidateSet& w) const override {
    if (w.empty()) return true;
    for (const CandidateSet& s : sets_) {
      if (w.is_subset_of(s)) return true;
    }
    return false;
  }

 private:
  std::vector<CandidateSet> sets_;
};

class RankingOracle : public Oracle {
 public:
  // edges[c] = (above, below) item indices of candidate c.
  RankingOracle(int m, ConstraintSpec spec, int items,
                std::vector<std::pair<int, int>> edges)
      : Oracle(SystemKind::kRanking, m, std::move(spec)),
        items_(items),
        edges_(std::move(edges)) {
    set_singleton_classes();
  }

  bool feasible(const CandidateSet& w) const override {
    // Kahn's algorithm on the selected edges.
    std::vector<int> indegree(items_, 0);
    std::vector<std::vector<int>> out(items_);
    w.for_each([&](int c) {
      auto [a, b] = edges_[c];
      out[a].push_back(b);
      ++indegree[b];
    });
    std::vector<int> ready;
    for (int v = 0; v < items_; ++v) {
      if (indegree[v] == 0) ready.push_back(v);
    }
    int seen = 0;
    while (!ready.empty()) {
      int v = ready.back();
      ready.pop_back();
      ++seen;
      for (int u : out[v]) {
        if (--indegree[u] == 0) ready.push_back(u);
      }
    }
    return seen == items_;
  }

 private:
  int items_;
  std::vector<std::pair<int, int>> edges_;
};

class NegativeVotesOracle : public Oracle {
 public:
  NegativeVotesOracle(int m, ConstraintSpec spec, int k,
                      std::vector<std::pair<int, int>> pairs)
      : Oracle(SystemKind::kNegativeVotes, m, std::move(spec)),
        k_(k),
        pairs_(std::move(pairs)) {
    for (auto [c, bar] : pairs_) {
      real_.insert(c);
      bars_.insert(bar);
    }
    set_singleton_classes();
  }

  bool feasible(const CandidateSet& w) const override {
    for (auto [c, bar] : pairs_) {
      if (w.contains(c) && w.contains(bar)) return false;
    }
    int items = static_cast<int>(pairs_.size());
    return w.intersection_size(real_) <= k_ &&
           w.intersection_size(bars_) <= items - k_;
  }

 private:
  int k_;
  std::vector<std::pair<int, int>> pairs_;
  CandidateSet real_;
  CandidateSet bars_;
};

class JudgmentOracle : public Oracle {
 public:
  // literal_of[c] = (variable, value); models are bitmasks of true variables.
  JudgmentOracle(int m, ConstraintSpec spec,
                 std::vector<std::pair<int, bool>> literal_of,
                 std::vector<std::uint64_t> models)
      : Oracle(SystemKind::kJudgment, m, std::move(spec)),
        literal_of_(std::move(literal_of)),
        models_(std::move(models)) {
    set_singleton_classes();
  }

  bool feasible(const CandidateSet& w) const override {
    std::uint64_t must_true = 0;
    std::uint64_t must_false = 0;
    w.for_each([&](int c) {
      auto [var, value] = literal_of_[c];
      (value ? must_true : must_false) |= std::uint64_t{1} << var;
    });
    if (must_true & must_false) return false;
    for (std::uint64_t model : models_) {
      if ((model & must_true) == must_true && (model & must_false) == 0) {
        return true;
      }
    }
    return false;
  }

 private:
  std::vector<std::pair<int, bool>> literal_of_;
  std::vector<std::uint64_t> models_;
};

std::vector<int> resolve_all(const IdIndex& index,
                             const std::vector<std::string>& ids) {
  std::vector<int> out;
  out.reserve(ids.size());
  for (const std::string& id : ids) out.push_back(index.at(id));
  return out;
}

void require_universe(const std::vector<std::string>& ids,
                      const std::vector<std::string>& expected,
                      std::string_view kind) {
  std::set<std::string> a(ids.begin(), ids.end());
  std::set<std::string> b(expected.begin(), expected.end());
  if (a != b) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(kind) +
                    " encoding requires the candidate universe to be exactly "
                    "the encoded candidates");
  }
}

struct ParsedLiteral {
  std::string variable;
  bool value;
};

ParsedLiteral parse_literal(const std::string& text) {
  if (!text.empty() && text[0] == '!') return {text.substr(1), false};
  return {text, true};
}

std::vector<std::uint64_t> satisfying_models(
    const std::vector<std::string>& variables,
    const std::vector<std::vector<std::string>>& clauses) {
  if (variables.size() > 24) {
    throw Error(ErrorCode::kInvalidArgument,
                "judgment encoding supports at most 24 variables");
  }
  std::unordered_map<std::string, int> var_index;
  for (int v = 0; v < static_cast<int>(variables.size()); ++v) {
    if (!var_index.emplace(variables[v], v).second) {
      throw Error(ErrorCode::kDuplicateId, "variable '" + variables[v] + "'");
    }
  }
  // Each clause as (positive mask, negative mask).
  std::vector<std::pair<std::uint64_t, std::uint64_t>> compiled;
  for (const auto& clause : clauses) {
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
    for (const std::string& lit : clause) {
      ParsedLiteral p = parse_literal(lit);
      auto it = var_index.find(p.variable);
      if (it == var_index.end()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "clause mentions unknown variable '" + p.variable + "'");
      }
      (p.value ? pos : neg) |= std::uint64_t{1} << it->second;
    }
    compiled.emplace_back(pos, neg);
  }
  std::vector<std::uint64_t> models;
  std::uint64_t total = std::uint64_t{1} << variables.size();
  for (std::uint64_t a = 0; a < total; ++a) {
    bool ok = true;
    for (auto [pos, neg] : compiled) {
      if ((a & pos) == 0 && (~a & neg) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) models.push_back(a);
  }
  if (models.empty()) {
    throw Error(ErrorCode::kUnsatisfiableClauses,
                "no assignment satisfies every clause");
  }
  return models;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

std::string_view system_kind_name(SystemKind kind) {
  switch (kind) {
    case SystemKind::kCommittee:
      return "committee";
    case SystemKind::kPublicDecisions:
      return "public-decisions";
    case SystemKind::kDisjointAttributes:
      return "disjoint-attributes";
    case SystemKind::kBudget:
      return "budget";
    case SystemKind::kExplicit:
      return "explicit";
    case SystemKind::kRanking:
      return "ranking";
    case SystemKind::kNegativeVotes:
      return "negative-votes";
    case SystemKind::kJudgment:
      return "judgment";
  }
  return "unknown";
}

SystemKind spec_kind(const ConstraintSpec& spec) {
  return std::visit(
      Overloaded{
          [](const CommitteeSpec&) { return SystemKind::kCommittee; },
          [](const PublicDecisionsSpec&) {
            return SystemKind::kPublicDecisions;
          },
          [](const DisjointAttributesSpec&) {
            return SystemKind::kDisjointAttributes;
          },
          [](const BudgetSpec&) { return SystemKind::kBudget; },
          [](const ExplicitSpec&) { return SystemKind::kExplicit; },
          [](const RankingSpec&) { return SystemKind::kRanking; },
          [](const NegativeVotesSpec&) { return SystemKind::kNegativeVotes; },
          [](const JudgmentSpec&) { return SystemKind::kJudgment; },
      },
      spec);
}

FeasibilitySystem::FeasibilitySystem(std::shared_ptr<const detail::Oracle> o)
    : oracle_(std::move(o)) {}

SystemKind FeasibilitySystem::kind() const { return oracle_->kind(); }
int FeasibilitySystem::universe_size() const { return oracle_->m(); }
const ConstraintSpec& FeasibilitySystem::spec() const {
  return oracle_->spec();
}
const std::vector<std::vector<int>>& FeasibilitySystem::symmetry_classes()
    const {
  return oracle_->classes();
}

bool FeasibilitySystem::is_feasible(const CandidateSet& w) const {
  if (w.max_element() >= oracle_->m()) {
    throw Error(ErrorCode::kUnknownCandidate,
                "index " + std::to_string(w.max_element()) +
                    " outside the universe");
  }
  return oracle_->feasible(w);
}

bool FeasibilitySystem::can_extend(const CandidateSet& w, int c) const {
  if (!is_feasible(w)) {
    throw Error(ErrorCode::kInfeasibleOutcome, "can_extend on infeasible W");
  }
  if (c < 0 || c >= oracle_->m()) {
    throw Error(ErrorCode::kUnknownCandidate, "index " + std::to_string(c));
  }
  if (w.contains(c)) return true;
  CandidateSet next = w;
  next.insert(c);
  return oracle_->feasible(next);
}

FeasibilitySystem build_system(const ConstraintSpec& spec,
                               const std::vector<std::string>& ids,
                               const std::vector<Rational>& weights) {
  const int m = static_cast<int>(ids.size());
  if (m > kMaxCandidates) {
    throw Error(ErrorCode::kInvalidArgument,
                "at most " + std::to_string(kMaxCandidates) + " candidates");
  }
  IdIndex index(ids);

  return std::visit(
      Overloaded{
          [&](const CommitteeSpec& s) -> FeasibilitySystem {
            if (s.k <= 0) {
              throw Error(ErrorCode::kInvalidArgument, "committee k must be positive");
            }
            return FeasibilitySystem(
                std::make_shared<CommitteeOracle>(m, spec, s.k));
          },
          [&](const PublicDecisionsSpec& s) -> FeasibilitySystem {
            std::vector<std::pair<int, int>> pairs;
            CandidateSet seen;
            for (const auto& [yes, no] : s.issues) {
              int a = index.at(yes);
              int b = index.at(no);
              if (a == b || seen.contains(a) || seen.contains(b)) {
                throw Error(ErrorCode::kOverlappingGroups,
                            "issue pairs must be disjoint");
              }
              seen.insert(a);
              seen.insert(b);
              pairs.emplace_back(a, b);
            }
            if (seen.size() != m) {
              throw Error(ErrorCode::kInvalidArgument,
                          "issue pairs must cover every candidate");
            }
            return FeasibilitySystem(std::make_shared<PublicDecisionsOracle>(
                m, spec, std::move(pairs)));
          },
          [&](const DisjointAttributesSpec& s) -> FeasibilitySystem {
            if (s.k <= 0) {
              throw Error(ErrorCode::kInvalidArgument, "k must be positive");
            }
            std::vector<DisjointAttributesOracle::Group> groups;
            std::vector<std::vector<int>> classes;
            CandidateSet seen;
            int lower_sum = 0;
            int cap_sum = 0;
            for (const AttributeGroupSpec& g : s.groups) {
              DisjointAttributesOracle::Group group;
              std::vector<int> members = resolve_all(index, g.members);
              for (int c : members) {
                if (seen.contains(c) || group.members.contains(c)) {
                  throw Error(ErrorCode::kOverlappingGroups,
                              "candidate '" + ids[c] + "' in two groups");
                }
                group.members.insert(c);
              }
              seen |= group.members;
              if (g.lower < 0 || g.upper < 0) {
                throw Error(ErrorCode::kInvalidArgument, "negative quota");
              }
              group.lower = g.lower;
              group.cap = std::min<int>(g.upper, members.size());
              if (group.lower > group.cap) {
                throw Error(ErrorCode::kUnsatisfiableQuotas,
                            "lower quota exceeds what the group can supply");
              }
              lower_sum += group.lower;
              cap_sum += group.cap;
              groups.push_back(group);
              std::sort(members.begin(), members.end());
              if (!members.empty()) classes.push_back(members);
            }
            if (seen.size() != m) {
              throw Error(ErrorCode::kInvalidArgument,
                          "attribute groups must cover every candidate");
            }
            if (lower_sum > s.k || s.k > cap_sum) {
              throw Error(ErrorCode::kUnsatisfiableQuotas,
                          "need sum of lower quotas <= k <= sum of capacities");
            }
            std::sort(classes.begin(), classes.end());
            return FeasibilitySystem(std::make_shared<DisjointAttributesOracle>(
                m, spec, s.k, std::move(groups), std::move(classes)));
          },
          [&](const BudgetSpec& s) -> FeasibilitySystem {
            if (static_cast<int>(weights.size()) != m) {
              throw Error(ErrorCode::kInvalidArgument, "missing weights");
            }
            std::vector<BudgetOracle::Limit> limits;
            for (const BudgetLimitSpec& l : s.limits) {
              BudgetOracle::Limit limit;
              if (l.members.empty()) {
                limit.members = CandidateSet::prefix(m);
              } else {
                for (int c : resolve_all(index, l.members)) {
                  limit.members.insert(c);
                }
              }
              if (l.limit < 0) {
                throw Error(ErrorCode::kInvalidArgument, "negative budget");
              }
              limit.limit = l.limit;
              limits.push_back(limit);
            }
            // Candidates are interchangeable when they share cost and the
            // limits they belong to.
            std::map<std::pair<Rational, std::vector<int>>, std::vector<int>>
                by_signature;
            for (int c = 0; c < m; ++c) {
              std::vector<int> sig;
              for (int j = 0; j < static_cast<int>(limits.size()); ++j) {
                if (limits[j].members.contains(c)) sig.push_back(j);
              }
              by_signature[{weights[c], sig}].push_back(c);
            }
            std::vector<std::vector<int>> classes;
            for (auto& [key, members] : by_signature) {
              classes.push_back(std::move(members));
            }
            std::sort(classes.begin(), classes.end());
            return FeasibilitySystem(std::make_shared<BudgetOracle>(
                m, spec, weights, std::move(limits), std::move(classes)));
          },
          [&](const ExplicitSpec& s) -> FeasibilitySystem {
            std::vector<CandidateSet> sets;
            for (const auto& listed : s.feasible) {
              sets.push_back(CandidateSet::from_indices(resolve_all(index, listed)));
            }
            return FeasibilitySystem(
                std::make_shared<ExplicitOracle>(m, spec, std::move(sets)));
          },
          [&](const RankingSpec& s) -> FeasibilitySystem {
            EncodedDomain domain = encode_ranking(s.items);
            require_universe(ids, domain.universe, "ranking");
            int d = static_cast<int>(s.items.size());
            std::vector<std::pair<int, int>> edges(m);
            for (int a = 0; a < d; ++a) {
              for (int b = 0; b < d; ++b) {
                if (a == b) continue;
                edges[index.at(ranking_pair_id(s.items[a], s.items[b]))] = {a, b};
              }
            }
            return FeasibilitySystem(
                std::make_shared<RankingOracle>(m, spec, d, std::move(edges)));
          },
          [&](const NegativeVotesSpec& s) -> FeasibilitySystem {
            EncodedDomain domain = encode_negative_votes(s.items, s.k);
            require_universe(ids, domain.universe, "negative-votes");
            std::vector<std::pair<int, int>> pairs;
            for (const std::string& item : s.items) {
              pairs.emplace_back(index.at(item), index.at(negated_id(item)));
            }
            return FeasibilitySystem(std::make_shared<NegativeVotesOracle>(
                m, spec, s.k, std::move(pairs)));
          },
          [&](const JudgmentSpec& s) -> FeasibilitySystem {
            EncodedDomain domain = encode_judgment(s.variables, s.clauses);
            require_universe(ids, domain.universe, "judgment");
            std::vector<std::pair<int, bool>> literal_of(m);
            for (int v = 0; v < static_cast<int>(s.variables.size()); ++v) {
              literal_of[index.at(judgment_id(s.variables[v], true))] = {v, true};
              literal_of[index.at(judgment_id(s.variables[v], false))] = {v,
                                                                          false};
            }
            return FeasibilitySystem(std::make_shared<JudgmentOracle>(
                m, spec, std::move(literal_of),
                satisfying_models(s.variables, s.clauses)));
          },
      },
      spec);
}

std::string ranking_pair_id(std::string_view above, std::string_view below) {
  return std::string(above) + ">" + std::string(below);
}

std::string negated_id(std::string_view item) {
  return "!" + std::string(item);
}

std::string judgment_id(std::string_view variable, bool value) {
  return std::string(variable) + (value ? "=T" : "=F");
}

EncodedDomain encode_ranking(const std::vector<std::string>& items) {
  if (items.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "ranking needs two items");
  }
  EncodedDomain out;
  for (const std::string& a : items) {
    for (const std::string& b : items) {
      if (a == b) continue;
      out.universe.push_back(ranking_pair_id(a, b));
      out.meaning.push_back(a + " ranked above " + b);
    }
  }
  out.spec = RankingSpec{items};
  return out;
}

EncodedDomain encode_negative_votes(const std::vector<std::string>& items,
                                    int k) {
  if (k < 0 || k > static_cast<int>(items.size())) {
    throw Error(ErrorCode::kInvalidArgument, "need 0 <= k <= item count");
  }
  EncodedDomain out;
  for (const std::string& c : items) {
    out.universe.push_back(c);
    out.meaning.push_back(c + " elected");
  }
  for (const std::string& c : items) {
    out.universe.push_back(negated_id(c));
    out.meaning.push_back(c + " not elected");
  }
  out.spec = NegativeVotesSpec{items, k};
  return out;
}

EncodedDomain encode_judgment(
    const std::vector<std::string>& variables,
    const std::vector<std::vector<std::string>>& clauses) {
  satisfying_models(variables, clauses);
  EncodedDomain out;
  for (const std::string& x : variables) {
    out.universe.push_back(judgment_id(x, true));
    out.meaning.push_back(x + " is true");
    out.universe.push_back(judgment_id(x, false));
    out.meaning.push_back(x + " is false");
  }
  out.spec = JudgmentSpec{variables, clauses};
  return out;
}

namespace {

class CapCounter {
 public:
  explicit CapCounter(std::uint64_t cap) : cap_(cap) {}
  void tick() {
    if (++count_ > cap_) {
      throw Error(ErrorCode::kEnumerationCapExceeded,
                  "more than " + std::to_string(cap_) + " sets");
    }
  }

 private:
  std::uint64_t cap_;
  std::uint64_t count_ = 0;
};

// Returns false once the visitor asked to stop.
bool feasible_dfs(const FeasibilitySystem& system, CandidateSet& current,
                  int next, CapCounter& counter,
                  const std::function<bool(const CandidateSet&)>& visit) {
  counter.tick();
  if (!visit(current)) return false;
  for (int c = next; c < system.universe_size(); ++c) {
    current.insert(c);
    bool go_on = !system.is_feasible(current) ||
                 feasible_dfs(system, current, c + 1, counter, visit);
    current.erase(c);
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

void for_each_feasible(const FeasibilitySystem& system,
                       const std::function<bool(const CandidateSet&)>& visit,
                       std::uint64_t cap) {
  CapCounter counter(cap);
  CandidateSet current;
  feasible_dfs(system, current, 0, counter, visit);
}

std::vector<CandidateSet> enumerate_feasible(const FeasibilitySystem& system,
                                             std::uint64_t cap) {
  std::vector<CandidateSet> out;
  for_each_feasible(
      system,
      [&](const CandidateSet& w) {
        out.push_back(w);
        return true;
      },
      cap);
  return out;
}

bool is_maximal(const FeasibilitySystem& system, const CandidateSet& w) {
  for (int c = 0; c < system.universe_size(); ++c) {
    if (!w.contains(c) && system.can_extend(w, c)) return false;
  }
  return true;
}

std::vector<CandidateSet> enumerate_maximal(const FeasibilitySystem& system,
                                            std::uint64_t cap) {
  std::vector<CandidateSet> out;
  for_each_feasible(
      system,
      [&](const CandidateSet& w) {
        if (is_maximal(system, w)) out.push_back(w);
        return true;
      },
      cap);
  return out;
}

std::optional<MatroidWitness> check_exchange_property(
    const FeasibilitySystem& system, std::uint64_t cap) {
  std::vector<CandidateSet> sets = enumerate_feasible(system, cap);
  const int m = system.universe_size();
  std::vector<std::vector<CandidateSet>> by_size(m + 1);
  for (const CandidateSet& s : sets) by_size[s.size()].push_back(s);

  for (int size = 0; size <= m; ++size) {
    std::optional<MatroidWitness> best;
    int best_gap = 0;
    for (const CandidateSet& x : by_size[size]) {
      CandidateSet blocked;
      for (int c = 0; c < m; ++c) {
        if (!x.contains(c) && !system.can_extend(x, c)) blocked.insert(c);
      }
      if (blocked.empty() || size == m) continue;
      // A larger Y can always be cut down to |X| + 1 members without
      // growing Y \ X, so those are the only ones worth looking at.
      for (const CandidateSet& y : by_size[size + 1]) {
        CandidateSet fresh = y - x;
        if (!fresh.is_subset_of(blocked)) continue;
        int gap = fresh.size();
        if (!best || gap < best_gap ||
            (gap == best_gap &&
             (x < best->x || (x == best->x && y < best->y)))) {
          best = MatroidWitness{x, y};
          best_gap = gap;
        }
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

bool validate_witness(const FeasibilitySystem& system,
                      const MatroidWitness& witness) {
  if (!system.is_feasible(witness.x) || !system.is_feasible(witness.y)) {
    return false;
  }
  if (witness.x.size() >= witness.y.size()) return false;
  bool ok = true;
  (witness.y - witness.x).for_each([&](int c) {
    if (system.can_extend(witness.x, c)) ok = false;
  });
  return ok;
}

int one_swap(const FeasibilitySystem& system, const CandidateSet& w,
             const CandidateSet& w_prime, int c) {
  if (w_prime.empty() || !w_prime.is_subset_of(w) || w.contains(c)) {
    throw Error(ErrorCode::kInvalidArgument,
                "one_swap needs a nonempty W' inside W and c outside W");
  }
  CandidateSet base = w - w_prime;
  base.insert(c);
  if (!system.is_feasible(base) || !system.is_feasible(w)) {
    throw Error(ErrorCode::kInvalidArgument,
                "one_swap needs W and (W \\ W') + c feasible");
  }
  std::optional<int> found;
  w_prime.for_each([&](int candidate) {
    if (found) return;
    CandidateSet swapped = w;
    swapped.erase(candidate);
    swapped.insert(c);
    if (system.is_feasible(swapped)) found = candidate;
  });
  if (!found) {
    throw Error(ErrorCode::kNotAMatroid, "no element of W' can be swapped out");
  }
  return *found;
}

std::vector<std::vector<int>> refine_partition(
    const std::vector<std::vector<int>>& classes,
    const std::vector<CandidateSet>& sets) {
  std::vector<std::vector<int>> out;
  for (const auto& cls : classes) {
    std::map<std::vector<bool>, std::vector<int>> parts;
    for (int c : cls) {
      std::vector<bool> sig;
      sig.reserve(sets.size());
      for (const CandidateSet& s : sets) sig.push_back(s.contains(c));
      parts[sig].push_back(c);
    }
    for (auto& [sig, members] : parts) out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> refine_partition_by_key(
    const std::vector<std::vector<int>>& classes, const std::vector<int>& key) {
  std::vector<std::vector<int>> out;
  for (const auto& cls : classes) {
    std::map<int, std::vector<int>> parts;
    for (int c : cls) parts[key[c]].push_back(c);
    for (auto& [k, members] : parts) out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CountSpace::CountSpace(FeasibilitySystem system,
                       std::vector<std::vector<int>> classes)
    : system_(std::move(system)), classes_(std::move(classes)) {
  class_of_.assign(system_.universe_size(), -1);
  for (int k = 0; k < num_classes(); ++k) {
    std::sort(classes_[k].begin(), classes_[k].end());
    for (int c : classes_[k]) class_of_[c] = k;
  }
}

CandidateSet CountSpace::representative(const std::vector<int>& counts) const {
  CandidateSet out;
  for (int k = 0; k < num_classes(); ++k) {
    for (int j = 0; j < counts[k]; ++j) out.insert(classes_[k][j]);
  }
  return out;
}

bool CountSpace::is_feasible(const std::vector<int>& counts) const {
  return system_.is_feasible(representative(counts));
}

std::vector<int> CountSpace::counts_of(const CandidateSet& w) const {
  std::vector<int> counts(num_classes(), 0);
  w.for_each([&](int c) { ++counts[class_of_[c]]; });
  return counts;
}

void CountSpace::for_each_feasible(
    const std::function<bool(const std::vector<int>&)>& visit,
    std::uint64_t cap) const {
  CapCounter counter(cap);
  std::vector<int> counts(num_classes(), 0);
  CandidateSet current;
  bool stopped = false;
  // Classes are filled in order; a prefix of class k is added one member at a
  // time and the loop stops at the first infeasible count.
  std::function<void(int)> rec = [&](int k) {
    if (stopped) return;
    if (k == num_classes()) {
      counter.tick();
      if (!visit(counts)) stopped = true;
      return;
    }
    rec(k + 1);
    int t = 1;
    for (; t <= class_size(k) && !stopped; ++t) {
      current.insert(classes_[k][t - 1]);
      if (!system_.is_feasible(current)) break;
      counts[k] = t;
      rec(k + 1);
    }
    for (int j = 0; j < class_size(k); ++j) current.erase(classes_[k][j]);
    counts[k] = 0;
  };
  rec(0);
}

}  // namespace propcon
