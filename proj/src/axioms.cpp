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

#include "propcon/axioms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "propcon/error.hpp"

namespace propcon {
namespace {

constexpr int kMaxSubsetVoters = 20;

// |S|/n > l/(t + l), cross-multiplied.
bool ratio_holds(int s, int n, int t, int l) {
  return static_cast<long long>(s) * (t + l) > static_cast<long long>(n) * l;
}

bool ratio_holds(int s, int n, const Rational& t, const Rational& l) {
  return Rational(s) * (t + l) > Rational(n) * l;
}

void check_group(const Election& e, const std::vector<int>& group) {
  if (group.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "group must be nonempty");
  }
  for (std::size_t j = 0; j < group.size(); ++j) {
    if (group[j] < 0 || group[j] >= e.num_voters()) {
      throw Error(ErrorCode::kUnknownVoter, "index " + std::to_string(group[j]));
    }
    if (j > 0 && group[j] <= group[j - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "group must be strictly increasing");
    }
  }
}

void check_outcome(const Election& e, const CandidateSet& w) {
  if (!e.feasibility().is_feasible(w)) {
    throw Error(ErrorCode::kInfeasibleOutcome, "W is not feasible");
  }
}

CandidateSet common_approvals(const Election& e, const std::vector<int>& group) {
  CandidateSet common = e.ballot(group.front());
  for (int i : group) common &= e.ballot(i);
  return common;
}

CandidateSet union_approvals(const Election& e, const std::vector<int>& group) {
  CandidateSet all;
  for (int i : group) all |= e.ballot(i);
  return all;
}

bool has_nontrivial_class(const FeasibilitySystem& system) {
  for (const auto& cls : system.symmetry_classes()) {
    if (cls.size() > 1) return true;
  }
  return false;
}

// Enumerates k-subsets of `pool` (ascending) until `visit` returns false.
bool for_each_combination(const std::vector<int>& pool, int k,
                          const std::function<bool(const CandidateSet&)>& visit) {
  if (k < 0 || k > static_cast<int>(pool.size())) return true;
  CandidateSet current;
  std::function<bool(int, int)> rec = [&](int start, int left) {
    if (left == 0) return visit(current);
    for (int j = start; j + left <= static_cast<int>(pool.size()); ++j) {
      current.insert(pool[j]);
      bool go_on = rec(j + 1, left - 1);
      current.erase(pool[j]);
      if (!go_on) return false;
    }
    return true;
  };
  return rec(0, k);
}

// Distinct weights of beta-subsets of `pool`, ascending.
std::vector<Rational> subset_weights(const Election& e, const CandidateSet& pool,
                                     int beta, std::uint64_t cap) {
  std::vector<int> members = pool.indices();
  if (beta > static_cast<int>(members.size())) return {};
  bool uniform = true;
  for (int c : members) uniform = uniform && e.weight(c) == e.weight(members[0]);
  if (uniform) {
    return {members.empty() ? Rational(0) : e.weight(members[0]) * beta};
  }
  std::set<Rational> weights;
  std::uint64_t seen = 0;
  for_each_combination(members, beta, [&](const CandidateSet& x) {
    if (++seen > cap) {
      throw Error(ErrorCode::kEnumerationCapExceeded, "subset weights");
    }
    weights.insert(e.weight(x));
    return true;
  });
  return {weights.begin(), weights.end()};
}

std::vector<Rational> type_achievable(const Election& e, int type,
                                      std::uint64_t cap) {
  int voter = e.type_members(type).front();
  std::set<Rational> values;
  switch (e.utility_mode()) {
    case UtilityMode::kApproval:
      for (int v = 0; v <= e.ballot(voter).size(); ++v) values.insert(v);
      break;
    case UtilityMode::kAdditive: {
      std::vector<int> support = e.ballot(voter).indices();
      if (support.size() >= 63 ||
          (std::uint64_t{1} << support.size()) > cap) {
        throw Error(ErrorCode::kEnumerationCapExceeded,
                    "achievable additive utilities");
      }
      const std::vector<Rational>& vals = e.additive_values(voter);
      std::vector<Rational> sums{Rational(0)};
      for (int c : support) {
        std::size_t size = sums.size();
        for (std::size_t j = 0; j < size; ++j) sums.push_back(sums[j] + vals[c]);
      }
      values.insert(sums.begin(), sums.end());
      break;
    }
    case UtilityMode::kTable: {
      int m = e.num_candidates();
      for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        CandidateSet x;
        for (int c = 0; c < m; ++c) {
          if (mask >> c & 1) x.insert(c);
        }
        values.insert(e.utility(voter, x));
      }
      break;
    }
  }
  return {values.begin(), values.end()};
}

class ClaimEngine {
 public:
  ClaimEngine(const Election& e, const AuditOptions& options)
      : e_(e), options_(options), system_(e.feasibility()) {
    switch (options.enumeration) {
      case Enumeration::kPlain:
        symmetric_ = false;
        break;
      case Enumeration::kSymmetric:
        symmetric_ = true;
        break;
      case Enumeration::kAuto:
        symmetric_ = has_nontrivial_class(system_);
        break;
    }
  }

  std::uint64_t sets_examined() const { return sets_examined_; }

  ClaimCheck deserves(int s, const CandidateSet& common, int ell) {
    auto key = std::make_tuple(s, common, ell);
    auto it = deserves_memo_.find(key);
    if (it != deserves_memo_.end()) return it->second;
    ClaimCheck result = symmetric_ ? deserves_symmetric(s, common, ell)
                                   : deserves_plain(s, common, ell);
    sets_examined_ += result.sets_examined;
    deserves_memo_.emplace(key, result);
    return result;
  }

  ClaimCheck deserves_weighted(int s, const CandidateSet& common,
                               const Rational& alpha, int beta) {
    auto key = std::make_tuple(s, common, alpha, beta);
    auto it = weighted_memo_.find(key);
    if (it != weighted_memo_.end()) return it->second;
    ClaimCheck result = symmetric_
                            ? deserves_weighted_symmetric(s, common, alpha, beta)
                            : deserves_weighted_plain(s, common, alpha, beta);
    sets_examined_ += result.sets_examined;
    weighted_memo_.emplace(key, result);
    return result;
  }

  // beta[j] is the threshold of group[j]. alpha < 0 selects adaptive mode.
  ClaimCheck cohesive(const std::vector<int>& group, int alpha,
                      const std::vector<Rational>& beta) {
    Requirement req = requirement(group, beta);
    bool symmetric =
        symmetric_ && e_.utility_mode() != UtilityMode::kTable;
    ClaimCheck result = symmetric ? cohesive_symmetric(req, alpha)
                                  : cohesive_plain(req, alpha);
    sets_examined_ += result.sets_examined;
    return result;
  }

  ClaimCheck blocks_restrained(const CandidateSet& w,
                               const std::vector<int>& group, int k);

 private:
  // Distinct voter types in a group with the largest threshold per type.
  struct Requirement {
    int size = 0;
    std::vector<int> types;
    std::vector<Rational> beta;
  };

  Requirement requirement(const std::vector<int>& group,
                          const std::vector<Rational>& beta) const {
    Requirement req;
    req.size = static_cast<int>(group.size());
    std::map<int, Rational> by_type;
    for (std::size_t j = 0; j < group.size(); ++j) {
      int t = e_.type_of(group[j]);
      auto [it, inserted] = by_type.emplace(t, beta[j]);
      if (!inserted && it->second < beta[j]) it->second = beta[j];
    }
    for (auto& [t, b] : by_type) {
      req.types.push_back(t);
      req.beta.push_back(b);
    }
    return req;
  }

  bool satisfies(const Requirement& req, const CandidateSet& x) const {
    for (std::size_t j = 0; j < req.types.size(); ++j) {
      int voter = e_.type_members(req.types[j]).front();
      if (e_.utility(voter, x) < req.beta[j]) return false;
    }
    return true;
  }

  const std::vector<CandidateSet>& family() {
    if (!family_) family_ = enumerate_feasible(system_, options_.cap);
    return *family_;
  }

  // Some need-subset Z of pool with base + Z feasible.
  bool extension_exists(const CandidateSet& base, const std::vector<int>& pool,
                        int need) const {
    CandidateSet current = base;
    std::function<bool(int, int)> rec = [&](int start, int left) {
      if (left == 0) return true;
      for (int j = start; j + left <= static_cast<int>(pool.size()); ++j) {
        current.insert(pool[j]);
        bool ok = system_.is_feasible(current) && rec(j + 1, left - 1);
        current.erase(pool[j]);
        if (ok) return true;
      }
      return false;
    };
    return rec(0, need);
  }

  ClaimCheck deserves_plain(int s, const CandidateSet& common, int ell) {
    const int n = e_.num_voters();
    ClaimCheck out;
    out.holds = true;
    for (const CandidateSet& t : family()) {
      ++out.sets_examined;
      if (ratio_holds(s, n, t.size(), ell)) continue;
      int need = ell - t.intersection_size(common);
      if (need <= 0) continue;
      if (!extension_exists(t, (common - t).indices(), need)) {
        out.holds = false;
        out.refuting_set = t;
        break;
      }
    }
    return out;
  }

  // Adds `need` members from the listed classes on top of counts `t`.
  bool count_extension_exists(const CountSpace& space, std::vector<int> t,
                              const std::vector<int>& classes, int need) const {
    CandidateSet current = space.representative(t);
    std::function<bool(int, int)> rec = [&](int j, int left) {
      if (left == 0) return true;
      if (j == static_cast<int>(classes.size())) return false;
      int k = classes[j];
      int room = space.class_size(k) - t[k];
      // Try the largest feasible addition first, then fewer.
      int added = 0;
      while (added < std::min(room, left)) {
        current.insert(space.members(k)[t[k] + added]);
        if (!system_.is_feasible(current)) {
          current.erase(space.members(k)[t[k] + added]);
          break;
        }
        ++added;
      }
      for (int a = added; a >= 0; --a) {
        if (rec(j + 1, left - a)) return true;
        if (a > 0) current.erase(space.members(k)[t[k] + a - 1]);
      }
      return false;
    };
    return rec(0, need);
  }

  ClaimCheck deserves_symmetric(int s, const CandidateSet& common, int ell) {
    const int n = e_.num_voters();
    CountSpace space(system_, refine_partition(system_.symmetry_classes(), {common}));
    std::vector<int> inside;
    for (int k = 0; k < space.num_classes(); ++k) {
      if (common.contains(space.members(k).front())) inside.push_back(k);
    }
    ClaimCheck out;
    out.holds = true;
    space.for_each_feasible(
        [&](const std::vector<int>& t) {
          ++out.sets_examined;
          int size = 0;
          int in = 0;
          for (int k = 0; k < space.num_classes(); ++k) size += t[k];
          for (int k : inside) in += t[k];
          if (ratio_holds(s, n, size, ell)) return true;
          int need = ell - in;
          if (need <= 0) return true;
          if (count_extension_exists(space, t, inside, need)) return true;
          out.holds = false;
          out.refuting_set = space.representative(t);
          return false;
        },
        options_.cap);
    return out;
  }

  // Some beta-subset X of pool with weight(X) <= alpha and base + X feasible.
  bool weighted_extension_exists(const CandidateSet& base,
                                 const std::vector<int>& pool,
                                 const Rational& alpha, int beta) const {
    CandidateSet current = base;
    std::function<bool(int, int, const Rational&)> rec =
        [&](int start, int left, const Rational& spent) {
          if (left == 0) return true;
          for (int j = start; j + left <= static_cast<int>(pool.size()); ++j) {
            int c = pool[j];
            Rational next = spent + e_.weight(c);
            if (next > alpha) continue;
            bool was_in = current.contains(c);
            current.insert(c);
            bool ok = system_.is_feasible(current) && rec(j + 1, left - 1, next);
            if (!was_in) current.erase(c);
            if (ok) return true;
          }
          return false;
        };
    return rec(0, beta, Rational(0));
  }

  ClaimCheck deserves_weighted_plain(int s, const CandidateSet& common,
                                     const Rational& alpha, int beta) {
    const int n = e_.num_voters();
    std::vector<int> pool = common.indices();
    ClaimCheck out;
    out.holds = true;
    for (const CandidateSet& t : family()) {
      ++out.sets_examined;
      if (ratio_holds(s, n, e_.weight(t), alpha)) continue;
      if (!weighted_extension_exists(t, pool, alpha, beta)) {
        out.holds = false;
        out.refuting_set = t;
        break;
      }
    }
    return out;
  }

  ClaimCheck deserves_weighted_symmetric(int s, const CandidateSet& common,
                                         const Rational& alpha, int beta) {
    const int n = e_.num_voters();
    std::map<Rational, int> weight_key;
    std::vector<int> key(e_.num_candidates());
    for (int c = 0; c < e_.num_candidates(); ++c) {
      key[c] = weight_key.emplace(e_.weight(c), weight_key.size()).first->second;
    }
    CountSpace space(system_,
                     refine_partition_by_key(
                         refine_partition(system_.symmetry_classes(), {common}),
                         key));
    std::vector<int> inside;
    std::vector<Rational> class_weight(space.num_classes());
    for (int k = 0; k < space.num_classes(); ++k) {
      class_weight[k] = e_.weight(space.members(k).front());
      if (common.contains(space.members(k).front())) inside.push_back(k);
    }
    ClaimCheck out;
    out.holds = true;
    space.for_each_feasible(
        [&](const std::vector<int>& t) {
          ++out.sets_examined;
          Rational wt = 0;
          for (int k = 0; k < space.num_classes(); ++k) {
            if (t[k] != 0) wt += class_weight[k] * t[k];
          }
          if (ratio_holds(s, n, wt, alpha)) return true;
          // x over inside classes, sum beta, weight <= alpha, max(t, x)
          // feasible.
          std::vector<int> u = t;
          std::function<bool(int, int, const Rational&)> rec =
              [&](int j, int left, const Rational& spent) {
                if (left == 0) return space.is_feasible(u);
                if (j == static_cast<int>(inside.size())) return false;
                int k = inside[j];
                int limit = std::min(left, space.class_size(k));
                for (int x = limit; x >= 0; --x) {
                  Rational next = spent + class_weight[k] * x;
                  if (next > alpha) continue;
                  int saved = u[k];
                  u[k] = std::max(t[k], x);
                  bool ok = space.is_feasible(u) && rec(j + 1, left - x, next);
                  u[k] = saved;
                  if (ok) return true;
                }
                return false;
              };
          if (rec(0, beta, Rational(0))) return true;
          out.holds = false;
          out.refuting_set = space.representative(t);
          return false;
        },
        options_.cap);
    return out;
  }

  CandidateSet relevant_candidates(const Requirement& req) const {
    if (e_.utility_mode() == UtilityMode::kTable) return e_.universe();
    CandidateSet relevant;
    for (int t : req.types) relevant |= e_.ballot(e_.type_members(t).front());
    return relevant;
  }

  ClaimCheck cohesive_plain(const Requirement& req, int alpha) {
    const int n = e_.num_voters();
    const int m = e_.num_candidates();
    std::vector<CandidateSet> good;
    std::uint64_t budget = options_.cap;
    auto tick = [&]() {
      if (budget-- == 0) {
        throw Error(ErrorCode::kEnumerationCapExceeded, "candidate sets X");
      }
    };
    if (alpha >= 0) {
      std::vector<int> all(m);
      for (int c = 0; c < m; ++c) all[c] = c;
      for_each_combination(all, alpha, [&](const CandidateSet& x) {
        tick();
        if (satisfies(req, x)) good.push_back(x);
        return true;
      });
    } else {
      // Inclusion-minimal good sets, by increasing size.
      std::vector<int> pool = relevant_candidates(req).indices();
      for (int size = 0; size <= static_cast<int>(pool.size()); ++size) {
        std::vector<CandidateSet> found;
        for_each_combination(pool, size, [&](const CandidateSet& x) {
          tick();
          for (const CandidateSet& g : good) {
            if (g.is_subset_of(x)) return true;
          }
          if (satisfies(req, x)) found.push_back(x);
          return true;
        });
        good.insert(good.end(), found.begin(), found.end());
        if (size == 0 && !good.empty()) break;
      }
    }
    ClaimCheck out;
    out.holds = true;
    for (const CandidateSet& t : family()) {
      ++out.sets_examined;
      bool ok = false;
      for (const CandidateSet& x : good) {
        int size = alpha >= 0 ? alpha : x.size();
        if (ratio_holds(req.size, n, t.size(), size) ||
            system_.is_feasible(t | x)) {
          ok = true;
          break;
        }
      }
      if (!ok) {
        out.holds = false;
        out.refuting_set = t;
        break;
      }
    }
    return out;
  }

  ClaimCheck cohesive_symmetric(const Requirement& req, int alpha) {
    const int n = e_.num_voters();
    const int m = e_.num_candidates();
    const int types = static_cast<int>(req.types.size());
    // Candidates are split by their value to each involved type.
    std::map<std::vector<Rational>, int> value_key;
    std::vector<int> key(m);
    for (int c = 0; c < m; ++c) {
      std::vector<Rational> sig;
      for (int t : req.types) {
        int voter = e_.type_members(t).front();
        sig.push_back(e_.utility_mode() == UtilityMode::kApproval
                          ? Rational(e_.ballot(voter).contains(c) ? 1 : 0)
                          : e_.additive_values(voter)[c]);
      }
      key[c] = value_key.emplace(sig, value_key.size()).first->second;
    }
    CountSpace space(system_,
                     refine_partition_by_key(system_.symmetry_classes(), key));
    const int classes = space.num_classes();
    std::vector<std::vector<Rational>> value(types,
                                             std::vector<Rational>(classes));
    std::vector<bool> relevant(classes, false);
    for (int j = 0; j < types; ++j) {
      int voter = e_.type_members(req.types[j]).front();
      for (int k = 0; k < classes; ++k) {
        value[j][k] = e_.utility(voter, CandidateSet{space.members(k).front()});
        if (value[j][k] > 0) relevant[k] = true;
      }
    }
    auto is_good = [&](const std::vector<int>& x) {
      for (int j = 0; j < types; ++j) {
        Rational u = 0;
        for (int k = 0; k < classes; ++k) {
          if (x[k] != 0 && value[j][k] != 0) u += value[j][k] * x[k];
        }
        if (u < req.beta[j]) return false;
      }
      return true;
    };

    std::uint64_t budget = options_.cap;
    std::vector<std::vector<int>> good;
    std::vector<int> x(classes, 0);
    if (alpha >= 0) {
      std::function<void(int, int)> rec = [&](int k, int left) {
        if (k == classes) {
          if (left == 0) {
            if (budget-- == 0) {
              throw Error(ErrorCode::kEnumerationCapExceeded, "count vectors X");
            }
            if (is_good(x)) good.push_back(x);
          }
          return;
        }
        for (int v = std::min(left, space.class_size(k)); v >= 0; --v) {
          x[k] = v;
          rec(k + 1, left - v);
        }
        x[k] = 0;
      };
      rec(0, alpha);
    } else {
      std::vector<std::vector<int>> all_good;
      std::function<void(int)> rec = [&](int k) {
        if (k == classes) {
          if (budget-- == 0) {
            throw Error(ErrorCode::kEnumerationCapExceeded, "count vectors X");
          }
          if (is_good(x)) all_good.push_back(x);
          return;
        }
        int top = relevant[k] ? space.class_size(k) : 0;
        for (int v = 0; v <= top; ++v) {
          x[k] = v;
          rec(k + 1);
        }
        x[k] = 0;
      };
      rec(0);
      for (const auto& g : all_good) {
        bool minimal = true;
        for (const auto& h : all_good) {
          if (&h == &g) continue;
          bool below = true;
          for (int k = 0; k < classes && below; ++k) below = h[k] <= g[k];
          if (below) {
            minimal = false;
            break;
          }
        }
        if (minimal) good.push_back(g);
      }
    }
    std::vector<int> good_size;
    for (const auto& g : good) {
      int size = 0;
      for (int v : g) size += v;
      good_size.push_back(size);
    }

    ClaimCheck out;
    out.holds = true;
    std::vector<int> u(classes);
    space.for_each_feasible(
        [&](const std::vector<int>& t) {
          ++out.sets_examined;
          int size = 0;
          for (int v : t) size += v;
          for (std::size_t g = 0; g < good.size(); ++g) {
            int xs = alpha >= 0 ? alpha : good_size[g];
            if (ratio_holds(req.size, n, size, xs)) return true;
            for (int k = 0; k < classes; ++k) u[k] = std::max(t[k], good[g][k]);
            if (space.is_feasible(u)) return true;
          }
          out.holds = false;
          out.refuting_set = space.representative(t);
          return false;
        },
        options_.cap);
    return out;
  }

  const Election& e_;
  AuditOptions options_;
  FeasibilitySystem system_;
  bool symmetric_ = false;
  std::optional<std::vector<CandidateSet>> family_;
  std::map<std::tuple<int, CandidateSet, int>, ClaimCheck> deserves_memo_;
  std::map<std::tuple<int, CandidateSet, Rational, int>, ClaimCheck>
      weighted_memo_;
  std::uint64_t sets_examined_ = 0;
};

ClaimCheck ClaimEngine::blocks_restrained(const CandidateSet& w,
                                          const std::vector<int>& group,
                                          int k) {
  const int n = e_.num_voters();
  const int m = e_.num_candidates();
  const int s = static_cast<int>(group.size());
  const int endowment = static_cast<int>(static_cast<long long>(s) * k / n);
  int required = 0;
  for (int i : group) required = std::max(required, e_.approved_count(i, w));
  ++required;
  const CandidateSet common = common_approvals(e_, group);

  std::vector<int> universe(m);
  for (int c = 0; c < m; ++c) universe[c] = c;
  auto completable = [&](const CandidateSet& sub) {
    std::vector<int> pool;
    for (int c : universe) {
      if (!sub.contains(c)) pool.push_back(c);
    }
    return extension_exists(sub, pool, endowment);
  };

  ClaimCheck out;
  out.holds = true;
  std::vector<int> members = w.indices();
  const int max_size = std::min<int>(k - endowment, members.size());
  bool any_completable = false;
  for (int size = 0; size <= max_size && out.holds; ++size) {
    for_each_combination(members, size, [&](const CandidateSet& sub) {
      ++out.sets_examined;
      if (!completable(sub)) return true;
      any_completable = true;
      int need = required - sub.intersection_size(common);
      if (need <= 0) return true;
      if (need <= endowment &&
          extension_exists(sub, (common - sub).indices(), need)) {
        return true;
      }
      out.holds = false;
      out.refuting_set = sub;
      return false;
    });
  }
  // No completable sub-outcome at all: treated as non-blocking.
  if (out.holds && !any_completable) {
    out.holds = false;
    out.refuting_set = CandidateSet{};
  }
  sets_examined_ += out.sets_examined;
  return out;
}

std::vector<Rational> utilities_of(const Election& e,
                                   const std::vector<int>& group,
                                   const CandidateSet& w) {
  std::vector<Rational> out;
  for (int i : group) out.push_back(e.utility(i, w));
  return out;
}

std::vector<Rational> approval_counts_of(const Election& e,
                                         const std::vector<int>& group,
                                         const CandidateSet& w) {
  std::vector<Rational> out;
  for (int i : group) out.push_back(e.approved_count(i, w));
  return out;
}

std::vector<int> voters_of_mask(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

void require_subset_scale(const Election& e) {
  if (e.num_voters() > kMaxSubsetVoters) {
    throw Error(ErrorCode::kEnumerationCapExceeded,
                "voter-subset search needs at most 20 voters");
  }
}

// Calls visit(group) for every candidate group of the selected search mode
// until it returns false. Reduced groups are unions of whole voter types.
void for_each_type_union(const Election& e, GroupSearch search,
                         const std::function<bool(const std::vector<int>&)>&
                             visit) {
  if (search == GroupSearch::kAllSubsets) {
    require_subset_scale(e);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << e.num_voters());
         ++mask) {
      if (!visit(voters_of_mask(mask))) return;
    }
    return;
  }
  if (e.num_types() > kMaxSubsetVoters) {
    throw Error(ErrorCode::kEnumerationCapExceeded,
                "type-union search needs at most 20 voter types");
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << e.num_types());
       ++mask) {
    std::vector<int> group;
    for (int t = 0; t < e.num_types(); ++t) {
      if (mask >> t & 1) {
        const auto& members = e.type_members(t);
        group.insert(group.end(), members.begin(), members.end());
      }
    }
    std::sort(group.begin(), group.end());
    if (!visit(group)) return;
  }
}

AuditReport make_report(Axiom axiom) {
  AuditReport report;
  report.axiom = axiom;
  report.satisfied = true;
  return report;
}

void record_violation(AuditReport& report, GroupClaim claim,
                      std::vector<Rational> utilities) {
  report.satisfied = false;
  report.violation = Violation{std::move(claim), std::move(utilities)};
}

// Shared by EJR/PJR and their weighted forms: the screened group for a
// closure set Y at level `level`.
std::vector<int> ejr_group(const Election& e, const CandidateSet& w,
                           const CandidateSet& y, int level) {
  std::vector<int> group;
  for (int i = 0; i < e.num_voters(); ++i) {
    if (y.is_subset_of(e.ballot(i)) && e.approved_count(i, w) < level) {
      group.push_back(i);
    }
  }
  return group;
}

// PJR groups for Y and level: members of V_Y whose approved winners fit in a
// (level-1)-subset U of the winners V_Y approves.
void for_each_pjr_group(const Election& e, const CandidateSet& w,
                        const CandidateSet& y, int level,
                        const std::function<bool(const std::vector<int>&)>&
                            visit) {
  std::vector<int> v_y;
  CandidateSet covered;
  for (int i = 0; i < e.num_voters(); ++i) {
    if (y.is_subset_of(e.ballot(i))) {
      v_y.push_back(i);
      covered |= e.ballot(i) & w;
    }
  }
  if (v_y.empty()) return;
  if (covered.size() < level) {
    visit(v_y);
    return;
  }
  std::set<std::vector<int>> seen;
  for_each_combination(covered.indices(), level - 1, [&](const CandidateSet& u) {
    std::vector<int> group;
    for (int i : v_y) {
      if ((e.ballot(i) & w).is_subset_of(u)) group.push_back(i);
    }
    if (group.empty() || !seen.insert(group).second) return true;
    return visit(group);
  });
}

}  // namespace

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::kEjr:
      return "ejr";
    case Axiom::kPjr:
      return "pjr";
    case Axiom::kFjr:
      return "fjr";
    case Axiom::kFjrAdaptive:
      return "fjr-adaptive";
    case Axiom::kCore:
      return "core";
    case Axiom::kRestrainedEjr:
      return "restrained-ejr";
    case Axiom::kEjrWeighted:
      return "ejr-weighted";
    case Axiom::kPjrWeighted:
      return "pjr-weighted";
  }
  return "unknown";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (Axiom a : {Axiom::kEjr, Axiom::kPjr, Axiom::kFjr, Axiom::kFjrAdaptive,
                  Axiom::kCore, Axiom::kRestrainedEjr, Axiom::kEjrWeighted,
                  Axiom::kPjrWeighted}) {
    if (axiom_name(a) == name) return a;
  }
  return std::nullopt;
}

ClaimCheck deserves(const Election& election, const std::vector<int>& group,
                    int ell, const AuditOptions& options) {
  check_group(election, group);
  if (ell <= 0) return ClaimCheck{true, std::nullopt, 0};
  ClaimEngine engine(election, options);
  return engine.deserves(static_cast<int>(group.size()),
                         common_approvals(election, group), ell);
}

ClaimCheck deserves_weighted(const Election& election,
                             const std::vector<int>& group,
                             const Rational& alpha, int beta,
                             const AuditOptions& options) {
  check_group(election, group);
  if (alpha <= 0 || beta < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need alpha > 0 and beta >= 1");
  }
  ClaimEngine engine(election, options);
  return engine.deserves_weighted(static_cast<int>(group.size()),
                                  common_approvals(election, group), alpha,
                                  beta);
}

ClaimCheck cohesive(const Election& election, const std::vector<int>& group,
                    int alpha, const Rational& beta, CohesionMode mode,
                    const AuditOptions& options) {
  check_group(election, group);
  if (mode == CohesionMode::kFixed && alpha < 0) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be nonnegative");
  }
  ClaimEngine engine(election, options);
  return engine.cohesive(group, mode == CohesionMode::kFixed ? alpha : -1,
                         std::vector<Rational>(group.size(), beta));
}

ClaimCheck cohesive_per_voter(const Election& election,
                              const std::vector<int>& group, int alpha,
                              const std::vector<Rational>& beta,
                              const AuditOptions& options) {
  check_group(election, group);
  if (alpha < 0 || beta.size() != group.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "need alpha >= 0 and one threshold per member");
  }
  ClaimEngine engine(election, options);
  return engine.cohesive(group, alpha, beta);
}

ClaimCheck blocks_restrained(const Election& election, const CandidateSet& w,
                             const std::vector<int>& group, int k,
                             const AuditOptions& options) {
  check_group(election, group);
  check_outcome(election, w);
  ClaimEngine engine(election, options);
  return engine.blocks_restrained(w, group, k);
}

std::vector<CandidateSet> ballot_closure(const Election& election) {
  std::set<CandidateSet> distinct;
  for (int t = 0; t < election.num_types(); ++t) {
    distinct.insert(election.ballot(election.type_members(t).front()));
  }
  std::vector<CandidateSet> ballots(distinct.begin(), distinct.end());
  std::set<CandidateSet> closure(distinct.begin(), distinct.end());
  std::vector<CandidateSet> frontier(distinct.begin(), distinct.end());
  while (!frontier.empty()) {
    std::vector<CandidateSet> next;
    for (const CandidateSet& x : frontier) {
      for (const CandidateSet& b : ballots) {
        CandidateSet meet = x & b;
        if (closure.insert(meet).second) next.push_back(meet);
      }
    }
    frontier = std::move(next);
  }
  closure.erase(CandidateSet{});
  return {closure.begin(), closure.end()};
}

AuditReport audit_ejr(const Election& election, const CandidateSet& w,
                      const AuditOptions& options) {
  check_outcome(election, w);
  ClaimEngine engine(election, options);
  AuditReport report = make_report(Axiom::kEjr);
  auto test = [&](const std::vector<int>& group, int ell) {
    ++report.stats.groups_examined;
    CandidateSet common = common_approvals(election, group);
    if (common.size() < ell) return false;
    if (!engine.deserves(static_cast<int>(group.size()), common, ell).holds) {
      return false;
    }
    GroupClaim claim;
    claim.group = group;
    claim.ell = ell;
    record_violation(report, claim, approval_counts_of(election, group, w));
    return true;
  };
  if (options.groups == GroupSearch::kAllSubsets) {
    require_subset_scale(election);
    for (std::uint64_t mask = 1;
         mask < (std::uint64_t{1} << election.num_voters()); ++mask) {
      std::vector<int> group = voters_of_mask(mask);
      int best = 0;
      for (int i : group) best = std::max(best, election.approved_count(i, w));
      if (test(group, best + 1)) break;
    }
  } else {
    std::vector<CandidateSet> closure = ballot_closure(election);
    bool done = false;
    for (int ell = 1; ell <= election.num_candidates() && !done; ++ell) {
      for (const CandidateSet& y : closure) {
        if (y.size() < ell) continue;
        std::vector<int> group = ejr_group(election, w, y, ell);
        if (group.empty()) continue;
        if (test(group, ell)) {
          done = true;
          break;
        }
      }
    }
  }
  report.stats.sets_examined = engine.sets_examined();
  return report;
}

AuditReport audit_pjr(const Election& election, const CandidateSet& w,
                      const AuditOptions& options) {
  check_outcome(election, w);
  ClaimEngine engine(election, options);
  AuditReport report = make_report(Axiom::kPjr);
  auto test = [&](const std::vector<int>& group, int ell) {
    ++report.stats.groups_examined;
    CandidateSet common = common_approvals(election, group);
    if (common.size() < ell) return false;
    if (!engine.deserves(static_cast<int>(group.size()), common, ell).holds) {
      return false;
    }
    GroupClaim claim;
    claim.group = group;
    claim.ell = ell;
    record_violation(report, claim, approval_counts_of(election, group, w));
    return true;
  };
  if (options.groups == GroupSearch::kAllSubsets) {
    require_subset_scale(election);
    for (std::uint64_t mask = 1;
         mask < (std::uint64_t{1} << election.num_voters()); ++mask) {
      std::vector<int> group = voters_of_mask(mask);
      int covered = (union_approvals(election, group) & w).size();
      if (test(group, covered + 1)) break;
    }
  } else {
    std::vector<CandidateSet> closure = ballot_closure(election);
    bool done = false;
    for (int ell = 1; ell <= election.num_candidates() && !done; ++ell) {
      for (const CandidateSet& y : closure) {
        if (y.size() < ell) continue;
        for_each_pjr_group(election, w, y, ell,
                           [&](const std::vector<int>& group) {
                             done = test(group, ell);
                             return !done;
                           });
        if (done) break;
      }
    }
  }
  report.stats.sets_examined = engine.sets_examined();
  return report;
}

std::vector<Rational> achievable_utilities(const Election& election,
                                           std::uint64_t cap) {
  std::set<Rational> all;
  for (int t = 0; t < election.num_types(); ++t) {
    std::vector<Rational> v = type_achievable(election, t, cap);
    all.insert(v.begin(), v.end());
  }
  return {all.begin(), all.end()};
}

AuditReport audit_fjr(const Election& election, const CandidateSet& w,
                      CohesionMode mode, const AuditOptions& options) {
  check_outcome(election, w);
  ClaimEngine engine(election, options);
  AuditReport report = make_report(mode == CohesionMode::kFixed
                                       ? Axiom::kFjr
                                       : Axiom::kFjrAdaptive);
  std::vector<Rational> values = achievable_utilities(election, options.cap);
  const int m = election.num_candidates();
  for_each_type_union(election, options.groups, [&](const std::vector<int>& group) {
    std::vector<Rational> utilities = utilities_of(election, group, w);
    Rational best = *std::max_element(utilities.begin(), utilities.end());
    auto above = std::upper_bound(values.begin(), values.end(), best);
    if (above == values.end()) return true;
    const Rational beta = *above;
    ++report.stats.groups_examined;
    std::vector<Rational> betas(group.size(), beta);
    if (mode == CohesionMode::kAdaptive) {
      if (engine.cohesive(group, -1, betas).holds) {
        GroupClaim claim;
        claim.group = group;
        claim.beta = {beta};
        record_violation(report, claim, utilities);
        return false;
      }
      return true;
    }
    for (int alpha = 0; alpha <= m; ++alpha) {
      if (engine.cohesive(group, alpha, betas).holds) {
        GroupClaim claim;
        claim.group = group;
        claim.alpha = Rational(alpha);
        claim.beta = {beta};
        record_violation(report, claim, utilities);
        return false;
      }
    }
    return true;
  });
  report.stats.sets_examined = engine.sets_examined();
  return report;
}

AuditReport audit_core(const Election& election, const CandidateSet& w,
                       const AuditOptions& options) {
  check_outcome(election, w);
  ClaimEngine engine(election, options);
  AuditReport report = make_report(Axiom::kCore);
  std::vector<std::vector<Rational>> per_type;
  for (int t = 0; t < election.num_types(); ++t) {
    per_type.push_back(type_achievable(election, t, options.cap));
  }
  const int m = election.num_candidates();
  for_each_type_union(election, options.groups, [&](const std::vector<int>& group) {
    std::vector<Rational> utilities = utilities_of(election, group, w);
    std::vector<Rational> beta;
    for (std::size_t j = 0; j < group.size(); ++j) {
      const auto& values = per_type[election.type_of(group[j])];
      auto above = std::upper_bound(values.begin(), values.end(), utilities[j]);
      if (above == values.end()) return true;
      beta.push_back(*above);
    }
    ++report.stats.groups_examined;
    for (int alpha = 0; alpha <= m; ++alpha) {
      if (engine.cohesive(group, alpha, beta).holds) {
        GroupClaim claim;
        claim.group = group;
        claim.alpha = Rational(alpha);
        claim.beta = beta;
        record_violation(report, claim, utilities);
        return false;
      }
    }
    return true;
  });
  report.stats.sets_examined = engine.sets_examined();
  return report;
}

AuditReport audit_restrained_ejr(const Election& election,
                                 const CandidateSet& w, int k,
                                 const AuditOptions& options) {
  check_outcome(election, w);
  if (k <= 0) throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  ClaimEngine engine(election, options);
  AuditReport report = make_report(Axiom::kRestrainedEjr);
  const int n = election.num_voters();
  auto test = [&](const std::vector<int>& group) {
    ++report.stats.groups_examined;
    if (!engine.blocks_restrained(w, group, k).holds) return false;
    int best = 0;
    for (int i : group) best = std::max(best, election.approved_count(i, w));
    GroupClaim claim;
    claim.group = group;
    claim.ell = best + 1;
    claim.alpha = Rational(static_cast<long long>(group.size()) * k / n);
    record_violation(report, claim, approval_counts_of(election, group, w));
    return true;
  };
  if (options.groups == GroupSearch::kAllSubsets) {
    require_subset_scale(election);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      if (test(voters_of_mask(mask))) break;
    }
  } else {
    std::set<std::vector<int>> seen;
    bool done = false;
    for (const CandidateSet& y : ballot_closure(election)) {
      for (int ell = 1; ell <= election.num_candidates() && !done; ++ell) {
        std::vector<int> group = ejr_group(election, w, y, ell);
        if (group.empty() || !seen.insert(group).second) continue;
        done = test(group);
      }
      if (done) break;
    }
  }
  report.stats.sets_examined = engine.sets_examined();
  return report;
}

namespace {

AuditReport audit_weighted(const Election& election, const CandidateSet& w,
                           const AuditOptions& options, bool pjr) {
  check_outcome(election, w);
  ClaimEngine engine(election, options);
  AuditReport report = make_report(pjr ? Axiom::kPjrWeighted : Axiom::kEjrWeighted);
  auto test = [&](const std::vector<int>& group, int beta) {
    ++report.stats.groups_examined;
    CandidateSet common = common_approvals(election, group);
    if (common.size() < beta) return false;
    for (const Rational& alpha :
         subset_weights(election, common, beta, options.cap)) {
      if (engine
              .deserves_weighted(static_cast<int>(group.size()), common, alpha,
                                 beta)
              .holds) {
        GroupClaim claim;
        claim.group = group;
        claim.alpha = alpha;
        claim.beta = {Rational(beta)};
        record_violation(report, claim, approval_counts_of(election, group, w));
        return true;
      }
    }
    return false;
  };
  if (options.groups == GroupSearch::kAllSubsets) {
    require_subset_scale(election);
    for (std::uint64_t mask = 1;
         mask < (std::uint64_t{1} << election.num_voters()); ++mask) {
      std::vector<int> group = voters_of_mask(mask);
      int level = 0;
      if (pjr) {
        level = (union_approvals(election, group) & w).size();
      } else {
        for (int i : group) level = std::max(level, election.approved_count(i, w));
      }
      bool found = false;
      // Larger beta is not implied by smaller beta here: alpha moves too.
      for (int beta = level + 1; beta <= election.num_candidates(); ++beta) {
        if (test(group, beta)) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
  } else {
    std::vector<CandidateSet> closure = ballot_closure(election);
    bool done = false;
    for (int beta = 1; beta <= election.num_candidates() && !done; ++beta) {
      for (const CandidateSet& y : closure) {
        if (y.size() < beta) continue;
        if (pjr) {
          for_each_pjr_group(election, w, y, beta,
                             [&](const std::vector<int>& group) {
                               done = test(group, beta);
                               return !done;
                             });
        } else {
          std::vector<int> group = ejr_group(election, w, y, beta);
          if (!group.empty()) done = test(group, beta);
        }
        if (done) break;
      }
    }
  }
  report.stats.sets_examined = engine.sets_examined();
  return report;
}

}  // namespace

AuditReport audit_ejr_weighted(const Election& election, const CandidateSet& w,
                               const AuditOptions& options) {
  return audit_weighted(election, w, options, false);
}

AuditReport audit_pjr_weighted(const Election& election, const CandidateSet& w,
                               const AuditOptions& options) {
  return audit_weighted(election, w, options, true);
}

AuditReport audit(const Election& election, const CandidateSet& w, Axiom axiom,
                  int k, const AuditOptions& options) {
  switch (axiom) {
    case Axiom::kEjr:
      return audit_ejr(election, w, options);
    case Axiom::kPjr:
      return audit_pjr(election, w, options);
    case Axiom::kFjr:
      return audit_fjr(election, w, CohesionMode::kFixed, options);
    case Axiom::kFjrAdaptive:
      return audit_fjr(election, w, CohesionMode::kAdaptive, options);
    case Axiom::kCore:
      return audit_core(election, w, options);
    case Axiom::kRestrainedEjr:
      return audit_restrained_ejr(election, w, k, options);
    case Axiom::kEjrWeighted:
      return audit_ejr_weighted(election, w, options);
    case Axiom::kPjrWeighted:
      return audit_pjr_weighted(election, w, options);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown axiom");
}

bool recheck_violation(const Election& election, const CandidateSet& w,
                       const AuditReport& report, int k,
                       const AuditOptions& options) {
  if (report.satisfied || !report.violation) return false;
  const GroupClaim& claim = report.violation->claim;
  const std::vector<int>& group = claim.group;
  check_group(election, group);
  int best = 0;
  for (int i : group) best = std::max(best, election.approved_count(i, w));
  int covered = (union_approvals(election, group) & w).size();
  switch (report.axiom) {
    case Axiom::kEjr:
      return claim.ell && best < *claim.ell &&
             deserves(election, group, *claim.ell, options).holds;
    case Axiom::kPjr:
      return claim.ell && covered < *claim.ell &&
             deserves(election, group, *claim.ell, options).holds;
    case Axiom::kFjr:
    case Axiom::kFjrAdaptive: {
      if (claim.beta.size() != 1) return false;
      for (int i : group) {
        if (election.utility(i, w) >= claim.beta[0]) return false;
      }
      bool fixed = report.axiom == Axiom::kFjr;
      if (fixed && !claim.alpha) return false;
      int alpha = fixed ? static_cast<int>(*claim.alpha) : 0;
      return cohesive(election, group, alpha, claim.beta[0],
                      fixed ? CohesionMode::kFixed : CohesionMode::kAdaptive,
                      options)
          .holds;
    }
    case Axiom::kCore: {
      if (!claim.alpha || claim.beta.size() != group.size()) return false;
      for (std::size_t j = 0; j < group.size(); ++j) {
        if (election.utility(group[j], w) >= claim.beta[j]) return false;
      }
      return cohesive_per_voter(election, group,
                                static_cast<int>(*claim.alpha), claim.beta,
                                options)
          .holds;
    }
    case Axiom::kRestrainedEjr:
      return claim.ell && *claim.ell == best + 1 &&
             blocks_restrained(election, w, group, k, options).holds;
    case Axiom::kEjrWeighted:
    case Axiom::kPjrWeighted: {
      if (!claim.alpha || claim.beta.size() != 1) return false;
      int beta = static_cast<int>(claim.beta[0]);
      int level = report.axiom == Axiom::kEjrWeighted ? best : covered;
      return level < beta &&
             deserves_weighted(election, group, *claim.alpha, beta, options)
                 .holds;
    }
  }
  return false;
}

bool check_avg_satisfaction(const Election& election, const CandidateSet& w,
                            const std::vector<int>& group, int ell) {
  check_group(election, group);
  long long total = 0;
  for (int i : group) total += election.approved_count(i, w);
  return 2 * total >= static_cast<long long>(group.size()) * (ell - 1);
}

std::vector<GroupClaim> deserving_claims(const Election& election,
                                         const AuditOptions& options) {
  require_subset_scale(election);
  ClaimEngine engine(election, options);
  std::vector<GroupClaim> out;
  for (std::uint64_t mask = 1;
       mask < (std::uint64_t{1} << election.num_voters()); ++mask) {
    std::vector<int> group = voters_of_mask(mask);
    CandidateSet common = common_approvals(election, group);
    for (int ell = 1; ell <= common.size(); ++ell) {
      if (!engine.deserves(static_cast<int>(group.size()), common, ell).holds) {
        break;
      }
      GroupClaim claim;
      claim.group = group;
      claim.ell = ell;
      out.push_back(claim);
    }
  }
  return out;
}

std::vector<GroupClaim> strongly_cohesive_claims(const Election& election,
                                                 const AuditOptions& options) {
  require_subset_scale(election);
  ClaimEngine engine(election, options);
  std::vector<GroupClaim> out;
  for (std::uint64_t mask = 1;
       mask < (std::uint64_t{1} << election.num_voters()); ++mask) {
    std::vector<int> group = voters_of_mask(mask);
    CandidateSet common = common_approvals(election, group);
    for (int beta = 1; beta <= common.size(); ++beta) {
      for (const Rational& alpha :
           subset_weights(election, common, beta, options.cap)) {
        if (!engine
                 .deserves_weighted(static_cast<int>(group.size()), common,
                                    alpha, beta)
                 .holds) {
          continue;
        }
        GroupClaim claim;
        claim.group = group;
        claim.alpha = alpha;
        claim.beta = {Rational(beta)};
        out.push_back(claim);
      }
    }
  }
  return out;
}

}  // namespace propcon
