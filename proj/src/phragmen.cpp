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

#include "propcon/phragmen.hpp"

#include <algorithm>

namespace propcon {
namespace {

Rational price_of(const Election& election, int c, bool weighted) {
  return weighted ? election.weight(c) : Rational(1);
}

PhragmenTrace simulate(const Election& election, bool weighted) {
  const int m = election.num_candidates();
  const int n = election.num_voters();
  const FeasibilitySystem& system = election.feasibility();
  const auto& ids = election.candidate_ids();

  PhragmenTrace trace;
  trace.weighted = weighted;
  std::vector<std::vector<int>> supporters(m);
  std::vector<bool> available(m, false);
  for (int c = 0; c < m; ++c) {
    supporters[c] = election.supporters(c);
    if (supporters[c].empty()) {
      trace.unsupported.push_back(c);
    } else {
      available[c] = true;
    }
  }
  std::vector<Rational> last_reset(n, Rational(0));
  Rational now = 0;

  auto remove_blocked = [&]() {
    for (int c = 0; c < m; ++c) {
      if (available[c] && !system.can_extend(trace.outcome, c)) {
        available[c] = false;
        trace.removals.push_back(
            {now, c, static_cast<int>(trace.events.size())});
      }
    }
  };
  remove_blocked();

  for (;;) {
    int best = -1;
    Rational best_time;
    for (int c = 0; c < m; ++c) {
      if (!available[c]) continue;
      Rational held = 0;
      for (int i : supporters[c]) held += last_reset[i];
      Rational t = (price_of(election, c, weighted) + held) /
                   static_cast<int>(supporters[c].size());
      if (best < 0 || t < best_time || (t == best_time && ids[c] < ids[best])) {
        best = c;
        best_time = t;
      }
    }
    if (best < 0) break;
    now = best_time;
    PurchaseEvent event;
    event.time = now;
    event.candidate = best;
    event.price = price_of(election, best, weighted);
    for (int i : supporters[best]) {
      event.payments.emplace_back(i, now - last_reset[i]);
      last_reset[i] = now;
    }
    event.reset = supporters[best];
    trace.events.push_back(std::move(event));
    trace.outcome.insert(best);
    available[best] = false;
    remove_blocked();
  }
  trace.end_time = now;
  trace.stranded.resize(n);
  for (int i = 0; i < n; ++i) trace.stranded[i] = now - last_reset[i];
  return trace;
}

TraceAudit failure(std::string what, std::optional<int> index = {}) {
  return TraceAudit{false, std::move(what), index};
}

}  // namespace

PhragmenTrace run_phragmen(const Election& election) {
  return simulate(election, false);
}

PhragmenTrace run_phragmen_weighted(const Election& election) {
  return simulate(election, true);
}

TraceAudit trace_audit(const PhragmenTrace& trace, const Election& election) {
  const int m = election.num_candidates();
  const int n = election.num_voters();
  const FeasibilitySystem& system = election.feasibility();
  std::vector<Rational> last_reset(n, Rational(0));
  std::vector<Rational> spent(n, Rational(0));
  std::vector<CandidateSet> prefix{CandidateSet{}};
  Rational previous = 0;
  for (std::size_t e = 0; e < trace.events.size(); ++e) {
    const PurchaseEvent& ev = trace.events[e];
    const int idx = static_cast<int>(e);
    if (ev.time < previous) return failure("time-order", idx);
    previous = ev.time;
    if (ev.candidate < 0 || ev.candidate >= m ||
        prefix.back().contains(ev.candidate)) {
      return failure("coverage", idx);
    }
    Rational total = 0;
    for (const auto& [i, amount] : ev.payments) {
      if (i < 0 || i >= n || !election.ballot(i).contains(ev.candidate)) {
        return failure("payer-support", idx);
      }
      total += amount;
    }
    Rational expected =
        trace.weighted ? election.weight(ev.candidate) : Rational(1);
    if (total != expected || ev.price != expected) {
      return failure("payment-sum", idx);
    }
    for (const auto& [i, amount] : ev.payments) {
      if (amount < 0 || amount > ev.time - last_reset[i]) {
        return failure("budget-conservation", idx);
      }
      spent[i] += amount;
      if (spent[i] > ev.time) return failure("budget-conservation", idx);
    }
    if (ev.reset != election.supporters(ev.candidate)) {
      return failure("reset-bookkeeping", idx);
    }
    for (int i : ev.reset) last_reset[i] = ev.time;
    CandidateSet next = prefix.back();
    next.insert(ev.candidate);
    if (!system.is_feasible(next)) return failure("prefix-feasibility", idx);
    prefix.push_back(next);
  }

  std::vector<int> status(m, 0);
  for (const PurchaseEvent& ev : trace.events) ++status[ev.candidate];
  for (std::size_t r = 0; r < trace.removals.size(); ++r) {
    const Removal& rem = trace.removals[r];
    const int idx = static_cast<int>(r);
    if (rem.candidate < 0 || rem.candidate >= m || rem.after_events < 0 ||
        rem.after_events > static_cast<int>(trace.events.size())) {
      return failure("removal-justification", idx);
    }
    CandidateSet with = prefix[rem.after_events];
    with.insert(rem.candidate);
    if (system.is_feasible(with)) return failure("removal-justification", idx);
    ++status[rem.candidate];
  }
  for (int c : trace.unsupported) {
    if (c < 0 || c >= m || !election.supporters(c).empty()) {
      return failure("coverage");
    }
    ++status[c];
  }
  for (int c = 0; c < m; ++c) {
    if (status[c] != 1) return failure("coverage", c);
  }
  if (trace.outcome != prefix.back()) return failure("outcome-mismatch");
  return TraceAudit{};
}

}  // namespace propcon
