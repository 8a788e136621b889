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

#ifndef PROPCON_TESTS_INSTANCES_HPP_
#define PROPCON_TESTS_INSTANCES_HPP_

#include <cstdint>
#include <random>

#include "propcon/constraints.hpp"
#include "propcon/fixtures.hpp"
#include "propcon/model.hpp"

namespace testing_support {

// Draws n in [1, max_n], m in [1, max_m] (even for public decisions) and a
// density from {1/3, 1/2, 2/3}, then defers to gen_random.
inline propcon::Election random_instance(propcon::SystemKind family, int max_n,
                                         int max_m, std::uint64_t seed,
                                         bool weighted = false) {
  std::mt19937_64 rng(seed * 7919 + static_cast<std::uint64_t>(family));
  propcon::RandomParams p;
  p.family = family;
  p.n = 1 + static_cast<int>(rng() % max_n);
  if (family == propcon::SystemKind::kPublicDecisions) {
    p.m = 2 * (1 + static_cast<int>(rng() % (max_m / 2)));
  } else {
    p.m = 1 + static_cast<int>(rng() % max_m);
  }
  const propcon::Rational densities[] = {{1, 3}, {1, 2}, {2, 3}};
  p.density = densities[rng() % 3];
  p.weighted = weighted;
  return propcon::gen_random(p, seed);
}

inline constexpr propcon::SystemKind kMatroidFamilies[] = {
    propcon::SystemKind::kCommittee, propcon::SystemKind::kPublicDecisions,
    propcon::SystemKind::kDisjointAttributes};

inline constexpr propcon::SystemKind kAllRandomFamilies[] = {
    propcon::SystemKind::kCommittee, propcon::SystemKind::kPublicDecisions,
    propcon::SystemKind::kDisjointAttributes, propcon::SystemKind::kBudget,
    propcon::SystemKind::kExplicit};

}  // namespace testing_support

#endif  // PROPCON_TESTS_INSTANCES_HPP_
