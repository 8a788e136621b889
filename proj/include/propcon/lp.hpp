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

#ifndef PROPCON_LP_HPP_
#define PROPCON_LP_HPP_

#include <optional>
#include <vector>

#include "propcon/rational.hpp"

namespace propcon {

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct Term {
  int var = 0;
  Rational coef;
};

struct LinearConstraint {
  std::vector<Term> terms;
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

// Variables are nonnegative. Without an objective the program is a
// feasibility problem.
class LinearProgram {
 public:
  int add_variable();
  int num_variables() const { return num_variables_; }

  void add_constraint(std::vector<Term> terms, Relation relation, Rational rhs);
  void maximize(std::vector<Term> terms);

  const std::vector<LinearConstraint>& constraints() const {
    return constraints_;
  }
  const std::optional<std::vector<Term>>& objective() const {
    return objective_;
  }

 private:
  int num_variables_ = 0;
  std::vector<LinearConstraint> constraints_;
  std::optional<std::vector<Term>> objective_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  // Set for kOptimal (a feasible point when there is no objective).
  std::vector<Rational> point;
  Rational objective;
  // Set for kInfeasible: one multiplier y_j per constraint with y_j <= 0 on
  // <= rows, y_j >= 0 on >= rows, sum_j y_j a_j <= 0 and sum_j y_j b_j > 0.
  std::vector<Rational> farkas;
  int pivots = 0;
};

// Exact two-phase primal simplex with Bland's rule.
LpResult solve_lp(const LinearProgram& program);

bool satisfies(const LinearProgram& program, const std::vector<Rational>& x);
bool verify_farkas(const LinearProgram& program, const std::vector<Rational>& y);

}  // namespace propcon

#endif  // PROPCON_LP_HPP_
