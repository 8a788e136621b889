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

#include "propcon/lp.hpp"

#include <utility>

#include "propcon/error.hpp"

namespace propcon {

int LinearProgram::add_variable() { return num_variables_++; }

void LinearProgram::add_constraint(std::vector<Term> terms, Relation relation,
                                   Rational rhs) {
  for (const Term& t : terms) {
    if (t.var < 0 || t.var >= num_variables_) {
      throw Error(ErrorCode::kInvalidArgument, "LP term names unknown variable");
    }
  }
  constraints_.push_back({std::move(terms), relation, std::move(rhs)});
}

void LinearProgram::maximize(std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.var < 0 || t.var >= num_variables_) {
      throw Error(ErrorCode::kInvalidArgument, "LP term names unknown variable");
    }
  }
  objective_ = std::move(terms);
}

namespace {

class Tableau {
 public:
  Tableau(int rows, int cols)
      : cols_(cols), t_(rows, std::vector<Rational>(cols + 1)), basis_(rows) {}

  int rows() const { return static_cast<int>(t_.size()); }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return t_[r][c]; }
  const Rational& at(int r, int c) const { return t_[r][c]; }
  Rational& rhs(int r) { return t_[r][cols_]; }
  int& basis(int r) { return basis_[r]; }
  int basis(int r) const { return basis_[r]; }

  void set_costs(const std::vector<Rational>& costs) {
    costs_ = costs;
    reduced_.assign(cols_ + 1, Rational(0));
    for (int c = 0; c < cols_; ++c) reduced_[c] = costs_[c];
    for (int r = 0; r < rows(); ++r) {
      const Rational& cb = costs_[basis_[r]];
      if (cb == 0) continue;
      for (int c = 0; c <= cols_; ++c) {
        if (t_[r][c] != 0) reduced_[c] -= cb * t_[r][c];
      }
    }
  }

  const Rational& reduced(int c) const { return reduced_[c]; }
  const Rational& cost(int c) const { return costs_[c]; }

  void pivot(int row, int col) {
    Rational inv = Rational(1) / t_[row][col];
    std::vector<int> nonzero;
    for (int c = 0; c <= cols_; ++c) {
      if (t_[row][c] != 0) {
        t_[row][c] *= inv;
        nonzero.push_back(c);
      }
    }
    auto eliminate = [&](std::vector<Rational>& target) {
      Rational factor = target[col];
      if (factor == 0) return;
      for (int c : nonzero) target[c] -= factor * t_[row][c];
    };
    for (int r = 0; r < rows(); ++r) {
      if (r != row) eliminate(t_[r]);
    }
    eliminate(reduced_);
    basis_[row] = col;
    ++pivots_;
  }

  // Bland's rule: lowest eligible entering column, then lowest basis index
  // among tied ratios. Returns false when unbounded.
  bool optimize(const std::vector<bool>& allowed) {
    for (;;) {
      int enter = -1;
      for (int c = 0; c < cols_; ++c) {
        if (allowed[c] && reduced_[c] < 0) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int r = 0; r < rows(); ++r) {
        if (t_[r][enter] <= 0) continue;
        Rational ratio = t_[r][cols_] / t_[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  int pivots() const { return pivots_; }

 private:
  int cols_;
  std::vector<std::vector<Rational>> t_;
  std::vector<int> basis_;
  std::vector<Rational> costs_;
  std::vector<Rational> reduced_;
  int pivots_ = 0;
};

Rational row_value(const std::vector<Term>& terms, const std::vector<Rational>& x) {
  Rational sum = 0;
  for (const Term& t : terms) sum += t.coef * x[t.var];
  return sum;
}

}  // namespace

LpResult solve_lp(const LinearProgram& program) {
  const int nv = program.num_variables();
  const auto& cons = program.constraints();
  const int rows = static_cast<int>(cons.size());

  // Normalize to rhs >= 0, remembering the sign flip per row.
  std::vector<int> sign(rows, 1);
  std::vector<Relation> rel(rows);
  for (int r = 0; r < rows; ++r) {
    rel[r] = cons[r].relation;
    if (cons[r].rhs < 0) {
      sign[r] = -1;
      if (rel[r] == Relation::kLessEqual) {
        rel[r] = Relation::kGreaterEqual;
      } else if (rel[r] == Relation::kGreaterEqual) {
        rel[r] = Relation::kLessEqual;
      }
    }
  }
  int cols = nv;
  std::vector<int> slack(rows, -1);
  std::vector<int> artificial(rows, -1);
  for (int r = 0; r < rows; ++r) {
    if (rel[r] != Relation::kEqual) slack[r] = cols++;
  }
  const int first_artificial = cols;
  for (int r = 0; r < rows; ++r) {
    if (rel[r] != Relation::kLessEqual) artificial[r] = cols++;
  }

  Tableau tab(rows, cols);
  std::vector<int> initial(rows);
  for (int r = 0; r < rows; ++r) {
    for (const Term& t : cons[r].terms) {
      tab.at(r, t.var) += sign[r] > 0 ? t.coef : Rational(-t.coef);
    }
    tab.rhs(r) = sign[r] > 0 ? cons[r].rhs : Rational(-cons[r].rhs);
    if (slack[r] >= 0) {
      tab.at(r, slack[r]) = rel[r] == Relation::kLessEqual ? 1 : -1;
    }
    if (artificial[r] >= 0) tab.at(r, artificial[r]) = 1;
    initial[r] = artificial[r] >= 0 ? artificial[r] : slack[r];
    tab.basis(r) = initial[r];
  }

  LpResult result;
  std::vector<Rational> phase1(cols, Rational(0));
  for (int c = first_artificial; c < cols; ++c) phase1[c] = 1;
  tab.set_costs(phase1);
  std::vector<bool> allowed(cols, true);
  tab.optimize(allowed);

  Rational infeasibility = 0;
  for (int r = 0; r < rows; ++r) {
    if (tab.basis(r) >= first_artificial) infeasibility += tab.rhs(r);
  }
  if (infeasibility > 0) {
    // y = c_B B^-1, read off the columns of the initial basis.
    result.status = LpStatus::kInfeasible;
    result.farkas.assign(rows, Rational(0));
    for (int j = 0; j < rows; ++j) {
      Rational y = 0;
      for (int r = 0; r < rows; ++r) {
        const Rational& cb = tab.cost(tab.basis(r));
        if (cb != 0 && tab.at(r, initial[j]) != 0) {
          y += cb * tab.at(r, initial[j]);
        }
      }
      result.farkas[j] = sign[j] > 0 ? y : Rational(-y);
    }
    result.pivots = tab.pivots();
    return result;
  }

  // Drive zero-level artificials out of the basis where possible.
  for (int r = 0; r < rows; ++r) {
    if (tab.basis(r) < first_artificial) continue;
    for (int c = 0; c < first_artificial; ++c) {
      if (tab.at(r, c) != 0) {
        tab.pivot(r, c);
        break;
      }
    }
  }
  for (int c = first_artificial; c < cols; ++c) allowed[c] = false;

  std::vector<Rational> phase2(cols, Rational(0));
  if (program.objective()) {
    for (const Term& t : *program.objective()) phase2[t.var] -= t.coef;
  }
  tab.set_costs(phase2);
  if (!tab.optimize(allowed)) {
    result.status = LpStatus::kUnbounded;
    result.pivots = tab.pivots();
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.point.assign(nv, Rational(0));
  for (int r = 0; r < rows; ++r) {
    if (tab.basis(r) < nv) result.point[tab.basis(r)] = tab.rhs(r);
  }
  if (program.objective()) {
    result.objective = row_value(*program.objective(), result.point);
  }
  result.pivots = tab.pivots();
  return result;
}

bool satisfies(const LinearProgram& program, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != program.num_variables()) return false;
  for (const Rational& v : x) {
    if (v < 0) return false;
  }
  for (const LinearConstraint& c : program.constraints()) {
    Rational lhs = row_value(c.terms, x);
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

bool verify_farkas(const LinearProgram& program, const std::vector<Rational>& y) {
  const auto& cons = program.constraints();
  if (y.size() != cons.size()) return false;
  std::vector<Rational> combo(program.num_variables(), Rational(0));
  Rational bound = 0;
  for (std::size_t j = 0; j < cons.size(); ++j) {
    if (cons[j].relation == Relation::kLessEqual && y[j] > 0) return false;
    if (cons[j].relation == Relation::kGreaterEqual && y[j] < 0) return false;
    if (y[j] == 0) continue;
    for (const Term& t : cons[j].terms) combo[t.var] += y[j] * t.coef;
    bound += y[j] * cons[j].rhs;
  }
  for (const Rational& v : combo) {
    if (v > 0) return false;
  }
  return bound > 0;
}

}  // namespace propcon
