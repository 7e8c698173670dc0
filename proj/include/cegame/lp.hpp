// Copyright 2026 The cegame Authors.
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

// Small dense linear programming over exact rationals.
//
// Two-phase primal simplex on a full tableau with Bland's rule (smallest
// eligible index enters, ties in the ratio test leave by smallest basic
// index), which guarantees termination. Meant for the few hundred rows that
// arise in nucleolus computations, not for large sparse models.

#ifndef CEGAME_LP_HPP_
#define CEGAME_LP_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "cegame/error.hpp"
#include "cegame/rational.hpp"

namespace cegame {

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Sense sense = Sense::kLessEqual;
  Rational rhs;
};

// maximise objective . x subject to the constraints; variables are
// non-negative unless flagged in `free_variables`.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<bool> free_variables;  // empty means all non-negative

  std::size_t variable_count() const { return objective.size(); }

  bool is_free(std::size_t j) const {
    return j < free_variables.size() && free_variables[j];
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;              // valid when optimal
  std::vector<Rational> point;  // valid when optimal
  // Shadow price d(value)/d(rhs_i) of each constraint at the optimal basis,
  // or empty if redundant equality rows had to be removed. A nonzero price
  // certifies the constraint is tight in every optimum.
  std::vector<Rational> duals;
};

namespace internal {

class Tableau {
 public:
  // rows_ holds B^-1 [A | b]; the objective row holds reduced costs
  // c_j - c_B B^-1 A_j and, in its last entry, -c_B B^-1 b.
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<std::size_t> basis,
          std::size_t columns)
      : rows_(std::move(rows)), basis_(std::move(basis)), columns_(columns),
        allowed_(columns, true) {}

  std::size_t row_count() const { return rows_.size(); }
  std::size_t column_count() const { return columns_; }
  const Rational& rhs(std::size_t r) const { return rows_[r][columns_]; }
  const Rational& at(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  std::size_t basic(std::size_t r) const { return basis_[r]; }
  void forbid(std::size_t c) { allowed_[c] = false; }

  void set_objective(const std::vector<Rational>& cost) {
    objective_.assign(columns_ + 1, Rational(0));
    for (std::size_t c = 0; c < columns_; ++c) objective_[c] = cost[c];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t c = 0; c <= columns_; ++c) {
        if (sgn(rows_[r][c]) != 0) objective_[c] -= cb * rows_[r][c];
      }
    }
  }

  Rational objective_value() const { return -objective_[columns_]; }
  const Rational& reduced_cost(std::size_t c) const { return objective_[c]; }

  // Returns false when the objective is unbounded above.
  bool optimise() {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t c = 0; c < columns_; ++c) {
        if (allowed_[c] && sgn(objective_[c]) > 0) {
          entering = c;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& a = rows_[r][*entering];
        if (sgn(a) <= 0) continue;
        Rational ratio = rows_[r][columns_] / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[*leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    std::vector<Rational>& pivot_row = rows_[r];
    const Rational inv = 1 / pivot_row[c];
    for (Rational& v : pivot_row) {
      if (sgn(v) != 0) v *= inv;
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      if (sgn(row[c]) == 0) return;
      const Rational factor = row[c];
      for (std::size_t k = 0; k <= columns_; ++k) {
        if (sgn(pivot_row[k]) != 0) row[k] -= factor * pivot_row[k];
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(objective_);
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
  }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::size_t columns_;
  std::vector<bool> allowed_;
  std::vector<Rational> objective_;
};

}  // namespace internal

inline LpResult lp_solve(const LinearProgram& lp) {
  const std::size_t n = lp.variable_count();
  if (!lp.free_variables.empty() && lp.free_variables.size() != n) {
    throw DomainError("free variable flags do not match the objective size");
  }
  for (const LinearConstraint& row : lp.constraints) {
    if (row.coefficients.size() != n) {
      throw DomainError("constraint width does not match the objective size");
    }
  }

  // Column layout: structural columns (a free variable takes a positive and
  // a negative part), then slack/surplus columns, then artificials.
  std::vector<std::size_t> first_column(n);
  std::size_t structural = 0;
  for (std::size_t j = 0; j < n; ++j) {
    first_column[j] = structural;
    structural += lp.is_free(j) ? 2 : 1;
  }
  const std::size_t m = lp.constraints.size();
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const LinearConstraint& row : lp.constraints) {
    if (row.sense != Sense::kEqual) ++slack_count;
  }
  // Rows are first normalised to a non-negative right-hand side.
  std::vector<Sense> senses(m);
  std::vector<bool> negate(m);
  for (std::size_t i = 0; i < m; ++i) {
    negate[i] = sgn(lp.constraints[i].rhs) < 0;
    Sense s = lp.constraints[i].sense;
    if (negate[i] && s == Sense::kLessEqual) {
      s = Sense::kGreaterEqual;
    } else if (negate[i] && s == Sense::kGreaterEqual) {
      s = Sense::kLessEqual;
    }
    senses[i] = s;
    if (s != Sense::kLessEqual) ++artificial_count;
  }
  const std::size_t columns = structural + slack_count + artificial_count;
  const std::size_t first_artificial = structural + slack_count;

  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(columns + 1));
  // Column holding +e_i (slack or artificial) or -e_i (surplus) for row i.
  std::vector<std::size_t> unit_column(m);
  std::vector<int> unit_sign(m, 1);
  std::vector<std::size_t> basis(m);
  std::size_t next_slack = structural;
  std::size_t next_artificial = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    const LinearConstraint& src = lp.constraints[i];
    std::vector<Rational>& row = rows[i];
    const int sign = negate[i] ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(src.coefficients[j]) == 0) continue;
      row[first_column[j]] = sign * src.coefficients[j];
      if (lp.is_free(j)) row[first_column[j] + 1] = -sign * src.coefficients[j];
    }
    row[columns] = sign * src.rhs;
    if (src.sense != Sense::kEqual) {
      row[next_slack] = senses[i] == Sense::kLessEqual ? 1 : -1;
      if (senses[i] == Sense::kLessEqual) basis[i] = next_slack;
      unit_column[i] = next_slack;
      unit_sign[i] = senses[i] == Sense::kLessEqual ? 1 : -1;
      ++next_slack;
    } else {
      unit_column[i] = next_artificial;
    }
    if (senses[i] != Sense::kLessEqual) {
      row[next_artificial] = 1;
      basis[i] = next_artificial++;
    }
  }

  internal::Tableau tableau(std::move(rows), std::move(basis), columns);
  LpResult result;
  bool dropped_rows = false;
  if (artificial_count > 0) {
    std::vector<Rational> phase_one(columns, Rational(0));
    for (std::size_t c = first_artificial; c < columns; ++c) phase_one[c] = -1;
    tableau.set_objective(phase_one);
    tableau.optimise();  // bounded by 0
    if (sgn(tableau.objective_value()) < 0) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    // Pivot remaining (zero-valued) artificials out of the basis; rows
    // where that is impossible are redundant.
    for (std::size_t r = tableau.row_count(); r-- > 0;) {
      if (tableau.basic(r) < first_artificial) continue;
      std::optional<std::size_t> replacement;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (sgn(tableau.at(r, c)) != 0) {
          replacement = c;
          break;
        }
      }
      if (replacement) {
        tableau.pivot(r, *replacement);
      } else {
        tableau.drop_row(r);
        dropped_rows = true;
      }
    }
    for (std::size_t c = first_artificial; c < columns; ++c) tableau.forbid(c);
  }

  std::vector<Rational> cost(columns, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    cost[first_column[j]] = lp.objective[j];
    if (lp.is_free(j)) cost[first_column[j] + 1] = -lp.objective[j];
  }
  tableau.set_objective(cost);
  if (!tableau.optimise()) {
    result.status = LpStatus::kUnbounded;
    return result;
  }

  std::vector<Rational> column_value(columns, Rational(0));
  for (std::size_t r = 0; r < tableau.row_count(); ++r) {
    column_value[tableau.basic(r)] = tableau.rhs(r);
  }
  result.status = LpStatus::kOptimal;
  result.point.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    result.point[j] = column_value[first_column[j]];
    if (lp.is_free(j)) result.point[j] -= column_value[first_column[j] + 1];
  }
  result.value = 0;
  for (std::size_t j = 0; j < n; ++j) result.value += lp.objective[j] * result.point[j];
  // Reduced cost of a unit column e_i is -y_i with y = c_B B^-1; undo the
  // row normalisation sign. Left empty when redundant rows were removed.
  if (dropped_rows) return result;
  result.duals.assign(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    Rational y = tableau.reduced_cost(unit_column[i]);
    y = unit_sign[i] > 0 ? Rational(-y) : y;
    result.duals[i] = negate[i] ? Rational(-y) : y;
  }
  return result;
}

}  // namespace cegame

#endif  // CEGAME_LP_HPP_
