// Copyright 2026 The rankarg Authors.
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

#include "rankarg/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rankarg/error.hpp"

namespace rankarg {
namespace {

constexpr double kPivotEpsilon = 1e-12;

// Shifting every payoff by one makes the value strictly positive, which
// allows the classic normalization x = p / v:
//
//   maximize sum(y)  s.t.  (M + 1) y <= 1,  y >= 0
//
// The optimum z gives v + 1 = 1 / z, the column strategy q = y / z and, from
// the reduced costs of the slacks, the row strategy p = x / z.
struct SimplexResult {
  std::vector<double> primal;  // y, one per column
  std::vector<double> dual;    // x, one per row
  double objective = 0.0;
};

SimplexResult solve_normalized(const GameMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  const int width = cols + rows + 1;  // y, slacks, rhs
  std::vector<double> t(static_cast<std::size_t>(rows) * width, 0.0);
  auto at = [&](int i, int j) -> double& { return t[i * width + j]; };
  std::vector<double> obj(width, 0.0);
  std::vector<int> basis(rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) at(i, j) = m(i, j) + 1.0;
    at(i, cols + i) = 1.0;
    at(i, width - 1) = 1.0;
    basis[i] = cols + i;
  }
  for (int j = 0; j < cols; ++j) obj[j] = -1.0;

  const long max_pivots = 50'000L + 50L * (rows + cols);
  for (long pivots = 0;; ++pivots) {
    if (pivots > max_pivots) throw SolverFailure("simplex pivot limit reached");
    // Bland's rule: lowest-index improving column.
    int enter = -1;
    for (int j = 0; j < width - 1; ++j) {
      if (obj[j] < -kPivotEpsilon) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;
    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < rows; ++i) {
      double a = at(i, enter);
      if (a <= kPivotEpsilon) continue;
      double ratio = at(i, width - 1) / a;
      if (ratio < best - kPivotEpsilon ||
          (std::abs(ratio - best) <= kPivotEpsilon && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave < 0) throw SolverFailure("unbounded game LP");
    double pivot = at(leave, enter);
    for (int j = 0; j < width; ++j) at(leave, j) /= pivot;
    for (int i = 0; i < rows; ++i) {
      if (i == leave) continue;
      double f = at(i, enter);
      if (f == 0.0) continue;
      for (int j = 0; j < width; ++j) at(i, j) -= f * at(leave, j);
    }
    double f = obj[enter];
    for (int j = 0; j < width; ++j) obj[j] -= f * at(leave, j);
    basis[leave] = enter;
  }

  SimplexResult result;
  result.primal.assign(cols, 0.0);
  result.dual.assign(rows, 0.0);
  for (int i = 0; i < rows; ++i) {
    if (basis[i] < cols) result.primal[basis[i]] = at(i, width - 1);
  }
  for (int i = 0; i < rows; ++i) result.dual[i] = obj[cols + i];
  result.objective = obj[width - 1];
  return result;
}

std::vector<double> normalized(std::vector<double> v) {
  double sum = 0.0;
  for (double& x : v) {
    x = std::max(x, 0.0);
    sum += x;
  }
  if (sum <= 0.0) throw SolverFailure("degenerate strategy");
  for (double& x : v) x /= sum;
  return v;
}

void check_payoffs(const GameMatrix& m) {
  if (m.rows() < 1 || m.cols() < 1) throw SolverFailure("empty game matrix");
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      double x = m(i, j);
      if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
        throw SolverFailure("payoff outside [0, 1]");
      }
    }
  }
}

}  // namespace

GameMatrix::GameMatrix(int rows, int cols, std::vector<double> payoff)
    : rows_(rows), cols_(cols), payoff_(std::move(payoff)) {
  if (payoff_.size() != static_cast<std::size_t>(rows) * cols) {
    throw Error("game matrix payoff size mismatch");
  }
}

GameMatrix GameMatrix::transposed_complement() const {
  GameMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = 1.0 - (*this)(i, j);
  }
  return t;
}

GameSolution game_value(const GameMatrix& matrix) {
  check_payoffs(matrix);
  SimplexResult lp = solve_normalized(matrix);
  if (lp.objective <= 0.0) throw SolverFailure("non-positive LP optimum");

  GameSolution s;
  s.lp_solves = 1;
  s.value = 1.0 / lp.objective - 1.0;
  s.row_strategy = normalized(lp.dual);
  s.column_strategy = normalized(lp.primal);
  s.lower_bound = std::numeric_limits<double>::infinity();
  s.upper_bound = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < matrix.cols(); ++j) {
    double e = 0.0;
    for (int i = 0; i < matrix.rows(); ++i) e += s.row_strategy[i] * matrix(i, j);
    s.lower_bound = std::min(s.lower_bound, e);
  }
  for (int i = 0; i < matrix.rows(); ++i) {
    double e = 0.0;
    for (int j = 0; j < matrix.cols(); ++j) {
      e += matrix(i, j) * s.column_strategy[j];
    }
    s.upper_bound = std::max(s.upper_bound, e);
  }
  if (s.duality_gap() > 1e-6 || s.value < s.lower_bound - 1e-6 ||
      s.value > s.upper_bound + 1e-6) {
    throw SolverFailure("game LP certificate failed, gap " +
                        std::to_string(s.duality_gap()));
  }
  return s;
}

double minimax_value(const GameMatrix& matrix) {
  return 1.0 - game_value(matrix.transposed_complement()).value;
}

GameSolution game_value_oracle(int rows, int cols, const PayoffFn& payoff,
                               int first_row, int first_col, double gap) {
  if (rows < 1 || cols < 1) throw SolverFailure("empty game");
  std::vector<int> row_set{first_row};
  std::vector<int> col_set{first_col};
  std::vector<char> in_rows(rows, 0), in_cols(cols, 0);
  in_rows[first_row] = 1;
  in_cols[first_col] = 1;
  // Cache of evaluated entries of the restricted game, by (row, col) index
  // into row_set / col_set.
  std::vector<std::vector<double>> cache{{payoff(first_row, first_col)}};

  GameSolution s;
  for (;;) {
    const int r = static_cast<int>(row_set.size());
    const int c = static_cast<int>(col_set.size());
    GameMatrix sub(r, c);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) sub(i, j) = cache[i][j];
    }
    GameSolution restricted = game_value(sub);
    ++s.lp_solves;

    double upper = -1.0;
    int best_row = -1;
    for (int i = 0; i < rows; ++i) {
      double e = 0.0;
      for (int j = 0; j < c; ++j) {
        double q = restricted.column_strategy[j];
        if (q > 0.0) e += q * payoff(i, col_set[j]);
      }
      if (e > upper) {
        upper = e;
        best_row = i;
      }
    }
    double lower = 2.0;
    int best_col = -1;
    for (int j = 0; j < cols; ++j) {
      double e = 0.0;
      for (int i = 0; i < r; ++i) {
        double p = restricted.row_strategy[i];
        if (p > 0.0) e += p * payoff(row_set[i], j);
      }
      if (e < lower) {
        lower = e;
        best_col = j;
      }
    }

    bool grew = false;
    if (upper - lower > gap) {
      if (!in_rows[best_row]) {
        in_rows[best_row] = 1;
        row_set.push_back(best_row);
        std::vector<double> line;
        for (int col : col_set) line.push_back(payoff(best_row, col));
        cache.push_back(std::move(line));
        grew = true;
      }
      if (!in_cols[best_col]) {
        in_cols[best_col] = 1;
        col_set.push_back(best_col);
        for (std::size_t i = 0; i < row_set.size(); ++i) {
          cache[i].push_back(payoff(row_set[i], best_col));
        }
        grew = true;
      }
    }
    if (!grew) {
      s.value = restricted.value;
      s.lower_bound = lower;
      s.upper_bound = upper;
      s.row_strategy.assign(rows, 0.0);
      s.column_strategy.assign(cols, 0.0);
      for (int i = 0; i < r; ++i) {
        s.row_strategy[row_set[i]] = restricted.row_strategy[i];
      }
      for (int j = 0; j < c; ++j) {
        s.column_strategy[col_set[j]] = restricted.column_strategy[j];
      }
      if (s.duality_gap() > 1e-6) {
        throw SolverFailure("double oracle stalled with gap " +
                            std::to_string(s.duality_gap()));
      }
      return s;
    }
  }
}

}  // namespace rankarg
