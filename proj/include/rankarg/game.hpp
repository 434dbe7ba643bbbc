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

// Values of finite two-player zero-sum matrix games with payoffs in [0, 1].
// The row player maximizes.

#ifndef RANKARG_GAME_HPP_
#define RANKARG_GAME_HPP_

#include <functional>
#include <vector>

namespace rankarg {

// Acceptance band for the duality checks.
inline constexpr double kLpTolerance = 1e-7;

class GameMatrix {
 public:
  GameMatrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), payoff_(static_cast<std::size_t>(rows) * cols,
                                          fill) {}
  GameMatrix(int rows, int cols, std::vector<double> payoff);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double operator()(int i, int j) const { return payoff_[i * cols_ + j]; }
  double& operator()(int i, int j) { return payoff_[i * cols_ + j]; }

  GameMatrix transposed_complement() const;  // (j, i) -> 1 - M(i, j)

 private:
  int rows_;
  int cols_;
  std::vector<double> payoff_;
};

struct GameSolution {
  double value = 0.0;
  std::vector<double> row_strategy;
  std::vector<double> column_strategy;
  // min_j (p^T M)_j and max_i (M q)_i over the full game.
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  int lp_solves = 0;

  double duality_gap() const { return upper_bound - lower_bound; }
};

// Solves the maximin LP with a dense simplex under Bland's rule. Payoffs must
// be finite and lie in [0, 1]. Throws SolverFailure when the returned
// strategies do not certify the value.
GameSolution game_value(const GameMatrix& matrix);

// min_q max_p, solved as a separate LP for the column player.
double minimax_value(const GameMatrix& matrix);

// Games too large to materialize. payoff(i, j) is queried on demand; the
// solver grows restricted games with best responses over all rows and columns
// until the two bounds meet within `gap`. Exact at termination.
using PayoffFn = std::function<double(int row, int col)>;
GameSolution game_value_oracle(int rows, int cols, const PayoffFn& payoff,
                               int first_row = 0, int first_col = 0,
                               double gap = 1e-10);

}  // namespace rankarg

#endif  // RANKARG_GAME_HPP_
