// Copyright 2026 The Voronoi Game Authors.
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

// Who wins the one-round game on a rectangle, and how each side plays.

#ifndef VGAME_GAME_RULES_H_
#define VGAME_GAME_RULES_H_

#include <span>
#include <string_view>
#include <vector>

#include "vgame/best_response.h"
#include "vgame/geometry.h"
#include "vgame/voronoi.h"

namespace vgame {

enum class Winner { kWilma, kBarney, kTie };

std::string_view WinnerName(Winner winner);

struct GameConfig {
  int n = 1;
  Board board{1.0, 1.0};

  // Throws GameError(kInvalidConfig) when n < 1.
  void Validate() const;
};

// Outcome under optimal play for n points each on a board of aspect ratio
// rho in (0, 1]. Never returns kTie.
Winner PredictWinner(int n, double rho);
Winner PredictWinner(const GameConfig& config);

// The 1 x n grid along the long side of the board.
std::vector<Point> WilmaPlacement(const GameConfig& config);

// The 1 x n grid along the short side. Loses for n = 2 whenever rho < 1.
std::vector<Point> WilmaShortAxisPlacement(const GameConfig& config);

struct StrategyResult {
  std::vector<Point> points;
  // Barney's area in the final diagram of white + points.
  double guaranteed_area = 0.0;
  // Idealised area in the limit epsilon -> 0: the first point's steal plus
  // the claimed share of every partnered cell.
  double formula_area = 0.0;
  double epsilon = 0.0;
};

// 1e-4 of the short side.
double DefaultEpsilon(const Board& board);

// Barney against a regular grid: a best-response point, then one point at
// distance eps from every other white site on the far side from the first.
// eps shrinks (at most five times, by 10x) until Barney takes more than half
// whenever PredictWinner says he should. Throws GameError(kNotAGrid) if the
// white diagram is not a regular grid.
StrategyResult BarneyStrategy(std::span<const Point> white, const Board& board,
                              double eps,
                              const BestResponseOptions& options = {});

// The partner placements of BarneyStrategy for a given first point. The white
// site that loses most to `first` gets no partner.
StrategyResult BarneyStrategyFrom(std::span<const Point> white,
                                  const Board& board, const Point& first,
                                  double eps);

// Barney against a non-grid white set: one point at distance eps from every
// white site, across the best split line of its cell, on the larger side.
StrategyResult ExploitStrategy(std::span<const Point> white,
                               const Board& board, double eps);

// BarneyStrategy on regular grids, ExploitStrategy otherwise.
StrategyResult BarneyPlay(std::span<const Point> white, const Board& board,
                          double eps, const BestResponseOptions& options = {});

// Explicit four-point reply to a 2 x 2 grid: `first`, then partners
// 4 eps / 3 outside the lower-left, upper-left and upper-right sites.
StrategyResult TwoByTwoStrategy(const Board& board, const Point& first,
                                double eps);

// TwoByTwoStrategy with its first point at (width / 2, height / 4).
StrategyResult FourStonesStrategy(const Board& board, double eps);

// The 2 x 2 white grid used by the two functions above.
std::vector<Point> TwoByTwoGrid(const Board& board);

struct GameOutcome {
  double white_area = 0.0;
  double black_area = 0.0;
  // kTie when the areas differ by less than 1e-9 of the board.
  Winner winner = Winner::kTie;
};

GameOutcome PlayGame(std::span<const Point> white,
                     std::span<const Point> black, const Board& board);

}  // namespace vgame

#endif  // VGAME_GAME_RULES_H_
