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

#include "vgame/game_rules.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "vgame/closed_forms.h"
#include "vgame/errors.h"

namespace vgame {
namespace {

constexpr int kEpsilonRetries = 5;

std::vector<VoronoiCell> WhiteCells(std::span<const Point> white,
                                    const Board& board) {
  return ComputeVoronoi(SiteSet{{white.begin(), white.end()}, {}}, board);
}

Point KeepInside(const Point& p, const Board& board) {
  const double margin = 1e-9 * board.long_side();
  const Point lo = board.origin() + Point{margin, margin};
  const Point hi = board.upper_right() - Point{margin, margin};
  return {std::clamp(p.x, lo.x, hi.x), std::clamp(p.y, lo.y, hi.y)};
}

// Re-runs `build` with smaller epsilon while Barney should win but does not.
StrategyResult ShrinkUntilWinning(
    bool should_win, const Board& board, double eps,
    const std::function<StrategyResult(double)>& build) {
  StrategyResult result = build(eps);
  for (int k = 0; k < kEpsilonRetries && should_win &&
                  !(result.guaranteed_area > 0.5 * board.area());
       ++k) {
    eps /= 10.0;
    result = build(eps);
  }
  return result;
}

}  // namespace

std::string_view WinnerName(Winner winner) {
  switch (winner) {
    case Winner::kWilma:
      return "Wilma";
    case Winner::kBarney:
      return "Barney";
    case Winner::kTie:
      return "Tie";
  }
  return "Tie";
}

void GameConfig::Validate() const {
  if (n < 1) throw GameError(ErrorCode::kInvalidConfig, "n must be >= 1");
}

Winner PredictWinner(int n, double rho) {
  if (n < 1 || !(rho > 0.0) || rho > 1.0) {
    throw GameError(ErrorCode::kInvalidConfig,
                    "need n >= 1 and rho in (0, 1]");
  }
  const auto critical = CriticalRatio(n);
  if (!critical) return Winner::kWilma;
  return rho > *critical ? Winner::kBarney : Winner::kWilma;
}

Winner PredictWinner(const GameConfig& config) {
  config.Validate();
  return PredictWinner(config.n, config.board.aspect_ratio());
}

namespace {

std::vector<Point> LineGrid(const GameConfig& config, bool along_width) {
  config.Validate();
  const Board& b = config.board;
  std::vector<Point> points;
  for (int i = 0; i < config.n; ++i) {
    const double t = (i + 0.5) / config.n;
    points.push_back(along_width
                         ? Point{b.origin().x + t * b.width(), b.center().y}
                         : Point{b.center().x, b.origin().y + t * b.height()});
  }
  return points;
}

}  // namespace

std::vector<Point> WilmaPlacement(const GameConfig& config) {
  return LineGrid(config, config.board.width() >= config.board.height());
}

std::vector<Point> WilmaShortAxisPlacement(const GameConfig& config) {
  return LineGrid(config, config.board.width() < config.board.height());
}

double DefaultEpsilon(const Board& board) { return 1e-4 * board.short_side(); }

StrategyResult BarneyStrategyFrom(std::span<const Point> white,
                                  const Board& board, const Point& first,
                                  double eps) {
  const auto cells = WhiteCells(white, board);
  const SiteSet sites{{white.begin(), white.end()}, {}};
  const std::vector<double> pieces = StolenPieces(sites, board, first);
  const auto skip = static_cast<size_t>(
      std::max_element(pieces.begin(), pieces.end()) - pieces.begin());

  StrategyResult result;
  result.epsilon = eps;
  result.points.push_back(first);
  result.formula_area = 0.0;
  for (double piece : pieces) result.formula_area += piece;
  for (size_t i = 0; i < white.size(); ++i) {
    if (i == skip) continue;
    const Point away = white[i] - first;
    const Point partner = white[i] + away * (eps / Norm(away));
    result.points.push_back(KeepInside(partner, board));
    result.formula_area += 0.5 * cells[i].region.area();
  }
  result.guaranteed_area = PlayGame(white, result.points, board).black_area;
  return result;
}

StrategyResult BarneyStrategy(std::span<const Point> white, const Board& board,
                              double eps, const BestResponseOptions& options) {
  const auto cells = WhiteCells(white, board);
  if (!IsRegularGrid(cells, DefaultGridTolerance(board)).regular) {
    throw GameError(ErrorCode::kNotAGrid,
                    "white sites do not form a regular grid");
  }
  const StealResult first = BestResponsePoint(white, board, options);
  const bool should_win =
      PredictWinner(static_cast<int>(white.size()), board.aspect_ratio()) ==
      Winner::kBarney;
  return ShrinkUntilWinning(should_win, board, eps, [&](double e) {
    return BarneyStrategyFrom(white, board, first.point, e);
  });
}

StrategyResult ExploitStrategy(std::span<const Point> white,
                               const Board& board, double eps) {
  const auto cells = WhiteCells(white, board);
  std::vector<ExploitReport> splits;
  for (size_t i = 0; i < cells.size(); ++i) {
    splits.push_back(BestSplit(cells[i], static_cast<int>(i)));
  }
  // Largest excess first; it is the placement that wins the game.
  std::stable_sort(splits.begin(), splits.end(),
                   [](const ExploitReport& a, const ExploitReport& b) {
                     return a.excess > b.excess;
                   });
  auto build = [&](double e) {
    StrategyResult result;
    result.epsilon = e;
    for (const ExploitReport& s : splits) {
      result.points.push_back(KeepInside(s.site + s.toward_larger * e, board));
      result.formula_area += 0.5 * s.cell_area + s.excess;
    }
    result.guaranteed_area = PlayGame(white, result.points, board).black_area;
    return result;
  };
  return ShrinkUntilWinning(true, board, eps, build);
}

StrategyResult BarneyPlay(std::span<const Point> white, const Board& board,
                          double eps, const BestResponseOptions& options) {
  const auto cells = WhiteCells(white, board);
  if (IsRegularGrid(cells, DefaultGridTolerance(board)).regular) {
    return BarneyStrategy(white, board, eps, options);
  }
  return ExploitStrategy(white, board, eps);
}

std::vector<Point> TwoByTwoGrid(const Board& board) {
  const Point o = board.origin();
  const double w = board.width();
  const double h = board.height();
  return {{o.x + 0.25 * w, o.y + 0.25 * h},
          {o.x + 0.25 * w, o.y + 0.75 * h},
          {o.x + 0.75 * w, o.y + 0.25 * h},
          {o.x + 0.75 * w, o.y + 0.75 * h}};
}

StrategyResult TwoByTwoStrategy(const Board& board, const Point& first,
                                double eps) {
  const std::vector<Point> white = TwoByTwoGrid(board);
  const Point o = board.origin();
  const double w = board.width();
  const double h = board.height();
  const double shift = 4.0 * eps / 3.0;

  StrategyResult result;
  result.epsilon = eps;
  result.points = {first,
                   {o.x + 0.25 * w - shift, o.y + 0.25 * h},
                   {o.x + 0.25 * w - shift, o.y + 0.75 * h},
                   {o.x + 0.75 * w + shift, o.y + 0.75 * h}};
  result.formula_area =
      StealAreaExact(white, board, first) + 3.0 * board.area() / 8.0;
  result.guaranteed_area = PlayGame(white, result.points, board).black_area;
  return result;
}

StrategyResult FourStonesStrategy(const Board& board, double eps) {
  const Point first = board.origin() +
                      Point{0.5 * board.width(), 0.25 * board.height()};
  return TwoByTwoStrategy(board, first, eps);
}

GameOutcome PlayGame(std::span<const Point> white,
                     std::span<const Point> black, const Board& board) {
  const SiteSet sites{{white.begin(), white.end()}, {black.begin(), black.end()}};
  const AreaTally tally = Tally(ComputeVoronoi(sites, board));
  GameOutcome outcome{tally.white, tally.black, Winner::kTie};
  if (std::abs(tally.white - tally.black) >= 1e-9 * board.area()) {
    outcome.winner =
        tally.white > tally.black ? Winner::kWilma : Winner::kBarney;
  }
  return outcome;
}

}  // namespace vgame
