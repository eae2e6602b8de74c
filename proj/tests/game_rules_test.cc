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

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "vgame/best_response.h"
#include "vgame/closed_forms.h"
#include "vgame/errors.h"

namespace vgame {
namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

TEST(PredictWinnerTest, Examples) {
  EXPECT_EQ(PredictWinner(2, 0.8), Winner::kWilma);
  EXPECT_EQ(PredictWinner(3, 0.5), Winner::kBarney);
  for (double rho : {0.01, 0.5, 1.0}) EXPECT_EQ(PredictWinner(1, rho), Winner::kWilma);
  EXPECT_EQ(PredictWinner(2, kSqrt3 / 2), Winner::kWilma);
  EXPECT_EQ(PredictWinner(2, 0.87), Winner::kBarney);
  EXPECT_EQ(PredictWinner(3, kSqrt2 / 3), Winner::kWilma);
  EXPECT_THROW(PredictWinner(0, 0.5), GameError);
  EXPECT_THROW(PredictWinner(2, 1.5), GameError);
}

TEST(PredictWinnerTest, ScaleInvariant) {
  for (int n = 1; n <= 8; ++n) {
    for (double rho = 0.05; rho <= 1.0; rho += 0.05) {
      const Winner base = PredictWinner(GameConfig{n, Board(1.0, rho)});
      for (double s : {1e-3, 0.5, 3.0, 1e4}) {
        EXPECT_EQ(PredictWinner(GameConfig{n, Board(s, rho * s)}), base);
        EXPECT_EQ(PredictWinner(GameConfig{n, Board(rho * s, s)}), base);
      }
    }
  }
}

TEST(PredictWinnerTest, LadderFlipsOnceAtThreshold) {
  for (int n = 2; n <= 8; ++n) {
    const double crit = *CriticalRatio(n);
    const double lo = std::max(1e-6, crit - 0.05), hi = std::min(1.0, crit + 0.05);
    int flips = 0;
    Winner prev = PredictWinner(n, lo);
    for (int i = 0; i < 200; ++i) {
      const double rho = lo + (hi - lo) * i / 199;
      const Winner w = PredictWinner(n, rho);
      EXPECT_EQ(w, rho > crit ? Winner::kBarney : Winner::kWilma) << n << ' ' << rho;
      if (w != prev) ++flips;
      prev = w;
    }
    EXPECT_EQ(flips, 1) << "n=" << n;
  }
}

TEST(WilmaPlacementTest, OneByNGrid) {
  const GameConfig three{3, Board(1.0, 0.3)};
  const auto p = WilmaPlacement(three);
  ASSERT_EQ(p.size(), 3u);
  const double xs[] = {1.0 / 6, 0.5, 5.0 / 6};
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(p[i].x, xs[i], 1e-15);
    EXPECT_NEAR(p[i].y, 0.15, 1e-15);
  }
  const auto two = WilmaPlacement({2, Board(1.0, 0.8)});
  EXPECT_NEAR(two[0].x, 0.25, 1e-15);
  EXPECT_NEAR(two[1].x, 0.75, 1e-15);
  EXPECT_NEAR(two[0].y, 0.4, 1e-15);

  for (const GameConfig& c : {three, GameConfig{5, Board(0.4, 2.0, {1, 1})}}) {
    const auto cells = ComputeVoronoi({WilmaPlacement(c), {}}, c.board);
    const GridShape g = IsRegularGrid(cells, DefaultGridTolerance(c.board));
    EXPECT_TRUE(g.regular);
    EXPECT_EQ(g.rows * g.cols, c.n);
  }
}

TEST(WilmaPlacementTest, ShortAxisVariantLoses) {
  const Board b(1.0, 0.8);
  const auto w = WilmaShortAxisPlacement({2, b});
  ASSERT_EQ(w.size(), 2u);
  EXPECT_NEAR(w[0].x, 0.5, 1e-15);
  EXPECT_NEAR(w[0].y, 0.2, 1e-15);
  EXPECT_NEAR(w[1].y, 0.6, 1e-15);
  const StrategyResult s = BarneyStrategy(w, b, DefaultEpsilon(b));
  EXPECT_EQ(PlayGame(w, s.points, b).winner, Winner::kBarney);
}

TEST(BarneyStrategyTest, TwoOnUnitSquare) {
  const Board b(1, 1);
  const std::vector<Point> w = {{0.25, 0.5}, {0.75, 0.5}};
  const StrategyResult s = BarneyStrategy(w, b, DefaultEpsilon(b));
  ASSERT_EQ(s.points.size(), 2u);
  EXPECT_NEAR(StealAreaExact(w, b, s.points[0]), 0.2548, 1e-3);
  EXPECT_GT(s.guaranteed_area, 0.5);
  EXPECT_NEAR(Tally(ComputeVoronoi({w, s.points}, b)).black, s.guaranteed_area, 1e-15);
  EXPECT_EQ(PlayGame(w, s.points, b).winner, Winner::kBarney);
}

TEST(BarneyStrategyTest, TwoByTwoExplicit) {
  const Board b(1, 1);
  const double eps = 1e-3;
  const StrategyResult s = TwoByTwoStrategy(b, {0.5, 0.296}, eps);
  ASSERT_EQ(s.points.size(), 4u);
  EXPECT_NEAR(s.points[1].x, 0.25 - 4 * eps / 3, 1e-15);
  EXPECT_GE(s.guaranteed_area, 0.505);
  EXPECT_LE(s.guaranteed_area, 0.515);

  const StrategyResult g = BarneyStrategy(TwoByTwoGrid(b), b, DefaultEpsilon(b));
  EXPECT_GT(g.guaranteed_area, 0.5);
}

TEST(BarneyStrategyTest, FourStonesOnNarrowBoards) {
  for (double rho : {0.6, 0.8, 1.0}) {
    const Board b(1.0, rho);
    const double eps = 1e-3;
    const StrategyResult s = FourStonesStrategy(b, eps);
    EXPECT_GT(s.guaranteed_area, FourStonesLowerBound(rho) - 5 * eps);
  }
}

TEST(BarneyStrategyTest, CannotWinInWilmaRegime) {
  const double rho = kSqrt2 / 3 - 0.01;
  const Board b(1.0, rho);
  const auto w = WilmaPlacement({3, b});
  const StrategyResult s = BarneyStrategy(w, b, DefaultEpsilon(b));
  EXPECT_LE(s.guaranteed_area, b.area() / 2 + 1e-6);
}

TEST(BarneyStrategyTest, WinsAboveThreshold) {
  for (int n = 2; n <= 6; ++n) {
    const double rho = std::min(1.0, *CriticalRatio(n) + 0.03);
    const Board b(1.0, rho);
    const auto w = WilmaPlacement({n, b});
    const StrategyResult s = BarneyStrategy(w, b, DefaultEpsilon(b));
    EXPECT_GT(s.guaranteed_area, b.area() / 2) << "n=" << n;
  }
}

TEST(BarneyStrategyTest, FormulaAgreesWithTally) {
  for (int n = 2; n <= 6; ++n) {
    for (double rho : {0.3, 0.7, 1.0}) {
      const Board b(rho, 1.0);
      const double eps = DefaultEpsilon(b);
      const StrategyResult s = BarneyStrategy(WilmaPlacement({n, b}), b, eps);
      EXPECT_NEAR(s.formula_area, s.guaranteed_area,
                  5 * s.epsilon * n * b.diameter());
    }
  }
}

TEST(BarneyStrategyTest, NotAGrid) {
  const Board b(1, 1);
  try {
    BarneyStrategy(std::vector<Point>{{0.2, 0.5}, {0.75, 0.5}}, b, 1e-4);
    FAIL();
  } catch (const GameError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAGrid);
  }
}

TEST(BarneyPlayTest, ExploitsNonGrid) {
  const Board b(1, 1);
  const std::vector<Point> w = {{0.2, 0.5}, {0.75, 0.5}};
  const StrategyResult s = BarneyPlay(w, b, DefaultEpsilon(b));
  EXPECT_EQ(s.points.size(), 2u);
  EXPECT_GT(s.guaranteed_area, 0.5);
}

TEST(PlayGameTest, MirrorIsTie) {
  const Board b(1, 1);
  const auto g = PlayGame(std::vector<Point>{{0.25, 0.5}},
                          std::vector<Point>{{0.75, 0.5}}, b);
  EXPECT_EQ(g.winner, Winner::kTie);
  EXPECT_NEAR(g.white_area, 0.5, 1e-15);
}

TEST(PlayGameTest, ShiftedCopyIsNearTie) {
  const Board b(1.0, 0.4);
  const double eps = 1e-4;
  const auto w = WilmaPlacement({3, b});
  std::vector<Point> black;
  for (const Point& p : w) black.push_back({p.x, p.y + eps});
  const auto g = PlayGame(w, black, b);
  EXPECT_LE(std::abs(g.white_area - g.black_area), 2 * eps * b.width());
}

TEST(PlayGameTest, Conservation) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  const Board b(2.0, 0.7);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 9;
    std::vector<Point> w, k;
    for (int i = 0; i < n; ++i) {
      w.push_back({2.0 * u(rng), 0.7 * u(rng)});
      k.push_back({2.0 * u(rng), 0.7 * u(rng)});
    }
    const auto g = PlayGame(w, k, b);
    EXPECT_NEAR(g.white_area + g.black_area, b.area(), 1e-8 * b.area());
  }
}

TEST(PlayGameTest, CoincidentThrows) {
  const Board b(1, 1);
  EXPECT_THROW(PlayGame(std::vector<Point>{{0.5, 0.5}},
                        std::vector<Point>{{0.5, 0.5}}, b),
               GameError);
}

}  // namespace
}  // namespace vgame
