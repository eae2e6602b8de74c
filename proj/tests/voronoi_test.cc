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

#include "vgame/voronoi.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "vgame/errors.h"

namespace vgame {
namespace {

std::vector<Point> Grid(const Board& b, int rows, int cols) {
  std::vector<Point> sites;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      sites.push_back({b.origin().x + (j + 0.5) * b.width() / cols,
                       b.origin().y + (i + 0.5) * b.height() / rows});
    }
  }
  return sites;
}

std::vector<VoronoiCell> WhiteDiagram(std::vector<Point> white, const Board& b) {
  return ComputeVoronoi(SiteSet{std::move(white), {}}, b);
}

std::vector<Point> RandomSites(std::mt19937_64& rng, const Board& b, int n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Point> s;
  for (int i = 0; i < n; ++i) {
    s.push_back({b.origin().x + b.width() * (0.001 + 0.998 * u(rng)),
                 b.origin().y + b.height() * (0.001 + 0.998 * u(rng))});
  }
  return s;
}

TEST(BoardTest, Basics) {
  const Board b(2.0, 0.5, {1, 1});
  EXPECT_DOUBLE_EQ(b.aspect_ratio(), 0.25);
  EXPECT_DOUBLE_EQ(b.area(), 1.0);
  EXPECT_TRUE(b.Contains({3, 1.5}));
  EXPECT_FALSE(b.ContainsStrictly({3, 1.5}));
  EXPECT_THROW(Board(0.0, 1.0), GameError);
}

TEST(VoronoiTest, TwoSitesSplitSquare) {
  const auto cells = WhiteDiagram({{0.25, 0.5}, {0.75, 0.5}}, Board(1, 1));
  ASSERT_EQ(cells.size(), 2u);
  for (const auto& c : cells) {
    EXPECT_NEAR(c.region.area(), 0.5, 1e-15);
    EXPECT_EQ(c.region.vertices().size(), 4u);
  }
}

TEST(VoronoiTest, StripOfThree) {
  const double r = 0.4;
  const Board b(6.0, 2 * r, {-3.0, -r});
  const auto cells = WhiteDiagram({{-2, 0}, {0, 0}, {2, 0}}, b);
  for (const auto& c : cells) EXPECT_NEAR(c.region.area(), 4 * r, 1e-14);
  const GridShape g = IsRegularGrid(cells, DefaultGridTolerance(b));
  EXPECT_TRUE(g.regular);
  EXPECT_EQ(g.rows, 1);
  EXPECT_EQ(g.cols, 3);
}

TEST(VoronoiTest, SingleSiteTakesBoard) {
  const Board b(1.7, 0.9, {0.2, -0.4});
  const auto cells = WhiteDiagram({{0.3, 0.1}}, b);
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_NEAR(cells[0].region.area(), b.area(), 1e-15);
}

TEST(VoronoiTest, ErrorsOnBadSites) {
  const Board b(1, 1);
  auto code_of = [&](SiteSet s) {
    try {
      ComputeVoronoi(s, b);
    } catch (const GameError& e) {
      return e.code();
    }
    return ErrorCode::kNotFound;
  };
  EXPECT_EQ(code_of({{{0.5, 0.5}}, {{0.5, 0.5 + 1e-10}}}),
            ErrorCode::kCoincidentSites);
  EXPECT_EQ(code_of({{{1.5, 0.5}}, {}}), ErrorCode::kOutsideBoard);
  EXPECT_EQ(code_of({{}, {{0.5, 0.5}}}), ErrorCode::kInvalidConfig);
}

TEST(TallyTest, Examples) {
  const Board b(1, 1);
  const auto all_white = Tally(WhiteDiagram(Grid(b, 2, 2), b));
  EXPECT_NEAR(all_white.white, 1.0, 1e-14);
  EXPECT_EQ(all_white.black, 0.0);

  const auto half = Tally(ComputeVoronoi({{{0.25, 0.5}}, {{0.75, 0.5}}}, b));
  EXPECT_NEAR(half.white, 0.5, 1e-15);
  EXPECT_NEAR(half.black, 0.5, 1e-15);
}

TEST(VoronoiTest, CoverageOnRandomSiteSets) {
  std::mt19937_64 rng(21);
  const Board b(1.3, 0.7, {-0.2, 0.4});
  for (int n = 1; n <= 64; ++n) {
    SiteSet s{RandomSites(rng, b, n), RandomSites(rng, b, n / 3)};
    const auto cells = ComputeVoronoi(s, b);
    ASSERT_EQ(cells.size(), s.white.size() + s.black.size());
    double sum = 0.0;
    for (const auto& c : cells) {
      sum += c.region.area();
      EXPECT_TRUE(c.region.Contains(c.site, 1e-12));
    }
    EXPECT_NEAR(sum, b.area(), 1e-8 * b.area()) << "n=" << n;
  }
}

TEST(VoronoiTest, SamplesLieInNearestSiteCell) {
  std::mt19937_64 rng(22);
  const Board b(1.0, 0.8);
  const auto sites = RandomSites(rng, b, 25);
  const auto cells = WhiteDiagram(sites, b);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 10000; ++k) {
    const Point q{u(rng) * b.width(), u(rng) * b.height()};
    double best = INFINITY;
    for (const Point& s : sites) best = std::min(best, Distance(q, s));
    int hits = 0;
    for (const auto& c : cells) {
      if (!c.region.Contains(q, 1e-12)) continue;
      ++hits;
      EXPECT_LE(Distance(q, c.site), best + 1e-9);
    }
    EXPECT_GE(hits, 1);
  }
}

TEST(GridTest, Examples) {
  const Board b(3.0, 2.0);
  const double tol = DefaultGridTolerance(b);
  const GridShape g = IsRegularGrid(WhiteDiagram(Grid(b, 2, 3), b), tol);
  EXPECT_TRUE(g.regular);
  EXPECT_EQ(g.rows, 2);
  EXPECT_EQ(g.cols, 3);

  auto moved = Grid(b, 2, 3);
  moved[4].x += 10 * tol;
  EXPECT_FALSE(IsRegularGrid(WhiteDiagram(moved, b), tol).regular);

  const Board strip(1.0, 0.3);
  for (int n = 1; n <= 6; ++n) {
    const GridShape s = IsRegularGrid(WhiteDiagram(Grid(strip, 1, n), strip),
                                      DefaultGridTolerance(strip));
    EXPECT_TRUE(s.regular);
    EXPECT_EQ(s.rows, 1);
    EXPECT_EQ(s.cols, n);
  }
}

TEST(GridTest, ScaleInvariant) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (double s : {1e-3, 0.37, 5.0, 4e3}) {
    const Board b(3.0, 2.0), big(3.0 * s, 2.0 * s);
    for (int rows : {1, 2, 3}) {
      for (int cols : {1, 2, 4}) {
        auto sites = Grid(b, rows, cols);
        if (u(rng) < 0.5) sites[0].y += 0.01;
        std::vector<Point> scaled;
        for (const Point& p : sites) scaled.push_back(p * s);
        const GridShape a = IsRegularGrid(WhiteDiagram(sites, b), DefaultGridTolerance(b));
        const GridShape c =
            IsRegularGrid(WhiteDiagram(scaled, big), DefaultGridTolerance(big));
        EXPECT_EQ(a.regular, c.regular);
        EXPECT_EQ(a.rows, c.rows);
        EXPECT_EQ(a.cols, c.cols);
      }
    }
  }
}

TEST(ExploitTest, NoneOnGrid) {
  const Board b(1.0, 0.6);
  EXPECT_FALSE(FindAsymmetricExploit(WhiteDiagram(Grid(b, 2, 3), b), b).has_value());
  EXPECT_FALSE(FindAsymmetricExploit(WhiteDiagram(Grid(b, 1, 1), b), b).has_value());
}

TEST(ExploitTest, AgreesWithDenseSweep) {
  const Board b(1, 1);
  const auto cells = WhiteDiagram({{0.25, 0.5}, {0.6, 0.5}}, b);
  const auto report = FindAsymmetricExploit(cells, b);
  ASSERT_TRUE(report.has_value());
  EXPECT_GT(report->excess, 0.0);

  const auto& cell = cells[report->cell_index];
  double sweep = -INFINITY;
  for (int k = 0; k < 10000; ++k) {
    const double a = std::numbers::pi * k / 10000;
    auto [l, r] = SplitAreas(cell.region, cell.site, a);
    sweep = std::max(sweep, std::max(l, r) - cell.region.area() / 2);
  }
  EXPECT_GE(report->excess, sweep - 1e-12);
  EXPECT_LE(report->excess, sweep + 1e-6);

  // Best over both cells, also by sweep.
  for (const auto& c : cells) {
    for (int k = 0; k < 10000; k += 7) {
      auto [l, r] = SplitAreas(c.region, c.site, std::numbers::pi * k / 10000);
      EXPECT_LE(std::max(l, r) - c.region.area() / 2, report->excess + 1e-9);
    }
  }
  // The larger side really lies on the side of toward_larger.
  const Point probe = report->site + report->toward_larger * 0.05;
  EXPECT_TRUE(cell.region.Contains(probe));
}

TEST(ExploitTest, CenteredRectangleCellIsNotReported) {
  // The left cell [0, 0.5] x [0, 1] holds its site at the center.
  const Board b(1, 1);
  const auto cells = WhiteDiagram({{0.25, 0.5}, {0.75, 0.3}}, b);
  const auto report = FindAsymmetricExploit(cells, b);
  ASSERT_TRUE(report.has_value());
  EXPECT_EQ(report->cell_index, 1);
}

TEST(ExploitTest, NoneExactlyOnGrids) {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Board b(1.0, 0.75);
  const double tol = DefaultGridTolerance(b);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + trial % 3, cols = 1 + (trial / 3) % 4;
    auto sites = Grid(b, rows, cols);
    if (trial % 2 == 1) {
      Point& s = sites[trial % sites.size()];
      s.x += 0.02 * u(rng);
      s.y += 0.02 * u(rng);
    }
    const auto cells = WhiteDiagram(sites, b);
    EXPECT_EQ(!FindAsymmetricExploit(cells, b, tol).has_value(),
              IsRegularGrid(cells, tol).regular);
  }
}

}  // namespace
}  // namespace vgame
