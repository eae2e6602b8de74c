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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "vgame/errors.h"

namespace vgame {

Board::Board(double width, double height, Point origin)
    : width_(width), height_(height), origin_(origin) {
  if (!(width > 0.0) || !(height > 0.0) || !std::isfinite(width) ||
      !std::isfinite(height)) {
    throw GameError(ErrorCode::kInvalidConfig,
                    "board sides must be positive and finite");
  }
}

double Board::short_side() const { return std::min(width_, height_); }
double Board::long_side() const { return std::max(width_, height_); }
double Board::diameter() const { return std::hypot(width_, height_); }
Point Board::center() const {
  return {origin_.x + 0.5 * width_, origin_.y + 0.5 * height_};
}

ConvexPolygon Board::polygon() const {
  const Point ur = upper_right();
  return ConvexPolygon::Rectangle(origin_.x, origin_.y, ur.x, ur.y);
}

bool Board::Contains(const Point& p) const {
  const Point ur = upper_right();
  return p.x >= origin_.x && p.x <= ur.x && p.y >= origin_.y && p.y <= ur.y;
}

bool Board::ContainsStrictly(const Point& p) const {
  const Point ur = upper_right();
  return p.x > origin_.x && p.x < ur.x && p.y > origin_.y && p.y < ur.y;
}

void ValidateSites(const SiteSet& sites, const Board& board) {
  if (sites.white.empty()) {
    throw GameError(ErrorCode::kInvalidConfig, "at least one white site");
  }
  std::vector<Point> all = sites.white;
  all.insert(all.end(), sites.black.begin(), sites.black.end());
  for (const Point& p : all) {
    if (!board.ContainsStrictly(p)) {
      throw GameError(ErrorCode::kOutsideBoard,
                      "site is not strictly inside the board");
    }
  }
  // Sorting by x lets the pairwise check stop early.
  std::sort(all.begin(), all.end(), LexLess);
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = i + 1; j < all.size(); ++j) {
      if (all[j].x - all[i].x > kCoincidenceTolerance) break;
      if (Distance(all[i], all[j]) <= kCoincidenceTolerance) {
        throw GameError(ErrorCode::kCoincidentSites, "coincident sites");
      }
    }
  }
}

std::optional<ConvexPolygon> ClippedCell(const Point& site,
                                         std::span<const Point> competitors,
                                         const Board& board) {
  std::vector<size_t> order(competitors.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return SquaredDistance(site, competitors[a]) <
           SquaredDistance(site, competitors[b]);
  });

  std::optional<ConvexPolygon> cell = board.polygon();
  for (size_t k : order) {
    double reach = 0.0;
    for (const Point& v : cell->vertices()) {
      reach = std::max(reach, Distance(site, v));
    }
    // Bisectors further than the farthest vertex cannot cut; neither can any
    // later competitor.
    if (Distance(site, competitors[k]) > 2.0 * reach * (1.0 + 1e-12)) break;
    cell = Clip(*cell, BisectorHalfPlane(site, competitors[k]));
    if (!cell) return std::nullopt;
  }
  return cell;
}

std::vector<VoronoiCell> ComputeVoronoi(const SiteSet& sites,
                                        const Board& board) {
  ValidateSites(sites, board);
  std::vector<Point> all = sites.white;
  all.insert(all.end(), sites.black.begin(), sites.black.end());

  std::vector<VoronoiCell> cells;
  cells.reserve(all.size());
  std::vector<Point> others;
  others.reserve(all.size());
  for (size_t i = 0; i < all.size(); ++i) {
    others.clear();
    for (size_t j = 0; j < all.size(); ++j) {
      if (j != i) others.push_back(all[j]);
    }
    auto region = ClippedCell(all[i], others, board);
    if (!region) {
      throw GameError(ErrorCode::kDomainError, "empty Voronoi cell");
    }
    const bool white = i < sites.white.size();
    cells.push_back(VoronoiCell{
        all[i], white ? Owner::kWhite : Owner::kBlack,
        static_cast<int>(white ? i : i - sites.white.size()),
        std::move(*region)});
  }
  return cells;
}

AreaTally Tally(std::span<const VoronoiCell> cells) {
  AreaTally tally;
  for (const VoronoiCell& cell : cells) {
    (cell.owner == Owner::kWhite ? tally.white : tally.black) +=
        cell.region.area();
  }
  return tally;
}

double DefaultGridTolerance(const Board& board) {
  return 1e-6 * board.long_side();
}

namespace {

int CountDistinct(std::vector<double> values, double tol) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  int count = 1;
  for (size_t i = 1; i < values.size(); ++i) {
    if (values[i] - values[i - 1] > tol) ++count;
  }
  return count;
}

}  // namespace

GridShape IsRegularGrid(std::span<const VoronoiCell> cells, double tol) {
  GridShape shape;
  if (cells.empty()) return shape;
  double width0 = 0.0;
  double height0 = 0.0;
  std::vector<double> xs;
  std::vector<double> ys;
  for (size_t c = 0; c < cells.size(); ++c) {
    const std::vector<Point>& v = cells[c].region.vertices();
    if (v.size() != 4) return shape;
    double x0 = v[0].x, x1 = v[0].x, y0 = v[0].y, y1 = v[0].y;
    for (size_t i = 0; i < 4; ++i) {
      const Point e = v[(i + 1) % 4] - v[i];
      if (std::abs(e.x) > tol && std::abs(e.y) > tol) return shape;
      x0 = std::min(x0, v[i].x);
      x1 = std::max(x1, v[i].x);
      y0 = std::min(y0, v[i].y);
      y1 = std::max(y1, v[i].y);
    }
    const Point& site = cells[c].site;
    if (std::abs(site.x - 0.5 * (x0 + x1)) > tol ||
        std::abs(site.y - 0.5 * (y0 + y1)) > tol) {
      return shape;
    }
    if (c == 0) {
      width0 = x1 - x0;
      height0 = y1 - y0;
    } else if (std::abs(x1 - x0 - width0) > tol ||
               std::abs(y1 - y0 - height0) > tol) {
      return shape;
    }
    xs.push_back(site.x);
    ys.push_back(site.y);
  }
  const int rows = CountDistinct(ys, tol);
  const int cols = CountDistinct(xs, tol);
  if (static_cast<size_t>(rows) * static_cast<size_t>(cols) != cells.size()) {
    return shape;
  }
  return {true, rows, cols};
}

ExploitReport BestSplit(const VoronoiCell& cell, int cell_index) {
  const ConvexPolygon& poly = cell.region;
  auto imbalance = [&](double phi) {
    const auto [left, right] = SplitAreas(poly, cell.site, phi);
    return std::abs(left - right);
  };

  // Coarse scan, then golden-section refinement around the best sample.
  constexpr int kCoarse = 180;
  constexpr double kStep = std::numbers::pi / kCoarse;
  double best_phi = 0.0;
  double best_value = -1.0;
  for (int k = 0; k < kCoarse; ++k) {
    const double value = imbalance(k * kStep);
    if (value > best_value) {
      best_value = value;
      best_phi = k * kStep;
    }
  }
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = best_phi - kStep;
  double b = best_phi + kStep;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = imbalance(c);
  double fd = imbalance(d);
  for (int it = 0; it < 60; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = imbalance(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = imbalance(d);
    }
  }
  double phi = 0.5 * (a + b);
  if (imbalance(phi) < best_value) phi = best_phi;
  phi = std::fmod(phi + std::numbers::pi, std::numbers::pi);

  const auto [left, right] = SplitAreas(poly, cell.site, phi);
  const Point left_normal{-std::sin(phi), std::cos(phi)};
  ExploitReport report;
  report.cell_index = cell_index;
  report.site = cell.site;
  report.cell_area = poly.area();
  report.angle = phi;
  report.toward_larger = left >= right ? left_normal : left_normal * -1.0;
  report.excess = std::max(left, right) - 0.5 * poly.area();
  return report;
}

std::optional<ExploitReport> FindAsymmetricExploit(
    std::span<const VoronoiCell> cells, const Board& /*board*/, double tol) {
  if (cells.empty() || IsRegularGrid(cells, tol).regular) return std::nullopt;

  std::vector<int> suspects;
  for (size_t i = 0; i < cells.size(); ++i) {
    const ConvexPolygon& region = cells[i].region;
    const SymmetryResult sym =
        IsPointSymmetric(region, tol / region.Diameter());
    const bool centred =
        Distance(cells[i].site, region.Centroid()) <= tol;
    if (!sym.symmetric || !centred) suspects.push_back(static_cast<int>(i));
  }
  // A non-grid diagram always has a suspect in exact arithmetic; fall back to
  // every cell when rounding hides it.
  if (suspects.empty()) {
    suspects.resize(cells.size());
    std::iota(suspects.begin(), suspects.end(), 0);
  }
  std::optional<ExploitReport> best;
  for (int i : suspects) {
    ExploitReport report = BestSplit(cells[static_cast<size_t>(i)], i);
    if (!best || report.excess > best->excess) best = report;
  }
  return best;
}

std::optional<ExploitReport> FindAsymmetricExploit(
    std::span<const VoronoiCell> cells, const Board& board) {
  return FindAsymmetricExploit(cells, board, DefaultGridTolerance(board));
}

}  // namespace vgame
