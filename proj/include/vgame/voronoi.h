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

// Clipped Voronoi diagrams on a rectangular board and the structural tests
// that decide whether a white configuration can be exploited.

#ifndef VGAME_VORONOI_H_
#define VGAME_VORONOI_H_

#include <optional>
#include <span>
#include <vector>

#include "vgame/geometry.h"

namespace vgame {

// Sites closer than this are treated as the same location.
inline constexpr double kCoincidenceTolerance = 1e-9;

class Board {
 public:
  // Throws GameError(kInvalidConfig) unless both sides are positive.
  Board(double width, double height, Point origin = {});

  double width() const { return width_; }
  double height() const { return height_; }
  const Point& origin() const { return origin_; }

  double area() const { return width_ * height_; }
  double short_side() const;
  double long_side() const;
  // min(width, height) / max(width, height), in (0, 1].
  double aspect_ratio() const { return short_side() / long_side(); }
  double diameter() const;
  Point center() const;
  Point upper_right() const { return {origin_.x + width_, origin_.y + height_}; }

  ConvexPolygon polygon() const;
  bool Contains(const Point& p) const;
  bool ContainsStrictly(const Point& p) const;

 private:
  double width_;
  double height_;
  Point origin_;
};

struct SiteSet {
  std::vector<Point> white;
  std::vector<Point> black;
};

// Throws GameError with kInvalidConfig (no white site), kOutsideBoard or
// kCoincidentSites.
void ValidateSites(const SiteSet& sites, const Board& board);

enum class Owner { kWhite, kBlack };

struct VoronoiCell {
  Point site;
  Owner owner = Owner::kWhite;
  // Position of the site within its colour's list.
  int index = 0;
  ConvexPolygon region;
};

// The board intersected with the bisector half-planes of `site` against all
// `competitors`. Competitors equal to `site` must not be passed.
std::optional<ConvexPolygon> ClippedCell(const Point& site,
                                         std::span<const Point> competitors,
                                         const Board& board);

// One cell per site, white cells first, in input order.
std::vector<VoronoiCell> ComputeVoronoi(const SiteSet& sites,
                                        const Board& board);

struct AreaTally {
  double white = 0.0;
  double black = 0.0;
};

AreaTally Tally(std::span<const VoronoiCell> cells);

struct GridShape {
  bool regular = false;
  // Number of distinct site heights and distinct site abscissae.
  int rows = 0;
  int cols = 0;
};

double DefaultGridTolerance(const Board& board);

// Congruent, identically oriented axis-aligned rectangles with every site at
// its cell's centre, up to an absolute tolerance.
GridShape IsRegularGrid(std::span<const VoronoiCell> cells, double tol);

struct ExploitReport {
  int cell_index = 0;
  Point site;
  double cell_area = 0.0;
  // Direction of the cut through the site with the largest one-sided area.
  double angle = 0.0;
  // Unit normal of the cut, pointing into the larger side.
  Point toward_larger;
  // Larger side minus half the cell area.
  double excess = 0.0;
};

// Best one-sided split of a single cell through its site.
ExploitReport BestSplit(const VoronoiCell& cell, int cell_index);

// std::nullopt exactly when the diagram is a regular grid at `tol`.
// Otherwise reports the cell with the largest excess among the cells that are
// not point symmetric or whose site is off-centre.
std::optional<ExploitReport> FindAsymmetricExploit(
    std::span<const VoronoiCell> cells, const Board& board, double tol);
std::optional<ExploitReport> FindAsymmetricExploit(
    std::span<const VoronoiCell> cells, const Board& board);

}  // namespace vgame

#endif  // VGAME_VORONOI_H_
