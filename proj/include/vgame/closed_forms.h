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

// Scalar formulas for the one-round game on rectangles, each stated in the
// coordinate frame in which it is simplest.

#ifndef VGAME_CLOSED_FORMS_H_
#define VGAME_CLOSED_FORMS_H_

#include <optional>
#include <utility>
#include <vector>

#include "vgame/geometry.h"
#include "vgame/voronoi.h"

namespace vgame {

// A 1 x n white grid scaled so that cells are 2 wide and 2r tall. White sites
// sit at (-2, 0), (0, 0), ..., (2n - 4, 0); the board spans (-3, -r) to
// (2n - 3, r), so its aspect ratio is r / n.
struct StripFrame {
  double r = 1.0;
  int n = 3;

  // Throws GameError(kDomainError) unless r > 0 and n >= 3.
  StripFrame(double half_height, int count);

  Board board() const;
  std::vector<Point> white_sites() const;
};

// The area a black point p = (x, y) in the cell of the white site at the
// origin takes from the three cells around it: R1 from the origin's cell,
// R0 from the left neighbour and R2 from the right neighbour.
struct StealBreakdown {
  // Height at which the bisector of p and the origin crosses x = 0.
  double b1 = 0.0;
  // Angles with tan(phi1) = x / y and tan(phi2) = y / (2 - x).
  double phi1 = 0.0;
  double phi2 = 0.0;
  // Heights of the stolen region on the left and right cell borders.
  double h0 = 0.0;
  double h2 = 0.0;
  // Widths of the triangles along the top edge of the neighbour cells.
  double x0 = 0.0;
  double x2 = 0.0;
  double R0 = 0.0;
  double R1 = 0.0;
  double R2 = 0.0;
  double total = 0.0;
  // Set when p does not take a proper piece of all three cells, or when a
  // piece would leave its cell; the R values are then clamped and total is
  // not the stolen area.
  bool out_of_regime = false;
};

// Requires 0 <= x <= 1 and 0 < y <= r; throws GameError(kDomainError)
// otherwise (the formulas are singular at y = 0).
StealBreakdown ComputeStealBreakdown(const StripFrame& frame, double x,
                                     double y);

// Stolen area of (0, y) as a cubic in y.
double StealOnAxis(double r, double y);

// The y-range on the vertical axis from which a single black point steals
// more than 2r. std::nullopt when r <= sqrt(2).
std::optional<std::pair<double, double>> WinningInterval(double r);

// Maximiser of StealOnAxis over y for sqrt(2) < r <= sqrt(3); throws
// GameError(kDomainError) outside that range.
double YStar(double r);

// Aspect ratio above which Barney wins; std::nullopt when Wilma always wins
// (n = 1). Throws GameError(kDomainError) for n < 1.
std::optional<double> CriticalRatio(int n);

// Area Barney is guaranteed against a 2 x 2 white grid on a rho x 1 board.
double FourStonesLowerBound(double rho);

}  // namespace vgame

#endif  // VGAME_CLOSED_FORMS_H_
