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

#include "vgame/closed_forms.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vgame/errors.h"

namespace vgame {

StripFrame::StripFrame(double half_height, int count)
    : r(half_height), n(count) {
  if (!(r > 0.0) || !std::isfinite(r) || n < 3) {
    throw GameError(ErrorCode::kDomainError,
                    "strip frame needs r > 0 and n >= 3");
  }
}

Board StripFrame::board() const { return Board(2.0 * n, 2.0 * r, {-3.0, -r}); }

std::vector<Point> StripFrame::white_sites() const {
  std::vector<Point> sites;
  sites.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) sites.push_back({-2.0 + 2.0 * i, 0.0});
  return sites;
}

StealBreakdown ComputeStealBreakdown(const StripFrame& frame, double x,
                                     double y) {
  const double r = frame.r;
  if (!(y > 0.0) || y > r || x < 0.0 || x > 1.0) {
    throw GameError(ErrorCode::kDomainError,
                    "steal breakdown needs 0 <= x <= 1 and 0 < y <= r");
  }
  StealBreakdown s;
  s.b1 = y / 2.0 + x * x / (2.0 * y);
  s.phi1 = std::atan2(x, y);
  s.phi2 = std::atan2(y, 2.0 - x);

  const double h1 = r - s.b1;
  const double h0 = h1 - x / y;
  const double h2 = h1 + x / y;
  s.out_of_regime = h1 < 0.0 || h0 < 0.0 || h2 > 2.0 * r;

  s.h0 = std::max(h0, 0.0);
  s.h2 = std::max(h2, 0.0);
  s.x0 = s.h0 * y / (2.0 + x);
  s.x2 = s.h2 * y / (2.0 - x);
  // The triangles must end inside the neighbouring cells.
  s.out_of_regime = s.out_of_regime || s.x0 > 2.0 || s.x2 > 2.0;

  s.R1 = 2.0 * std::max(h1, 0.0);
  s.R2 = s.x2 * s.h2 / 2.0;
  s.R0 = s.x0 * s.h0 / 2.0;
  s.total = s.R0 + s.R1 + s.R2;
  return s;
}

double StealOnAxis(double r, double y) {
  return r * r * y / 2.0 - r * y * y / 2.0 + y * y * y / 8.0 + 2.0 * r - y;
}

std::optional<std::pair<double, double>> WinningInterval(double r) {
  if (!(r > std::numbers::sqrt2)) return std::nullopt;
  return std::make_pair(0.0, 2.0 * (r - std::numbers::sqrt2));
}

double YStar(double r) {
  if (!(r > std::numbers::sqrt2) || r > std::sqrt(3.0)) {
    throw GameError(ErrorCode::kDomainError,
                    "y* is defined for sqrt(2) < r <= sqrt(3)");
  }
  return (4.0 * r - 2.0 * std::sqrt(r * r + 6.0)) / 3.0;
}

std::optional<double> CriticalRatio(int n) {
  if (n < 1) throw GameError(ErrorCode::kDomainError, "n must be >= 1");
  if (n == 1) return std::nullopt;
  if (n == 2) return std::sqrt(3.0) / 2.0;
  return std::numbers::sqrt2 / n;
}

double FourStonesLowerBound(double rho) {
  if (!(rho > 0.0) || rho > 1.0) {
    throw GameError(ErrorCode::kDomainError, "rho must lie in (0, 1]");
  }
  return rho * (0.5 + 1.0 / 128.0);
}

}  // namespace vgame
