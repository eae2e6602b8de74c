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

#include "vgame/geometry.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "vgame/errors.h"

namespace vgame {

Point::Point(double x_in, double y_in) : x(x_in), y(y_in) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw GameError(ErrorCode::kDomainError, "non-finite point coordinate");
  }
}

double Dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
double Cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
double Norm(const Point& a) { return std::hypot(a.x, a.y); }
double Distance(const Point& a, const Point& b) { return Norm(a - b); }
double SquaredDistance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

bool LexLess(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

HalfPlane::HalfPlane(Point normal, double offset) {
  const double len = Norm(normal);
  if (!(len > 0.0) || !std::isfinite(offset)) {
    throw GameError(ErrorCode::kDomainError, "degenerate half-plane");
  }
  normal_ = normal * (1.0 / len);
  offset_ = offset / len;
}

HalfPlane HalfPlane::Complement() const { return {normal_ * -1.0, -offset_}; }

double Area(std::span<const Point> ring) {
  const size_t n = ring.size();
  if (n < 3) return 0.0;
  double twice = 0.0;
  for (size_t i = 0; i < n; ++i) {
    twice += Cross(ring[i], ring[(i + 1) % n]);
  }
  return 0.5 * twice;
}

double Area(const ConvexPolygon& poly) { return poly.area(); }

namespace {

// Removes duplicates and (near-)collinear vertices from a counterclockwise
// ring. Returns false if a reflex vertex survives.
bool Simplify(std::vector<Point>& ring) {
  bool changed = true;
  while (changed && ring.size() >= 3) {
    changed = false;
    for (size_t i = 0; i < ring.size() && ring.size() >= 3; ++i) {
      const size_t n = ring.size();
      const Point& a = ring[(i + n - 1) % n];
      const Point& b = ring[i];
      const Point& c = ring[(i + 1) % n];
      const bool duplicate = Distance(a, b) <= kCollinearTolerance;
      const double base = Distance(a, c);
      const bool collinear =
          !duplicate && (base <= kCollinearTolerance ||
                         std::abs(Cross(c - a, b - a)) / base <=
                             kCollinearTolerance);
      if (duplicate || collinear) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (ring.size() < 3) return false;
  const size_t n = ring.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    const Point& c = ring[(i + 2) % n];
    if (Cross(b - a, c - b) <= 0.0) return false;
  }
  return true;
}

}  // namespace

std::optional<ConvexPolygon> ConvexPolygon::TryMake(
    std::vector<Point> vertices) {
  if (vertices.size() < 3) return std::nullopt;
  if (Area(vertices) < 0.0) std::reverse(vertices.begin(), vertices.end());
  if (!Simplify(vertices)) return std::nullopt;
  const double area = Area(vertices);
  if (!(area > 0.0)) return std::nullopt;
  return ConvexPolygon(Unchecked{}, std::move(vertices), area);
}

ConvexPolygon::ConvexPolygon(std::vector<Point> vertices) {
  auto poly = TryMake(std::move(vertices));
  if (!poly) {
    throw GameError(ErrorCode::kDomainError,
                    "vertices do not form a convex polygon of positive area");
  }
  *this = std::move(*poly);
}

ConvexPolygon ConvexPolygon::Rectangle(double x0, double y0, double x1,
                                       double y1) {
  return ConvexPolygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

Point ConvexPolygon::Centroid() const {
  // Relative to the first vertex to limit cancellation.
  const Point origin = vertices_.front();
  double cx = 0.0;
  double cy = 0.0;
  double twice = 0.0;
  const size_t n = vertices_.size();
  for (size_t i = 0; i < n; ++i) {
    const Point a = vertices_[i] - origin;
    const Point b = vertices_[(i + 1) % n] - origin;
    const double w = Cross(a, b);
    twice += w;
    cx += (a.x + b.x) * w;
    cy += (a.y + b.y) * w;
  }
  return {origin.x + cx / (3.0 * twice), origin.y + cy / (3.0 * twice)};
}

double ConvexPolygon::Diameter() const {
  double best = 0.0;
  for (size_t i = 0; i < vertices_.size(); ++i) {
    for (size_t j = i + 1; j < vertices_.size(); ++j) {
      best = std::max(best, Distance(vertices_[i], vertices_[j]));
    }
  }
  return best;
}

bool ConvexPolygon::Contains(const Point& p, double tol) const {
  const size_t n = vertices_.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    if (Cross(b - a, p - a) / Distance(a, b) < -tol) return false;
  }
  return true;
}

bool ConvexPolygon::ContainsStrictly(const Point& p, double tol) const {
  const size_t n = vertices_.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % n];
    const double d = Cross(b - a, p - a) / Distance(a, b);
    if (!(d > 0.0) || d < tol) return false;
  }
  return true;
}

std::optional<ConvexPolygon> Clip(const ConvexPolygon& poly,
                                  const HalfPlane& hp) {
  const std::vector<Point>& v = poly.vertices();
  const size_t n = v.size();
  // Vertices this close to the line count as on it.
  const double on_line = 1e-13 * (1.0 + std::abs(hp.offset()));

  std::vector<double> s(n);
  bool all_in = true;
  bool all_out = true;
  for (size_t i = 0; i < n; ++i) {
    s[i] = hp.SignedDistance(v[i]);
    all_in = all_in && s[i] <= on_line;
    all_out = all_out && s[i] >= -on_line;
  }
  if (all_in) return poly;
  if (all_out) return std::nullopt;

  std::vector<Point> out;
  out.reserve(n + 1);
  for (size_t i = 0; i < n; ++i) {
    const size_t j = (i + 1) % n;
    if (s[i] <= on_line) out.push_back(v[i]);
    if ((s[i] < -on_line && s[j] > on_line) ||
        (s[i] > on_line && s[j] < -on_line)) {
      const double t = s[i] / (s[i] - s[j]);
      out.push_back(v[i] + (v[j] - v[i]) * t);
    }
  }
  auto result = ConvexPolygon::TryMake(std::move(out));
  if (!result || result->area() < kEmptyAreaFraction * poly.area()) {
    return std::nullopt;
  }
  return result;
}

HalfPlane BisectorHalfPlane(const Point& keep, const Point& other) {
  const Point d = other - keep;
  if (Norm(d) <= 1e-12) {
    throw GameError(ErrorCode::kCoincidentSites, "bisector of coincident sites");
  }
  const Point mid = (keep + other) * 0.5;
  return {d, Dot(d, mid)};
}

std::pair<double, double> SplitAreas(const ConvexPolygon& poly,
                                     const Point& through, double angle) {
  if (!poly.ContainsStrictly(through)) {
    throw GameError(ErrorCode::kPointOutsidePolygon,
                    "split point is not strictly inside the polygon");
  }
  const Point left_normal{-std::sin(angle), std::cos(angle)};
  const double at = Dot(left_normal, through);
  const HalfPlane right_side(left_normal, at);
  const auto left = Clip(poly, right_side.Complement());
  const auto right = Clip(poly, right_side);
  return {left ? left->area() : 0.0, right ? right->area() : 0.0};
}

SymmetryResult IsPointSymmetric(const ConvexPolygon& poly, double tol) {
  const std::vector<Point>& v = poly.vertices();
  SymmetryResult result;
  result.center = poly.Centroid();
  if (v.size() % 2 != 0) return result;
  const double slack = tol * poly.Diameter();
  for (const Point& p : v) {
    const Point image = result.center * 2.0 - p;
    double nearest = std::numeric_limits<double>::infinity();
    for (const Point& q : v) nearest = std::min(nearest, Distance(image, q));
    if (nearest > slack) return result;
  }
  result.symmetric = true;
  return result;
}

}  // namespace vgame
