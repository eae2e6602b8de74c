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

// Planar primitives: points, convex polygons and half-planes.

#ifndef VGAME_GEOMETRY_H_
#define VGAME_GEOMETRY_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace vgame {

// Distance below which two vertices of a polygon are merged, and below which
// a vertex is considered to lie on the segment joining its neighbours.
inline constexpr double kCollinearTolerance = 1e-9;

// Relative area below which a clipping result is reported as empty.
inline constexpr double kEmptyAreaFraction = 1e-14;

// Coordinates are always finite; constructing a point from NaN or infinity
// throws GameError(kDomainError).
struct Point {
  double x = 0.0;
  double y = 0.0;

  Point() = default;
  Point(double x_in, double y_in);

  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator*(double s) const { return {x * s, y * s}; }
  bool operator==(const Point& o) const = default;
};

double Dot(const Point& a, const Point& b);
double Cross(const Point& a, const Point& b);
double Norm(const Point& a);
double Distance(const Point& a, const Point& b);
double SquaredDistance(const Point& a, const Point& b);

// Strict lexicographic order on (x, y); used for deterministic tie-breaks.
bool LexLess(const Point& a, const Point& b);

// {q : q . normal <= offset}, with |normal| = 1.
class HalfPlane {
 public:
  // The normal is rescaled to unit length (and the offset with it).
  HalfPlane(Point normal, double offset);

  const Point& normal() const { return normal_; }
  double offset() const { return offset_; }

  // Positive outside, negative inside.
  double SignedDistance(const Point& q) const {
    return Dot(q, normal_) - offset_;
  }
  bool Contains(const Point& q) const { return SignedDistance(q) <= 0.0; }
  HalfPlane Complement() const;

 private:
  Point normal_;
  double offset_;
};

class ConvexPolygon {
 public:
  // Accepts either orientation; stores vertices counterclockwise with
  // duplicate and collinear vertices removed. Throws GameError(kDomainError)
  // if the input is not a convex polygon of positive area.
  explicit ConvexPolygon(std::vector<Point> vertices);

  // Non-throwing variant of the constructor.
  static std::optional<ConvexPolygon> TryMake(std::vector<Point> vertices);

  static ConvexPolygon Rectangle(double x0, double y0, double x1, double y1);

  const std::vector<Point>& vertices() const { return vertices_; }
  double area() const { return area_; }

  Point Centroid() const;
  double Diameter() const;
  // Closed containment with an absolute slack `tol` in board units.
  bool Contains(const Point& p, double tol = 0.0) const;
  // True when p is at least `tol` away from every edge line.
  bool ContainsStrictly(const Point& p, double tol = 0.0) const;

 private:
  struct Unchecked {};
  ConvexPolygon(Unchecked, std::vector<Point> vertices, double area)
      : vertices_(std::move(vertices)), area_(area) {}

  std::vector<Point> vertices_;
  double area_ = 0.0;
};

// Shoelace area.
double Area(const ConvexPolygon& poly);
double Area(std::span<const Point> ring);

// poly intersected with hp; std::nullopt when the result has (relatively)
// zero area.
std::optional<ConvexPolygon> Clip(const ConvexPolygon& poly,
                                  const HalfPlane& hp);

// Points at least as close to `keep` as to `other`. Throws
// GameError(kCoincidentSites) when the two are closer than 1e-12.
HalfPlane BisectorHalfPlane(const Point& keep, const Point& other);

// Areas of poly to the left and to the right of the directed line through
// `through` with direction (cos angle, sin angle). Throws
// GameError(kPointOutsidePolygon) unless `through` is strictly inside.
std::pair<double, double> SplitAreas(const ConvexPolygon& poly,
                                     const Point& through, double angle);

struct SymmetryResult {
  bool symmetric = false;
  Point center;
};

// Tests whether the vertex set is invariant under the half-turn about the
// area centroid, up to tol * diameter.
SymmetryResult IsPointSymmetric(const ConvexPolygon& poly, double tol = 1e-9);

}  // namespace vgame

#endif  // VGAME_GEOMETRY_H_
