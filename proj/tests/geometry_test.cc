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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "vgame/errors.h"

namespace vgame {
namespace {

constexpr double kPi = std::numbers::pi;

ConvexPolygon UnitSquare() { return ConvexPolygon::Rectangle(0, 0, 1, 1); }

ConvexPolygon Triangle() {
  return ConvexPolygon({{0, 0}, {1, 0}, {0, 1}});
}

ConvexPolygon RegularPolygon(int k, Point c, double radius, double phase) {
  std::vector<Point> v;
  for (int i = 0; i < k; ++i) {
    const double t = phase + 2 * kPi * i / k;
    v.push_back({c.x + radius * std::cos(t), c.y + radius * std::sin(t)});
  }
  return ConvexPolygon(v);
}

// Convex hull of random points on a jittered circle.
ConvexPolygon RandomConvex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int k = 3 + static_cast<int>(u(rng) * 10);
  std::vector<double> angles;
  for (int i = 0; i < k; ++i) angles.push_back(2 * kPi * u(rng));
  std::sort(angles.begin(), angles.end());
  const double rx = 0.2 + u(rng), ry = 0.2 + u(rng);
  const Point c{u(rng) * 4 - 2, u(rng) * 4 - 2};
  std::vector<Point> v;
  for (double t : angles) v.push_back({c.x + rx * std::cos(t), c.y + ry * std::sin(t)});
  if (auto p = ConvexPolygon::TryMake(v)) return *p;
  return RegularPolygon(5, c, rx, 0.1);
}

HalfPlane RandomHalfPlane(std::mt19937_64& rng, const ConvexPolygon& poly) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double t = 2 * kPi * u(rng);
  const Point n{std::cos(t), std::sin(t)};
  const Point c = poly.Centroid();
  return HalfPlane(n, Dot(n, c) + (u(rng) - 0.5) * poly.Diameter());
}

TEST(PointTest, RejectsNonFinite) {
  EXPECT_THROW(Point(std::nan(""), 0), GameError);
  EXPECT_THROW(Point(0, INFINITY), GameError);
}

TEST(ConvexPolygonTest, NormalizesOrientationAndCollinear) {
  ConvexPolygon p({{0, 0}, {0, 1}, {1, 1}, {1, 0.5}, {1, 0}, {0, 0}});
  EXPECT_EQ(p.vertices().size(), 4u);
  EXPECT_DOUBLE_EQ(p.area(), 1.0);
  EXPECT_GT(Area(std::span<const Point>(p.vertices())), 0.0);
}

TEST(ConvexPolygonTest, RejectsDegenerate) {
  EXPECT_THROW(ConvexPolygon({{0, 0}, {1, 1}, {2, 2}}), GameError);
  EXPECT_FALSE(ConvexPolygon::TryMake({{0, 0}, {1, 0}}).has_value());
}

TEST(ClipTest, HalfOfSquare) {
  auto r = Clip(UnitSquare(), HalfPlane({1, 0}, 0.5));
  ASSERT_TRUE(r.has_value());
  EXPECT_NEAR(r->area(), 0.5, 1e-15);
  for (const Point& v : r->vertices()) EXPECT_LE(v.x, 0.5 + 1e-15);
}

TEST(ClipTest, IdentityAndDisjoint) {
  auto same = Clip(UnitSquare(), HalfPlane({1, 0}, 2));
  ASSERT_TRUE(same.has_value());
  EXPECT_EQ(same->vertices(), UnitSquare().vertices());
  EXPECT_FALSE(Clip(UnitSquare(), HalfPlane({1, 0}, -1)).has_value());
}

TEST(ClipTest, SliverBelowAreaFractionIsEmpty) {
  EXPECT_FALSE(Clip(UnitSquare(), HalfPlane({1, 0}, 1e-16)).has_value());
}

TEST(ClipTest, IdempotentOnRandomPolygons) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const ConvexPolygon p = RandomConvex(rng);
    const HalfPlane h = RandomHalfPlane(rng, p);
    auto once = Clip(p, h);
    if (!once) continue;
    auto twice = Clip(*once, h);
    ASSERT_TRUE(twice.has_value());
    ASSERT_EQ(once->vertices().size(), twice->vertices().size());
    for (size_t k = 0; k < once->vertices().size(); ++k) {
      EXPECT_LE(Distance(once->vertices()[k], twice->vertices()[k]), 1e-12);
    }
  }
}

TEST(ClipTest, ComplementAreasSumToWhole) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 1000; ++i) {
    const ConvexPolygon p = RandomConvex(rng);
    const HalfPlane h = RandomHalfPlane(rng, p);
    const auto a = Clip(p, h);
    const auto b = Clip(p, h.Complement());
    const double sum = (a ? a->area() : 0.0) + (b ? b->area() : 0.0);
    EXPECT_NEAR(sum, p.area(), 1e-10 * p.area());
  }
}

TEST(BisectorTest, Midlines) {
  const HalfPlane a = BisectorHalfPlane({0, 0}, {2, 0});
  EXPECT_NEAR(a.normal().x, 1.0, 1e-15);
  EXPECT_NEAR(a.normal().y, 0.0, 1e-15);
  EXPECT_NEAR(a.offset(), 1.0, 1e-15);

  const HalfPlane b = BisectorHalfPlane({0.25, 0.5}, {0.75, 0.5});
  EXPECT_NEAR(b.normal().x, 1.0, 1e-15);
  EXPECT_NEAR(b.offset(), 0.5, 1e-15);

  const HalfPlane c = BisectorHalfPlane({0, 0}, {1, 1});
  EXPECT_NEAR(c.normal().x, std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(c.normal().y, std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(c.SignedDistance({0.5, 0.5}), 0.0, 1e-15);
  EXPECT_NEAR(Norm(c.normal()), 1.0, 1e-12);
}

TEST(BisectorTest, CoincidentThrows) {
  try {
    BisectorHalfPlane({0.3, 0.3}, {0.3, 0.3 + 1e-13});
    FAIL();
  } catch (const GameError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCoincidentSites);
  }
}

TEST(BisectorTest, SwappedArgumentsAreComplementary) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const Point a{u(rng), u(rng)}, b{u(rng), u(rng)};
    const HalfPlane ab = BisectorHalfPlane(a, b);
    const HalfPlane ba = BisectorHalfPlane(b, a);
    EXPECT_NEAR(ab.normal().x, -ba.normal().x, 1e-12);
    EXPECT_NEAR(ab.normal().y, -ba.normal().y, 1e-12);
    EXPECT_NEAR(ab.offset(), -ba.offset(), 1e-12);
    EXPECT_TRUE(ab.Contains(a));
    EXPECT_FALSE(ab.Contains(b));
  }
}

TEST(AreaTest, Examples) {
  EXPECT_DOUBLE_EQ(Area(UnitSquare()), 1.0);
  EXPECT_DOUBLE_EQ(Area(Triangle()), 0.5);
  EXPECT_NEAR(Area(ConvexPolygon::Rectangle(0, 0, 0.866, 1)), 0.866, 1e-15);
}

TEST(SplitAreasTest, Examples) {
  auto [l0, r0] = SplitAreas(UnitSquare(), {0.5, 0.5}, 0.0);
  EXPECT_NEAR(l0, 0.5, 1e-15);
  EXPECT_NEAR(r0, 0.5, 1e-15);

  auto [l1, r1] = SplitAreas(UnitSquare(), {0.25, 0.5}, kPi / 2);
  EXPECT_NEAR(std::min(l1, r1), 0.25, 1e-15);
  EXPECT_NEAR(std::max(l1, r1), 0.75, 1e-15);
}

TEST(SplitAreasTest, TriangleCentroidHorizontalCut) {
  const ConvexPolygon t = Triangle();
  auto [l, r] = SplitAreas(t, t.Centroid(), 0.0);
  EXPECT_NEAR(l + r, 0.5, 1e-12);
  // The part above y = 1/3 is a similar triangle scaled by 2/3.
  EXPECT_NEAR(std::min(l, r), 0.5 * 4.0 / 9.0, 1e-12);
  EXPECT_GT(std::abs(l - r), 0.01);
}

TEST(SplitAreasTest, HalfTurnSwapsSides) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const ConvexPolygon p = RandomConvex(rng);
    const Point c = p.Centroid();
    const double a = 2 * kPi * u(rng);
    auto [l, r] = SplitAreas(p, c, a);
    auto [l2, r2] = SplitAreas(p, c, a + kPi);
    EXPECT_NEAR(l + r, p.area(), 1e-10 * p.area());
    EXPECT_NEAR(l, r2, 1e-10 * p.area());
    EXPECT_NEAR(r, l2, 1e-10 * p.area());
  }
}

TEST(SplitAreasTest, OutsidePointThrows) {
  try {
    SplitAreas(UnitSquare(), {1.5, 0.5}, 0.0);
    FAIL();
  } catch (const GameError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPointOutsidePolygon);
  }
}

TEST(SymmetryTest, Examples) {
  const auto rect = IsPointSymmetric(ConvexPolygon::Rectangle(1, 2, 4, 3));
  EXPECT_TRUE(rect.symmetric);
  EXPECT_NEAR(rect.center.x, 2.5, 1e-12);
  EXPECT_NEAR(rect.center.y, 2.5, 1e-12);

  EXPECT_FALSE(IsPointSymmetric(Triangle()).symmetric);
  EXPECT_TRUE(IsPointSymmetric(RegularPolygon(6, {0.3, -0.2}, 1.0, 0.2)).symmetric);
  EXPECT_FALSE(IsPointSymmetric(RegularPolygon(5, {0, 0}, 1.0, 0.0)).symmetric);
}

TEST(SymmetryTest, SmallPerturbationDetected) {
  ConvexPolygon p({{0, 0}, {1, 0}, {1, 1}, {0, 1.001}});
  EXPECT_FALSE(IsPointSymmetric(p).symmetric);
  EXPECT_TRUE(IsPointSymmetric(p, 1e-2).symmetric);
}

}  // namespace
}  // namespace vgame
