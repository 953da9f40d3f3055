// Copyright 2026 The Geomutate Authors
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

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "geomutate/error.h"
#include "geomutate/geometry.h"
#include "gtest/gtest.h"

namespace geomutate {
namespace {

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kMalformedDocument;
}

TEST(CentroidTest, SymmetricShapes) {
  EXPECT_EQ(Centroid(Rectangle(0, 0, 4, 4)), (Coordinate{2, 2}));
  EXPECT_EQ(Centroid(Rectangle(0, 0, 1, 1)), (Coordinate{0.5, 0.5}));
  const Coordinate t = Centroid(Polygon({{0, 0}, {3, 0}, {0, 3}, {0, 0}}));
  EXPECT_NEAR(t.x, 1.0, 1e-12);
  EXPECT_NEAR(t.y, 1.0, 1e-12);
}

TEST(CentroidTest, OrientationDoesNotMatter) {
  const Polygon cw({{0, 0}, {0, 3}, {3, 0}, {0, 0}});
  const Coordinate c = Centroid(cw);
  EXPECT_NEAR(c.x, 1.0, 1e-12);
  EXPECT_NEAR(c.y, 1.0, 1e-12);
}

TEST(CentroidTest, ZeroAreaFallsBackToDistinctVertexMean) {
  // Collinear ring travelling out and back.
  const Polygon line({{0, 0}, {2, 0}, {4, 0}, {2, 0}, {0, 0}});
  EXPECT_EQ(Centroid(line), (Coordinate{2, 0}));
  const Polygon point({{1, 1}, {1, 1}, {1, 1}, {1, 1}});
  EXPECT_EQ(Centroid(point), (Coordinate{1, 1}));
}

TEST(CentroidTest, AxisAlignedRectanglesHitTheirCentre) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pos(-1000.0, 1000.0);
  std::uniform_real_distribution<double> size(0.001, 100.0);
  for (int i = 0; i < 500; ++i) {
    const double x0 = pos(rng), y0 = pos(rng);
    const double x1 = x0 + size(rng), y1 = y0 + size(rng);
    const Coordinate c = Centroid(Rectangle(x0, y0, x1, y1));
    EXPECT_NEAR(c.x, (x0 + x1) / 2.0, 1e-12 * std::max(1.0, std::abs(x0)));
    EXPECT_NEAR(c.y, (y0 + y1) / 2.0, 1e-12 * std::max(1.0, std::abs(y0)));
  }
}

TEST(PolygonTest, RebuildAcceptsClosedRings) {
  const Polygon p =
      RebuildPolygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {0, 0}}, CrsTag::LonLat());
  EXPECT_EQ(p.ring().size(), 5u);
}

TEST(PolygonTest, RebuildKeepsDegenerateRingsVerbatim) {
  const std::vector<Coordinate> collapsed = {{2, 2}, {4, 0}, {4, 4}, {0, 4}, {2, 2}};
  EXPECT_EQ(RebuildPolygon(collapsed, CrsTag::LonLat()).ring(), collapsed);
}

TEST(PolygonTest, RebuildRejectsBadRings) {
  EXPECT_EQ(CodeOf([] { RebuildPolygon({{0, 0}, {4, 0}, {4, 4}}, CrsTag::LonLat()); }),
            ErrorCode::kTooFewCoordinates);
  EXPECT_EQ(CodeOf([] {
              RebuildPolygon({{0, 0}, {4, 0}, {4, 4}, {0, 4}}, CrsTag::LonLat());
            }),
            ErrorCode::kRingNotClosed);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_EQ(CodeOf([&] {
              RebuildPolygon({{0, 0}, {nan, 0}, {4, 4}, {0, 0}}, CrsTag::LonLat());
            }),
            ErrorCode::kNonFiniteCoordinate);
}

TEST(PolygonTest, RebuildRoundTrips) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> v(-10, 10);
  for (int i = 0; i < 50; ++i) {
    std::vector<Coordinate> ring;
    for (int k = 0; k < 6; ++k) ring.push_back({v(rng), v(rng)});
    ring.push_back(ring.front());
    const Polygon p(ring, CrsTag::LatLon());
    EXPECT_EQ(RebuildPolygon(p.ring(), p.crs()), p);
  }
}

TEST(CrsTagTest, KnownIds) {
  EXPECT_EQ(CrsTag::FromId("lonlat").axis_order, AxisOrder::kXY);
  EXPECT_EQ(CrsTag::FromId("latlon").axis_order, AxisOrder::kYX);
  EXPECT_EQ(CodeOf([] { CrsTag::FromId("epsg:9999"); }), ErrorCode::kUnknownCrs);
}

TEST(HaversineTest, Identity) {
  EXPECT_EQ(HaversineDistance({43.36, -8.41}, {43.36, -8.41}), 0.0);
}

TEST(HaversineTest, EquatorialArcs) {
  const double one_degree = 2 * std::numbers::pi * 6371000.0 / 360.0;
  EXPECT_NEAR(HaversineDistance({0, 0}, {0, 1}), one_degree, 1e-6);
  EXPECT_NEAR(one_degree, 111195.0, 0.5);
  const double half_turn = std::numbers::pi * 6371000.0;
  EXPECT_NEAR(HaversineDistance({0, 0}, {0, 180}), half_turn, 1e-6);
  EXPECT_NEAR(half_turn, 20015087.0, 0.5);
}

TEST(HaversineTest, MeridianArcAndSymmetry) {
  const double arc = 6371000.0 * 0.005 * std::numbers::pi / 180.0;  // ~556 m
  EXPECT_NEAR(HaversineDistance({43.36, -8.41}, {43.365, -8.41}), arc, 1e-6);
  EXPECT_DOUBLE_EQ(HaversineDistance({10, 20}, {-30, 140}),
                   HaversineDistance({-30, 140}, {10, 20}));
}

TEST(PositionFixTest, RangesAreReportedNotEnforced) {
  EXPECT_TRUE((PositionFix{43.36, -8.41}).IsValid());
  const PositionFix swapped{-8.41, 43.36};
  EXPECT_TRUE(swapped.IsValid());
  EXPECT_FALSE((PositionFix{120.0, 0.0}).IsValid());
}

TEST(LocateTest, EvenOddRule) {
  const Polygon square = Rectangle(0, 0, 4, 4);
  EXPECT_EQ(Locate({2, 2}, square), Location::kInterior);
  EXPECT_EQ(Locate({4, 2}, square), Location::kBoundary);
  EXPECT_EQ(Locate({0, 0}, square), Location::kBoundary);
  EXPECT_EQ(Locate({5, 2}, square), Location::kExterior);

  // Bow tie: both lobes are inside, the crossing point is boundary.
  const Polygon bowtie({{0, 0}, {4, 4}, {4, 0}, {0, 4}, {0, 0}});
  EXPECT_EQ(Locate({0.5, 2}, bowtie), Location::kInterior);
  EXPECT_EQ(Locate({3.5, 2}, bowtie), Location::kInterior);
  EXPECT_EQ(Locate({2, 2}, bowtie), Location::kBoundary);
  EXPECT_EQ(Locate({2, 0.5}, bowtie), Location::kExterior);
}

}  // namespace
}  // namespace geomutate
