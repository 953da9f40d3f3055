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

#include <random>

#include "geomutate/error.h"
#include "geomutate/fixtures.h"
#include "gtest/gtest.h"
#include "support/random_polygons.h"

namespace geomutate {
namespace {

using nlohmann::json;

template <typename Fn>
ErrorCode CodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kUnknownPredicate;
}

TEST(FixturesTest, PolygonForm) {
  const json doc = PolygonToJson(Rectangle(0, 0, 2, 1, CrsTag::FromId("planar")));
  EXPECT_EQ(doc, json::parse(R"({"crs": "planar",
      "ring": [[0, 0], [2, 0], [2, 1], [0, 1], [0, 0]]})"));
}

TEST(FixturesTest, PolygonRoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Polygon p = testing::RandomSimple(rng);
    EXPECT_EQ(PolygonFromJson(json::parse(PolygonToJson(p).dump())), p);
  }
}

TEST(FixturesTest, PolygonErrors) {
  EXPECT_EQ(CodeOf([] { PolygonFromJson(json::parse(R"({"ring": []})")); }),
            ErrorCode::kMalformedDocument);
  EXPECT_EQ(CodeOf([] {
              PolygonFromJson(json::parse(R"({"crs": "planar", "ring": [[0, 0, 1]]})"));
            }),
            ErrorCode::kMalformedDocument);
  EXPECT_EQ(CodeOf([] {
              PolygonFromJson(json::parse(R"({"crs": "planar", "ring": [["a", 0]]})"));
            }),
            ErrorCode::kMalformedDocument);
  EXPECT_EQ(CodeOf([] {
              PolygonFromJson(json::parse(
                  R"({"crs": "planar", "ring": [[0, 0], [1, 0], [1, 1], [0, 1]]})"));
            }),
            ErrorCode::kRingNotClosed);
  EXPECT_EQ(CodeOf([] {
              PolygonFromJson(json::parse(
                  R"({"crs": "mercator", "ring": [[0, 0], [1, 0], [1, 1], [0, 0]]})"));
            }),
            ErrorCode::kUnknownCrs);
}

TEST(FixturesTest, GeofencesRoundTrip) {
  const auto bundled = GeofenceApp::BundledGeofences();
  EXPECT_EQ(GeofencesFromJson(GeofencesToJson(bundled)), bundled);
  const auto doc = json::parse(
      R"({"geofences": [{"id": "g", "lat": 1.5, "lon": 2.5, "radiusMeters": 30}]})");
  const auto read = GeofencesFromJson(doc);
  ASSERT_EQ(read.size(), 1u);
  EXPECT_EQ(read[0].center, (PositionFix{1.5, 2.5}));
  EXPECT_EQ(CodeOf([] { GeofencesFromJson(json::parse(R"({"geofences": [{"id": "g"}]})")); }),
            ErrorCode::kMalformedDocument);
}

TEST(FixturesTest, ParcelsRoundTrip) {
  const auto bundled = ReparcelApp::BundledParcels();
  EXPECT_EQ(ParcelsFromJson(ParcelsToJson(bundled)), bundled);
  EXPECT_EQ(CodeOf([] { ParcelsFromJson(json::parse(R"({"parcel": []})")); }),
            ErrorCode::kMalformedDocument);
  EXPECT_EQ(CodeOf([] {
              ParcelsFromJson(json::parse(R"({"parcels": [{"id": "a", "ownerId": "o"}]})"));
            }),
            ErrorCode::kMalformedDocument);
}

}  // namespace
}  // namespace geomutate
