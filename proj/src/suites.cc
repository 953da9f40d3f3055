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

#include "geomutate/suites.h"

#include <algorithm>
#include <numbers>

#include "geomutate/corpus.h"
#include "geomutate/error.h"

namespace geomutate {
namespace {

constexpr double kMetersPerDegree =
    2.0 * std::numbers::pi * kEarthRadiusMeters / 360.0;

bool Has(const std::vector<std::string>& ids, std::string_view id) {
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

template <typename Fn>
void ExpectError(ErrorCode code, Fn&& fn, const std::string& what) {
  try {
    fn();
  } catch (const Error& e) {
    Expect(e.code() == code, what + ": got " + e.what());
    return;
  }
  throw AssertionFailure(what + ": no error raised");
}

const ViewportEntry* Entry(const ViewportRendering& r, std::string_view id) {
  for (const auto& e : r.drawn) {
    if (e.geofence_id == id) return &e;
  }
  return nullptr;
}

TestSuite GeofenceStrong() {
  using T = GeofenceApp;
  return {"strong", std::string(GeofenceApp::kId), {
      MakeTest<T>("home-center-is-inside", [](T& app) {
        Expect(Has(app.GeofencesContaining(app.GetFromLocation(43.36, -8.41)), "home"),
               "fix at the home center must be inside home");
      }),
      MakeTest<T>("point-500m-north-is-inside", [](T& app) {
        const auto fix = app.GetFromLocation(43.36 + 500.0 / kMetersPerDegree, -8.41);
        Expect(Has(app.GeofencesContaining(fix), "home"),
               "fix 500 m north of home must be inside home");
      }),
      MakeTest<T>("origin-is-outside", [](T& app) {
        Expect(app.GeofencesContaining(app.GetFromLocation(0.0, 0.0)).empty(),
               "no geofence near (0, 0)");
      }),
      MakeTest<T>("home-drawn-at-its-center", [](T& app) {
        const auto* e = Entry(app.RenderGeofences(CrsTag::LonLat()), "home");
        Expect(e != nullptr, "home is drawn");
        Expect(e->screen_center == ViewportTransform({-8.41, 43.36}),
               "home is drawn at its center");
      }),
  }};
}

// Only probes on the lat == lon diagonal.
TestSuite GeofenceWeak() {
  using T = GeofenceApp;
  return {"weak", std::string(GeofenceApp::kId), {
      MakeTest<T>("harbour-center-is-inside", [](T& app) {
        Expect(Has(app.GeofencesContaining(app.GetFromLocation(10.0, 10.0)), "harbour"),
               "fix at the harbour center must be inside harbour");
      }),
      MakeTest<T>("harbour-diagonal-probe-is-inside", [](T& app) {
        Expect(Has(app.GeofencesContaining(app.GetFromLocation(10.003, 10.003)),
                   "harbour"),
               "fix about 470 m from the harbour center must be inside");
      }),
      MakeTest<T>("origin-is-outside", [](T& app) {
        Expect(app.GeofencesContaining(app.GetFromLocation(0.0, 0.0)).empty(),
               "no geofence near (0, 0)");
      }),
      MakeTest<T>("harbour-drawn-at-its-center", [](T& app) {
        const auto* e = Entry(app.RenderGeofences(CrsTag::LonLat()), "harbour");
        Expect(e != nullptr && e->screen_center == ViewportTransform({10.0, 10.0}),
               "harbour is drawn at its center");
      }),
  }};
}

TestCase MergeHalves() {
  using T = ReparcelApp;
  return MakeTest<T>("merge-halves-of-field", [](T& app) {
    const Parcel merged = app.MergeParcels("P1", "P2");
    Expect(merged.id == "P1+P2" && merged.owner_id == "ana", "merged identity");
    Expect(merged.shape.ring() == Rectangle(0, 0, 4, 2).ring(),
           "merged shape is [0,4]x[0,2]");
    Expect(app.parcels().size() == 6, "two parcels replaced by one");
  });
}

TestCase DifferentOwners() {
  using T = ReparcelApp;
  return MakeTest<T>("different-owners-rejected", [](T& app) {
    ExpectError(ErrorCode::kDifferentOwner,
                [&] { app.MergeParcels("P5", "P6"); }, "P5 and P6 differ in owner");
  });
}

TestSuite ReparcelStrong() {
  using T = ReparcelApp;
  return {"strong", std::string(ReparcelApp::kId), {
      MergeHalves(),
      MakeTest<T>("merge-field-with-strip", [](T& app) {
        const Parcel merged = app.MergeParcels("P3", "P4");
        const std::vector<Coordinate> expected = {
            {10, 0}, {16, 0}, {16, 1}, {14, 1}, {14, 2}, {10, 2}, {10, 0}};
        Expect(merged.shape.ring() == expected, "merged outline");
        Expect(std::abs(Area(merged.shape) - 10.0) < 1e-9, "area is conserved");
      }),
      DifferentOwners(),
      MakeTest<T>("distant-parcels-rejected", [](T& app) {
        ExpectError(ErrorCode::kNotAdjacent,
                    [&] { app.MergeParcels("P1", "P7"); }, "P1 and P7 are apart");
      }),
      MakeTest<T>("neighbours-intersect", [](T& app) {
        Expect(app.CheckConstraint("intersects", app.Find("P1").shape,
                                   app.Find("P2").shape),
               "P1 intersects P2");
      }),
      MakeTest<T>("neighbours-do-not-overlap", [](T& app) {
        Expect(!app.CheckConstraint("overlaps", app.Find("P1").shape,
                                    app.Find("P2").shape),
               "P1 does not overlap P2");
      }),
      MakeTest<T>("parcel-equals-itself", [](T& app) {
        const Polygon& p = app.Find("P1").shape;
        Expect(app.CheckConstraint("equalsTop", p, p), "P1 equals P1");
      }),
      MakeTest<T>("parcel-covers-itself", [](T& app) {
        const Polygon& p = app.Find("P3").shape;
        Expect(app.CheckConstraint("covers", p, p), "P3 covers P3");
      }),
      MakeTest<T>("parcel-contains-itself", [](T& app) {
        const Polygon& p = app.Find("P3").shape;
        Expect(app.CheckConstraint("contains", p, p), "P3 contains P3");
      }),
  }};
}

TestSuite ReparcelWeak() {
  return {"weak", std::string(ReparcelApp::kId), {MergeHalves(), DifferentOwners()}};
}

}  // namespace

std::vector<LocationProbe> GeofenceProbes() {
  return {
      {"home-center", 43.36, -8.41},
      {"home-500m-north", 43.36 + 500.0 / kMetersPerDegree, -8.41},
      {"origin", 0.0, 0.0},
      {"harbour-center", 10.0, 10.0},
      {"harbour-diagonal", 10.003, 10.003},
  };
}

std::vector<std::string> BundledSuiteNames() { return {"strong", "weak"}; }

TestSuite BundledSuite(std::string_view sut_id, std::string_view suite_name) {
  if (sut_id == GeofenceApp::kId) {
    if (suite_name == "strong") return GeofenceStrong();
    if (suite_name == "weak") return GeofenceWeak();
  } else if (sut_id == ReparcelApp::kId) {
    if (suite_name == "strong") return ReparcelStrong();
    if (suite_name == "weak") return ReparcelWeak();
  }
  throw Error(ErrorCode::kUnknownSut, "no bundled suite '" +
                                          std::string(suite_name) + "' for '" +
                                          std::string(sut_id) + "'");
}

}  // namespace geomutate
