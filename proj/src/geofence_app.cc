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

#include <numbers>
#include <string>
#include <utility>

#include "geomutate/corpus.h"
#include "geomutate/error.h"

namespace geomutate {
namespace {

constexpr std::string_view kGetFromLocation = "getFromLocation";
constexpr std::string_view kGeofencesContaining = "geofencesContaining";
constexpr std::string_view kRenderGeofences = "renderGeofences";

constexpr double kMetersPerDegree =
    2.0 * std::numbers::pi * kEarthRadiusMeters / 360.0;

}  // namespace

Coordinate ViewportTransform(const Coordinate& c) {
  return {c.x * 10.0 + 500.0, -c.y * 10.0 + 500.0};
}

std::vector<OperationDescriptor> GeofenceApp::OperationDescriptors() {
  return {
      {std::string(kGetFromLocation), {ArgKind::kNumber, ArgKind::kNumber}, ""},
      {std::string(kGeofencesContaining), {ArgKind::kOther}, ""},
      {std::string(kRenderGeofences), {ArgKind::kOther}, ""},
  };
}

std::vector<Geofence> GeofenceApp::BundledGeofences() {
  return {
      {"home", {43.36, -8.41}, 1000.0},
      {"harbour", {10.0, 10.0}, 1000.0},
  };
}

GeofenceApp::GeofenceApp(WeaveContext& ctx, std::vector<Geofence> geofences)
    : Sut(std::string(kId), ctx) {
  for (auto& g : geofences) AddGeofence(std::move(g));

  const auto ops = OperationDescriptors();
  Expose(ops[0], [](std::span<const Value> args) -> Result {
    return PositionFix{std::get<double>(args[0]), std::get<double>(args[1])};
  });
  Expose(ops[1], [this](std::span<const Value> args) -> Result {
    const auto& fix = std::get<PositionFix>(args[0]);
    std::vector<std::string> ids;
    for (const Geofence& g : geofences_) {
      if (HaversineDistance(g.center, fix) <= g.radius_meters) {
        ids.push_back(g.id);
      }
    }
    return ids;
  });
  Expose(ops[2], [this](std::span<const Value> args) -> Result {
    const auto& viewport = std::get<CrsTag>(args[0]);
    ViewportRendering out;
    for (const Geofence& g : geofences_) {
      const PositionFix fix = GetFromLocation(g.center.lat, g.center.lon);
      const Coordinate world = viewport.axis_order == AxisOrder::kXY
                                   ? Coordinate{fix.lon, fix.lat}
                                   : Coordinate{fix.lat, fix.lon};
      out.drawn.push_back({g.id, ViewportTransform(world),
                           g.radius_meters / kMetersPerDegree * 10.0});
    }
    return out;
  });
}

void GeofenceApp::AddGeofence(Geofence g) {
  if (!(g.radius_meters > 0.0)) {
    throw Error(ErrorCode::kInvalidGeofence,
                "geofence '" + g.id + "' needs a positive radius");
  }
  geofences_.push_back(std::move(g));
}

PositionFix GeofenceApp::GetFromLocation(double axis0, double axis1) {
  return std::get<PositionFix>(Invoke(kGetFromLocation, {axis0, axis1}));
}

std::vector<std::string> GeofenceApp::GeofencesContaining(
    const PositionFix& fix) {
  return std::get<std::vector<std::string>>(
      Invoke(kGeofencesContaining, {fix}));
}

ViewportRendering GeofenceApp::RenderGeofences(const CrsTag& viewport) {
  return std::get<ViewportRendering>(Invoke(kRenderGeofences, {viewport}));
}

}  // namespace geomutate
