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

#include "geomutate/geometry.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "geomutate/error.h"

namespace geomutate {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownPredicate: return "UnknownPredicate";
    case ErrorCode::kRingNotClosed: return "RingNotClosed";
    case ErrorCode::kTooFewCoordinates: return "TooFewCoordinates";
    case ErrorCode::kNonFiniteCoordinate: return "NonFiniteCoordinate";
    case ErrorCode::kUnknownCrs: return "UnknownCrs";
    case ErrorCode::kUnknownSut: return "UnknownSut";
    case ErrorCode::kUnknownOperation: return "UnknownOperation";
    case ErrorCode::kArgumentKindMismatch: return "ArgumentKindMismatch";
    case ErrorCode::kAlreadyWoven: return "AlreadyWoven";
    case ErrorCode::kNoMatchingTarget: return "NoMatchingTarget";
    case ErrorCode::kStaleHandle: return "StaleHandle";
    case ErrorCode::kMutantRuntimeError: return "MutantRuntimeError";
    case ErrorCode::kInapplicableArguments: return "InapplicableArguments";
    case ErrorCode::kUnknownOperator: return "UnknownOperator";
    case ErrorCode::kUnknownTargetName: return "UnknownTargetName";
    case ErrorCode::kNotActive: return "NotActive";
    case ErrorCode::kUnknownParcel: return "UnknownParcel";
    case ErrorCode::kDifferentOwner: return "DifferentOwner";
    case ErrorCode::kNotAdjacent: return "NotAdjacent";
    case ErrorCode::kNotRectilinear: return "NotRectilinear";
    case ErrorCode::kInvalidGeofence: return "InvalidGeofence";
    case ErrorCode::kBaselineRed: return "BaselineRed";
    case ErrorCode::kNoMutants: return "NoMutants";
    case ErrorCode::kMalformedDocument: return "MalformedDocument";
  }
  return "Unknown";
}

CrsTag CrsTag::FromId(std::string_view id) {
  if (id == "lonlat" || id == "planar") {
    return {std::string(id), AxisOrder::kXY};
  }
  if (id == "latlon") {
    return {std::string(id), AxisOrder::kYX};
  }
  throw Error(ErrorCode::kUnknownCrs, "unknown crs id '" + std::string(id) + "'");
}

bool PositionFix::IsValid() const {
  return std::isfinite(lat) && std::isfinite(lon) && lat >= -90.0 &&
         lat <= 90.0 && lon >= -180.0 && lon <= 180.0;
}

Polygon::Polygon(std::vector<Coordinate> ring, CrsTag crs)
    : ring_(std::move(ring)), crs_(std::move(crs)) {
  if (ring_.size() < 4) {
    throw Error(ErrorCode::kTooFewCoordinates,
                "ring has " + std::to_string(ring_.size()) +
                    " coordinates, need at least 4");
  }
  for (const Coordinate& c : ring_) {
    if (!std::isfinite(c.x) || !std::isfinite(c.y)) {
      throw Error(ErrorCode::kNonFiniteCoordinate, "ring has a NaN or infinity");
    }
  }
  if (ring_.front() != ring_.back()) {
    throw Error(ErrorCode::kRingNotClosed, "first coordinate differs from last");
  }
  if (crs_.id.empty()) {
    throw Error(ErrorCode::kUnknownCrs, "empty crs id");
  }
}

Polygon RebuildPolygon(std::vector<Coordinate> coords, CrsTag crs) {
  return Polygon(std::move(coords), std::move(crs));
}

Polygon Rectangle(double x0, double y0, double x1, double y1, CrsTag crs) {
  return Polygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}, {x0, y0}},
                 std::move(crs));
}

double SignedArea(const Polygon& p) {
  const auto& r = p.ring();
  const Coordinate o = r.front();
  double twice = 0.0;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    const double ax = r[i].x - o.x, ay = r[i].y - o.y;
    const double bx = r[i + 1].x - o.x, by = r[i + 1].y - o.y;
    twice += ax * by - bx * ay;
  }
  return twice / 2.0;
}

double Area(const Polygon& p) { return std::abs(SignedArea(p)); }

Coordinate Centroid(const Polygon& p) {
  const auto& r = p.ring();
  // Work relative to the first vertex to limit cancellation.
  const Coordinate o = r.front();
  double twice_area = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  double extent = 0.0;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    const double ax = r[i].x - o.x, ay = r[i].y - o.y;
    const double bx = r[i + 1].x - o.x, by = r[i + 1].y - o.y;
    const double cross = ax * by - bx * ay;
    twice_area += cross;
    cx += (ax + bx) * cross;
    cy += (ay + by) * cross;
    extent = std::max({extent, std::abs(ax), std::abs(ay)});
  }
  if (std::abs(twice_area) > 1e-12 * std::max(1.0, extent * extent)) {
    return {o.x + cx / (3.0 * twice_area), o.y + cy / (3.0 * twice_area)};
  }

  std::vector<Coordinate> distinct;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    if (std::find(distinct.begin(), distinct.end(), r[i]) == distinct.end()) {
      distinct.push_back(r[i]);
    }
  }
  double sx = 0.0, sy = 0.0;
  for (const Coordinate& c : distinct) {
    sx += c.x;
    sy += c.y;
  }
  const auto n = static_cast<double>(distinct.size());
  return {sx / n, sy / n};
}

double HaversineDistance(const PositionFix& a, const PositionFix& b) {
  constexpr double kToRad = std::numbers::pi / 180.0;
  const double lat1 = a.lat * kToRad;
  const double lat2 = b.lat * kToRad;
  const double dlat = (b.lat - a.lat) * kToRad;
  const double dlon = (b.lon - a.lon) * kToRad;
  const double s = std::sin(dlat / 2.0);
  const double t = std::sin(dlon / 2.0);
  const double h = s * s + std::cos(lat1) * std::cos(lat2) * t * t;
  return 2.0 * kEarthRadiusMeters * std::asin(std::sqrt(std::min(1.0, h)));
}

}  // namespace geomutate
