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

#ifndef GEOMUTATE_GEOMETRY_H_
#define GEOMUTATE_GEOMETRY_H_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace geomutate {

// Absolute tolerance used when deciding whether a point lies on a boundary.
inline constexpr double kBoundaryEpsilon = 1e-9;

// Sphere radius for great-circle distances.
inline constexpr double kEarthRadiusMeters = 6371000.0;

struct Coordinate {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

enum class AxisOrder { kXY, kYX };

// Identifies how the two components of a Coordinate are to be read.
struct CrsTag {
  std::string id;
  AxisOrder axis_order = AxisOrder::kXY;

  friend bool operator==(const CrsTag&, const CrsTag&) = default;

  // "lonlat" and "planar" are XY, "latlon" is YX. Throws kUnknownCrs.
  static CrsTag FromId(std::string_view id);
  static CrsTag LonLat() { return {"lonlat", AxisOrder::kXY}; }
  static CrsTag LatLon() { return {"latlon", AxisOrder::kYX}; }
};

// A position in degrees. Mutated fixes may leave the valid ranges, so the
// type does not enforce them; IsValid() reports whether they hold.
struct PositionFix {
  double lat = 0.0;
  double lon = 0.0;

  bool IsValid() const;
  friend bool operator==(const PositionFix&, const PositionFix&) = default;
};

// Exterior ring only. The ring is closed (first == last) and has at least
// four coordinates. Self-intersecting and degenerate rings are allowed.
class Polygon {
 public:
  // Wraps `ring` verbatim. Throws kTooFewCoordinates, kRingNotClosed or
  // kNonFiniteCoordinate. No simplicity or orientation repair is done.
  Polygon(std::vector<Coordinate> ring, CrsTag crs = CrsTag::LonLat());

  const std::vector<Coordinate>& ring() const { return ring_; }
  const CrsTag& crs() const { return crs_; }

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Coordinate> ring_;
  CrsTag crs_;
};

// Same contract as the Polygon constructor; named for call sites that
// rebuild a geometry from an edited coordinate array.
Polygon RebuildPolygon(std::vector<Coordinate> coords, CrsTag crs);

// Axis-aligned rectangle [x0, x1] x [y0, y1], counter-clockwise from (x0, y0).
Polygon Rectangle(double x0, double y0, double x1, double y1,
                  CrsTag crs = CrsTag::LonLat());

// Signed shoelace area; positive for counter-clockwise rings.
double SignedArea(const Polygon& p);
double Area(const Polygon& p);

// Area-weighted centroid. Rings with zero shoelace area fall back to the
// mean of their distinct vertices.
Coordinate Centroid(const Polygon& p);

double HaversineDistance(const PositionFix& a, const PositionFix& b);

// Point location against a ring under the even-odd rule.
enum class Location { kInterior, kBoundary, kExterior };
Location Locate(const Coordinate& c, const Polygon& p);

enum class Predicate {
  kContains,
  kCoveredBy,
  kCovers,
  kCrosses,
  kDisjoint,
  kTouches,
  kEqualsTop,
  kIntersects,
  kOverlaps,
  kWithin,
};

// The ten predicate names, in the order used for registration.
std::span<const std::string_view> PredicateNames();

// Throws kUnknownPredicate.
Predicate ParsePredicate(std::string_view name);
std::string_view PredicateName(Predicate p);

// Which of the nine interior/boundary/exterior intersections are non-empty.
// Dimensions are not tracked; for area operands only emptiness matters.
struct IntersectionMatrix {
  enum Part { kInterior = 0, kBoundary = 1, kExterior = 2 };

  std::array<std::array<bool, 3>, 3> cells{};

  bool at(Part a, Part b) const { return cells[a][b]; }
  void set(Part a, Part b) { cells[a][b] = true; }
  IntersectionMatrix Transposed() const;

  friend bool operator==(const IntersectionMatrix&,
                         const IntersectionMatrix&) = default;
};

IntersectionMatrix Relate(const Polygon& a, const Polygon& b);

// Evaluates one predicate against an already computed matrix for (a, b).
bool Evaluate(Predicate p, const IntersectionMatrix& m);

bool TopologicalPredicate(Predicate p, const Polygon& a, const Polygon& b);
bool TopologicalPredicate(std::string_view name, const Polygon& a,
                          const Polygon& b);

}  // namespace geomutate

#endif  // GEOMUTATE_GEOMETRY_H_
