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

#ifndef GEOMUTATE_CORPUS_H_
#define GEOMUTATE_CORPUS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geomutate/geometry.h"
#include "geomutate/interception.h"

namespace geomutate {

struct Geofence {
  std::string id;
  PositionFix center;
  double radius_meters = 0.0;

  friend bool operator==(const Geofence&, const Geofence&) = default;
};

// Fixed linear viewport map: screen = (x * 10 + 500, -y * 10 + 500).
Coordinate ViewportTransform(const Coordinate& c);

// Location-aware app that registers places of interest and notifies when a
// fix falls inside one of them.
class GeofenceApp : public Sut {
 public:
  static constexpr std::string_view kId = "geofence";

  static std::vector<OperationDescriptor> OperationDescriptors();
  static std::vector<Geofence> BundledGeofences();

  explicit GeofenceApp(WeaveContext& ctx)
      : GeofenceApp(ctx, BundledGeofences()) {}
  GeofenceApp(WeaveContext& ctx, std::vector<Geofence> geofences);

  // Throws kInvalidGeofence unless the radius is positive.
  void AddGeofence(Geofence g);
  const std::vector<Geofence>& geofences() const { return geofences_; }

  // Reads (axis0, axis1) as (lat, lon). Out-of-range values pass through.
  PositionFix GetFromLocation(double axis0, double axis1);
  std::vector<std::string> GeofencesContaining(const PositionFix& fix);
  ViewportRendering RenderGeofences(const CrsTag& viewport);

 private:
  std::vector<Geofence> geofences_;
};

// Axis-aligned rectangle recovered from a ring, if the ring is one.
struct Box {
  double x0, y0, x1, y1;
};
std::optional<Box> AsAxisAlignedRectangle(const Polygon& p);

// Outline of the union of two rectangles that share a boundary segment of
// positive length, counter-clockwise from the lowest-then-leftmost vertex.
// Throws kNotRectilinear or kNotAdjacent.
Polygon RectilinearUnion(const Polygon& a, const Polygon& b);

// Land re-parcelling: merges adjacent parcels of one owner.
class ReparcelApp : public Sut {
 public:
  static constexpr std::string_view kId = "reparcel";
  static constexpr std::string_view kMergeParcels = "mergeParcels";

  static std::vector<OperationDescriptor> OperationDescriptors();
  static std::vector<Parcel> BundledParcels();

  explicit ReparcelApp(WeaveContext& ctx) : ReparcelApp(ctx, BundledParcels()) {}
  ReparcelApp(WeaveContext& ctx, std::vector<Parcel> parcels);

  const std::vector<Parcel>& parcels() const { return parcels_; }
  // Throws kUnknownParcel.
  const Parcel& Find(std::string_view id) const;

  // Routes through the interceptable operation named after the predicate.
  // Throws kUnknownPredicate.
  bool CheckConstraint(std::string_view predicate, const Polygon& a,
                       const Polygon& b);

  // Throws kUnknownParcel, kDifferentOwner, kNotAdjacent or kNotRectilinear.
  Parcel MergeParcels(const std::string& a_id, const std::string& b_id);

 private:
  Parcel MergeBody(const std::string& a_id, const std::string& b_id);

  std::vector<Parcel> parcels_;
};

// Registry holding both corpus apps with their bundled fixtures.
const SutRegistry& DefaultRegistry();

}  // namespace geomutate

#endif  // GEOMUTATE_CORPUS_H_
