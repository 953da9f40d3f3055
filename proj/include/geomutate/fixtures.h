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

#ifndef GEOMUTATE_FIXTURES_H_
#define GEOMUTATE_FIXTURES_H_

#include <vector>

#include "geomutate/corpus.h"
#include "geomutate/geometry.h"
#include "json.hpp"

// JSON forms of corpus data.
//
//   geometry:  {"crs": "lonlat", "ring": [[x, y], ...]}
//   geofences: {"geofences": [{"id": s, "lat": n, "lon": n, "radiusMeters": n}]}
//   parcels:   {"parcels": [{"id": s, "ownerId": s, "shape": geometry}]}
//
// Readers throw Error(kMalformedDocument) on schema violations and pass
// geometry errors (kRingNotClosed, ...) through unchanged.

namespace geomutate {

nlohmann::json PolygonToJson(const Polygon& p);
Polygon PolygonFromJson(const nlohmann::json& doc);

nlohmann::json GeofencesToJson(const std::vector<Geofence>& geofences);
std::vector<Geofence> GeofencesFromJson(const nlohmann::json& doc);

nlohmann::json ParcelsToJson(const std::vector<Parcel>& parcels);
std::vector<Parcel> ParcelsFromJson(const nlohmann::json& doc);

}  // namespace geomutate

#endif  // GEOMUTATE_FIXTURES_H_
