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

#include "geomutate/fixtures.h"

#include <string>

#include "geomutate/error.h"

namespace geomutate {
namespace {

template <typename Fn>
auto Guard(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedDocument, std::string(what) + ": " + e.what());
  }
}

}  // namespace

nlohmann::json PolygonToJson(const Polygon& p) {
  nlohmann::json ring = nlohmann::json::array();
  for (const Coordinate& c : p.ring()) ring.push_back({c.x, c.y});
  return {{"crs", p.crs().id}, {"ring", ring}};
}

Polygon PolygonFromJson(const nlohmann::json& doc) {
  auto [crs, coords] = Guard("geometry", [&] {
    std::vector<Coordinate> coords;
    for (const auto& pair : doc.at("ring")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw Error(ErrorCode::kMalformedDocument,
                    "geometry: ring entries must be [x, y] pairs");
      }
      coords.push_back({pair.at(0).get<double>(), pair.at(1).get<double>()});
    }
    return std::make_pair(doc.at("crs").get<std::string>(), std::move(coords));
  });
  return RebuildPolygon(std::move(coords), CrsTag::FromId(crs));
}

nlohmann::json GeofencesToJson(const std::vector<Geofence>& geofences) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& g : geofences) {
    list.push_back({{"id", g.id},
                    {"lat", g.center.lat},
                    {"lon", g.center.lon},
                    {"radiusMeters", g.radius_meters}});
  }
  return {{"geofences", list}};
}

std::vector<Geofence> GeofencesFromJson(const nlohmann::json& doc) {
  return Guard("geofences", [&] {
    std::vector<Geofence> out;
    for (const auto& g : doc.at("geofences")) {
      out.push_back({g.at("id").get<std::string>(),
                     {g.at("lat").get<double>(), g.at("lon").get<double>()},
                     g.at("radiusMeters").get<double>()});
    }
    return out;
  });
}

nlohmann::json ParcelsToJson(const std::vector<Parcel>& parcels) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& p : parcels) {
    list.push_back({{"id", p.id},
                    {"ownerId", p.owner_id},
                    {"shape", PolygonToJson(p.shape)}});
  }
  return {{"parcels", list}};
}

std::vector<Parcel> ParcelsFromJson(const nlohmann::json& doc) {
  const nlohmann::json list = Guard("parcels", [&] { return doc.at("parcels"); });
  std::vector<Parcel> out;
  for (const auto& p : list) {
    auto [id, owner] = Guard("parcels", [&] {
      return std::make_pair(p.at("id").get<std::string>(),
                            p.at("ownerId").get<std::string>());
    });
    const nlohmann::json shape = Guard("parcels", [&] { return p.at("shape"); });
    out.push_back({std::move(id), std::move(owner), PolygonFromJson(shape)});
  }
  return out;
}

}  // namespace geomutate
