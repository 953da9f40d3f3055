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

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "geomutate/corpus.h"
#include "geomutate/error.h"

namespace geomutate {
namespace {

bool Near(double a, double b) { return std::abs(a - b) <= kBoundaryEpsilon; }

Coordinate Swap(const Coordinate& c) { return {c.y, c.x}; }

Box SwapBox(const Box& b) { return {b.y0, b.x0, b.y1, b.x1}; }

// Outline for `left` abutting `right` along the vertical line x = left.x1.
std::vector<Coordinate> UnionOutline(const Box& left, const Box& right) {
  const double c = left.x1;
  std::vector<Coordinate> pts = {
      {left.x0, left.y0},  {c, left.y0},  {c, right.y0},  {right.x1, right.y0},
      {right.x1, right.y1}, {c, right.y1}, {c, left.y1},  {left.x0, left.y1},
  };

  auto dedupe = [](std::vector<Coordinate> in) {
    std::vector<Coordinate> out;
    for (const auto& p : in) {
      if (out.empty() || out.back() != p) out.push_back(p);
    }
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
  };
  pts = dedupe(std::move(pts));

  bool changed = true;
  while (changed && pts.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Coordinate& prev = pts[(i + pts.size() - 1) % pts.size()];
      const Coordinate& cur = pts[i];
      const Coordinate& next = pts[(i + 1) % pts.size()];
      const double cross = (cur.x - prev.x) * (next.y - cur.y) -
                           (cur.y - prev.y) * (next.x - cur.x);
      if (cross == 0.0) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        pts = dedupe(std::move(pts));
        changed = true;
        break;
      }
    }
  }
  return pts;
}

}  // namespace

std::optional<Box> AsAxisAlignedRectangle(const Polygon& p) {
  const auto& r = p.ring();
  if (r.size() != 5) return std::nullopt;
  std::set<double> xs, ys;
  for (std::size_t i = 0; i < 4; ++i) {
    const Coordinate& a = r[i];
    const Coordinate& b = r[i + 1];
    if ((a.x == b.x) == (a.y == b.y)) return std::nullopt;
    xs.insert(a.x);
    ys.insert(a.y);
  }
  if (xs.size() != 2 || ys.size() != 2) return std::nullopt;
  return Box{*xs.begin(), *ys.begin(), *xs.rbegin(), *ys.rbegin()};
}

Polygon RectilinearUnion(const Polygon& a, const Polygon& b) {
  const auto ra = AsAxisAlignedRectangle(a);
  const auto rb = AsAxisAlignedRectangle(b);
  if (!ra || !rb) {
    throw Error(ErrorCode::kNotRectilinear,
                "only axis-aligned rectangles can be merged");
  }

  auto shared = [](double lo1, double hi1, double lo2, double hi2) {
    return std::min(hi1, hi2) - std::max(lo1, lo2);
  };

  std::vector<Coordinate> outline;
  if (Near(ra->x1, rb->x0) || Near(rb->x1, ra->x0)) {
    if (shared(ra->y0, ra->y1, rb->y0, rb->y1) <= kBoundaryEpsilon) {
      throw Error(ErrorCode::kNotAdjacent, "rectangles meet only at a corner");
    }
    outline = Near(ra->x1, rb->x0) ? UnionOutline(*ra, *rb)
                                   : UnionOutline(*rb, *ra);
  } else if (Near(ra->y1, rb->y0) || Near(rb->y1, ra->y0)) {
    if (shared(ra->x0, ra->x1, rb->x0, rb->x1) <= kBoundaryEpsilon) {
      throw Error(ErrorCode::kNotAdjacent, "rectangles meet only at a corner");
    }
    // Solve in transposed space; transposing flips orientation back.
    const Box ta = SwapBox(*ra);
    const Box tb = SwapBox(*rb);
    outline = Near(ra->y1, rb->y0) ? UnionOutline(ta, tb) : UnionOutline(tb, ta);
    for (auto& c : outline) c = Swap(c);
    std::reverse(outline.begin(), outline.end());
  } else {
    throw Error(ErrorCode::kNotAdjacent, "rectangles do not share an edge");
  }

  const auto start = std::min_element(
      outline.begin(), outline.end(), [](const Coordinate& l, const Coordinate& r) {
        return l.y != r.y ? l.y < r.y : l.x < r.x;
      });
  std::rotate(outline.begin(), start, outline.end());
  outline.push_back(outline.front());
  return Polygon(std::move(outline), a.crs());
}

std::vector<OperationDescriptor> ReparcelApp::OperationDescriptors() {
  std::vector<OperationDescriptor> ops;
  for (std::string_view name : PredicateNames()) {
    ops.push_back({std::string(name), {ArgKind::kPolygon, ArgKind::kPolygon}, ""});
  }
  ops.push_back({std::string(kMergeParcels), {ArgKind::kOther, ArgKind::kOther}, ""});
  return ops;
}

std::vector<Parcel> ReparcelApp::BundledParcels() {
  const CrsTag planar = CrsTag::FromId("planar");
  return {
      // Two halves of one field, sharing a full side.
      {"P1", "ana", Rectangle(0, 0, 2, 2, planar)},
      {"P2", "ana", Rectangle(2, 0, 4, 2, planar)},
      // Another field of the same owner, two units away.
      {"P7", "ana", Rectangle(6, 0, 8, 2, planar)},
      // A field and a narrow strip along half of its east side. The field's
      // ring starts on the corner the strip touches.
      {"P3", "breixo", Polygon({{14, 0}, {14, 2}, {10, 2}, {10, 0}, {14, 0}}, planar)},
      {"P4", "breixo", Rectangle(14, 0, 16, 1, planar)},
      // Neighbours with different owners.
      {"P5", "carme", Rectangle(20, 0, 22, 2, planar)},
      {"P6", "xoan", Rectangle(22, 0, 24, 2, planar)},
  };
}

ReparcelApp::ReparcelApp(WeaveContext& ctx, std::vector<Parcel> parcels)
    : Sut(std::string(kId), ctx), parcels_(std::move(parcels)) {
  for (const auto& op : OperationDescriptors()) {
    if (op.name == kMergeParcels) {
      Expose(op, [this](std::span<const Value> args) -> Result {
        return MergeBody(std::get<std::string>(args[0]),
                         std::get<std::string>(args[1]));
      });
    } else {
      const Predicate predicate = ParsePredicate(op.name);
      Expose(op, [predicate](std::span<const Value> args) -> Result {
        return TopologicalPredicate(predicate, std::get<Polygon>(args[0]),
                                    std::get<Polygon>(args[1]));
      });
    }
  }
}

const Parcel& ReparcelApp::Find(std::string_view id) const {
  for (const auto& p : parcels_) {
    if (p.id == id) return p;
  }
  throw Error(ErrorCode::kUnknownParcel, "no parcel '" + std::string(id) + "'");
}

bool ReparcelApp::CheckConstraint(std::string_view predicate, const Polygon& a,
                                  const Polygon& b) {
  const Predicate p = ParsePredicate(predicate);
  return std::get<bool>(Invoke(PredicateName(p), {a, b}));
}

Parcel ReparcelApp::MergeParcels(const std::string& a_id,
                                 const std::string& b_id) {
  return std::get<Parcel>(Invoke(kMergeParcels, {a_id, b_id}));
}

Parcel ReparcelApp::MergeBody(const std::string& a_id, const std::string& b_id) {
  const Parcel a = Find(a_id);
  const Parcel b = Find(b_id);
  if (a.owner_id != b.owner_id) {
    throw Error(ErrorCode::kDifferentOwner,
                a.id + " belongs to " + a.owner_id + ", " + b.id +
                    " belongs to " + b.owner_id);
  }
  if (!CheckConstraint("touches", a.shape, b.shape)) {
    throw Error(ErrorCode::kNotAdjacent, a.id + " does not touch " + b.id);
  }
  Parcel merged{a.id + "+" + b.id, a.owner_id, RectilinearUnion(a.shape, b.shape)};

  std::vector<Parcel> next;
  for (auto& p : parcels_) {
    if (p.id == a.id) {
      next.push_back(merged);
    } else if (p.id != b.id) {
      next.push_back(std::move(p));
    }
  }
  parcels_ = std::move(next);
  return merged;
}

const SutRegistry& DefaultRegistry() {
  static const SutRegistry registry = [] {
    SutRegistry r;
    r.Register(std::string(GeofenceApp::kId), GeofenceApp::OperationDescriptors(),
               [](WeaveContext& ctx) -> std::unique_ptr<Sut> {
                 return std::make_unique<GeofenceApp>(ctx);
               });
    r.Register(std::string(ReparcelApp::kId), ReparcelApp::OperationDescriptors(),
               [](WeaveContext& ctx) -> std::unique_ptr<Sut> {
                 return std::make_unique<ReparcelApp>(ctx);
               });
    return r;
  }();
  return registry;
}

}  // namespace geomutate
