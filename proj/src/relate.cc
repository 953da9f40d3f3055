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

// Intersection matrix for two rings under the even-odd rule.
//
// Every edge of both rings is split at all points where it meets another
// edge (of either ring). Each resulting piece lies wholly in one part of the
// other ring, so its midpoint plus the split points classify the boundary
// rows and columns. Every face of the combined arrangement borders at least
// one piece, so probing just off both sides of every piece visits every face
// and yields the interior/exterior cells.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "geomutate/error.h"
#include "geomutate/geometry.h"

namespace geomutate {
namespace {

struct Segment {
  Coordinate a;
  Coordinate b;
};

constexpr std::array<std::string_view, 10> kPredicateNames = {
    "contains", "coveredBy", "covers",     "crosses",  "disjoint",
    "touches",  "equalsTop", "intersects", "overlaps", "within"};

double Dot(double ax, double ay, double bx, double by) {
  return ax * bx + ay * by;
}

double DistanceToSegment(const Coordinate& p, const Segment& s) {
  const double dx = s.b.x - s.a.x;
  const double dy = s.b.y - s.a.y;
  const double len2 = Dot(dx, dy, dx, dy);
  double t = 0.0;
  if (len2 > 0.0) {
    t = std::clamp(Dot(p.x - s.a.x, p.y - s.a.y, dx, dy) / len2, 0.0, 1.0);
  }
  return std::hypot(p.x - (s.a.x + t * dx), p.y - (s.a.y + t * dy));
}

std::vector<Segment> Edges(const Polygon& p) {
  std::vector<Segment> edges;
  const auto& r = p.ring();
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    if (r[i] != r[i + 1]) edges.push_back({r[i], r[i + 1]});
  }
  return edges;
}

// Crossing-number parity; the caller guarantees `c` is off the boundary.
bool EvenOddInside(const Coordinate& c, const std::vector<Segment>& edges) {
  bool inside = false;
  for (const Segment& e : edges) {
    if ((e.a.y > c.y) != (e.b.y > c.y)) {
      const double x = e.a.x + (c.y - e.a.y) * (e.b.x - e.a.x) / (e.b.y - e.a.y);
      if (x > c.x) inside = !inside;
    }
  }
  return inside;
}

Location LocateAgainst(const Coordinate& c, const std::vector<Segment>& edges) {
  for (const Segment& e : edges) {
    if (DistanceToSegment(c, e) <= kBoundaryEpsilon) return Location::kBoundary;
  }
  return EvenOddInside(c, edges) ? Location::kInterior : Location::kExterior;
}

// Parameters along `e` where it meets any segment of `others`.
std::vector<double> SplitParameters(const Segment& e,
                                    const std::vector<Segment>& others) {
  const double dx = e.b.x - e.a.x;
  const double dy = e.b.y - e.a.y;
  const double len2 = Dot(dx, dy, dx, dy);
  const double len = std::sqrt(len2);
  std::vector<double> ts = {0.0, 1.0};

  auto add_point = [&](const Coordinate& q) {
    if (DistanceToSegment(q, e) <= kBoundaryEpsilon) {
      ts.push_back(std::clamp(Dot(q.x - e.a.x, q.y - e.a.y, dx, dy) / len2,
                              0.0, 1.0));
    }
  };

  for (const Segment& f : others) {
    add_point(f.a);
    add_point(f.b);
    const double fx = f.b.x - f.a.x;
    const double fy = f.b.y - f.a.y;
    const double denom = dx * fy - dy * fx;
    if (std::abs(denom) <= std::numeric_limits<double>::epsilon() * len *
                               std::hypot(fx, fy)) {
      continue;  // parallel; shared stretches were caught by the endpoints
    }
    const double wx = f.a.x - e.a.x;
    const double wy = f.a.y - e.a.y;
    const double t = (wx * fy - wy * fx) / denom;
    const double u = (wx * dy - wy * dx) / denom;
    if (t > 0.0 && t < 1.0 && u >= 0.0 && u <= 1.0) ts.push_back(t);
  }

  std::sort(ts.begin(), ts.end());
  std::vector<double> unique;
  for (double t : ts) {
    if (unique.empty() || (t - unique.back()) * len > kBoundaryEpsilon) {
      unique.push_back(t);
    }
  }
  // Keep the exact end so the last piece closes on the vertex.
  unique.back() = 1.0;
  return unique;
}

Coordinate Lerp(const Segment& s, double t) {
  return {s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y)};
}

using Part = IntersectionMatrix::Part;

Part PartOf(Location l) {
  switch (l) {
    case Location::kInterior: return IntersectionMatrix::kInterior;
    case Location::kBoundary: return IntersectionMatrix::kBoundary;
    case Location::kExterior: return IntersectionMatrix::kExterior;
  }
  return IntersectionMatrix::kExterior;
}

// Probes both sides of the piece [p, q] and records which faces exist.
void ProbeFaces(const Coordinate& p, const Coordinate& q,
                const std::vector<Segment>& all,
                const std::vector<Segment>& edges_a,
                const std::vector<Segment>& edges_b, IntersectionMatrix& m) {
  const Coordinate mid{(p.x + q.x) / 2.0, (p.y + q.y) / 2.0};
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  const double len = std::hypot(dx, dy);
  if (len == 0.0) return;
  const double nx = -dy / len;
  const double ny = dx / len;

  double clearance = std::numeric_limits<double>::infinity();
  for (const Segment& s : all) {
    const double d = DistanceToSegment(mid, s);
    if (d <= kBoundaryEpsilon) {
      const double sx = s.b.x - s.a.x;
      const double sy = s.b.y - s.a.y;
      const double cross = dx * sy - dy * sx;
      if (std::abs(cross) <= 1e-12 * len * std::hypot(sx, sy)) continue;
    }
    clearance = std::min(clearance, d);
  }
  if (!(clearance > 0.0)) return;
  const double offset = std::isinf(clearance) ? len / 2.0 : clearance / 2.0;

  for (const double side : {1.0, -1.0}) {
    const Coordinate probe{mid.x + side * offset * nx,
                           mid.y + side * offset * ny};
    const bool in_a = EvenOddInside(probe, edges_a);
    const bool in_b = EvenOddInside(probe, edges_b);
    m.set(in_a ? IntersectionMatrix::kInterior : IntersectionMatrix::kExterior,
          in_b ? IntersectionMatrix::kInterior : IntersectionMatrix::kExterior);
  }
}

}  // namespace

std::span<const std::string_view> PredicateNames() { return kPredicateNames; }

Predicate ParsePredicate(std::string_view name) {
  for (std::size_t i = 0; i < kPredicateNames.size(); ++i) {
    if (kPredicateNames[i] == name) return static_cast<Predicate>(i);
  }
  throw Error(ErrorCode::kUnknownPredicate,
              "no predicate named '" + std::string(name) + "'");
}

std::string_view PredicateName(Predicate p) {
  return kPredicateNames[static_cast<std::size_t>(p)];
}

Location Locate(const Coordinate& c, const Polygon& p) {
  return LocateAgainst(c, Edges(p));
}

IntersectionMatrix IntersectionMatrix::Transposed() const {
  IntersectionMatrix t;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t.cells[j][i] = cells[i][j];
  }
  return t;
}

IntersectionMatrix Relate(const Polygon& a, const Polygon& b) {
  const std::vector<Segment> edges_a = Edges(a);
  const std::vector<Segment> edges_b = Edges(b);
  std::vector<Segment> all = edges_a;
  all.insert(all.end(), edges_b.begin(), edges_b.end());

  IntersectionMatrix m;
  m.set(IntersectionMatrix::kExterior, IntersectionMatrix::kExterior);

  // `row_is_a` selects whether the pieces belong to a (matrix rows) or to b.
  auto walk = [&](const std::vector<Segment>& own,
                  const std::vector<Segment>& other, bool row_is_a) {
    auto record = [&](const Coordinate& c) {
      const Part part = PartOf(LocateAgainst(c, other));
      if (row_is_a) {
        m.set(IntersectionMatrix::kBoundary, part);
      } else {
        m.set(part, IntersectionMatrix::kBoundary);
      }
    };
    for (const Segment& e : own) {
      const std::vector<double> ts = SplitParameters(e, all);
      Coordinate prev = e.a;
      record(prev);
      for (std::size_t i = 1; i < ts.size(); ++i) {
        const Coordinate next = i + 1 == ts.size() ? e.b : Lerp(e, ts[i]);
        record(next);
        record({(prev.x + next.x) / 2.0, (prev.y + next.y) / 2.0});
        ProbeFaces(prev, next, all, edges_a, edges_b, m);
        prev = next;
      }
    }
  };
  walk(edges_a, edges_b, true);
  walk(edges_b, edges_a, false);
  return m;
}

bool Evaluate(Predicate p, const IntersectionMatrix& m) {
  constexpr auto I = IntersectionMatrix::kInterior;
  constexpr auto B = IntersectionMatrix::kBoundary;
  constexpr auto E = IntersectionMatrix::kExterior;
  const bool intersects = m.at(I, I) || m.at(I, B) || m.at(B, I) || m.at(B, B);
  switch (p) {
    case Predicate::kIntersects:
      return intersects;
    case Predicate::kDisjoint:
      return !intersects;
    case Predicate::kTouches:
      return !m.at(I, I) && intersects;
    case Predicate::kContains:
      return m.at(I, I) && !m.at(E, I) && !m.at(E, B);
    case Predicate::kWithin:
      return m.at(I, I) && !m.at(I, E) && !m.at(B, E);
    case Predicate::kCovers:
      return intersects && !m.at(E, I) && !m.at(E, B);
    case Predicate::kCoveredBy:
      return intersects && !m.at(I, E) && !m.at(B, E);
    case Predicate::kEqualsTop:
      return m.at(I, I) && !m.at(I, E) && !m.at(B, E) && !m.at(E, I) &&
             !m.at(E, B);
    case Predicate::kOverlaps:
      return m.at(I, I) && m.at(I, E) && m.at(E, I);
    case Predicate::kCrosses:
      // Undefined for two area operands, hence never true.
      return false;
  }
  return false;
}

bool TopologicalPredicate(Predicate p, const Polygon& a, const Polygon& b) {
  return Evaluate(p, Relate(a, b));
}

bool TopologicalPredicate(std::string_view name, const Polygon& a,
                          const Polygon& b) {
  return TopologicalPredicate(ParsePredicate(name), a, b);
}

}  // namespace geomutate
