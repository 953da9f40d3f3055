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

#include "geomutate/operators.h"

#include <algorithm>
#include <string>
#include <utility>

#include "geomutate/error.h"
#include "geomutate/geometry.h"

namespace geomutate {

bool MutationOperator::Targets(std::string_view operation) const {
  return std::find(target_operation_names.begin(),
                   target_operation_names.end(),
                   operation) != target_operation_names.end();
}

JoinPoint ChangeCoordSysTransform(const JoinPoint& jp) {
  if (jp.args.size() < 2 || !std::holds_alternative<double>(jp.args[0]) ||
      !std::holds_alternative<double>(jp.args[1])) {
    throw Error(ErrorCode::kInapplicableArguments,
                "ChangeCoordSys needs two leading Number arguments");
  }
  JoinPoint out = jp;
  std::swap(out.args[0], out.args[1]);
  return out;
}

JoinPoint BooleanPolygonConstraintTransform(const JoinPoint& jp) {
  if (jp.args.empty() || !std::holds_alternative<Polygon>(jp.args[0])) {
    throw Error(ErrorCode::kInapplicableArguments,
                "BooleanPolygonConstraint needs a leading Polygon argument");
  }
  const auto& first = std::get<Polygon>(jp.args[0]);
  const Coordinate c = Centroid(first);
  std::vector<Coordinate> coords = first.ring();
  coords.front() = c;
  coords.back() = c;

  JoinPoint out = jp;
  out.args[0] = RebuildPolygon(std::move(coords), first.crs());
  return out;
}

OperatorCatalog::OperatorCatalog(std::vector<MutationOperator> operators) {
  for (auto& op : operators) Add(std::move(op));
}

const OperatorCatalog& OperatorCatalog::Standard() {
  static const OperatorCatalog catalog = [] {
    std::vector<std::string> predicates;
    for (std::string_view name : PredicateNames()) {
      predicates.emplace_back(name);
    }
    return OperatorCatalog({
        {std::string(kChangeCoordSys),
         "Exchanges the two coordinate components handed to a location "
         "lookup, so positions land in the wrong coordinate system.",
         ChangeCoordSysTransform,
         {"getFromLocation"}},
        {std::string(kBooleanPolygonConstraint),
         "Collapses the first and last vertex of the first geometry onto its "
         "centroid before a topological check.",
         BooleanPolygonConstraintTransform,
         std::move(predicates)},
    });
  }();
  return catalog;
}

void OperatorCatalog::Add(MutationOperator op) {
  if (op.target_operation_names.empty()) {
    throw Error(ErrorCode::kUnknownTargetName,
                op.id + " must target at least one operation");
  }
  operators_.push_back(std::move(op));
}

const MutationOperator& OperatorCatalog::Find(std::string_view id) const {
  for (const auto& op : operators_) {
    if (op.id == id) return op;
  }
  throw Error(ErrorCode::kUnknownOperator,
              "no mutation operator named '" + std::string(id) + "'");
}

std::vector<std::string> OperatorCatalog::Resolve(
    std::span<const std::string> ids) const {
  std::vector<std::string> out;
  auto add = [&out](const std::string& id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  for (const std::string& id : ids) {
    if (id == "all") {
      for (const auto& op : operators_) add(op.id);
    } else {
      add(Find(id).id);
    }
  }
  return out;
}

std::span<const MutationOperator> ListOperators() {
  return OperatorCatalog::Standard().All();
}

std::vector<OperationDescriptor> ApplicableTargets(const MutationOperator& op,
                                                   const SutRegistry& registry,
                                                   std::string_view sut_id) {
  std::vector<OperationDescriptor> out;
  for (const auto& d : registry.ListInterceptableOperations(sut_id)) {
    if (op.Targets(d.name)) out.push_back(d);
  }
  return out;
}

}  // namespace geomutate
