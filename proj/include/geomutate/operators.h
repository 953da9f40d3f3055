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

#ifndef GEOMUTATE_OPERATORS_H_
#define GEOMUTATE_OPERATORS_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geomutate/interception.h"

namespace geomutate {

inline constexpr std::string_view kChangeCoordSys = "ChangeCoordSys";
inline constexpr std::string_view kBooleanPolygonConstraint =
    "BooleanPolygonConstraint";

// A mutation operator is data: how it rewrites a join point and which
// operation names it applies to. Adding one needs no engine change.
struct MutationOperator {
  std::string id;
  std::string description;
  Transform transform;
  std::vector<std::string> target_operation_names;

  bool Targets(std::string_view operation) const;
};

// Swaps the first two Number arguments. Further arguments pass through.
// Throws kInapplicableArguments.
JoinPoint ChangeCoordSysTransform(const JoinPoint& jp);

// Replaces the first and last coordinate of the first Polygon argument with
// that polygon's centroid and rebuilds it without repair. The second
// geometry is left alone. Throws kInapplicableArguments.
JoinPoint BooleanPolygonConstraintTransform(const JoinPoint& jp);

class OperatorCatalog {
 public:
  OperatorCatalog() = default;
  explicit OperatorCatalog(std::vector<MutationOperator> operators);

  // The two GIS operators, ChangeCoordSys first.
  static const OperatorCatalog& Standard();

  void Add(MutationOperator op);
  std::span<const MutationOperator> All() const { return operators_; }
  // Throws kUnknownOperator.
  const MutationOperator& Find(std::string_view id) const;

  // Expands "all" to every id; otherwise validates each id.
  std::vector<std::string> Resolve(std::span<const std::string> ids) const;

 private:
  std::vector<MutationOperator> operators_;
};

std::span<const MutationOperator> ListOperators();

// Operations of `sut_id` whose names the operator targets, registry order.
// Throws kUnknownSut.
std::vector<OperationDescriptor> ApplicableTargets(const MutationOperator& op,
                                                   const SutRegistry& registry,
                                                   std::string_view sut_id);

}  // namespace geomutate

#endif  // GEOMUTATE_OPERATORS_H_
