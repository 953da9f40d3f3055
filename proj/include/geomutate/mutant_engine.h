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

#ifndef GEOMUTATE_MUTANT_ENGINE_H_
#define GEOMUTATE_MUTANT_ENGINE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geomutate/interception.h"
#include "geomutate/operators.h"
#include "json.hpp"

namespace geomutate {

enum class MutantStatus { kPending, kActive, kDone };

// One operator woven onto one operation of one SUT.
struct Mutant {
  std::string id;
  std::string operator_id;
  std::string sut_id;
  OperationDescriptor target_operation;
  MutantStatus status = MutantStatus::kPending;
  std::optional<WeaveHandle> handle;
};

class MutantEngine {
 public:
  MutantEngine(const SutRegistry& registry, const OperatorCatalog& catalog)
      : registry_(registry), catalog_(catalog) {}

  // One mutant per (operator, applicable target), operator order first, then
  // registration order. Ids run M1, M2, ... Throws kUnknownSut,
  // kUnknownOperator or kUnknownTargetName.
  std::vector<Mutant> Enumerate(
      std::string_view sut_id, std::span<const std::string> operator_ids,
      const std::optional<std::vector<std::string>>& target_filter =
          std::nullopt) const;

  // Advice restricted to the mutant's single target operation.
  Advice BuildAdvice(const Mutant& m) const;

  // Throws kAlreadyWoven.
  WeaveHandle Activate(Mutant& m, WeaveContext& ctx) const;
  // Throws kNotActive.
  void Deactivate(Mutant& m, WeaveContext& ctx) const;

  const SutRegistry& registry() const { return registry_; }
  const OperatorCatalog& catalog() const { return catalog_; }

 private:
  const SutRegistry& registry_;
  const OperatorCatalog& catalog_;
};

struct MutantManifest {
  std::string run_id;
  std::string sut_id;
  std::vector<Mutant> mutants;
};

// Deterministic id derived from the enumeration inputs.
std::string MakeRunId(std::string_view sut_id,
                      std::span<const std::string> operator_ids,
                      const std::optional<std::vector<std::string>>& targets);

nlohmann::json ManifestToJson(const MutantManifest& manifest);

// Checks every entry against the engine's registry and catalog.
// Throws kMalformedDocument.
MutantManifest ManifestFromJson(const nlohmann::json& doc,
                                const MutantEngine& engine);

}  // namespace geomutate

#endif  // GEOMUTATE_MUTANT_ENGINE_H_
