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

#include "geomutate/mutant_engine.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <iomanip>

#include "geomutate/error.h"

namespace geomutate {

std::vector<Mutant> MutantEngine::Enumerate(
    std::string_view sut_id, std::span<const std::string> operator_ids,
    const std::optional<std::vector<std::string>>& target_filter) const {
  const auto& ops = registry_.ListInterceptableOperations(sut_id);
  if (target_filter) {
    for (const std::string& name : *target_filter) {
      const bool known = std::any_of(ops.begin(), ops.end(), [&](const auto& d) {
        return d.name == name;
      });
      if (!known) {
        throw Error(ErrorCode::kUnknownTargetName,
                    std::string(sut_id) + " has no operation '" + name + "'");
      }
    }
  }

  std::vector<Mutant> mutants;
  for (const std::string& op_id : catalog_.Resolve(operator_ids)) {
    const MutationOperator& op = catalog_.Find(op_id);
    for (const auto& target : ApplicableTargets(op, registry_, sut_id)) {
      if (target_filter &&
          std::find(target_filter->begin(), target_filter->end(),
                    target.name) == target_filter->end()) {
        continue;
      }
      Mutant m;
      m.id = "M" + std::to_string(mutants.size() + 1);
      m.operator_id = op.id;
      m.sut_id = std::string(sut_id);
      m.target_operation = target;
      mutants.push_back(std::move(m));
    }
  }
  return mutants;
}

Advice MutantEngine::BuildAdvice(const Mutant& m) const {
  const MutationOperator& op = catalog_.Find(m.operator_id);
  return Advice{op.id, op.transform, {m.target_operation.name}};
}

WeaveHandle MutantEngine::Activate(Mutant& m, WeaveContext& ctx) const {
  if (m.status == MutantStatus::kActive) {
    throw Error(ErrorCode::kAlreadyWoven, m.id + " is already active");
  }
  WeaveHandle handle = ctx.Weave(BuildAdvice(m), m.sut_id);
  m.handle = handle;
  m.status = MutantStatus::kActive;
  return handle;
}

void MutantEngine::Deactivate(Mutant& m, WeaveContext& ctx) const {
  if (m.status != MutantStatus::kActive || !m.handle) {
    throw Error(ErrorCode::kNotActive, m.id + " is not active");
  }
  ctx.Unweave(*m.handle);
  m.handle.reset();
  m.status = MutantStatus::kDone;
}

std::string MakeRunId(std::string_view sut_id,
                      std::span<const std::string> operator_ids,
                      const std::optional<std::vector<std::string>>& targets) {
  // FNV-1a over the inputs.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  mix(sut_id);
  for (const auto& id : operator_ids) mix(id);
  if (targets) {
    mix("targets");
    for (const auto& t : *targets) mix(t);
  }
  std::ostringstream out;
  out << sut_id << '-' << std::hex << std::setw(8) << std::setfill('0')
      << (h & 0xffffffffull);
  return out.str();
}

nlohmann::json ManifestToJson(const MutantManifest& manifest) {
  nlohmann::json mutants = nlohmann::json::array();
  for (const Mutant& m : manifest.mutants) {
    nlohmann::json kinds = nlohmann::json::array();
    for (ArgKind k : m.target_operation.arg_kinds) kinds.push_back(ArgKindName(k));
    mutants.push_back({{"id", m.id},
                       {"operatorId", m.operator_id},
                       {"targetOperation", m.target_operation.name},
                       {"argKinds", kinds}});
  }
  return {{"run", manifest.run_id},
          {"sut", manifest.sut_id},
          {"mutants", mutants}};
}

MutantManifest ManifestFromJson(const nlohmann::json& doc,
                                const MutantEngine& engine) {
  auto fail = [](const std::string& why) -> Error {
    return Error(ErrorCode::kMalformedDocument, "manifest: " + why);
  };
  try {
    MutantManifest manifest;
    manifest.run_id = doc.at("run").get<std::string>();
    manifest.sut_id = doc.at("sut").get<std::string>();
    if (!engine.registry().Contains(manifest.sut_id)) {
      throw fail("unknown sut '" + manifest.sut_id + "'");
    }
    std::set<std::string> seen;
    for (const auto& entry : doc.at("mutants")) {
      Mutant m;
      m.id = entry.at("id").get<std::string>();
      m.operator_id = entry.at("operatorId").get<std::string>();
      m.sut_id = manifest.sut_id;
      const auto target = entry.at("targetOperation").get<std::string>();
      if (!seen.insert(m.id).second) throw fail("duplicate id " + m.id);

      const MutationOperator& op = engine.catalog().Find(m.operator_id);
      if (!op.Targets(target)) {
        throw fail(m.operator_id + " does not target " + target);
      }
      m.target_operation = engine.registry().FindOperation(m.sut_id, target);
      std::vector<ArgKind> kinds;
      for (const auto& k : entry.at("argKinds")) {
        kinds.push_back(ParseArgKind(k.get<std::string>()));
      }
      if (kinds != m.target_operation.arg_kinds) {
        throw fail("argKinds of " + m.id + " do not match " + target);
      }
      manifest.mutants.push_back(std::move(m));
    }
    return manifest;
  } catch (const nlohmann::json::exception& e) {
    throw fail(e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMalformedDocument) throw;
    throw fail(e.what());
  }
}

}  // namespace geomutate
