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

// geomutate: GIS mutation testing over the bundled corpus apps.
//
//   geomutate list-operators [--format text|json]
//   geomutate list-targets --sut <id> [--format text|json]
//   geomutate mutate --sut <id> --operators <ids|all> [--targets <names>] --out <manifest>
//   geomutate run --manifest <file> --suite <name> --out <dir>
//                 [--timeout-ms N] [--jobs N] [--fixtures <file>]
//   geomutate show-fixtures --sut <id>
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "geomutate/corpus.h"
#include "geomutate/error.h"
#include "geomutate/fixtures.h"
#include "geomutate/harness.h"
#include "geomutate/mutant_engine.h"
#include "geomutate/operators.h"
#include "geomutate/suites.h"
#include "json.hpp"

namespace {

using geomutate::ErrorCode;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

nlohmann::json ReadJson(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw geomutate::Error(ErrorCode::kMalformedDocument,
                           "cannot read " + path.string());
  }
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw geomutate::Error(ErrorCode::kMalformedDocument,
                           path.string() + ": " + e.what());
  }
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::trunc);
  out << text;
  if (!out) {
    throw geomutate::Error(ErrorCode::kMalformedDocument,
                           "cannot write " + path.string());
  }
}

std::string Join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : std::string(sep)) + s;
  return out;
}

int ListOperators(const std::string& format) {
  const auto ops = geomutate::ListOperators();
  if (format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& op : ops) {
      list.push_back({{"id", op.id},
                      {"description", op.description},
                      {"targets", op.target_operation_names}});
    }
    std::cout << list.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& op : ops) {
    std::cout << op.id << "\n  " << op.description << "\n  targets ("
              << op.target_operation_names.size()
              << "): " << Join(op.target_operation_names, ", ") << "\n";
  }
  return kExitOk;
}

int ListTargets(const std::string& sut, const std::string& format) {
  const auto& ops =
      geomutate::DefaultRegistry().ListInterceptableOperations(sut);
  if (format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& op : ops) {
      std::vector<std::string> kinds;
      for (auto k : op.arg_kinds) kinds.emplace_back(geomutate::ArgKindName(k));
      list.push_back({{"name", op.name}, {"arity", op.arity()}, {"argKinds", kinds}});
    }
    std::cout << list.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& op : ops) {
    std::vector<std::string> kinds;
    for (auto k : op.arg_kinds) kinds.emplace_back(geomutate::ArgKindName(k));
    std::cout << op.name << "/" << op.arity() << "  (" << Join(kinds, ", ")
              << ")\n";
  }
  return kExitOk;
}

int Mutate(const std::string& sut, const std::vector<std::string>& operators,
           const std::optional<std::vector<std::string>>& targets,
           const std::filesystem::path& out) {
  const geomutate::MutantEngine engine(geomutate::DefaultRegistry(),
                                       geomutate::OperatorCatalog::Standard());
  geomutate::MutantManifest manifest;
  manifest.sut_id = sut;
  manifest.mutants = engine.Enumerate(sut, operators, targets);
  manifest.run_id = geomutate::MakeRunId(sut, operators, targets);
  WriteFile(out, geomutate::ManifestToJson(manifest).dump(2) + "\n");
  std::cout << manifest.mutants.size() << " mutants written to " << out.string()
            << "\n";
  return kExitOk;
}

// Registry whose apps load `fixtures` instead of the bundled data.
std::unique_ptr<geomutate::SutRegistry> RegistryWithFixtures(
    const nlohmann::json& fixtures) {
  auto registry = std::make_unique<geomutate::SutRegistry>();
  if (fixtures.contains("geofences")) {
    auto geofences = geomutate::GeofencesFromJson(fixtures);
    registry->Register(std::string(geomutate::GeofenceApp::kId),
                       geomutate::GeofenceApp::OperationDescriptors(),
                       [geofences](geomutate::WeaveContext& ctx)
                           -> std::unique_ptr<geomutate::Sut> {
                         return std::make_unique<geomutate::GeofenceApp>(ctx, geofences);
                       });
  }
  if (fixtures.contains("parcels")) {
    auto parcels = geomutate::ParcelsFromJson(fixtures);
    registry->Register(std::string(geomutate::ReparcelApp::kId),
                       geomutate::ReparcelApp::OperationDescriptors(),
                       [parcels](geomutate::WeaveContext& ctx)
                           -> std::unique_ptr<geomutate::Sut> {
                         return std::make_unique<geomutate::ReparcelApp>(ctx, parcels);
                       });
  }
  return registry;
}

int Run(const std::filesystem::path& manifest_path, const std::string& suite_name,
        int timeout_ms, int jobs, const std::filesystem::path& out_dir,
        const std::optional<std::filesystem::path>& fixtures) {
  std::unique_ptr<geomutate::SutRegistry> custom;
  if (fixtures) custom = RegistryWithFixtures(ReadJson(*fixtures));
  const geomutate::SutRegistry& registry =
      custom ? *custom : geomutate::DefaultRegistry();

  const geomutate::MutantEngine engine(registry,
                                       geomutate::OperatorCatalog::Standard());
  const auto manifest = geomutate::ManifestFromJson(ReadJson(manifest_path), engine);
  const auto suite = geomutate::BundledSuite(manifest.sut_id, suite_name);
  const geomutate::Harness harness(engine);
  const auto report = harness.Run(manifest, suite,
                                  std::chrono::milliseconds(timeout_ms), jobs);

  const std::string text =
      geomutate::EmitReport(report, geomutate::ReportFormat::kText);
  WriteFile(out_dir / "report.json",
            geomutate::EmitReport(report, geomutate::ReportFormat::kJson));
  WriteFile(out_dir / "report.txt", text);
  std::cout << text;
  return kExitOk;
}

int ShowFixtures(const std::string& sut) {
  if (sut == geomutate::GeofenceApp::kId) {
    std::cout << geomutate::GeofencesToJson(geomutate::GeofenceApp::BundledGeofences())
                     .dump(2)
              << "\n";
  } else if (sut == geomutate::ReparcelApp::kId) {
    std::cout << geomutate::ParcelsToJson(geomutate::ReparcelApp::BundledParcels())
                     .dump(2)
              << "\n";
  } else {
    throw geomutate::Error(ErrorCode::kUnknownSut, "no system under test named '" +
                                                       sut + "'");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutation testing for GIS applications"};
  app.require_subcommand(1);

  std::string format = "text";
  auto* list_ops = app.add_subcommand("list-operators", "List mutation operators");
  list_ops->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string sut;
  auto* list_targets =
      app.add_subcommand("list-targets", "List interceptable operations of a SUT");
  list_targets->add_option("--sut", sut)->required();
  list_targets->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> operators;
  std::vector<std::string> targets;
  std::string out;
  auto* mutate = app.add_subcommand("mutate", "Enumerate mutants into a manifest");
  mutate->add_option("--sut", sut)->required();
  mutate->add_option("--operators", operators, "Operator ids or 'all'")
      ->required()
      ->delimiter(',');
  auto* targets_opt = mutate->add_option("--targets", targets)->delimiter(',');
  mutate->add_option("--out", out, "Manifest path")->required();

  std::string manifest;
  std::string suite;
  std::string fixtures;
  int timeout_ms = static_cast<int>(geomutate::kDefaultTimeout.count());
  int jobs = 1;
  auto* run = app.add_subcommand("run", "Run a suite against every mutant");
  run->add_option("--manifest", manifest)->required();
  run->add_option("--suite", suite, "Bundled suite name (strong, weak)")->required();
  run->add_option("--timeout-ms", timeout_ms)->check(CLI::PositiveNumber);
  run->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  run->add_option("--out", out, "Report directory")->required();
  auto* fixtures_opt =
      run->add_option("--fixtures", fixtures, "Corpus fixture JSON");

  auto* show = app.add_subcommand("show-fixtures", "Print bundled corpus fixtures");
  show->add_option("--sut", sut)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*list_ops) return ListOperators(format);
    if (*list_targets) return ListTargets(sut, format);
    if (*mutate) {
      std::optional<std::vector<std::string>> filter;
      if (*targets_opt) filter = targets;
      return Mutate(sut, operators, filter, out);
    }
    if (*run) {
      std::optional<std::filesystem::path> fixture_path;
      if (*fixtures_opt) fixture_path = fixtures;
      return Run(manifest, suite, timeout_ms, jobs, out, fixture_path);
    }
    if (*show) return ShowFixtures(sut);
  } catch (const geomutate::Error& e) {
    std::cerr << "geomutate: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "geomutate: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
