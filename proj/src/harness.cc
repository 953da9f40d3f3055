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

#include "geomutate/harness.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "geomutate/error.h"

namespace geomutate {
namespace {

using Clock = std::chrono::steady_clock;

TestResult RunOne(const TestCase& test, Sut& sut) {
  try {
    test.body(sut);
    return {test.name, TestStatus::kPassed, ""};
  } catch (const AssertionFailure& e) {
    return {test.name, TestStatus::kFailed, e.what()};
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMutantRuntimeError) {
      return {test.name, TestStatus::kMutantError, e.what()};
    }
    return {test.name, TestStatus::kFailed, e.what()};
  } catch (const std::exception& e) {
    return {test.name, TestStatus::kFailed, e.what()};
  }
}

void CheckSuiteMatches(const TestSuite& suite, const std::string& sut_id) {
  if (suite.sut_id != sut_id) {
    throw Error(ErrorCode::kUnknownSut, "suite '" + suite.name + "' targets " +
                                            suite.sut_id + ", not " + sut_id);
  }
}

}  // namespace

bool BaselineResult::AllPassed() const {
  return std::all_of(results.begin(), results.end(), [](const TestResult& r) {
    return r.status == TestStatus::kPassed;
  });
}

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kKilled: return "Killed";
    case Verdict::kSurvived: return "Survived";
    case Verdict::kErrorKilled: return "ErrorKilled";
    case Verdict::kTimeout: return "Timeout";
  }
  return "Survived";
}

Verdict ParseVerdict(std::string_view name) {
  for (Verdict v : {Verdict::kKilled, Verdict::kSurvived, Verdict::kErrorKilled,
                    Verdict::kTimeout}) {
    if (VerdictName(v) == name) return v;
  }
  throw Error(ErrorCode::kMalformedDocument,
              "unknown verdict '" + std::string(name) + "'");
}

bool CountsAsKilled(Verdict v) { return v != Verdict::kSurvived; }

std::vector<TestResult> Harness::Execute(const TestSuite& suite,
                                         WeaveContext& ctx,
                                         std::chrono::milliseconds timeout,
                                         bool* timed_out) const {
  const auto start = Clock::now();
  std::vector<TestResult> results;
  for (const TestCase& test : suite.tests) {
    const auto sut = engine_.registry().Create(suite.sut_id, ctx);
    results.push_back(RunOne(test, *sut));
    if (results.back().status == TestStatus::kMutantError) break;
    if (timed_out != nullptr && Clock::now() - start > timeout) {
      *timed_out = true;
      break;
    }
  }
  return results;
}

BaselineResult Harness::RunBaseline(const TestSuite& suite) const {
  if (suite.tests.empty()) {
    throw Error(ErrorCode::kBaselineRed, "suite '" + suite.name + "' is empty");
  }
  WeaveContext ctx(engine_.registry());
  BaselineResult baseline{suite.sut_id,
                          Execute(suite, ctx, std::chrono::milliseconds::max(),
                                  nullptr)};
  if (!baseline.AllPassed()) {
    std::string failed;
    for (const auto& r : baseline.results) {
      if (r.status != TestStatus::kPassed) {
        failed += (failed.empty() ? "" : ", ") + r.name + " (" + r.message + ")";
      }
    }
    throw Error(ErrorCode::kBaselineRed,
                "suite '" + suite.name + "' fails unmutated: " + failed);
  }
  return baseline;
}

MutantOutcome Harness::RunMutant(Mutant m, const TestSuite& suite,
                                 std::chrono::milliseconds timeout) const {
  CheckSuiteMatches(suite, m.sut_id);
  const auto start = Clock::now();
  WeaveContext ctx(engine_.registry());
  m.status = MutantStatus::kPending;
  m.handle.reset();
  engine_.Activate(m, ctx);
  bool timed_out = false;
  const std::vector<TestResult> results = Execute(suite, ctx, timeout, &timed_out);
  engine_.Deactivate(m, ctx);

  MutantOutcome outcome;
  outcome.mutant_id = m.id;
  outcome.operator_id = m.operator_id;
  outcome.target = m.target_operation.name;
  bool mutant_error = false;
  for (const auto& r : results) {
    if (r.status == TestStatus::kFailed) outcome.failed_tests.push_back(r.name);
    if (r.status == TestStatus::kMutantError) mutant_error = true;
  }
  if (!outcome.failed_tests.empty()) {
    outcome.verdict = Verdict::kKilled;
  } else if (mutant_error) {
    outcome.verdict = Verdict::kErrorKilled;
  } else if (timed_out) {
    outcome.verdict = Verdict::kTimeout;
  } else {
    outcome.verdict = Verdict::kSurvived;
  }
  outcome.wall_time =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return outcome;
}

MutationReport Harness::Run(const MutantManifest& manifest,
                            const TestSuite& suite,
                            std::chrono::milliseconds timeout, int jobs) const {
  if (manifest.mutants.empty()) {
    throw Error(ErrorCode::kNoMutants, "manifest " + manifest.run_id +
                                           " lists no mutants");
  }
  CheckSuiteMatches(suite, manifest.sut_id);
  RunBaseline(suite);

  const std::size_t n = manifest.mutants.size();
  std::vector<MutantOutcome> outcomes(n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        outcomes[i] = RunMutant(manifest.mutants[i], suite, timeout);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const auto workers =
      static_cast<std::size_t>(std::clamp<std::size_t>(jobs < 1 ? 1 : jobs, 1, n));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return AssembleReport(manifest.run_id, manifest.sut_id, std::move(outcomes));
}

double MutationScore(std::span<const MutantOutcome> outcomes) {
  if (outcomes.empty()) {
    throw Error(ErrorCode::kNoMutants, "no outcomes to score");
  }
  const auto killed = std::count_if(
      outcomes.begin(), outcomes.end(),
      [](const MutantOutcome& o) { return CountsAsKilled(o.verdict); });
  return static_cast<double>(killed) / static_cast<double>(outcomes.size());
}

MutationReport AssembleReport(std::string run_id, std::string sut_id,
                              std::vector<MutantOutcome> outcomes) {
  MutationReport r;
  r.run_id = std::move(run_id);
  r.sut_id = std::move(sut_id);
  r.score = MutationScore(outcomes);
  r.total = static_cast<int>(outcomes.size());
  for (const auto& o : outcomes) {
    (CountsAsKilled(o.verdict) ? r.killed : r.survived)++;
  }
  r.per_mutant = std::move(outcomes);
  return r;
}

nlohmann::json ReportToJson(const MutationReport& report) {
  nlohmann::json mutants = nlohmann::json::array();
  for (const auto& o : report.per_mutant) {
    mutants.push_back({{"id", o.mutant_id},
                       {"operator", o.operator_id},
                       {"target", o.target},
                       {"verdict", VerdictName(o.verdict)},
                       {"failedTests", o.failed_tests},
                       {"wallTimeMs", o.wall_time.count()}});
  }
  return {{"run", report.run_id},     {"sut", report.sut_id},
          {"total", report.total},    {"killed", report.killed},
          {"survived", report.survived}, {"score", report.score},
          {"mutants", mutants}};
}

MutationReport ReportFromJson(const nlohmann::json& doc) {
  try {
    MutationReport r;
    r.run_id = doc.at("run").get<std::string>();
    r.sut_id = doc.at("sut").get<std::string>();
    r.total = doc.at("total").get<int>();
    r.killed = doc.at("killed").get<int>();
    r.survived = doc.at("survived").get<int>();
    r.score = doc.at("score").get<double>();
    for (const auto& m : doc.at("mutants")) {
      MutantOutcome o;
      o.mutant_id = m.at("id").get<std::string>();
      o.operator_id = m.at("operator").get<std::string>();
      o.target = m.at("target").get<std::string>();
      o.verdict = ParseVerdict(m.at("verdict").get<std::string>());
      o.failed_tests = m.at("failedTests").get<std::vector<std::string>>();
      o.wall_time = std::chrono::milliseconds(m.at("wallTimeMs").get<long long>());
      r.per_mutant.push_back(std::move(o));
    }
    if (r.killed + r.survived != r.total ||
        r.total != static_cast<int>(r.per_mutant.size())) {
      throw Error(ErrorCode::kMalformedDocument, "report counts do not add up");
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kMalformedDocument, std::string("report: ") + e.what());
  }
}

std::string EmitReport(const MutationReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) return ReportToJson(report).dump(2) + "\n";

  std::size_t w_id = 2, w_op = 8, w_target = 6, w_verdict = 7;
  for (const auto& o : report.per_mutant) {
    w_id = std::max(w_id, o.mutant_id.size());
    w_op = std::max(w_op, o.operator_id.size());
    w_target = std::max(w_target, o.target.size());
    w_verdict = std::max(w_verdict, VerdictName(o.verdict).size());
  }
  std::ostringstream out;
  out << "run: " << report.run_id << "  sut: " << report.sut_id << "\n";
  auto row = [&](std::string_view id, std::string_view op, std::string_view target,
                 std::string_view verdict, std::string_view ms,
                 std::string_view failed) {
    out << std::left << std::setw(static_cast<int>(w_id)) << id << "  "
        << std::setw(static_cast<int>(w_op)) << op << "  "
        << std::setw(static_cast<int>(w_target)) << target << "  "
        << std::setw(static_cast<int>(w_verdict)) << verdict << "  "
        << std::right << std::setw(7) << ms;
    if (!failed.empty()) out << "  " << failed;
    out << "\n";
  };
  row("id", "operator", "target", "verdict", "wall_ms", "failed tests");
  for (const auto& o : report.per_mutant) {
    std::string failed;
    for (const auto& t : o.failed_tests) failed += (failed.empty() ? "" : ", ") + t;
    row(o.mutant_id, o.operator_id, o.target, VerdictName(o.verdict),
        std::to_string(o.wall_time.count()), failed);
  }
  out << "killed: " << report.killed << "  survived: " << report.survived
      << "  total: " << report.total << "\n";
  out << "mutation score: " << std::fixed << std::setprecision(2) << report.score
      << "\n";
  return out.str();
}

}  // namespace geomutate
