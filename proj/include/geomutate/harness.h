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

#ifndef GEOMUTATE_HARNESS_H_
#define GEOMUTATE_HARNESS_H_

#include <chrono>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "geomutate/interception.h"
#include "geomutate/mutant_engine.h"
#include "json.hpp"

namespace geomutate {

// Raised by test bodies when an expectation does not hold.
class AssertionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void Expect(bool condition, const std::string& what) {
  if (!condition) throw AssertionFailure(what);
}

// A test body runs against one fresh SUT instance.
struct TestCase {
  std::string name;
  std::function<void(Sut&)> body;
};

// Wraps a body written against a concrete app type.
template <typename App>
TestCase MakeTest(std::string name, std::function<void(App&)> body) {
  return {std::move(name), [body = std::move(body)](Sut& sut) {
            auto* app = dynamic_cast<App*>(&sut);
            Expect(app != nullptr, "test bound to the wrong system under test");
            body(*app);
          }};
}

struct TestSuite {
  std::string name;
  std::string sut_id;
  std::vector<TestCase> tests;
};

enum class TestStatus { kPassed, kFailed, kMutantError };

struct TestResult {
  std::string name;
  TestStatus status = TestStatus::kPassed;
  std::string message;

  friend bool operator==(const TestResult&, const TestResult&) = default;
};

struct BaselineResult {
  std::string sut_id;
  std::vector<TestResult> results;

  bool AllPassed() const;
  friend bool operator==(const BaselineResult&, const BaselineResult&) = default;
};

enum class Verdict { kKilled, kSurvived, kErrorKilled, kTimeout };

std::string_view VerdictName(Verdict v);
Verdict ParseVerdict(std::string_view name);  // throws kMalformedDocument
bool CountsAsKilled(Verdict v);

struct MutantOutcome {
  std::string mutant_id;
  std::string operator_id;
  std::string target;
  Verdict verdict = Verdict::kSurvived;
  std::vector<std::string> failed_tests;
  std::chrono::milliseconds wall_time{0};

  friend bool operator==(const MutantOutcome&, const MutantOutcome&) = default;
};

struct MutationReport {
  std::string run_id;
  std::string sut_id;
  int total = 0;
  int killed = 0;
  int survived = 0;
  double score = 0.0;
  std::vector<MutantOutcome> per_mutant;

  friend bool operator==(const MutationReport&, const MutationReport&) = default;
};

inline constexpr std::chrono::milliseconds kDefaultTimeout{5000};

class Harness {
 public:
  explicit Harness(const MutantEngine& engine) : engine_(engine) {}

  // Runs every test on a fresh, unmutated instance. Throws kBaselineRed when
  // the suite is empty or any test fails.
  BaselineResult RunBaseline(const TestSuite& suite) const;

  // Runs the suite with `m` woven. Tests stop at the first mutant runtime
  // error or once the elapsed time passes `timeout`, checked between tests.
  MutantOutcome RunMutant(Mutant m, const TestSuite& suite,
                          std::chrono::milliseconds timeout) const;

  // Baseline, then every mutant on up to `jobs` workers. Outcomes are in
  // mutant order whatever the completion order.
  MutationReport Run(const MutantManifest& manifest, const TestSuite& suite,
                     std::chrono::milliseconds timeout = kDefaultTimeout,
                     int jobs = 1) const;

 private:
  std::vector<TestResult> Execute(const TestSuite& suite, WeaveContext& ctx,
                                  std::chrono::milliseconds timeout,
                                  bool* timed_out) const;

  const MutantEngine& engine_;
};

// (Killed + ErrorKilled + Timeout) / total. Throws kNoMutants.
double MutationScore(std::span<const MutantOutcome> outcomes);

MutationReport AssembleReport(std::string run_id, std::string sut_id,
                              std::vector<MutantOutcome> outcomes);

enum class ReportFormat { kJson, kText };

std::string EmitReport(const MutationReport& report, ReportFormat format);
nlohmann::json ReportToJson(const MutationReport& report);
// Throws kMalformedDocument.
MutationReport ReportFromJson(const nlohmann::json& doc);

}  // namespace geomutate

#endif  // GEOMUTATE_HARNESS_H_
