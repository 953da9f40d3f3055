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
#include <chrono>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "geomutate/corpus.h"
#include "geomutate/error.h"
#include "geomutate/harness.h"
#include "geomutate/suites.h"
#include "gtest/gtest.h"

namespace geomutate {
namespace {

using std::chrono::milliseconds;

template <typename Fn>
ErrorCode CodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kUnknownPredicate;
}

const std::vector<std::string> kAll{"all"};

MutantManifest ManifestFor(const MutantEngine& engine, const std::string& sut) {
  return {MakeRunId(sut, kAll, std::nullopt), sut, engine.Enumerate(sut, kAll)};
}

// Outcomes without wall time, for comparisons across runs.
std::vector<std::tuple<std::string, Verdict, std::vector<std::string>>> Stripped(
    const MutationReport& r) {
  std::vector<std::tuple<std::string, Verdict, std::vector<std::string>>> out;
  for (const auto& o : r.per_mutant) out.emplace_back(o.mutant_id, o.verdict, o.failed_tests);
  return out;
}

std::set<std::string> KilledIds(const MutationReport& r) {
  std::set<std::string> ids;
  for (const auto& o : r.per_mutant) {
    if (CountsAsKilled(o.verdict)) ids.insert(o.mutant_id);
  }
  return ids;
}

class HarnessTest : public ::testing::Test {
 protected:
  MutantEngine engine_{DefaultRegistry(), OperatorCatalog::Standard()};
  Harness harness_{engine_};
};

TEST_F(HarnessTest, BundledBaselinesAreGreen) {
  for (const char* sut : {"geofence", "reparcel"}) {
    for (const auto& name : BundledSuiteNames()) {
      const TestSuite suite = BundledSuite(sut, name);
      const BaselineResult b = harness_.RunBaseline(suite);
      EXPECT_TRUE(b.AllPassed()) << sut << "/" << name;
      EXPECT_EQ(b.results.size(), suite.tests.size());
    }
  }
  EXPECT_EQ(CodeOf([] { BundledSuite("reparcel", "medium"); }), ErrorCode::kUnknownSut);
}

TEST_F(HarnessTest, WrongAssertionMakesBaselineRed) {
  TestSuite suite{"wrong", "geofence",
                  {MakeTest<GeofenceApp>("swapped-expectation", [](GeofenceApp& app) {
                    Expect(app.GetFromLocation(43.36, -8.41) == PositionFix{-8.41, 43.36},
                           "expected swapped fix");
                  })}};
  EXPECT_EQ(CodeOf([&] { harness_.RunBaseline(suite); }), ErrorCode::kBaselineRed);
  const auto manifest = ManifestFor(engine_, "geofence");
  EXPECT_EQ(CodeOf([&] { harness_.Run(manifest, suite); }), ErrorCode::kBaselineRed);
}

TEST_F(HarnessTest, EmptySuiteIsRed) {
  TestSuite suite{"empty", "geofence", {}};
  EXPECT_EQ(CodeOf([&] { harness_.RunBaseline(suite); }), ErrorCode::kBaselineRed);
}

TEST_F(HarnessTest, TestBoundToOtherSutFails) {
  TestSuite suite{"mismatch", "geofence",
                  {MakeTest<ReparcelApp>("parcel-test", [](ReparcelApp&) {})}};
  EXPECT_EQ(CodeOf([&] { harness_.RunBaseline(suite); }), ErrorCode::kBaselineRed);
}

TEST_F(HarnessTest, EveryTestGetsAFreshInstance) {
  TestSuite suite{"isolation", "reparcel",
                  {MakeTest<ReparcelApp>("merge", [](ReparcelApp& app) {
                     app.MergeParcels("P1", "P2");
                   }),
                   MakeTest<ReparcelApp>("p1-still-there", [](ReparcelApp& app) {
                     app.Find("P1");
                     Expect(app.parcels().size() == ReparcelApp::BundledParcels().size(),
                            "state leaked between tests");
                   })}};
  EXPECT_TRUE(harness_.RunBaseline(suite).AllPassed());
}

TEST_F(HarnessTest, GeofenceStrongKillsWeakMisses) {
  const auto manifest = ManifestFor(engine_, "geofence");
  const auto strong = harness_.Run(manifest, BundledSuite("geofence", "strong"));
  ASSERT_EQ(strong.total, 1);
  EXPECT_EQ(strong.per_mutant[0].verdict, Verdict::kKilled);
  EXPECT_FALSE(strong.per_mutant[0].failed_tests.empty());
  EXPECT_DOUBLE_EQ(strong.score, 1.0);

  const auto weak = harness_.Run(manifest, BundledSuite("geofence", "weak"));
  EXPECT_EQ(weak.per_mutant[0].verdict, Verdict::kSurvived);
  EXPECT_TRUE(weak.per_mutant[0].failed_tests.empty());
  EXPECT_DOUBLE_EQ(weak.score, 0.0);
}

TEST_F(HarnessTest, ReparcelCounts) {
  const auto report =
      harness_.Run(ManifestFor(engine_, "reparcel"), BundledSuite("reparcel", "strong"));
  EXPECT_EQ(report.total, 10);
  EXPECT_EQ(report.killed + report.survived, report.total);
  EXPECT_GE(report.killed, 1);
  bool merge_killed = false;
  for (const auto& o : report.per_mutant) {
    for (const auto& t : o.failed_tests) merge_killed |= t.starts_with("merge-");
  }
  EXPECT_TRUE(merge_killed);
}

TEST_F(HarnessTest, ThrowingAdviceIsErrorKilled) {
  OperatorCatalog catalog({{"Explode", "always throws",
                            [](const JoinPoint&) -> JoinPoint {
                              throw std::logic_error("boom");
                            },
                            {"getFromLocation"}}});
  MutantEngine engine(DefaultRegistry(), catalog);
  Harness harness(engine);
  const auto report = harness.Run(ManifestFor(engine, "geofence"),
                                  BundledSuite("geofence", "weak"));
  ASSERT_EQ(report.total, 1);
  EXPECT_EQ(report.per_mutant[0].verdict, Verdict::kErrorKilled);
  EXPECT_EQ(report.killed, 1);
}

TEST_F(HarnessTest, SlowSuiteTimesOut) {
  OperatorCatalog catalog({{"Identity", "no change",
                            [](const JoinPoint& jp) { return jp; },
                            {"getFromLocation"}}});
  MutantEngine engine(DefaultRegistry(), catalog);
  Harness harness(engine);
  auto slow = [](GeofenceApp& app) {
    std::this_thread::sleep_for(milliseconds(40));
    app.GetFromLocation(1, 2);
  };
  TestSuite suite{"slow", "geofence",
                  {MakeTest<GeofenceApp>("a", slow), MakeTest<GeofenceApp>("b", slow),
                   MakeTest<GeofenceApp>("c", slow)}};
  const auto report = harness.Run(ManifestFor(engine, "geofence"), suite, milliseconds(10));
  EXPECT_EQ(report.per_mutant[0].verdict, Verdict::kTimeout);
  EXPECT_LT(report.per_mutant[0].wall_time, milliseconds(110));

  const auto relaxed = harness.Run(ManifestFor(engine, "geofence"), suite, milliseconds(5000));
  EXPECT_EQ(relaxed.per_mutant[0].verdict, Verdict::kSurvived);
}

TEST_F(HarnessTest, SuiteForOtherSutIsRejected) {
  EXPECT_EQ(CodeOf([&] {
              harness_.Run(ManifestFor(engine_, "geofence"),
                           BundledSuite("reparcel", "strong"));
            }),
            ErrorCode::kUnknownSut);
  MutantManifest empty{"r", "geofence", {}};
  EXPECT_EQ(CodeOf([&] { harness_.Run(empty, BundledSuite("geofence", "strong")); }),
            ErrorCode::kNoMutants);
}

MutantOutcome Outcome(Verdict v) { return {"M", "op", "t", v, {}, milliseconds(0)}; }

TEST(MutationScoreTest, Examples) {
  const std::vector<MutantOutcome> mixed{Outcome(Verdict::kKilled), Outcome(Verdict::kKilled),
                                         Outcome(Verdict::kErrorKilled),
                                         Outcome(Verdict::kSurvived)};
  EXPECT_DOUBLE_EQ(MutationScore(mixed), 0.75);
  const std::vector<MutantOutcome> none{Outcome(Verdict::kSurvived),
                                        Outcome(Verdict::kSurvived)};
  EXPECT_DOUBLE_EQ(MutationScore(none), 0.0);
  const std::vector<MutantOutcome> timeout{Outcome(Verdict::kTimeout)};
  EXPECT_DOUBLE_EQ(MutationScore(timeout), 1.0);
  EXPECT_EQ(CodeOf([] { MutationScore({}); }), ErrorCode::kNoMutants);
}

TEST(MutationScoreTest, TextFooter) {
  const auto report =
      AssembleReport("r", "reparcel",
                     {Outcome(Verdict::kKilled), Outcome(Verdict::kKilled),
                      Outcome(Verdict::kErrorKilled), Outcome(Verdict::kSurvived)});
  EXPECT_EQ(report.killed, 3);
  EXPECT_EQ(report.survived, 1);
  const std::string text = EmitReport(report, ReportFormat::kText);
  EXPECT_TRUE(text.ends_with("mutation score: 0.75\n")) << text;
  EXPECT_NE(text.find("killed: 3  survived: 1  total: 4"), std::string::npos);
}

TEST_F(HarnessTest, JsonRoundTrip) {
  const auto report =
      harness_.Run(ManifestFor(engine_, "reparcel"), BundledSuite("reparcel", "strong"));
  const auto doc = nlohmann::json::parse(EmitReport(report, ReportFormat::kJson));
  EXPECT_EQ(ReportFromJson(doc), report);

  nlohmann::json bad = doc;
  bad["killed"] = 0;
  EXPECT_EQ(CodeOf([&] { ReportFromJson(bad); }), ErrorCode::kMalformedDocument);
  bad = doc;
  bad["mutants"][0]["verdict"] = "Wounded";
  EXPECT_EQ(CodeOf([&] { ReportFromJson(bad); }), ErrorCode::kMalformedDocument);
}

TEST_F(HarnessTest, DeterministicAndOrderIndependent) {
  const auto manifest = ManifestFor(engine_, "reparcel");
  const TestSuite suite = BundledSuite("reparcel", "strong");
  const auto before = harness_.RunBaseline(suite);
  const auto serial = harness_.Run(manifest, suite);
  const auto again = harness_.Run(manifest, suite);
  const auto parallel = harness_.Run(manifest, suite, kDefaultTimeout, 4);
  EXPECT_EQ(Stripped(serial), Stripped(again));
  EXPECT_EQ(Stripped(serial), Stripped(parallel));
  EXPECT_EQ(harness_.RunBaseline(suite), before);
}

TEST_F(HarnessTest, AddingTestsNeverRevivesAMutant) {
  const auto manifest = ManifestFor(engine_, "reparcel");
  const TestSuite weak = BundledSuite("reparcel", "weak");
  const TestSuite strong = BundledSuite("reparcel", "strong");
  const auto base = KilledIds(harness_.Run(manifest, weak));
  for (const auto& extra : strong.tests) {
    TestSuite grown = weak;
    grown.tests.push_back(extra);
    const auto killed = KilledIds(harness_.Run(manifest, grown));
    EXPECT_TRUE(std::includes(killed.begin(), killed.end(), base.begin(), base.end()))
        << extra.name;
  }
}

}  // namespace
}  // namespace geomutate
