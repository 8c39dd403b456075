// Copyright 2026 The PSMRLab Authors. All rights reserved.
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

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "psmrlab/catalog.h"
#include "psmrlab/design.h"
#include "psmrlab/error.h"
#include "psmrlab/experiment.h"
#include "psmrlab/game_io.h"

namespace psmrlab {
namespace {

using nlohmann::json;

TEST_SUITE("cli-lab") {

TEST_CASE("catalog ids and provenance") {
  std::vector<GameCatalogEntry> all = Catalog();
  std::set<std::string> ids;
  for (const GameCatalogEntry& e : all) {
    ids.insert(e.id);
    CHECK_FALSE(e.provenance.empty());
    CHECK(e.game.num_x() == 2);
    CHECK(e.game.num_y() == 2);
  }
  CHECK(ids == std::set<std::string>{"sec4-ex1", "sec4-ex2", "remark1",
                                     "appendixC-A", "appendixC-B",
                                     "matching-pennies"});
  CHECK_THROWS_AS(FindCatalogEntry("nope"), InvalidArgumentError);
  CHECK_THROWS_AS(Catalog(0.0), InvalidArgumentError);
  CHECK(FindCatalogEntry("sec4-ex1", 0.1).game.a()(1, 1) == -0.1);
}

TEST_CASE("catalog games round-trip through json") {
  for (const GameCatalogEntry& e : Catalog(0.3)) {
    CAPTURE(e.id);
    BilinearGame back = ParseGame(SerializeGame(e.game));
    CHECK(back.a() == e.game.a());
    CHECK(back.type() == e.game.type());
  }
}

TEST_CASE("analysis report fields") {
  for (const GameCatalogEntry& e : Catalog()) {
    CAPTURE(e.id);
    json j = AnalysisToJson(e.game);
    CHECK(j["num_x"] == 2);
    CHECK(j["equilibrium"]["v_mix"].get<double>() >=
          j["equilibrium"]["v_star"].get<double>() - 1e-12);
    CHECK(j["gaps"]["delta_mix"].get<double>() >= 0.0);
    // Round trip through text keeps the report parseable.
    CHECK(json::parse(j.dump()) == j);
  }
  json mp = AnalysisToJson(FindCatalogEntry("matching-pennies").game);
  CHECK(mp["equilibrium"]["v_star"] == -1.0);
  CHECK(std::abs(mp["equilibrium"]["v_mix"].get<double>()) < 1e-12);
  CHECK(mp["equilibrium"]["has_psne"] == false);
  CHECK(mp["gaps"]["anchor"].is_null());
  json ex1 = AnalysisToJson(FindCatalogEntry("sec4-ex1").game);
  CHECK(ex1["equilibrium"]["has_strict_psne"] == true);
  CHECK(ex1["gaps"]["delta_r_min"] == 1.0);
  CHECK(ex1["gaps"]["delta_c_min"] == 1.0);
  json rem = AnalysisToJson(FindCatalogEntry("remark1").game);
  CHECK(rem["equilibrium"]["has_psne"] == true);
  CHECK(rem["equilibrium"]["has_strict_psne"] == false);
}

TEST_CASE("design report") {
  ActionSet basis = ActionSet::StandardBasis(3);
  ExplorationDesign d = KieferWolfowitzDesign(basis);
  json j = DesignToJson(d, basis);
  CHECK(j["support"].size() == 3);
  CHECK(j["c_achieved"].get<double>() == doctest::Approx(1.0));
  CHECK(j["dim"] == 3);
}

TEST_CASE("lower-bound report") {
  LearnerConfig learner;
  LowerBoundReport r =
      RunLowerBound(0.05, 0.05, 2000, {1, 2, 3}, learner, NoiseModel::kTwoPoint);
  CHECK(r.theoretical_scale == doctest::Approx(std::sqrt(2000.0)));
  CHECK(r.num_seeds == 3);
  CHECK(r.max_mean_psmr ==
        std::max(r.arm_a.mean_psmr, r.arm_b.mean_psmr));
  CHECK((r.max_matrix == "A" || r.max_matrix == "B"));
  CHECK_FALSE(r.arm_a.params.use_b);
  CHECK(r.arm_b.params.use_b);
  json j = LowerBoundReportToJson(r);
  CHECK(j["theoretical_scale"].get<double>() == doctest::Approx(std::sqrt(2000.0)));
  CHECK(j["learner"] == "tsallis_inf");
}

TEST_CASE("sweep records precondition failures") {
  LearnerConfig learner;
  SweepReport s = RunLowerBoundSweep({{0.1, 0.1}, {0.05, 0.05}}, 1000, {1, 2},
                                     learner, NoiseModel::kNoiseless);
  REQUIRE(s.entries.size() == 2);
  CHECK(s.entries[0].error.has_value());
  CHECK_FALSE(s.entries[0].report.has_value());
  CHECK(s.entries[1].report.has_value());
  CHECK_FALSE(s.strictly_increasing);
  json j = SweepReportToJson(s);
  CHECK(j["entries"][0].contains("error"));
  CHECK(j["strictly_increasing"] == false);
}

TEST_CASE("curve fit report") {
  std::vector<double> series;
  for (int t = 1; t <= 100; ++t) series.push_back(std::log(t));
  json j = CurveFitToJson(CurveFit(series));
  CHECK(j["winner"] == "log");
  CHECK(j["log"]["b"].get<double>() == doctest::Approx(1.0));
}

}  // TEST_SUITE

}  // namespace
}  // namespace psmrlab
