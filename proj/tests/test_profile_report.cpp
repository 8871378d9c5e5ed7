#include <doctest.h>

#include <cmath>

#include "mc/profile.hpp"
#include "mc/report.hpp"
#include "mc/types.hpp"
#include "profile_fixture.hpp"

namespace {

std::vector<mc::TimingRecord> records(const char* text) { return mc::parse_timing_csv(text); }

}  // namespace

TEST_CASE("timing csv parsing") {
  const auto r = records("# bench\nproblem,config,seconds\ng1, fast ,0.5\ng1,slow,DNF\n");
  REQUIRE(r.size() == 2);
  CHECK(r[0].config == "fast");
  CHECK(r[0].seconds == 0.5);
  CHECK_FALSE(r[1].seconds.has_value());

  try {
    records("g1,a,1\ng2,a\n");
    FAIL("no error");
  } catch (const mc::input_error& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(records("g1,a,fast\n"), mc::input_error);
  CHECK_THROWS_AS(records("g1,a,0\n"), mc::input_error);
  CHECK_THROWS_AS(records("g1,a,-2\n"), mc::input_error);
}

TEST_CASE("profile examples") {
  SUBCASE("one config") {
    const auto curves = mc::performance_profile(records("g1,only,3\ng2,only,7\ng3,only,DNF\n"));
    REQUIRE(curves.size() == 1);
    REQUIRE(curves[0].points.size() == 1);
    CHECK(curves[0].points[0].tau == 0.0);
    CHECK(curves[0].points[0].solved == 2);
    CHECK(curves[0].points[0].total == 3);
  }
  SUBCASE("four times slower reaches one at tau two") {
    const auto curves =
        mc::performance_profile(records("g1,A,4\ng1,B,1\ng2,A,0.8\ng2,B,0.2\ng3,A,12\ng3,B,3\n"));
    REQUIRE(curves.size() == 2);
    const auto& a = curves[0];
    CHECK(a.config == "A");
    REQUIRE(a.points.size() == 2);
    CHECK(a.points[0].fraction == 0.0);
    CHECK(a.points[1].tau == doctest::Approx(2.0));
    CHECK(a.points[1].fraction == 1.0);
    CHECK(curves[1].points[0].fraction == 1.0);
  }
  SUBCASE("mismatched problem sets name the gap") {
    try {
      mc::performance_profile(records("g1,A,1\ng2,A,1\ng1,B,1\n"));
      FAIL("no error");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()) == "config B has no record for: g2");
    }
    CHECK_THROWS_AS(mc::performance_profile(records("g1,A,1\ng1,A,2\n")), std::invalid_argument);
  }
  SUBCASE("no records") { CHECK(mc::performance_profile({}).empty()); }
}

TEST_CASE("three-config fixture matches the hand-computed table") {
  const auto curves = mc::performance_profile(records(support::kProfileFixture));
  const auto expected = support::profile_fixture_expected();
  REQUIRE(curves.size() == expected.size());
  for (std::size_t c = 0; c < curves.size(); ++c) {
    CHECK(curves[c].config == expected[c].config);
    REQUIRE(curves[c].points.size() == expected[c].points.size());
    for (std::size_t i = 0; i < expected[c].points.size(); ++i) {
      CHECK(curves[c].points[i].tau == expected[c].points[i].first);
      CHECK(curves[c].points[i].fraction == expected[c].points[i].second);
    }
  }
  const auto csv = mc::profile_csv(curves);
  CHECK(csv.rfind("config,tau,fraction\nA,0,0.5\nA,1,0.59999999999999998\n", 0) == 0);
}

TEST_CASE("profile curves are monotone fractions") {
  std::uint64_t state = 11;
  auto next = [&] { return state = state * 6364136223846793005ULL + 1442695040888963407ULL; };
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<mc::TimingRecord> rs;
    const int problems = 1 + static_cast<int>(next() >> 60);
    for (int p = 0; p < problems; ++p) {
      for (const char* config : {"x", "y", "z"}) {
        std::optional<double> t;
        if ((next() >> 61) != 0) t = 0.01 * static_cast<double>(1 + (next() >> 54));
        rs.push_back({"p" + std::to_string(p), config, t});
      }
    }
    for (const auto& curve : mc::performance_profile(rs)) {
      double last_tau = -1.0, last_fraction = 0.0;
      for (const auto& pt : curve.points) {
        CHECK(pt.tau > last_tau);
        CHECK(pt.fraction >= last_fraction);
        CHECK(pt.fraction >= 0.0);
        CHECK(pt.fraction <= 1.0);
        last_tau = pt.tau;
        last_fraction = pt.fraction;
      }
    }
  }
}

TEST_CASE("report json and invariants") {
  mc::RunReport r;
  r.command = "maxclique";
  r.input = "g.txt";
  r.format = "edges";
  r.n = 5;
  r.m = 10;
  r.degeneracy = 4;
  r.coloring_bound = 5;
  r.upper_bound = 5;
  r.heuristic_size = 5;
  r.clique_size = 5;
  r.members = {"1", "2", "3", "4", "5"};
  r.config = mc::SearchConfig{};
  r.stats = mc::SearchStats{};
  r.tasks = mc::TaskStats{};
  CHECK(mc::report_violations(r).empty());

  const auto j = mc::to_json(r);
  CHECK(j["schema_version"] == mc::kReportSchemaVersion);
  CHECK(j["clique_size"] == 5);
  CHECK(j["members"].size() == 5);
  CHECK(j.contains("stats"));
  CHECK_FALSE(j.contains("temporal"));
  CHECK_FALSE(j.contains("core_sizes"));
  CHECK(mc::render_human(r).find("maximum clique 5: 1 2 3 4 5") != std::string::npos);

  SUBCASE("heuristic above clique") {
    r.heuristic_size = 6;
    CHECK(mc::report_violations(r).size() == 1);
  }
  SUBCASE("clique above the coloring bound and the core bound") {
    r.clique_size = 6;
    r.members.push_back("6");
    CHECK(mc::report_violations(r).size() == 2);
  }
  SUBCASE("member count") {
    r.members.pop_back();
    CHECK(mc::report_violations(r).size() == 1);
  }
  SUBCASE("fields that are absent are not checked") {
    mc::RunReport k;
    k.command = "kcore";
    k.degeneracy = 0;
    CHECK(mc::report_violations(k).empty());
    CHECK_FALSE(mc::to_json(k).contains("members"));
  }
}
