#include <doctest.h>

#include "hk/errors.hpp"
#include "hk/graph.hpp"
#include "hk/report.hpp"
#include "hk/suites.hpp"

using namespace hk;

namespace {

  void check_round_trip(Json const& j) {
    std::string const text = render(j);
    CHECK(render(Json::parse(text)) == text);
  }

}  // namespace

TEST_CASE("graph report JSON") {
  auto const g = parse_graph("1 -> 2\n2 -> 3\n3 -> 1\n3 -> 4");
  auto const j = to_json(g, analyse(g));
  CHECK(j["is_pi"] == true);
  CHECK(j["is_noetherian"] == false);
  CHECK(j["cycle_arrows"].size() == 3);
  CHECK(j["theta_prime"][1]["kind"] == "singleton");
  check_round_trip(j);
}

TEST_CASE("structure report JSON") {
  auto const r = structure_report(3, 0);
  auto const j = to_json(r);
  CHECK(j["A_size"] == 3);
  CHECK(j["A"] == Json::array({"1", "x1", "x2 x1"}));
  CHECK(j["B"] == Json::array({"1", "x3", "x3 x2"}));
  CHECK(j["sandwich"]["entries"][0][2] == "theta");
  CHECK(j["sandwich"]["entries"][2][2] == Json{{"power", 1}});
  CHECK(j["determinant"] == Json::array({0, -1, -1}));
  CHECK(j["quotient_ring_shape"] == Json::array({3, 3}));
  check_round_trip(j);
  CHECK_THROWS_AS(structure_report(9, 0), LayerOutOfRange);
  CHECK_THROWS_AS(structure_report(3, 2), LayerOutOfRange);
}

TEST_CASE("large coefficients are strings") {
  Poly const big = Poly::constant(mpz_class("123456789012345678901234567890"));
  CHECK(to_json(big) == Json::array({"123456789012345678901234567890"}));
  check_round_trip(to_json(big));
}

TEST_CASE("radical report") {
  auto const g = parse_graph("1 -> 2\n2 -> 3\n3 -> 1\n3 -> 4");
  auto const r = radical_report(g, parse_element("1*x3 x4 - 1*x4 x3 + 2*x1", g));
  CHECK_FALSE(r.member);
  REQUIRE(r.classes.size() == 1);
  CHECK(r.classes[0].second == 2);
  auto const j = to_json(g, r);
  CHECK(j["member"] == false);
  CHECK(j["rho_generators"] == Json::array({Json::array({"x3 x4", "x4 x3"})}));
  check_round_trip(j);
  CHECK(to_text(g, r).find("in I(rho): no") != std::string::npos);
}

TEST_CASE("suite results") {
  RunConfig config;
  config.max_n = 5;
  std::vector<CheckResult> results{run_criterion(2, config), run_criterion(9, config)};
  for (auto const& r : results) {
    CHECK(r.passed);
    CHECK(r.failures == 0);
  }
  auto const j = to_json(config, results);
  CHECK(j["passed"] == true);
  CHECK(j["results"].size() == 2);
  check_round_trip(j);
  CHECK(to_text(results).find("PASS criterion 2") != std::string::npos);
}

TEST_CASE("run configuration") {
  RunConfig config;
  CHECK_NOTHROW(config.validate());
  config.max_n = 13;
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  config.max_n = 5;
  config.set_all_caps(0);
  CHECK_THROWS_AS(config.validate(), std::invalid_argument);
  CHECK_THROWS_AS(run_criterion(11, RunConfig{}), std::out_of_range);
}

TEST_CASE("empty range fails rather than passing vacuously") {
  RunConfig config;
  config.min_n = 8;
  auto const r = run_criterion(3, config);
  CHECK_FALSE(r.passed);
  CHECK(r.checks == 0);
}

TEST_CASE("degenerate caps fail the confluence suite") {
  RunConfig config;
  config.max_n = 3;
  config.set_all_caps(1);
  auto const r = run_criterion(4, config);
  CHECK_FALSE(r.passed);
  CHECK(r.detail.find("Unknown") != std::string::npos);
}
