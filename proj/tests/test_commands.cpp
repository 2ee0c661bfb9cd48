#include <cmath>

#include <doctest.h>

#include "chernoff/commands.hpp"

using namespace chernoff;

TEST_CASE("default gammas cover the reference grid") {
  const auto& g = default_gammas();
  REQUIRE(g.size() == 4);
  CHECK(g[0] == 0.05);
  CHECK(g[1] == 0.01);
  CHECK(g[2] == 0.000000002);
  CHECK(g[3] == 5.421e-20);
}

TEST_CASE("empty gamma list yields a header-only table") {
  const auto t = cmd_table_tail({}, 200.0, {Method::Exact});
  CHECK(t.rows.empty());
  CHECK(t.columns == std::vector<std::string>{"gamma", "exact dU", "exact dL"});
  CHECK(t.render(TableFormat::Csv) == "gamma,exact dU,exact dL\n");
}

TEST_CASE("table argument validation") {
  CHECK_THROWS_AS(cmd_table_tail({0.05}, -1.0, {Method::Exact}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cmd_table_tail({0.05}, 200.0, {}), std::invalid_argument);
  CHECK_THROWS_AS(cmd_table_ci({0.05}, 212.0, {Method::Classic}),
                  std::invalid_argument);
}

TEST_CASE("digits flag widens table cells") {
  const auto t = cmd_table_tail({0.05}, 200.0, {Method::Pade2}, 6);
  CHECK(t.rows[0][1] == "0.178147");
}

TEST_CASE("infeasible cells render as n/a") {
  // gamma = 1e-3, mu = 2 puts beta below -1: no lower prediction bound.
  const auto t = cmd_table_tail({1e-3}, 2.0, {Method::Exact});
  CHECK(t.rows[0][2] == "n/a");
  CHECK(t.rows[0][1] != "n/a");
}

TEST_CASE("invert record fields and csv schema") {
  CHECK(InvertRecord::csv_header() ==
        "gamma,mu,method,side,delta,endpoint,residual,status");

  const auto rec = cmd_invert(std::log(0.05), 200.0, Mode::Prediction,
                              Method::Pade2, Side::Upper);
  CHECK(rec.status == "ok");
  CHECK(rec.delta == doctest::Approx(0.17814672524741712).epsilon(1e-12));
  CHECK(rec.endpoint == doctest::Approx((1.0 + rec.delta) * 200.0));
  const auto csv = rec.to_csv();
  CHECK(csv.find("pade2,upper,") != std::string::npos);
  CHECK(csv.rfind(",ok") == csv.size() - 3);

  const auto text = rec.to_text(4);
  CHECK(text.find("delta     0.1781\n") != std::string::npos);
}

TEST_CASE("invert record on an infeasible query") {
  const auto rec = cmd_invert(std::log(1e-10), 10.0, Mode::Prediction,
                              Method::Exact, Side::Lower);
  CHECK(rec.status == "infeasible");
  CHECK(std::isnan(rec.delta));
  // Empty delta/endpoint/residual fields in the record row.
  CHECK(rec.to_csv().find(",exact,lower,,,,infeasible") != std::string::npos);
}

TEST_CASE("invert record flags out-of-domain roots") {
  // beta = -1.5: the closed-form lower root exceeds 1.
  const auto rec = cmd_invert(-15.0, 10.0, Mode::Prediction, Method::Pade2,
                              Side::Lower);
  CHECK(rec.status == "out_of_domain");
  CHECK(rec.delta > 1.0);
  CHECK(rec.endpoint < 0.0);
}

TEST_CASE("invert validates mode and side") {
  CHECK_THROWS_AS(cmd_invert(std::log(0.05), 212.0, Mode::Regression,
                             Method::Classic, Side::Upper),
                  std::invalid_argument);
  CHECK_THROWS_AS(cmd_invert(std::log(0.05), 200.0, Mode::Prediction,
                             Method::Exact, Side::TwoSidedAsymmetric),
                  std::invalid_argument);
}

TEST_CASE("verify runs all requested methods on both sides") {
  const auto report =
      cmd_verify(0.05, 2000, 0.1, {Method::Exact, Method::Pade2});
  CHECK(report.checks.size() == 4);
  CHECK(report.all_conservative);
  CHECK(report.infeasible_notes.empty());

  const auto table = verify_table(report);
  REQUIRE(table.rows.size() == 4);
  CHECK(table.rows[0][0] == "exact");
  CHECK(table.rows[0][7] == "yes");
}

TEST_CASE("verify notes sides that admit no bound") {
  // mu = 0.5 makes the lower prediction bound infeasible at gamma = 0.05.
  const auto report = cmd_verify(0.05, 1, 0.5, {Method::Exact});
  CHECK(report.checks.size() == 1);
  CHECK(report.all_conservative);
  REQUIRE(report.infeasible_notes.size() == 1);
  CHECK(report.infeasible_notes[0].find("lower") != std::string::npos);
}

TEST_CASE("verify table marks non-conservative rows") {
  VerifyReport fake;
  fake.all_conservative = false;
  TailCheckReport bad{};
  bad.requested_gamma = 0.05;
  bad.achieved_probability = 0.06;
  bad.conservative = false;
  bad.exact = true;
  bad.side = Side::Upper;
  bad.method = Method::Exact;
  bad.delta = 0.1;
  bad.threshold_real = 220.0;
  bad.threshold_count = 220;
  fake.checks.push_back(bad);
  const auto table = verify_table(fake);
  CHECK(table.rows[0][7] == "NO");
}
