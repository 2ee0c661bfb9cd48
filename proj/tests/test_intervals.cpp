#include <cmath>

#include <doctest.h>

#include "chernoff/intervals.hpp"
#include "chernoff/table.hpp"

using namespace chernoff;

namespace {

double width(const IntervalResult& r) {
  return r.upper_endpoint - r.lower_endpoint;
}

}  // namespace

TEST_CASE("query validation") {
  CHECK_THROWS_AS(BoundQuery::prediction(0.0, 200.0, Method::Exact, Side::Upper),
                  std::invalid_argument);
  CHECK_THROWS_AS(BoundQuery::prediction(1.0, 200.0, Method::Exact, Side::Upper),
                  std::invalid_argument);
  CHECK_THROWS_AS(BoundQuery::prediction(0.05, 0.0, Method::Exact, Side::Upper),
                  std::invalid_argument);
  CHECK_THROWS_AS(BoundQuery::regression(0.05, 0.0, Method::Exact, Side::Upper),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      BoundQuery::regression(0.05, 212.0, Method::Classic, Side::Upper),
      std::invalid_argument);
  CHECK_THROWS_AS(
      tail_bounds(BoundQuery::regression(0.05, 212.0, Method::Exact, Side::Upper)),
      std::invalid_argument);
  CHECK_THROWS_AS(confidence_interval(BoundQuery::prediction(0.05, 200.0,
                                                             Method::Exact,
                                                             Side::Upper)),
                  std::invalid_argument);
}

TEST_CASE("one-sided tail bound composes the inversion") {
  const auto r = tail_bounds(
      BoundQuery::prediction(0.000000002, 200.0, Method::Exact, Side::Upper));
  REQUIRE(r.delta_u.has_value());
  CHECK(format_sig(r.delta_u->delta, 4) == "0.4798");
  CHECK_FALSE(r.delta_l.has_value());
  CHECK(std::isinf(r.lower_endpoint));
  CHECK(r.lower_endpoint < 0.0);
  CHECK(r.confidence == doctest::Approx(1.0 - 2e-9));
  CHECK_FALSE(r.lower_count.has_value());
  REQUIRE(r.upper_count.has_value());
  CHECK(*r.upper_count == 296);  // ceil((1 + 0.47984...) * 200)
}

TEST_CASE("pass-through composition at gamma = 1/2") {
  const auto r = tail_bounds(
      BoundQuery::prediction(0.5, 200.0, Method::Pade2, Side::Upper));
  const DeltaResult direct =
      invert_pade2_prediction(ExponentKind::PredUpper, std::log(0.5) / 200.0);
  CHECK(r.delta_u->delta == direct.delta);
  CHECK(r.confidence == doctest::Approx(0.5));
}

TEST_CASE("two-sided prediction bound at the extreme level") {
  const auto r = tail_bounds(BoundQuery::prediction(
      5.421e-20, 200.0, Method::Pade2, Side::TwoSidedAsymmetric));
  REQUIRE(r.delta_u.has_value());
  REQUIRE(r.delta_l.has_value());
  CHECK(format_sig(r.delta_u->delta, 4) == "0.7441");
  CHECK(format_sig(r.delta_l->delta, 4) == "0.5898");
  CHECK(r.upper_endpoint == doctest::Approx(348.814).epsilon(1e-5));
  CHECK(r.lower_endpoint == doctest::Approx(82.0455).epsilon(1e-5));
  // Conservative tail-event thresholds round outward.
  CHECK(*r.upper_count == 349);
  CHECK(*r.lower_count == 82);
  CHECK(r.lower_endpoint < r.upper_endpoint);
  CHECK(r.confidence == doctest::Approx(1.0));
}

TEST_CASE("large mu gives a tiny deviation") {
  const auto r = tail_bounds(
      BoundQuery::prediction(0.5, 1e12, Method::Pade2, Side::Upper));
  CHECK(r.delta_u->delta > 0.0);
  CHECK(r.delta_u->delta < 1e-5);
  CHECK(r.upper_endpoint > 1e12);
}

TEST_CASE("confidence interval reproduces the reference row") {
  const auto r = confidence_interval(BoundQuery::regression(
      0.05, 212.0, Method::Pade2, Side::TwoSidedAsymmetric));
  CHECK(format_sig(r.delta_u->delta, 4) == "0.1778");
  CHECK(format_sig(r.delta_l->delta, 4) == "0.1588");
  CHECK(format_sig(r.lower_endpoint, 4) == "178.3");
  CHECK(format_sig(r.upper_endpoint, 4) == "249.7");
  CHECK(r.confidence == doctest::Approx(0.90));
  CHECK(r.mode == Mode::Regression);
}

TEST_CASE("one-sided regression upper bound at the extreme level") {
  const auto r = confidence_interval(
      BoundQuery::regression(5.421e-20, 212.0, Method::Exact, Side::Upper));
  CHECK(format_sig(r.delta_u->delta, 4) == "0.7933");
  CHECK(r.confidence == doctest::Approx(1.0));
}

TEST_CASE("symmetric interval uses the upper factor on both sides") {
  const auto sym = confidence_interval(BoundQuery::regression(
      0.05, 212.0, Method::Pade2, Side::TwoSidedSymmetric));
  REQUIRE(sym.delta_l.has_value());
  CHECK(sym.delta_l->delta == sym.delta_u->delta);
  CHECK(format_sig(sym.delta_u->delta, 4) == "0.1778");
  CHECK(sym.lower_endpoint ==
        doctest::Approx((1.0 - sym.delta_u->delta) * 212.0));

  // ... and therefore contains the asymmetric interval.
  const auto asym = confidence_interval(BoundQuery::regression(
      0.05, 212.0, Method::Pade2, Side::TwoSidedAsymmetric));
  CHECK(sym.lower_endpoint <= asym.lower_endpoint);
  CHECK(sym.upper_endpoint == asym.upper_endpoint);
}

TEST_CASE("interval width shrinks from classic to exact") {
  const std::vector<Method> order = {Method::Classic, Method::Pade2,
                                     Method::Pade3, Method::Pade4,
                                     Method::Exact};
  for (double gamma : {0.05, 0.01, 2e-9}) {
    double prev = std::numeric_limits<double>::infinity();
    for (Method m : order) {
      const auto r = tail_bounds(BoundQuery::prediction(
          gamma, 200.0, m, Side::TwoSidedAsymmetric));
      REQUIRE(width(r) <= prev);
      prev = width(r);
    }
  }
}

TEST_CASE("intervals nest as gamma grows") {
  const auto wide = confidence_interval(BoundQuery::regression(
      0.01, 212.0, Method::Exact, Side::TwoSidedAsymmetric));
  const auto narrow = confidence_interval(BoundQuery::regression(
      0.05, 212.0, Method::Exact, Side::TwoSidedAsymmetric));
  CHECK(wide.lower_endpoint <= narrow.lower_endpoint);
  CHECK(wide.upper_endpoint >= narrow.upper_endpoint);
}

TEST_CASE("beta is scale invariant") {
  const auto base = tail_bounds(BoundQuery::prediction(
      0.05, 200.0, Method::Pade2, Side::TwoSidedAsymmetric));
  const auto scaled = tail_bounds(BoundQuery::prediction(
      0.05 * 0.05, 400.0, Method::Pade2, Side::TwoSidedAsymmetric));
  CHECK(scaled.delta_u->delta ==
        doctest::Approx(base.delta_u->delta).epsilon(1e-13));
  CHECK(scaled.delta_l->delta ==
        doctest::Approx(base.delta_l->delta).epsilon(1e-13));
}

TEST_CASE("log-level queries dodge underflow") {
  // gamma = exp(-2000) is far below the smallest positive double.
  const auto q = BoundQuery::prediction_log(-2000.0, 4000.0, Method::Pade2,
                                            Side::Upper);
  const auto r = tail_bounds(q);
  CHECK(q.gamma == 0.0);
  CHECK(r.delta_u->delta > 0.0);
  CHECK(r.confidence == 1.0);
}

TEST_CASE("exceptional mean range equals the exact interval") {
  const auto [lo, hi] = exceptional_mu_range(0.05, 212.0);
  CHECK(lo == doctest::Approx(178.328810804085506).epsilon(1e-12));
  CHECK(hi == doctest::Approx(249.664245172604625).epsilon(1e-12));

  for (double gamma : {0.05, 0.01, 0.2}) {
    const auto [l2, h2] = exceptional_mu_range(gamma, 212.0);
    const auto ci = confidence_interval(BoundQuery::regression(
        gamma, 212.0, Method::Exact, Side::TwoSidedAsymmetric));
    CHECK(l2 == doctest::Approx(ci.lower_endpoint).epsilon(1e-9));
    CHECK(h2 == doctest::Approx(ci.upper_endpoint).epsilon(1e-9));
  }

  // gamma -> 1- collapses the range onto the observation.
  const auto [l1, h1] = exceptional_mu_range(0.999999, 212.0);
  CHECK(l1 == doctest::Approx(212.0).epsilon(1e-3));
  CHECK(h1 == doctest::Approx(212.0).epsilon(1e-3));
}

TEST_CASE("infeasible lower side is annotated") {
  // beta = log(gamma)/mu = -2.3 for the lower prediction tail.
  try {
    tail_bounds(BoundQuery::prediction(1e-10, 10.0, Method::Exact, Side::Lower));
    FAIL("expected infeasible_error");
  } catch (const infeasible_error& e) {
    CHECK(std::string(e.what()).find("lower side") != std::string::npos);
  }
}
