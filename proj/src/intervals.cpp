#include "chernoff/intervals.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "chernoff/exponents.hpp"

namespace chernoff {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_common(double log_gamma, double mu, Mode mode, Method method) {
  if (!(log_gamma < 0.0) || !std::isfinite(log_gamma)) {
    throw std::invalid_argument("gamma must lie strictly in (0, 1)");
  }
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw std::invalid_argument(std::string(mode == Mode::Prediction ? "mu" : "mu_hat") +
                                " must be a positive finite real");
  }
  if (mode == Mode::Regression && method == Method::Classic) {
    throw std::invalid_argument(
        "no classical quadratic bound exists in regression mode; "
        "use exact or a pade method");
  }
}

BoundQuery make_query(double log_gamma, double mu, Mode mode, Method method,
                      Side side) {
  validate_common(log_gamma, mu, mode, method);
  BoundQuery q;
  q.log_gamma = log_gamma;
  q.gamma = std::exp(log_gamma);
  q.mu = mu;
  q.method = method;
  q.side = side;
  q.mode = mode;
  return q;
}

std::optional<std::int64_t> to_count(double endpoint, bool round_up) {
  if (!std::isfinite(endpoint) || std::abs(endpoint) > 9.0e18) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(round_up ? std::ceil(endpoint)
                                            : std::floor(endpoint));
}

DeltaResult invert_side(const BoundQuery& q, bool upper) {
  const ExponentKind kind = make_kind(q.mode, upper);
  try {
    return invert(kind, q.method, q.beta());
  } catch (const infeasible_error& e) {
    throw infeasible_error(std::string(upper ? "upper" : "lower") +
                           " side: " + e.what());
  }
}

IntervalResult assemble(const BoundQuery& q) {
  IntervalResult out;
  out.mode = q.mode;
  out.lower_endpoint = -kInf;
  out.upper_endpoint = kInf;

  const bool want_upper = q.side != Side::Lower;
  const bool want_lower = q.side != Side::Upper;

  if (want_upper) {
    out.delta_u = invert_side(q, true);
    out.upper_endpoint = (1.0 + out.delta_u->delta) * q.mu;
  }
  if (want_lower) {
    if (q.side == Side::TwoSidedSymmetric) {
      // Symmetric variant: the upper deviation factor, which dominates the
      // lower one, is applied on both sides.
      out.delta_l = out.delta_u;
    } else {
      out.delta_l = invert_side(q, false);
    }
    out.lower_endpoint = (1.0 - out.delta_l->delta) * q.mu;
  }
  out.upper_count = to_count(out.upper_endpoint, /*round_up=*/true);
  out.lower_count = to_count(out.lower_endpoint, /*round_up=*/false);

  const bool two_sided = want_upper && want_lower;
  out.confidence = two_sided ? 1.0 - 2.0 * q.gamma : 1.0 - q.gamma;
  return out;
}

}  // namespace

BoundQuery BoundQuery::prediction(double gamma, double mu, Method method,
                                  Side side) {
  if (!(gamma > 0.0) || !(gamma < 1.0)) {
    throw std::invalid_argument("gamma must lie strictly in (0, 1), got " +
                                std::to_string(gamma));
  }
  return make_query(std::log(gamma), mu, Mode::Prediction, method, side);
}

BoundQuery BoundQuery::regression(double gamma, double mu_hat, Method method,
                                  Side side) {
  if (!(gamma > 0.0) || !(gamma < 1.0)) {
    throw std::invalid_argument("gamma must lie strictly in (0, 1), got " +
                                std::to_string(gamma));
  }
  return make_query(std::log(gamma), mu_hat, Mode::Regression, method, side);
}

BoundQuery BoundQuery::prediction_log(double log_gamma, double mu,
                                      Method method, Side side) {
  return make_query(log_gamma, mu, Mode::Prediction, method, side);
}

BoundQuery BoundQuery::regression_log(double log_gamma, double mu_hat,
                                      Method method, Side side) {
  return make_query(log_gamma, mu_hat, Mode::Regression, method, side);
}

IntervalResult tail_bounds(const BoundQuery& query) {
  if (query.mode != Mode::Prediction) {
    throw std::invalid_argument("tail_bounds expects a prediction-mode query");
  }
  return assemble(query);
}

IntervalResult confidence_interval(const BoundQuery& query) {
  if (query.mode != Mode::Regression) {
    throw std::invalid_argument(
        "confidence_interval expects a regression-mode query");
  }
  return assemble(query);
}

std::pair<double, double> exceptional_mu_range(double gamma, double mu_hat,
                                               double tol) {
  if (!(gamma > 0.0) || !(gamma < 1.0)) {
    throw std::invalid_argument("gamma must lie strictly in (0, 1)");
  }
  if (!(mu_hat > 0.0) || !std::isfinite(mu_hat)) {
    throw std::invalid_argument("mu_hat must be a positive finite real");
  }
  const double beta = beta_from(gamma, mu_hat);
  // Means below (1 - dL)*mu_hat make the observation an improbably large
  // sum; means above (1 + dU)*mu_hat make it improbably small. Both factors
  // solve the exact transcendental equations.
  const DeltaResult upper = invert_exact(ExponentKind::RegUpper, beta, tol);
  const DeltaResult lower = invert_exact(ExponentKind::RegLower, beta, tol);
  return {(1.0 - lower.delta) * mu_hat, (1.0 + upper.delta) * mu_hat};
}

}  // namespace chernoff
