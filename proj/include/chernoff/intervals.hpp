#ifndef CHERNOFF_INTERVALS_HPP
#define CHERNOFF_INTERVALS_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "chernoff/inversion.hpp"
#include "chernoff/types.hpp"

namespace chernoff {

// Validated bound/interval request. Construct through the named factories;
// they reject gamma outside (0,1), non-positive mu, and Classic in
// regression mode (no classical quadratic exists there).
struct BoundQuery {
  double log_gamma;  // canonical level; gamma = exp(log_gamma)
  double gamma;
  double mu;  // expected sum (Prediction) or observed sum (Regression)
  Method method;
  Side side;
  Mode mode;

  static BoundQuery prediction(double gamma, double mu, Method method,
                               Side side);
  static BoundQuery regression(double gamma, double mu_hat, Method method,
                               Side side);
  // Same, but with log(gamma) supplied directly for levels that underflow.
  static BoundQuery prediction_log(double log_gamma, double mu, Method method,
                                   Side side);
  static BoundQuery regression_log(double log_gamma, double mu_hat,
                                   Method method, Side side);

  double beta() const { return log_gamma / mu; }
};

// One- or two-sided result in both delta-space and count-space.
//
// Prediction mode: endpoints are (1 - dL)*mu and (1 + dU)*mu and bound the
// random sum itself; regression mode: same expressions around mu_hat and
// they bound the unknown mean. Absent sides are -inf/+inf. The integer
// forms round conservatively for tail events: P(X >= upper_count) < gamma
// and P(X <= lower_count) < gamma.
struct IntervalResult {
  std::optional<DeltaResult> delta_u;
  std::optional<DeltaResult> delta_l;
  double lower_endpoint;  // count units; -inf when the side is absent
  double upper_endpoint;  // count units; +inf when the side is absent
  std::optional<std::int64_t> lower_count;  // floor(lower_endpoint)
  std::optional<std::int64_t> upper_count;  // ceil(upper_endpoint)
  double confidence;  // 1 - gamma one-sided, 1 - 2*gamma two-sided
  Mode mode;
};

// Tail bounds for a sum with known mean (prediction mode): guarantees
// P(X >= upper_endpoint) < gamma and P(X <= lower_endpoint) < gamma for any
// independent Poisson-trial population with mean mu. Infeasible sides
// propagate as infeasible_error annotated with the failing side.
IntervalResult tail_bounds(const BoundQuery& query);

// Conservative confidence interval for the unknown mean given an observed
// sum (regression mode). TwoSidedSymmetric uses dU on both sides, since
// dU >= dL. Naming note: the factors are named for the endpoint they
// produce, not the tail event they test -- dU comes from the exponent
// -d + log(1+d), whose exceptional event is the observation being
// improbably small for a large mean, and yields the upper endpoint
// (1 + dU) * mu_hat; dL is the mirror case.
IntervalResult confidence_interval(const BoundQuery& query);

// The exceptional range (mu_l, mu_u) of mean values under which the
// observation mu_hat would be a gamma-level tail event, computed from the
// exact transcendental equations. Identical to the Exact-method
// confidence_interval endpoints; equality of the two paths is a tested
// invariant.
std::pair<double, double> exceptional_mu_range(double gamma, double mu_hat,
                                               double tol = 1e-12);

}  // namespace chernoff

#endif  // CHERNOFF_INTERVALS_HPP
