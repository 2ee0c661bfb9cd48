#ifndef CHERNOFF_INVERSION_HPP
#define CHERNOFF_INVERSION_HPP

#include <utility>

#include "chernoff/types.hpp"

namespace chernoff {

// A solved deviation factor. `residual` is the exponent residual
// f(delta) - beta for iterative methods and the signed quadratic residual
// a*d^2 + b*d + c for the closed forms. `in_domain` is false when the root
// landed outside the validated domain (delta >= 1 for Lower kinds, or
// delta > 10 for Upper-kind approximants); such results still solve the
// approximant equation but the upper-bound property is not certified there.
struct DeltaResult {
  double delta = 0.0;
  ExponentKind kind = ExponentKind::PredUpper;
  Method method = Method::Exact;
  double residual = 0.0;
  bool in_domain = true;
};

// Both real roots of a*x^2 + b*x + c, cancellation-avoiding formulation:
// q = -(b + sign(b)*sqrt(b^2 - 4ac))/2, roots q/a and c/q. Returned as
// (smaller, larger). Throws std::domain_error on a == 0 or negative
// discriminant.
std::pair<double, double> solve_quadratic_stable(double a, double b, double c);

// beta = log(gamma)/mu, the canonical normalized tail level. Validates
// gamma in (0,1) and mu > 0. beta_from_log takes log(gamma) directly, which
// keeps extreme levels (2^-64 and beyond) away from underflow.
double beta_from(double gamma, double mu);
double beta_from_log(double log_gamma, double mu);

// Closed-form quadratic inversions of the degree-2 Pade approximants for
// the prediction kinds:
//   PredUpper: 3 d^2 + 2 beta d + 6 beta = 0
//   PredLower: (9 - beta) d^2 - 6 beta d + 18 beta = 0
// The positive root is returned; it always certifies the requested level.
DeltaResult invert_pade2_prediction(ExponentKind kind, double beta);

// Same for the regression kinds:
//   RegUpper: 3 d^2 + 4 beta d + 6 beta = 0
//   RegLower: (9 - beta) d^2 - 12 beta d + 18 beta = 0
DeltaResult invert_pade2_regression(ExponentKind kind, double beta);

// Classical quadratic bounds (prediction kinds only):
//   PredUpper: d^2 + beta d + 2 beta = 0
//   PredLower: d = sqrt(-2 beta)
DeltaResult invert_classic(ExponentKind kind, double beta);

// Numeric inversion of the exact exponent: safeguarded Newton iteration
// with a maintained bracket, |f(delta) - beta| <= tol on return. For Upper
// kinds the bracket [0, 1] is expanded by doubling; for Lower kinds the
// root is bracketed in (0, 1). Where the exponent is too steep for one ulp
// of delta to resolve tol (RegLower close to 1), the returned delta sits on
// the certifying side instead: f(delta) <= beta with |residual| at the
// machine limit. Throws infeasible_error when even delta -> 1 cannot reach
// the requested level (PredLower with beta < -1).
DeltaResult invert_exact(ExponentKind kind, double beta, double tol = 1e-12);

// Numeric inversion of a cubic or quartic approximant by the same
// safeguarded iteration. For Lower kinds the search may continue past 1 up
// to the denominator pole, mirroring the closed forms, with in_domain set
// to false.
DeltaResult invert_pade_numeric(ExponentKind kind, ApproxOrder order,
                                double beta, double tol = 1e-12);

// Dispatch on Method: Exact -> invert_exact, Classic -> invert_classic,
// Pade2 -> the closed forms, Pade3/Pade4 -> invert_pade_numeric.
DeltaResult invert(ExponentKind kind, Method method, double beta,
                   double tol = 1e-12);

}  // namespace chernoff

#endif  // CHERNOFF_INVERSION_HPP
