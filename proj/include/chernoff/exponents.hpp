#ifndef CHERNOFF_EXPONENTS_HPP
#define CHERNOFF_EXPONENTS_HPP

#include <vector>

#include "chernoff/types.hpp"

namespace chernoff {

// Rational function P(d)/Q(d) with integer-valued coefficients stored in
// ascending powers. P has no constant or linear term, so every approximant
// is exactly 0 at d = 0; Q is positive on the approximant's usable range.
struct RationalApprox {
  std::vector<double> num;
  std::vector<double> den;
  // Cubic/quartic tables are re-derived by Taylor-series matching rather
  // than transcribed; the quadratics and classics are the published forms.
  bool rederived = false;

  double eval(double delta) const;
  double derivative(double delta) const;
};

// Exact exponent value. Domain: delta > 0, and delta < 1 for the Lower
// kinds. Near zero (delta < 1e-4) the truncated Taylor series is used
// instead of the log form, which loses all significant digits there.
// Throws std::domain_error outside the domain.
double exact_exponent(ExponentKind kind, double delta);

// d/d(delta) of the exact exponent (same domain rules).
double exact_exponent_derivative(ExponentKind kind, double delta);

// True when the (kind, order) approximant exists. Classic exists only for
// the prediction kinds.
bool supported_pair(ExponentKind kind, ApproxOrder order);

// Value of the rational approximant. For every supported pair and every
// delta in the usable range, exact < approx < 0: the approximant is an
// upper bound on the exponent and therefore still yields a valid
// probability bound. Throws on unsupported pairs or out-of-domain delta.
double approx_exponent(ExponentKind kind, ApproxOrder order, double delta);

// Coefficient table behind approx_exponent.
const RationalApprox& pade_table(ExponentKind kind, ApproxOrder order);

// First `count` Taylor coefficients of the exact exponent at 0, constant
// term first. Reference use only; count must be in [1, 12].
std::vector<double> series_coefficients(ExponentKind kind, int count);

// Largest delta at which the approximant may be evaluated: unbounded for
// the Upper kinds (their denominators have no positive roots), just below
// the first denominator pole for the Lower kinds (the pole sits above 1).
double approx_domain_limit(ExponentKind kind, ApproxOrder order);

// Domain on which the upper-bound property has been validated: 10 for the
// Upper kinds, 1 for the Lower kinds. Inversion results outside this range
// are flagged rather than rejected.
double validated_domain_limit(ExponentKind kind);

}  // namespace chernoff

#endif  // CHERNOFF_EXPONENTS_HPP
