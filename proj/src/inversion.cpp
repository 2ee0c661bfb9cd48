#include "chernoff/inversion.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "chernoff/exponents.hpp"

namespace chernoff {

namespace {

constexpr int kMaxIterations = 200;

void check_beta(double beta) {
  if (!(beta < 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("beta = log(gamma)/mu must be a negative finite real, got " +
                                std::to_string(beta));
  }
}

// Safeguarded Newton iteration on a strictly decreasing f with a maintained
// bracket [lo, hi], f(lo) >= target >= f(hi). Newton steps that leave the
// bracket (or fail to shrink it fast enough) fall back to bisection; see
// Press et al., "Numerical Recipes", rtsafe. Polishes past the residual
// tolerance until the step reaches machine scale, so roots of different
// approximants stay ordered down to a few ulps. If the bracket collapses to
// adjacent doubles before the residual tolerance is met (the root's
// derivative exceeds what one ulp of delta can resolve), the side with
// f(x) <= target is returned: the result then still certifies the level.
template <typename F, typename DF>
double solve_decreasing(F f, DF df, double lo, double hi, double flo, double fhi,
                        double target, double tol) {
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  if (flo < target - tol || fhi > target + tol) {
    throw std::runtime_error("root not bracketed");
  }
  double x = 0.5 * (lo + hi);
  double step_prev = hi - lo;
  double step = step_prev;
  double fx = f(x) - target;
  double dfx = df(x);
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    if (fx > 0.0) {
      lo = x;  // f decreasing: still above the target on the left side
    } else {
      hi = x;
    }
    const double scale = std::max(std::abs(x), 1e-300);
    if (std::abs(fx) <= tol &&
        (fx == 0.0 || std::abs(step) <= 4.0 * kEps * scale)) {
      return x;
    }
    if (hi - lo <= kEps * scale) {
      // Adjacent doubles: prefer the endpoint on the certifying side.
      return fx <= 0.0 ? x : hi;
    }
    const bool newton_escapes =
        ((x - hi) * dfx - fx) * ((x - lo) * dfx - fx) > 0.0;
    const bool too_slow = std::abs(2.0 * fx) > std::abs(step_prev * dfx);
    if (newton_escapes || too_slow || dfx == 0.0) {
      step_prev = step;
      step = 0.5 * (hi - lo);
      x = lo + step;
    } else {
      step_prev = step;
      step = fx / dfx;
      x -= step;
      if (x <= lo || x >= hi) {  // guard against rounding past the bracket
        step = 0.5 * (hi - lo);
        x = lo + step;
      }
    }
    fx = f(x) - target;
    dfx = df(x);
  }
  throw std::runtime_error("root finding did not converge within " +
                           std::to_string(kMaxIterations) + " iterations");
}

DeltaResult make_closed_form(ExponentKind kind, Method method, double a,
                             double b, double c) {
  const auto [small_root, large_root] = solve_quadratic_stable(a, b, c);
  // b*c sign analysis guarantees one negative and one positive root for all
  // valid beta; take the positive one.
  if (small_root > 0.0 || !(large_root > 0.0)) {
    throw std::logic_error("closed-form root signs violate the b*c analysis");
  }
  DeltaResult r;
  r.delta = large_root;
  r.kind = kind;
  r.method = method;
  r.residual = (a * large_root + b) * large_root + c;
  r.in_domain = large_root <= validated_domain_limit(kind) &&
                (is_upper_kind(kind) || large_root < 1.0);
  return r;
}

}  // namespace

std::pair<double, double> solve_quadratic_stable(double a, double b, double c) {
  if (a == 0.0) {
    throw std::domain_error("quadratic coefficient a must be nonzero");
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) {
    throw std::domain_error("negative discriminant " + std::to_string(disc));
  }
  const double sqrt_disc = std::sqrt(disc);
  double r1, r2;
  if (b == 0.0) {
    r1 = sqrt_disc / (2.0 * a);
    r2 = -r1;
  } else {
    const double q = -0.5 * (b + std::copysign(sqrt_disc, b));
    r1 = q / a;
    r2 = (q == 0.0) ? r1 : c / q;
  }
  return r1 < r2 ? std::make_pair(r1, r2) : std::make_pair(r2, r1);
}

double beta_from(double gamma, double mu) {
  if (!(gamma > 0.0) || !(gamma < 1.0)) {
    throw std::invalid_argument("gamma must lie in (0, 1), got " +
                                std::to_string(gamma));
  }
  return beta_from_log(std::log(gamma), mu);
}

double beta_from_log(double log_gamma, double mu) {
  if (!(log_gamma < 0.0) || !std::isfinite(log_gamma)) {
    throw std::invalid_argument("log(gamma) must be a negative finite real, got " +
                                std::to_string(log_gamma));
  }
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw std::invalid_argument("mu must be a positive finite real, got " +
                                std::to_string(mu));
  }
  return log_gamma / mu;
}

DeltaResult invert_pade2_prediction(ExponentKind kind, double beta) {
  check_beta(beta);
  switch (kind) {
    case ExponentKind::PredUpper:
      return make_closed_form(kind, Method::Pade2, 3.0, 2.0 * beta, 6.0 * beta);
    case ExponentKind::PredLower:
      return make_closed_form(kind, Method::Pade2, 9.0 - beta, -6.0 * beta,
                              18.0 * beta);
    default:
      throw std::invalid_argument(
          "invert_pade2_prediction handles prediction kinds only, got " +
          to_string(kind));
  }
}

DeltaResult invert_pade2_regression(ExponentKind kind, double beta) {
  check_beta(beta);
  switch (kind) {
    case ExponentKind::RegUpper:
      return make_closed_form(kind, Method::Pade2, 3.0, 4.0 * beta, 6.0 * beta);
    case ExponentKind::RegLower:
      return make_closed_form(kind, Method::Pade2, 9.0 - beta, -12.0 * beta,
                              18.0 * beta);
    default:
      throw std::invalid_argument(
          "invert_pade2_regression handles regression kinds only, got " +
          to_string(kind));
  }
}

DeltaResult invert_classic(ExponentKind kind, double beta) {
  check_beta(beta);
  switch (kind) {
    case ExponentKind::PredUpper:
      return make_closed_form(kind, Method::Classic, 1.0, beta, 2.0 * beta);
    case ExponentKind::PredLower: {
      DeltaResult r;
      r.delta = std::sqrt(-2.0 * beta);
      r.kind = kind;
      r.method = Method::Classic;
      r.residual = r.delta * r.delta + 2.0 * beta;
      r.in_domain = r.delta < 1.0;
      return r;
    }
    default:
      throw std::invalid_argument(
          "the classical quadratic bounds exist for prediction kinds only, got " +
          to_string(kind));
  }
}

DeltaResult invert_exact(ExponentKind kind, double beta, double tol) {
  check_beta(beta);
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  auto f = [kind](double d) { return exact_exponent(kind, d); };
  auto df = [kind](double d) { return exact_exponent_derivative(kind, d); };

  double lo = 0.0;
  double flo = 0.0;  // exact exponents vanish at 0
  double hi, fhi;
  if (is_upper_kind(kind)) {
    hi = 1.0;
    fhi = f(hi);
    while (fhi > beta) {
      hi *= 2.0;
      fhi = f(hi);
    }
  } else {
    // Largest representable delta below 1; for PredLower the exponent's
    // infimum there is -1 + O(eps * |log eps|).
    hi = 1.0 - std::numeric_limits<double>::epsilon();
    fhi = f(hi);
    if (fhi > beta) {
      if (fhi - beta <= tol) {
        DeltaResult r{hi, kind, Method::Exact, fhi - beta, true};
        return r;
      }
      throw infeasible_error(
          "no delta < 1 certifies level exp(" + std::to_string(beta) +
          " * mu) for " + to_string(kind) +
          (kind == ExponentKind::PredLower
               ? " (exponent infimum is -1; requires beta >= -1)"
               : " (level saturates double precision near delta = 1)"));
    }
  }
  const double root = solve_decreasing(f, df, lo, hi, flo, fhi, beta, tol);
  DeltaResult r;
  r.delta = root;
  r.kind = kind;
  r.method = Method::Exact;
  r.residual = f(root) - beta;
  r.in_domain = true;
  return r;
}

DeltaResult invert_pade_numeric(ExponentKind kind, ApproxOrder order,
                                double beta, double tol) {
  check_beta(beta);
  if (order != ApproxOrder::Pade3 && order != ApproxOrder::Pade4) {
    throw std::invalid_argument("numeric approximant inversion supports pade3/pade4, got " +
                                to_string(order));
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  const RationalApprox& table = pade_table(kind, order);
  auto f = [&table](double d) { return table.eval(d); };
  auto df = [&table](double d) { return table.derivative(d); };

  double lo = 0.0;
  double flo = 0.0;
  double hi, fhi;
  if (is_upper_kind(kind)) {
    hi = 1.0;
    fhi = f(hi);
    while (fhi > beta) {
      hi *= 2.0;
      fhi = f(hi);
    }
  } else {
    // The rational continues decreasing past 1 up to its denominator pole,
    // so roots beyond the exact function's domain exist and are returned
    // with in_domain = false, mirroring the closed forms.
    const double pole = approx_domain_limit(kind, order);
    hi = 1.0;
    fhi = f(hi);
    double gap = pole - hi;
    while (fhi > beta) {
      gap *= 0.5;
      hi = pole - gap;
      fhi = f(hi);
      if (gap < 1e-12 * pole) {
        throw infeasible_error("approximant cannot reach level exp(" +
                               std::to_string(beta) + " * mu) before its pole");
      }
    }
  }
  const double root = solve_decreasing(f, df, lo, hi, flo, fhi, beta, tol);
  DeltaResult r;
  r.delta = root;
  r.kind = kind;
  r.method = order == ApproxOrder::Pade3 ? Method::Pade3 : Method::Pade4;
  r.residual = f(root) - beta;
  r.in_domain = root <= validated_domain_limit(kind) &&
                (is_upper_kind(kind) || root < 1.0);
  return r;
}

DeltaResult invert(ExponentKind kind, Method method, double beta, double tol) {
  switch (method) {
    case Method::Exact:
      return invert_exact(kind, beta, tol);
    case Method::Classic:
      return invert_classic(kind, beta);
    case Method::Pade2:
      return is_prediction_kind(kind) ? invert_pade2_prediction(kind, beta)
                                      : invert_pade2_regression(kind, beta);
    case Method::Pade3:
      return invert_pade_numeric(kind, ApproxOrder::Pade3, beta, tol);
    case Method::Pade4:
      return invert_pade_numeric(kind, ApproxOrder::Pade4, beta, tol);
  }
  throw std::logic_error("unreachable invert dispatch");
}

}  // namespace chernoff
