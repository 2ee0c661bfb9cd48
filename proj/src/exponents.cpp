#include "chernoff/exponents.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace chernoff {

namespace {

constexpr double kNearZeroSwitch = 1e-4;

double horner(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

// Truncated Taylor series through d^6, used below the near-zero switch
// where the log forms cancel catastrophically.
double taylor6(ExponentKind kind, double d) {
  switch (kind) {
    case ExponentKind::PredUpper:
      return d * d * (-1.0 / 2 + d * (1.0 / 6 + d * (-1.0 / 12 + d * (1.0 / 20 + d * (-1.0 / 30)))));
    case ExponentKind::PredLower:
      return d * d * (-1.0 / 2 + d * (-1.0 / 6 + d * (-1.0 / 12 + d * (-1.0 / 20 + d * (-1.0 / 30)))));
    case ExponentKind::RegUpper:
      return d * d * (-1.0 / 2 + d * (1.0 / 3 + d * (-1.0 / 4 + d * (1.0 / 5 + d * (-1.0 / 6)))));
    case ExponentKind::RegLower:
      return d * d * (-1.0 / 2 + d * (-1.0 / 3 + d * (-1.0 / 4 + d * (-1.0 / 5 + d * (-1.0 / 6)))));
  }
  return 0.0;
}

void check_exact_domain(ExponentKind kind, double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::domain_error("delta must be a positive finite real, got " +
                            std::to_string(delta));
  }
  if (!is_upper_kind(kind) && delta >= 1.0) {
    throw std::domain_error("lower-kind exponents are undefined at delta >= 1, got " +
                            std::to_string(delta));
  }
}

// Coefficient tables, ascending powers. The quadratics are the published
// closed forms; the cubic/quartic tables are re-derived by matching Taylor
// coefficients in exact rational arithmetic (the tests re-solve the same
// linear systems and compare). Upper kinds use [k/k-1] degrees, Lower kinds
// [k/k]; each matches the exact series through numerator degree + denominator
// degree.
const RationalApprox kPredUpperClassic{{0, 0, -1}, {2, 1}, false};
const RationalApprox kPredLowerClassic{{0, 0, -1}, {2}, false};

const RationalApprox kPredUpperPade2{{0, 0, -3}, {6, 2}, false};
const RationalApprox kPredUpperPade3{{0, 0, -15, -7}, {30, 24, 3}, true};
const RationalApprox kPredUpperPade4{{0, 0, -210, -200, -35}, {420, 540, 180, 12}, true};

const RationalApprox kPredLowerPade2{{0, 0, -9}, {18, -6, -1}, false};
const RationalApprox kPredLowerPade3{{0, 0, -210, 125}, {420, -390, 60, 3}, true};
const RationalApprox kPredLowerPade4{{0, 0, -7350, 8260, -1975},
                                     {14700, -21420, 8640, -780, -18},
                                     true};

const RationalApprox kRegUpperPade2{{0, 0, -3}, {6, 4}, false};
const RationalApprox kRegUpperPade3{{0, 0, -15, -8}, {30, 36, 9}, true};
const RationalApprox kRegUpperPade4{{0, 0, -210, -220, -45}, {420, 720, 360, 48}, true};

const RationalApprox kRegLowerPade2{{0, 0, -9}, {18, -12, -1}, false};
const RationalApprox kRegLowerPade3{{0, 0, -240, 155}, {480, -630, 180, 3}, true};
const RationalApprox kRegLowerPade4{{0, 0, -3150, 3780, -985},
                                    {6300, -11760, 6660, -1080, -6},
                                    true};

// Smallest positive root of the polynomial, or +inf when there is none in
// (0, 64]. Used for the Lower-kind denominator poles (all below 2.2).
double first_positive_root(const std::vector<double>& poly) {
  const double inf = std::numeric_limits<double>::infinity();
  double prev_x = 0.0;
  double prev_v = horner(poly, 0.0);
  for (int i = 1; i <= 6400; ++i) {
    const double x = i * 0.01;
    const double v = horner(poly, x);
    if (v == 0.0) return x;
    if ((prev_v < 0.0) != (v < 0.0)) {
      double lo = prev_x, hi = x;
      for (int iter = 0; iter < 100; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double mv = horner(poly, mid);
        if ((mv < 0.0) == (prev_v < 0.0)) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      return lo;
    }
    prev_x = x;
    prev_v = v;
  }
  return inf;
}

}  // namespace

double RationalApprox::eval(double delta) const {
  return horner(num, delta) / horner(den, delta);
}

double RationalApprox::derivative(double delta) const {
  auto poly_deriv = [](const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) {
      acc = acc * x + c[i] * static_cast<double>(i);
    }
    return acc;
  };
  const double p = horner(num, delta);
  const double q = horner(den, delta);
  const double dp = poly_deriv(num, delta);
  const double dq = poly_deriv(den, delta);
  return (dp * q - p * dq) / (q * q);
}

double exact_exponent(ExponentKind kind, double delta) {
  check_exact_domain(kind, delta);
  if (delta < kNearZeroSwitch) {
    return taylor6(kind, delta);
  }
  switch (kind) {
    case ExponentKind::PredUpper:
      return delta - (1.0 + delta) * std::log1p(delta);
    case ExponentKind::PredLower:
      return -delta - (1.0 - delta) * std::log1p(-delta);
    case ExponentKind::RegUpper:
      return std::log1p(delta) - delta;
    case ExponentKind::RegLower:
      return delta + std::log1p(-delta);
  }
  return 0.0;
}

double exact_exponent_derivative(ExponentKind kind, double delta) {
  check_exact_domain(kind, delta);
  switch (kind) {
    case ExponentKind::PredUpper:
      return -std::log1p(delta);
    case ExponentKind::PredLower:
      return std::log1p(-delta);
    case ExponentKind::RegUpper:
      return -delta / (1.0 + delta);
    case ExponentKind::RegLower:
      return -delta / (1.0 - delta);
  }
  return 0.0;
}

bool supported_pair(ExponentKind kind, ApproxOrder order) {
  if (order == ApproxOrder::Classic) return is_prediction_kind(kind);
  return true;
}

const RationalApprox& pade_table(ExponentKind kind, ApproxOrder order) {
  if (!supported_pair(kind, order)) {
    throw std::invalid_argument("no " + to_string(order) +
                                " approximant for kind " + to_string(kind));
  }
  switch (kind) {
    case ExponentKind::PredUpper:
      switch (order) {
        case ApproxOrder::Classic: return kPredUpperClassic;
        case ApproxOrder::Pade2: return kPredUpperPade2;
        case ApproxOrder::Pade3: return kPredUpperPade3;
        case ApproxOrder::Pade4: return kPredUpperPade4;
      }
      break;
    case ExponentKind::PredLower:
      switch (order) {
        case ApproxOrder::Classic: return kPredLowerClassic;
        case ApproxOrder::Pade2: return kPredLowerPade2;
        case ApproxOrder::Pade3: return kPredLowerPade3;
        case ApproxOrder::Pade4: return kPredLowerPade4;
      }
      break;
    case ExponentKind::RegUpper:
      switch (order) {
        case ApproxOrder::Pade2: return kRegUpperPade2;
        case ApproxOrder::Pade3: return kRegUpperPade3;
        case ApproxOrder::Pade4: return kRegUpperPade4;
        case ApproxOrder::Classic: break;
      }
      break;
    case ExponentKind::RegLower:
      switch (order) {
        case ApproxOrder::Pade2: return kRegLowerPade2;
        case ApproxOrder::Pade3: return kRegLowerPade3;
        case ApproxOrder::Pade4: return kRegLowerPade4;
        case ApproxOrder::Classic: break;
      }
      break;
  }
  throw std::logic_error("unreachable pade_table dispatch");
}

double approx_domain_limit(ExponentKind kind, ApproxOrder order) {
  struct Key {
    ExponentKind k;
    ApproxOrder o;
    double limit;
  };
  static const std::vector<Key> cache = [] {
    std::vector<Key> out;
    for (auto k : {ExponentKind::PredUpper, ExponentKind::PredLower,
                   ExponentKind::RegUpper, ExponentKind::RegLower}) {
      for (auto o : {ApproxOrder::Classic, ApproxOrder::Pade2,
                     ApproxOrder::Pade3, ApproxOrder::Pade4}) {
        if (!supported_pair(k, o)) continue;
        out.push_back({k, o, first_positive_root(pade_table(k, o).den)});
      }
    }
    return out;
  }();
  for (const auto& e : cache) {
    if (e.k == kind && e.o == order) return e.limit;
  }
  throw std::invalid_argument("no " + to_string(order) +
                              " approximant for kind " + to_string(kind));
}

double validated_domain_limit(ExponentKind kind) {
  return is_upper_kind(kind) ? 10.0 : 1.0;
}

double approx_exponent(ExponentKind kind, ApproxOrder order, double delta) {
  const RationalApprox& table = pade_table(kind, order);
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::domain_error("delta must be a positive finite real, got " +
                            std::to_string(delta));
  }
  if (delta >= approx_domain_limit(kind, order)) {
    throw std::domain_error("delta " + std::to_string(delta) +
                            " is at or beyond the denominator pole of " +
                            to_string(kind) + "/" + to_string(order));
  }
  return table.eval(delta);
}

std::vector<double> series_coefficients(ExponentKind kind, int count) {
  if (count < 1 || count > 12) {
    throw std::invalid_argument("series coefficient count must be in [1, 12], got " +
                                std::to_string(count));
  }
  std::vector<double> coeffs(static_cast<std::size_t>(count), 0.0);
  for (int k = 2; k < count; ++k) {
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;
    switch (kind) {
      case ExponentKind::PredUpper:
        coeffs[k] = sign / (static_cast<double>(k) * (k - 1));
        break;
      case ExponentKind::PredLower:
        coeffs[k] = -1.0 / (static_cast<double>(k) * (k - 1));
        break;
      case ExponentKind::RegUpper:
        coeffs[k] = sign / static_cast<double>(k);
        break;
      case ExponentKind::RegLower:
        coeffs[k] = -1.0 / static_cast<double>(k);
        break;
    }
  }
  return coeffs;
}

}  // namespace chernoff
