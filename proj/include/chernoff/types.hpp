#ifndef CHERNOFF_TYPES_HPP
#define CHERNOFF_TYPES_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace chernoff {

// Which tail exponent a computation refers to. These are the four functions
// of the relative deviation d that multiply mu inside exp(...):
//
//   PredUpper   d - (1+d)*log(1+d)    upper tail of a sum with known mean
//   PredLower  -d - (1-d)*log(1-d)    lower tail of a sum with known mean
//   RegUpper   -d + log(1+d)          upper confidence bound from an observed sum
//   RegLower    d + log(1-d)          lower confidence bound from an observed sum
//
// All four are 0 at d = 0 and strictly decrease; the Lower kinds are only
// defined for d < 1.
enum class ExponentKind { PredUpper, PredLower, RegUpper, RegLower };

// Degree of the rational approximation to an exponent. Classic is the
// traditional quadratic bound (upper: -d^2/(2+d), lower: -d^2/2) and exists
// only for the prediction kinds.
enum class ApproxOrder { Classic, Pade2, Pade3, Pade4 };

// Solution method selectable by callers: exact transcendental inversion or
// inversion of one of the rational approximations.
enum class Method { Exact, Classic, Pade2, Pade3, Pade4 };

enum class Side { Upper, Lower, TwoSidedAsymmetric, TwoSidedSymmetric };

// Prediction: mean mu known, bound the random sum.
// Regression: sum observed as mu_hat, bound the unknown mean.
enum class Mode { Prediction, Regression };

constexpr bool is_upper_kind(ExponentKind k) {
  return k == ExponentKind::PredUpper || k == ExponentKind::RegUpper;
}
constexpr bool is_prediction_kind(ExponentKind k) {
  return k == ExponentKind::PredUpper || k == ExponentKind::PredLower;
}

ExponentKind make_kind(Mode mode, bool upper);

std::string to_string(ExponentKind k);
std::string to_string(ApproxOrder o);
std::string to_string(Method m);
std::string to_string(Side s);
std::string to_string(Mode m);

// Parse CLI-facing names ("exact", "classic", "pade2", ...). Throws
// std::invalid_argument on unknown input.
Method parse_method(std::string_view s);
Side parse_side(std::string_view s);

// Thrown when no deviation factor in the function's domain can certify the
// requested tail level (e.g. beta < -1 for the lower prediction bound, where
// the exponent's infimum is -1).
class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chernoff

#endif  // CHERNOFF_TYPES_HPP
