#include "chernoff/types.hpp"

namespace chernoff {

ExponentKind make_kind(Mode mode, bool upper) {
  if (mode == Mode::Prediction) {
    return upper ? ExponentKind::PredUpper : ExponentKind::PredLower;
  }
  return upper ? ExponentKind::RegUpper : ExponentKind::RegLower;
}

std::string to_string(ExponentKind k) {
  switch (k) {
    case ExponentKind::PredUpper: return "pred-upper";
    case ExponentKind::PredLower: return "pred-lower";
    case ExponentKind::RegUpper: return "reg-upper";
    case ExponentKind::RegLower: return "reg-lower";
  }
  return "?";
}

std::string to_string(ApproxOrder o) {
  switch (o) {
    case ApproxOrder::Classic: return "classic";
    case ApproxOrder::Pade2: return "pade2";
    case ApproxOrder::Pade3: return "pade3";
    case ApproxOrder::Pade4: return "pade4";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Exact: return "exact";
    case Method::Classic: return "classic";
    case Method::Pade2: return "pade2";
    case Method::Pade3: return "pade3";
    case Method::Pade4: return "pade4";
  }
  return "?";
}

std::string to_string(Side s) {
  switch (s) {
    case Side::Upper: return "upper";
    case Side::Lower: return "lower";
    case Side::TwoSidedAsymmetric: return "two-sided";
    case Side::TwoSidedSymmetric: return "symmetric";
  }
  return "?";
}

std::string to_string(Mode m) {
  return m == Mode::Prediction ? "prediction" : "regression";
}

Method parse_method(std::string_view s) {
  if (s == "exact") return Method::Exact;
  if (s == "classic") return Method::Classic;
  if (s == "pade2") return Method::Pade2;
  if (s == "pade3") return Method::Pade3;
  if (s == "pade4") return Method::Pade4;
  throw std::invalid_argument("unknown method '" + std::string(s) +
                              "' (expected exact|classic|pade2|pade3|pade4)");
}

Side parse_side(std::string_view s) {
  if (s == "upper") return Side::Upper;
  if (s == "lower") return Side::Lower;
  if (s == "two-sided") return Side::TwoSidedAsymmetric;
  if (s == "symmetric") return Side::TwoSidedSymmetric;
  throw std::invalid_argument("unknown side '" + std::string(s) +
                              "' (expected upper|lower|two-sided|symmetric)");
}

}  // namespace chernoff
