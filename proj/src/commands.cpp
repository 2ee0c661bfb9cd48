#include "chernoff/commands.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace chernoff {

namespace {

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_gamma(double g) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", g);
  return buf;
}

// One δ cell; infeasible lower bounds render as "n/a" instead of failing
// the whole table.
std::string delta_cell(ExponentKind kind, Method method, double beta,
                       int digits) {
  try {
    return format_sig(invert(kind, method, beta).delta, digits);
  } catch (const infeasible_error&) {
    return "n/a";
  }
}

OutputTable deviation_table(const std::vector<double>& gammas, double mu,
                            const std::vector<Method>& methods, Mode mode,
                            int digits) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw std::invalid_argument(std::string(mode == Mode::Prediction ? "mu" : "mu-hat") +
                                " must be a positive finite real");
  }
  if (methods.empty()) {
    throw std::invalid_argument("at least one method is required");
  }
  for (Method m : methods) {
    if (mode == Mode::Regression && m == Method::Classic) {
      throw std::invalid_argument(
          "no classical quadratic bound exists in regression mode");
    }
  }

  OutputTable table;
  char caption[96];
  if (mode == Mode::Prediction) {
    std::snprintf(caption, sizeof caption,
                  "tail deviation factors, mu = %.10g", mu);
  } else {
    std::snprintf(caption, sizeof caption,
                  "confidence deviation factors, mu-hat = %.10g", mu);
  }
  table.caption = caption;
  table.columns.push_back("gamma");
  for (Method m : methods) {
    table.columns.push_back(to_string(m) + " dU");
    table.columns.push_back(to_string(m) + " dL");
  }
  for (double gamma : gammas) {
    const double beta = beta_from(gamma, mu);
    std::vector<std::string> row;
    row.push_back(format_gamma(gamma));
    for (Method m : methods) {
      row.push_back(delta_cell(make_kind(mode, true), m, beta, digits));
      row.push_back(delta_cell(make_kind(mode, false), m, beta, digits));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace

const std::vector<double>& default_gammas() {
  static const std::vector<double> gammas = {0.05, 0.01, 0.000000002,
                                             5.421e-20};
  return gammas;
}

OutputTable cmd_table_tail(const std::vector<double>& gammas, double mu,
                           const std::vector<Method>& methods, int digits) {
  return deviation_table(gammas, mu, methods, Mode::Prediction, digits);
}

OutputTable cmd_table_ci(const std::vector<double>& gammas, double mu_hat,
                         const std::vector<Method>& methods, int digits) {
  return deviation_table(gammas, mu_hat, methods, Mode::Regression, digits);
}

std::string InvertRecord::csv_header() {
  return "gamma,mu,method,side,delta,endpoint,residual,status";
}

std::string InvertRecord::to_csv() const {
  std::string out;
  out += csv_field(format_full(gamma));
  out += ',';
  out += csv_field(format_full(mu));
  out += ',';
  out += to_string(method);
  out += ',';
  out += to_string(side);
  out += ',';
  if (status != "infeasible") {
    out += format_full(delta);
    out += ',';
    out += format_full(endpoint);
    out += ',';
    out += format_full(residual);
  } else {
    out += ",,";
  }
  out += ',';
  out += status;
  return out;
}

std::string InvertRecord::to_text(int digits) const {
  std::string out;
  out += "mode      " + to_string(mode) + "\n";
  out += "gamma     " + format_gamma(gamma) + "\n";
  out += (mode == Mode::Prediction ? "mu        " : "mu-hat    ") +
         format_gamma(mu) + "\n";
  out += "method    " + to_string(method) + "\n";
  out += "side      " + to_string(side) + "\n";
  if (status == "infeasible") {
    out += "status    infeasible\n";
    return out;
  }
  out += "delta     " + format_sig(delta, digits) + "\n";
  out += "endpoint  " + format_sig(endpoint, digits) + "\n";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", residual);
  out += "residual  " + std::string(buf) + "\n";
  out += "status    " + status + "\n";
  return out;
}

InvertRecord cmd_invert(double log_gamma, double mu, Mode mode, Method method,
                        Side side) {
  if (side != Side::Upper && side != Side::Lower) {
    throw std::invalid_argument("invert handles one side at a time");
  }
  if (mode == Mode::Regression && method == Method::Classic) {
    throw std::invalid_argument(
        "no classical quadratic bound exists in regression mode");
  }
  const double beta = beta_from_log(log_gamma, mu);

  InvertRecord rec;
  rec.gamma = std::exp(log_gamma);
  rec.log_gamma = log_gamma;
  rec.mu = mu;
  rec.mode = mode;
  rec.method = method;
  rec.side = side;
  const ExponentKind kind = make_kind(mode, side == Side::Upper);
  try {
    const DeltaResult dr = invert(kind, method, beta);
    rec.delta = dr.delta;
    rec.endpoint = side == Side::Upper ? (1.0 + dr.delta) * mu
                                       : (1.0 - dr.delta) * mu;
    rec.residual = dr.residual;
    rec.status = dr.in_domain ? "ok" : "out_of_domain";
  } catch (const infeasible_error&) {
    rec.delta = std::numeric_limits<double>::quiet_NaN();
    rec.endpoint = std::numeric_limits<double>::quiet_NaN();
    rec.residual = std::numeric_limits<double>::quiet_NaN();
    rec.status = "infeasible";
  }
  return rec;
}

VerifyReport cmd_verify(double gamma, std::int64_t n, double p,
                        const std::vector<Method>& methods,
                        std::uint64_t reps, std::uint64_t seed) {
  if (methods.empty()) {
    throw std::invalid_argument("at least one method is required");
  }
  const TrialModel model = TrialModel::identical(n, p);
  VerifyReport report;
  report.all_conservative = true;
  for (Method m : methods) {
    for (Side side : {Side::Upper, Side::Lower}) {
      try {
        report.checks.push_back(
            check_conservative(gamma, model, m, side, reps, seed));
        report.all_conservative &= report.checks.back().conservative;
      } catch (const infeasible_error&) {
        report.infeasible_notes.push_back(
            to_string(m) + " " + to_string(side) +
            ": no bound exists at this level (nothing to verify)");
      }
    }
  }
  return report;
}

OutputTable verify_table(const VerifyReport& report) {
  OutputTable table;
  table.columns = {"method", "side",      "delta",    "threshold",
                   "achieved", "requested", "oracle",  "conservative"};
  for (const auto& c : report.checks) {
    char achieved[40], requested[40];
    std::snprintf(achieved, sizeof achieved, "%.6g", c.achieved_probability);
    std::snprintf(requested, sizeof requested, "%.6g", c.requested_gamma);
    table.rows.push_back({to_string(c.method), to_string(c.side),
                          format_sig(c.delta, 4),
                          std::to_string(c.threshold_count), achieved,
                          requested, c.exact ? "exact" : "monte-carlo",
                          c.conservative ? "yes" : "NO"});
  }
  return table;
}

}  // namespace chernoff
