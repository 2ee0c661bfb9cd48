#ifndef CHERNOFF_COMMANDS_HPP
#define CHERNOFF_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chernoff/intervals.hpp"
#include "chernoff/oracle.hpp"
#include "chernoff/table.hpp"
#include "chernoff/types.hpp"

namespace chernoff {

// Structured command layer behind the CLI; each cmd_* builds the result the
// corresponding subcommand prints.

// One row per gamma: dU and dL per method at the given mean.
// Default methods {Exact, Classic, Pade2} and default gammas
// {0.05, 0.01, 2e-9, 5.421e-20} reproduce the reference deviation table.
OutputTable cmd_table_tail(const std::vector<double>& gammas, double mu,
                           const std::vector<Method>& methods, int digits = 4);

// Regression analogue at an observed sum; Classic is rejected.
// Defaults {Exact, Pade2} reproduce the reference confidence table.
OutputTable cmd_table_ci(const std::vector<double>& gammas, double mu_hat,
                         const std::vector<Method>& methods, int digits = 4);

const std::vector<double>& default_gammas();

// Single-query inversion record; `status` is "ok", "out_of_domain", or
// "infeasible". On infeasible queries delta/endpoint are NaN.
struct InvertRecord {
  double gamma;
  double log_gamma;
  double mu;
  Mode mode;
  Method method;
  Side side;  // Upper or Lower
  double delta;
  double endpoint;  // (1+d)*mu for Upper, (1-d)*mu for Lower
  double residual;
  std::string status;

  // CSV schema: gamma,mu,method,side,delta,endpoint,residual,status
  static std::string csv_header();
  std::string to_csv() const;
  std::string to_text(int digits) const;
};

InvertRecord cmd_invert(double log_gamma, double mu, Mode mode, Method method,
                        Side side);

struct VerifyReport {
  std::vector<TailCheckReport> checks;
  std::vector<std::string> infeasible_notes;  // sides that admit no bound
  bool all_conservative;
};

// Conservativeness verification of the requested methods on both sides
// against an identical-trial model.
VerifyReport cmd_verify(double gamma, std::int64_t n, double p,
                        const std::vector<Method>& methods,
                        std::uint64_t reps = 1000000,
                        std::uint64_t seed = 0x5eedu);

OutputTable verify_table(const VerifyReport& report);

}  // namespace chernoff

#endif  // CHERNOFF_COMMANDS_HPP
