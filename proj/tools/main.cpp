#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chernoff/commands.hpp"

namespace {

using namespace chernoff;

// Gamma accepted as a decimal ("5.421e-20") or a power ("2^-64"), the
// latter staying exact for the power-of-two levels common in cryptographic
// failure budgets.
double parse_gamma(const std::string& text) {
  double value;
  const auto caret = text.find('^');
  try {
    if (caret != std::string::npos) {
      const double base = std::stod(text.substr(0, caret));
      const double exponent = std::stod(text.substr(caret + 1));
      value = std::pow(base, exponent);
    } else {
      std::size_t used = 0;
      value = std::stod(text, &used);
      if (used != text.size()) {
        throw std::invalid_argument(text);
      }
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse gamma '" + text + "'");
  }
  if (!(value > 0.0) || !(value < 1.0)) {
    throw std::invalid_argument("gamma must lie strictly in (0, 1), got '" +
                                text + "'");
  }
  return value;
}

std::vector<double> parse_gammas(const std::vector<std::string>& texts) {
  if (texts.empty()) return default_gammas();
  std::vector<double> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_gamma(t));
  return out;
}

std::vector<Method> parse_methods(const std::string& csv) {
  std::vector<Method> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const auto end = comma == std::string::npos ? csv.size() : comma;
    out.push_back(parse_method(csv.substr(start, end - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void print_verify(const VerifyReport& report, TableFormat fmt) {
  std::cout << verify_table(report).render(fmt);
  for (const auto& note : report.infeasible_notes) {
    std::cout << "note: " << note << "\n";
  }
  std::cout << (report.all_conservative ? "all bounds conservative"
                                        : "NON-CONSERVATIVE BOUND DETECTED")
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverted Chernoff tail bounds for sums of independent 0/1 trials"};
  app.require_subcommand(1);

  std::vector<std::string> gamma_args;
  std::string log_gamma_arg;
  std::string format_arg = "text";
  std::string method_arg;
  std::string side_arg = "upper";
  int digits = 4;
  double mu = 0.0;
  double mu_hat = 0.0;
  double p = 0.0;
  std::int64_t n = 0;
  std::uint64_t reps = 1000000;
  std::uint64_t seed = 0x5eed;

  auto* table = app.add_subcommand("table", "Deviation-factor tables");
  table->require_subcommand(1);

  auto* tail = table->add_subcommand(
      "tail", "Tail bounds for a sum with known mean");
  tail->add_option("--gamma", gamma_args, "Tail probabilities (repeatable)");
  tail->add_option("--mu", mu, "Expected sum")->required();
  tail->add_option("--method", method_arg,
                   "Comma-separated methods (default exact,classic,pade2)");
  tail->add_option("--format", format_arg, "text|csv|md");
  tail->add_option("--digits", digits, "Significant figures");

  auto* ci = table->add_subcommand(
      "ci", "Confidence intervals for the mean from an observed sum");
  ci->add_option("--gamma", gamma_args, "Tail probabilities (repeatable)");
  ci->add_option("--mu-hat", mu_hat, "Observed sum")->required();
  ci->add_option("--method", method_arg,
                 "Comma-separated methods (default exact,pade2)");
  ci->add_option("--format", format_arg, "text|csv|md");
  ci->add_option("--digits", digits, "Significant figures");

  auto* invert_cmd = app.add_subcommand("invert", "Single bound query");
  auto* g_opt = invert_cmd->add_option("--gamma", gamma_args,
                                       "Tail probability");
  auto* lg_opt = invert_cmd->add_option("--log-gamma", log_gamma_arg,
                                        "Natural log of the tail probability");
  g_opt->excludes(lg_opt);
  auto* mu_opt = invert_cmd->add_option("--mu", mu, "Expected sum (prediction)");
  auto* muh_opt =
      invert_cmd->add_option("--mu-hat", mu_hat, "Observed sum (regression)");
  mu_opt->excludes(muh_opt);
  invert_cmd->add_option("--method", method_arg,
                         "exact|classic|pade2|pade3|pade4 (default pade2)");
  invert_cmd->add_option("--side", side_arg, "upper|lower");
  invert_cmd->add_option("--format", format_arg, "text|csv");
  invert_cmd->add_option("--digits", digits, "Significant figures");

  auto* verify = app.add_subcommand(
      "verify", "Check conservativeness against an explicit trial model");
  verify->add_option("--gamma", gamma_args, "Tail probability")->required();
  verify->add_option("--n", n, "Number of trials")->required();
  verify->add_option("--p", p, "Success probability per trial")->required();
  verify->add_option("--method", method_arg,
                     "Comma-separated methods (default exact,classic,pade2)");
  verify->add_option("--reps", reps, "Monte Carlo repetitions");
  verify->add_option("--seed", seed, "Monte Carlo seed");
  verify->add_option("--format", format_arg, "text|csv|md");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  auto methods_or = [&method_arg](const char* fallback) {
    return parse_methods(method_arg.empty() ? fallback : method_arg);
  };

  try {
    const TableFormat fmt = parse_format(format_arg);
    if (tail->parsed()) {
      std::cout << cmd_table_tail(parse_gammas(gamma_args), mu,
                                  methods_or("exact,classic,pade2"), digits)
                       .render(fmt);
      return 0;
    }
    if (ci->parsed()) {
      std::cout << cmd_table_ci(parse_gammas(gamma_args), mu_hat,
                                methods_or("exact,pade2"), digits)
                       .render(fmt);
      return 0;
    }
    if (invert_cmd->parsed()) {
      if ((gamma_args.empty() && log_gamma_arg.empty()) ||
          gamma_args.size() > 1) {
        throw std::invalid_argument(
            "invert needs exactly one of --gamma or --log-gamma");
      }
      if ((mu_opt->count() == 0) == (muh_opt->count() == 0)) {
        throw std::invalid_argument(
            "invert needs exactly one of --mu or --mu-hat");
      }
      const Mode mode =
          mu_opt->count() ? Mode::Prediction : Mode::Regression;
      const double scale = mode == Mode::Prediction ? mu : mu_hat;
      const double log_gamma = log_gamma_arg.empty()
                                   ? std::log(parse_gamma(gamma_args[0]))
                                   : std::stod(log_gamma_arg);
      const InvertRecord rec = cmd_invert(
          log_gamma, scale, mode,
          parse_method(method_arg.empty() ? "pade2" : method_arg),
          parse_side(side_arg));
      if (fmt == TableFormat::Csv) {
        std::cout << InvertRecord::csv_header() << "\n"
                  << rec.to_csv() << "\n";
      } else {
        std::cout << rec.to_text(digits);
      }
      return rec.status == "infeasible" ? 3 : 0;
    }
    if (verify->parsed()) {
      if (gamma_args.size() != 1) {
        throw std::invalid_argument("verify needs exactly one --gamma");
      }
      const VerifyReport report =
          cmd_verify(parse_gamma(gamma_args[0]), n, p,
                     methods_or("exact,classic,pade2"), reps, seed);
      print_verify(report, fmt);
      return report.all_conservative ? 0 : 2;
    }
  } catch (const infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
