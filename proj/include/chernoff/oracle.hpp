#ifndef CHERNOFF_ORACLE_HPP
#define CHERNOFF_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "chernoff/types.hpp"

namespace chernoff {

// Explicit population of independent 0/1 trials. Identical-trial models
// (n, p) admit exact tail computation; heterogeneous ones are verified by
// simulation only.
class TrialModel {
 public:
  static TrialModel identical(std::int64_t n, double p);
  static TrialModel heterogeneous(std::vector<double> probs);

  std::int64_t size() const { return n_; }
  bool is_identical() const { return identical_; }
  double identical_p() const;
  double prob(std::int64_t i) const { return identical_ ? p_ : probs_[i]; }
  double mean() const { return mean_; }

 private:
  TrialModel() = default;
  std::int64_t n_ = 0;
  double p_ = 0.0;
  std::vector<double> probs_;
  bool identical_ = true;
  double mean_ = 0.0;
};

// Exact binomial tails P(X >= k) / P(X <= k) for X ~ Binomial(n, p),
// computed by log-space term accumulation: each term is
// lgamma-based log C(n,i) + i*log p + (n-i)*log(1-p), and the sum is
// shifted by the largest term so probabilities down to ~1e-300 come out
// without underflow. n is capped at 1e8 terms per query.
double binomial_tail_upper(std::int64_t n, double p, std::int64_t k);
double binomial_tail_lower(std::int64_t n, double p, std::int64_t k);

struct SimResult {
  double frequency;
  double std_error;  // sqrt(f*(1-f)/reps)
  std::uint64_t hits;
  std::uint64_t reps;
};

// Monte Carlo estimate of P(sum >= threshold) (Upper) or P(sum <= threshold)
// (Lower). Each rep draws its trials from a counter-based substream keyed by
// (seed, rep index), so the result is bit-identical for a given seed no
// matter how the reps are partitioned across workers. workers = 0 picks the
// hardware concurrency.
SimResult simulate_tail_frequency(const TrialModel& model, double threshold,
                                  Side side, std::uint64_t reps,
                                  std::uint64_t seed, unsigned workers = 0);

struct TailCheckReport {
  double requested_gamma;
  double achieved_probability;
  bool conservative;
  bool exact;        // exact binomial tail vs Monte Carlo estimate
  double std_error;  // 0 when exact
  Side side;
  Method method;
  double delta;
  double threshold_real;         // (1 + dU)*mu or (1 - dL)*mu
  std::int64_t threshold_count;  // ceil for Upper, floor for Lower
};

// End-to-end conservativeness check of one method on one side: invert at
// mu = model mean, convert to the integer tail threshold, evaluate the tail
// exactly (identical-trial models up to the term cap) or by simulation, and
// compare against gamma. Exact checks set `conservative` from
// achieved <= gamma; Monte Carlo checks allow 3 standard errors of slack.
TailCheckReport check_conservative(double gamma, const TrialModel& model,
                                   Method method, Side side,
                                   std::uint64_t reps = 1000000,
                                   std::uint64_t seed = 0x5eedu);

}  // namespace chernoff

#endif  // CHERNOFF_ORACLE_HPP
