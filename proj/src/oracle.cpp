#include "chernoff/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <thread>
#include <vector>

#include "chernoff/inversion.hpp"

namespace chernoff {

namespace {

constexpr std::int64_t kExactTermCap = 100000000;  // 1e8 terms per query

void check_probability(double p) {
  if (!(p >= 0.0) || !(p <= 1.0)) {
    throw std::invalid_argument("success probability must lie in [0, 1], got " +
                                std::to_string(p));
  }
}

// P(X = i) in log space; requires p strictly inside (0, 1). Extended
// precision throughout: the lgamma values reach ~1e7 for n = 1e6, where
// double rounding alone would put ~1e-11 of relative error into each term
// and break the 1e-12 complementarity contract.
long double log_pmf(std::int64_t n, long double lgamma_n1, long double log_p,
                    long double log_q, std::int64_t i) {
  return lgamma_n1 - std::lgamma(static_cast<long double>(i) + 1.0L) -
         std::lgamma(static_cast<long double>(n - i) + 1.0L) +
         static_cast<long double>(i) * log_p +
         static_cast<long double>(n - i) * log_q;
}

// Sum of pmf terms over [first, last], max-shifted so the largest term maps
// to exp(0): robust down to tail masses around 1e-300.
double tail_sum(std::int64_t n, double p, std::int64_t first, std::int64_t last) {
  if (first > last) return 0.0;
  const long double log_p = std::log(static_cast<long double>(p));
  const long double log_q = std::log1p(-static_cast<long double>(p));
  const long double lgamma_n1 = std::lgamma(static_cast<long double>(n) + 1.0L);
  // The pmf restricted to [first, last] peaks at the clamped mode.
  const std::int64_t mode = std::clamp(
      static_cast<std::int64_t>(std::floor((static_cast<double>(n) + 1.0) * p)),
      first, last);
  const long double shift = log_pmf(n, lgamma_n1, log_p, log_q, mode);
  long double sum = 0.0L;
  for (std::int64_t i = first; i <= last; ++i) {
    sum += std::exp(log_pmf(n, lgamma_n1, log_p, log_q, i) - shift);
  }
  const long double value = std::exp(shift + std::log(sum));
  return static_cast<double>(std::min(value, 1.0L));
}

void check_tail_args(std::int64_t n, double p, std::int64_t k,
                     std::int64_t k_min, std::int64_t k_max) {
  if (n < 1) {
    throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
  }
  if (n > kExactTermCap) {
    throw std::invalid_argument("n exceeds the exact-summation cap of 1e8; "
                                "use the Monte Carlo oracle");
  }
  check_probability(p);
  if (k < k_min || k > k_max) {
    throw std::invalid_argument("k = " + std::to_string(k) +
                                " out of range [" + std::to_string(k_min) +
                                ", " + std::to_string(k_max) + "]");
  }
}

// splitmix64 output mix (Steele, Lea & Flood; Vigna's fixed-increment
// variant). Bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Per-rep substream keyed by (seed, rep index): the stream state depends
// only on the key, never on how reps are scheduled, so any partition of the
// rep range reproduces the single-worker result bit for bit.
class RepStream {
 public:
  RepStream(std::uint64_t seed, std::uint64_t rep)
      : state_(mix64(seed ^ (0xD1B54A32D192ED03ull +
                             0x9E3779B97F4A7C15ull * (rep + 1)))) {}

  double next_unit() {  // uniform in [0, 1)
    state_ += 0x9E3779B97F4A7C15ull;
    return static_cast<double>(mix64(state_) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

std::uint64_t count_hits(const TrialModel& model, double threshold, Side side,
                         std::uint64_t seed, std::uint64_t rep_begin,
                         std::uint64_t rep_end) {
  const std::int64_t n = model.size();
  std::uint64_t hits = 0;
  for (std::uint64_t rep = rep_begin; rep < rep_end; ++rep) {
    RepStream stream(seed, rep);
    std::int64_t successes = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      successes += stream.next_unit() < model.prob(i);
    }
    const double sum = static_cast<double>(successes);
    hits += side == Side::Upper ? sum >= threshold : sum <= threshold;
  }
  return hits;
}

}  // namespace

TrialModel TrialModel::identical(std::int64_t n, double p) {
  if (n < 1) {
    throw std::invalid_argument("trial count must be >= 1, got " +
                                std::to_string(n));
  }
  check_probability(p);
  TrialModel m;
  m.n_ = n;
  m.p_ = p;
  m.identical_ = true;
  m.mean_ = static_cast<double>(n) * p;
  return m;
}

TrialModel TrialModel::heterogeneous(std::vector<double> probs) {
  if (probs.empty()) {
    throw std::invalid_argument("trial model needs at least one trial");
  }
  double mean = 0.0;
  for (double p : probs) {
    check_probability(p);
    mean += p;
  }
  TrialModel m;
  m.n_ = static_cast<std::int64_t>(probs.size());
  m.probs_ = std::move(probs);
  m.identical_ = false;
  m.mean_ = mean;
  return m;
}

double TrialModel::identical_p() const {
  if (!identical_) {
    throw std::logic_error("identical_p() on a heterogeneous model");
  }
  return p_;
}

double binomial_tail_upper(std::int64_t n, double p, std::int64_t k) {
  check_tail_args(n, p, k, 0, n + 1);
  if (k <= 0) return 1.0;
  if (k > n) return 0.0;
  if (p == 0.0) return 0.0;  // k >= 1 here
  if (p == 1.0) return 1.0;  // k <= n here
  return tail_sum(n, p, k, n);
}

double binomial_tail_lower(std::int64_t n, double p, std::int64_t k) {
  check_tail_args(n, p, k, -1, n);
  if (k < 0) return 0.0;
  if (k >= n) return 1.0;
  if (p == 0.0) return 1.0;
  if (p == 1.0) return 0.0;  // k < n here
  return tail_sum(n, p, 0, k);
}

SimResult simulate_tail_frequency(const TrialModel& model, double threshold,
                                  Side side, std::uint64_t reps,
                                  std::uint64_t seed, unsigned workers) {
  if (side != Side::Upper && side != Side::Lower) {
    throw std::invalid_argument("simulation sides are upper or lower");
  }
  if (reps < 1) {
    throw std::invalid_argument("reps must be >= 1");
  }
  if (workers == 0) {
    workers = std::max(1u, std::thread::hardware_concurrency());
  }
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, reps));

  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = reps / workers;
  const std::uint64_t extra = reps % workers;
  std::uint64_t begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
    pool.emplace_back([&model, threshold, side, seed, begin, end, w, &partial] {
      partial[w] = count_hits(model, threshold, side, seed, begin, end);
    });
    begin = end;
  }
  for (auto& t : pool) t.join();

  std::uint64_t hits = 0;
  for (std::uint64_t h : partial) hits += h;

  SimResult r;
  r.hits = hits;
  r.reps = reps;
  r.frequency = static_cast<double>(hits) / static_cast<double>(reps);
  r.std_error =
      std::sqrt(r.frequency * (1.0 - r.frequency) / static_cast<double>(reps));
  return r;
}

TailCheckReport check_conservative(double gamma, const TrialModel& model,
                                   Method method, Side side,
                                   std::uint64_t reps, std::uint64_t seed) {
  if (side != Side::Upper && side != Side::Lower) {
    throw std::invalid_argument("conservativeness checks are one-sided");
  }
  const double mu = model.mean();
  const double beta = beta_from(gamma, mu);
  const ExponentKind kind = make_kind(Mode::Prediction, side == Side::Upper);
  const DeltaResult dr = invert(kind, method, beta);

  TailCheckReport report;
  report.requested_gamma = gamma;
  report.side = side;
  report.method = method;
  report.delta = dr.delta;
  if (side == Side::Upper) {
    report.threshold_real = (1.0 + dr.delta) * mu;
    report.threshold_count =
        static_cast<std::int64_t>(std::ceil(report.threshold_real));
  } else {
    report.threshold_real = (1.0 - dr.delta) * mu;
    report.threshold_count =
        static_cast<std::int64_t>(std::floor(report.threshold_real));
  }

  const std::int64_t n = model.size();
  if (model.is_identical() && n <= kExactTermCap) {
    const double p = model.identical_p();
    double achieved;
    if (side == Side::Upper) {
      achieved = binomial_tail_upper(n, p, std::min(report.threshold_count,
                                                    n + 1));
    } else {
      // A deviation factor >= 1 puts the threshold below 0: the lower-tail
      // event is empty and the bound holds trivially.
      achieved = binomial_tail_lower(n, p, std::max<std::int64_t>(
                                               report.threshold_count, -1));
    }
    report.achieved_probability = achieved;
    report.exact = true;
    report.std_error = 0.0;
    report.conservative = achieved <= gamma;
  } else {
    const SimResult sim =
        simulate_tail_frequency(model, report.threshold_real, side, reps, seed);
    report.achieved_probability = sim.frequency;
    report.exact = false;
    report.std_error = sim.std_error;
    report.conservative = sim.frequency <= gamma + 3.0 * sim.std_error;
  }
  return report;
}

}  // namespace chernoff
