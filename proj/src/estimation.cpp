#include "graphtherm/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "graphtherm/numerics.hpp"

namespace graphtherm {

namespace {

constexpr double kMleRelTol = 1e-8;
constexpr const char* kRngName = "mt19937_64/splitmix64";

double uniform_unit(std::mt19937_64& rng) {
  // 53-bit mantissa draw; pinned to the generator output, not to
  // distribution internals, so streams replay identically everywhere.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> outcome_distribution(const ThermalModel& m,
                                         MeasurementKind kind) {
  if (kind == MeasurementKind::EnergyLevel) return m.level_populations();
  return position_probabilities(m);
}

class LikelihoodEvaluator {
 public:
  LikelihoodEvaluator(const OutcomeSample& sample, const Spectrum& s)
      : sample_(sample), spectrum_(s) {
    if (sample.kind == MeasurementKind::Position && !s.has_eigenvectors()) {
      throw std::invalid_argument("position likelihood needs eigenvectors");
    }
  }

  double operator()(double t) const {
    ThermalModel model(
        std::shared_ptr<const Spectrum>(&spectrum_, [](const Spectrum*) {}), t);
    const auto probs = outcome_distribution(model, sample_.kind);
    if (sample_.counts.size() > probs.size()) {
      throw std::invalid_argument("sample outcome space exceeds the model's");
    }
    double ll = 0.0;
    for (std::size_t o = 0; o < sample_.counts.size(); ++o) {
      if (sample_.counts[o] == 0) continue;
      ll += static_cast<double>(sample_.counts[o]) * std::log(probs[o]);
    }
    return ll;
  }

 private:
  const OutcomeSample& sample_;
  const Spectrum& spectrum_;
};

}  // namespace

std::string to_string(MeasurementKind kind) {
  return kind == MeasurementKind::EnergyLevel ? "energy" : "position";
}

MeasurementKind measurement_kind_from_string(const std::string& name) {
  if (name == "energy") return MeasurementKind::EnergyLevel;
  if (name == "position") return MeasurementKind::Position;
  throw std::invalid_argument("measurement kind must be 'energy' or 'position'");
}

OutcomeSample sample_outcomes(const ThermalModel& m, MeasurementKind kind,
                              long long shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  const auto probs = outcome_distribution(m, kind);
  std::vector<double> cumulative(probs.size());
  double running = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    running += probs[i];
    cumulative[i] = running;
  }
  cumulative.back() = 1.0;

  OutcomeSample sample;
  sample.kind = kind;
  sample.counts.assign(probs.size(), 0);
  sample.shots = shots;
  sample.true_temperature = m.temperature();
  sample.seed = seed;

  std::mt19937_64 rng(splitmix64(seed));
  for (long long i = 0; i < shots; ++i) {
    double u = uniform_unit(rng);
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    auto idx = std::min<std::size_t>(it - cumulative.begin(), probs.size() - 1);
    ++sample.counts[idx];
  }
  return sample;
}

EstimationTrial mle_temperature(const OutcomeSample& sample, const Spectrum& s,
                                std::pair<double, double> bracket) {
  const auto [lo, hi] = bracket;
  if (!(lo > 0) || !(hi > lo)) {
    throw std::invalid_argument("MLE bracket must satisfy 0 < lo < hi");
  }
  if (sample.shots < 1) throw std::invalid_argument("sample is empty");

  LikelihoodEvaluator loglik(sample, s);

  EstimationTrial trial;
  // Flat likelihood means the measurement carries no temperature
  // information (circulant position sampling); report it, don't fail.
  const double probe_lo = loglik(lo);
  const double probe_mid = loglik(std::sqrt(lo * hi));
  const double probe_hi = loglik(hi);
  const double spread = std::max({probe_lo, probe_mid, probe_hi}) -
                        std::min({probe_lo, probe_mid, probe_hi});
  if (spread <= 1e-12 * (1.0 + std::abs(probe_mid))) {
    trial.estimate = std::sqrt(lo * hi);
    trial.log_likelihood = probe_mid;
    trial.converged = false;
    return trial;
  }

  auto result = golden_section_max([&](double t) { return loglik(t); }, lo, hi,
                                   kMleRelTol);
  trial.estimate = result.x;
  trial.log_likelihood = result.value;
  trial.iterations = result.iterations;
  // A maximum attained at (or shared with) a bracket edge means the sample
  // cannot pin the temperature down; e.g. all shots in the ground level
  // leave the likelihood flat over the whole low-T side.
  const double edge_tol = 1e-9 * (1.0 + std::abs(result.value));
  const double span = hi - lo;
  if (probe_lo >= result.value - edge_tol || result.x - lo <= 1e-6 * span) {
    trial.estimate = lo;
    trial.log_likelihood = probe_lo;
    trial.converged = false;
  } else if (probe_hi >= result.value - edge_tol ||
             hi - result.x <= 1e-6 * span) {
    trial.estimate = hi;
    trial.log_likelihood = probe_hi;
    trial.converged = false;
  } else {
    trial.converged = true;
  }
  return trial;
}

CrbReport crb_experiment(const Graph& g, double temperature,
                         MeasurementKind kind, long long shots, int trials,
                         std::uint64_t seed) {
  if (trials < 100) throw std::invalid_argument("crb_experiment needs >= 100 trials");
  if (!(temperature > 0)) throw std::invalid_argument("temperature must be positive");

  auto spectrum = std::make_shared<const Spectrum>(make_spectrum(g));
  ThermalModel model(spectrum, temperature);

  CrbReport report;
  report.descriptor = g.family_name();
  report.kind = kind;
  report.true_temperature = temperature;
  report.shots = shots;
  report.trials = trials;
  report.seed = seed;
  report.bracket = {temperature / 10.0, temperature * 10.0};
  report.rng_name = kRngName;
  report.fisher_quantum = qfi(model);
  report.fisher_classical = fi_position(model);
  report.crb_quantum = 1.0 / (static_cast<double>(shots) * report.fisher_quantum);
  report.crb_classical =
      1.0 / (static_cast<double>(shots) * report.fisher_classical);

  std::vector<EstimationTrial> results(trials);
  parallel_for(trials, [&](int i) {
    auto sample = sample_outcomes(model, kind, shots, derive_seed(seed, i));
    results[i] = mle_temperature(sample, *spectrum, report.bracket);
  });

  double sum = 0.0;
  int converged = 0;
  for (const auto& trial : results) {
    if (!trial.converged) continue;
    report.estimates.push_back(trial.estimate);
    sum += trial.estimate;
    ++converged;
  }
  report.excluded_trials = trials - converged;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (converged >= 2) {
    report.mean_estimate = sum / converged;
    double ss = 0.0;
    for (double estimate : report.estimates) {
      double d = estimate - report.mean_estimate;
      ss += d * d;
    }
    report.variance = ss / (converged - 1);
    const double fisher = kind == MeasurementKind::EnergyLevel
                              ? report.fisher_quantum
                              : report.fisher_classical;
    report.var_mf_ratio =
        report.variance * static_cast<double>(shots) * fisher;
  } else {
    report.mean_estimate = nan;
    report.variance = nan;
    report.var_mf_ratio = nan;
  }
  return report;
}

}  // namespace graphtherm
