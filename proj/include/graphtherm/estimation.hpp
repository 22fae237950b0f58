#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "graphtherm/graph.hpp"
#include "graphtherm/spectrum.hpp"
#include "graphtherm/thermal.hpp"

namespace graphtherm {

enum class MeasurementKind { EnergyLevel, Position };

std::string to_string(MeasurementKind kind);
MeasurementKind measurement_kind_from_string(const std::string& name);

/// Frequency table of i.i.d. measurement outcomes drawn from a Gibbs model.
/// Outcomes are level indices (energy) or vertex labels (position).
struct OutcomeSample {
  MeasurementKind kind = MeasurementKind::EnergyLevel;
  std::vector<long long> counts;
  long long shots = 0;
  double true_temperature = 0.0;
  std::uint64_t seed = 0;
};

struct EstimationTrial {
  double estimate = 0.0;
  double log_likelihood = 0.0;
  bool converged = false;
  int iterations = 0;
};

/// Deterministic given the seed: mt19937_64 seeded through splitmix64,
/// inverse-CDF draws from the level populations or p(j|T).
OutcomeSample sample_outcomes(const ThermalModel& m, MeasurementKind kind,
                              long long shots, std::uint64_t seed);

/// Maximum-likelihood temperature by golden-section search over the bracket
/// (relative tolerance 1e-8). Degenerate likelihoods are first-class
/// outcomes: a flat likelihood (zero-information sample) or a maximum pinned
/// at a bracket edge (e.g. all shots in the ground level) returns
/// converged = false with the edge value.
EstimationTrial mle_temperature(const OutcomeSample& sample, const Spectrum& s,
                                std::pair<double, double> bracket);

struct CrbReport {
  std::string descriptor;
  MeasurementKind kind = MeasurementKind::EnergyLevel;
  double true_temperature = 0.0;
  long long shots = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::pair<double, double> bracket{0.0, 0.0};

  double variance = 0.0;
  double mean_estimate = 0.0;
  int excluded_trials = 0;
  double fisher_quantum = 0.0;    // F_q at the true temperature
  double fisher_classical = 0.0;  // F_c at the true temperature
  double crb_quantum = 0.0;       // 1 / (M F_q)
  double crb_classical = 0.0;     // 1 / (M F_c)
  double var_mf_ratio = 0.0;      // Var * M * F for the measured kind
  std::string rng_name;
  std::vector<double> estimates;  // per converged trial, emission is flag-gated
};

/// Repeated sample -> MLE trials with per-trial seeds derived from the
/// master seed; estimator variance is reported against the Cramer-Rao
/// references 1/(M F_c) and 1/(M F_q). Requires trials >= 100.
CrbReport crb_experiment(const Graph& g, double temperature,
                         MeasurementKind kind, long long shots, int trials,
                         std::uint64_t seed);

}  // namespace graphtherm
