#include <doctest.h>

#include <cmath>
#include <memory>
#include <numeric>

#include "graphtherm/estimation.hpp"

using namespace graphtherm;

namespace {

ThermalModel model_of(const std::string& descriptor, double t) {
  return make_thermal(make_spectrum(build_graph(descriptor)), t);
}

double chi_square_uniform(const OutcomeSample& sample) {
  const double expected =
      static_cast<double>(sample.shots) / sample.counts.size();
  double chi2 = 0.0;
  for (long long c : sample.counts) {
    const double d = c - expected;
    chi2 += d * d / expected;
  }
  return chi2;
}

}  // namespace

TEST_CASE("sampling is deterministic under a fixed seed") {
  auto m = model_of("star:6", 1.2);
  auto a = sample_outcomes(m, MeasurementKind::Position, 5000, 42);
  auto b = sample_outcomes(m, MeasurementKind::Position, 5000, 42);
  CHECK(a.counts == b.counts);
  auto c = sample_outcomes(m, MeasurementKind::Position, 5000, 43);
  CHECK(a.counts != c.counts);
  CHECK(std::accumulate(a.counts.begin(), a.counts.end(), 0LL) == 5000);
}

TEST_CASE("flat-limit level frequencies: complete:3 at huge T") {
  auto m = model_of("complete:3", 1e9);
  const long long shots = 1000000;
  auto sample = sample_outcomes(m, MeasurementKind::EnergyLevel, shots, 7);
  REQUIRE(sample.counts.size() == 2);
  const double freq = static_cast<double>(sample.counts[1]) / shots;
  const double sigma = std::sqrt((2.0 / 3.0) * (1.0 / 3.0) / shots);
  CHECK(std::abs(freq - 2.0 / 3.0) < 3.0 * sigma);
}

TEST_CASE("circulant position sampling is uniform (chi-square at 1%)") {
  auto m = model_of("cycle:5", 0.8);
  auto sample = sample_outcomes(m, MeasurementKind::Position, 100000, 11);
  // 4 degrees of freedom, 1% critical value
  CHECK(chi_square_uniform(sample) < 13.2767);
}

TEST_CASE("empirical frequencies tighten at the 1/sqrt(M) rate") {
  auto m = model_of("complete:4", 2.0);
  const auto& pops = m.level_populations();
  for (long long shots : {1000LL, 100000LL}) {
    auto sample = sample_outcomes(m, MeasurementKind::EnergyLevel, shots, 5);
    double chi2 = 0.0;
    for (std::size_t o = 0; o < sample.counts.size(); ++o) {
      const double expected = pops[o] * shots;
      const double d = sample.counts[o] - expected;
      chi2 += d * d / expected;
    }
    CHECK(chi2 < 6.635);  // two levels: 1 dof, 1% critical value
  }
}

TEST_CASE("MLE recovers the true temperature on informative samples") {
  Graph g = build_graph("complete:8");
  auto s = make_spectrum(g);
  auto m = make_thermal(s, 1.0);
  auto sample = sample_outcomes(m, MeasurementKind::EnergyLevel, 100000, 99);
  auto trial = mle_temperature(sample, s, {0.1, 10.0});
  CHECK(trial.converged);
  CHECK(trial.estimate > 0.95);
  CHECK(trial.estimate < 1.05);
}

TEST_CASE("all-ground samples pin the estimate to the bracket edge") {
  auto s = make_spectrum(build_graph("complete:5"));
  OutcomeSample sample;
  sample.kind = MeasurementKind::EnergyLevel;
  sample.counts = {500, 0};
  sample.shots = 500;
  sample.true_temperature = 0.2;
  auto trial = mle_temperature(sample, s, {0.05, 5.0});
  CHECK_FALSE(trial.converged);
  CHECK(trial.estimate == 0.05);
}

TEST_CASE("zero-information samples are first-class outcomes") {
  Graph g = build_graph("cycle:6");
  auto s = make_spectrum(g);
  auto m = make_thermal(s, 1.0);
  auto sample = sample_outcomes(m, MeasurementKind::Position, 2000, 3);
  auto trial = mle_temperature(sample, s, {0.1, 10.0});
  CHECK_FALSE(trial.converged);
}

TEST_CASE("MLE input validation") {
  auto s = make_spectrum(build_graph("path:3"));
  OutcomeSample sample;
  sample.kind = MeasurementKind::EnergyLevel;
  sample.counts = {1, 0, 0};
  sample.shots = 1;
  CHECK_THROWS_AS(mle_temperature(sample, s, {1.0, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(mle_temperature(sample, s, {-1.0, 2.0}), std::invalid_argument);
  sample.shots = 0;
  CHECK_THROWS_AS(mle_temperature(sample, s, {0.1, 1.0}), std::invalid_argument);
}

TEST_CASE("CRB experiment on the complete graph") {
  Graph g = build_graph("complete:8");
  auto report = crb_experiment(g, 1.0, MeasurementKind::EnergyLevel, 5000, 150, 7);
  CHECK(report.excluded_trials == 0);
  CHECK(report.rng_name == "mt19937_64/splitmix64");
  // asymptotic MLE efficiency: Var * M * F_q near 1, generous band
  CHECK(report.var_mf_ratio > 0.7);
  CHECK(report.var_mf_ratio < 1.4);
  // quantum CRB within statistical noise
  CHECK(report.variance >=
        report.crb_quantum * (1.0 - 3.0 / std::sqrt(150.0)));
  CHECK(report.crb_quantum ==
        doctest::Approx(1.0 / (5000.0 * report.fisher_quantum)));
  // determinism
  auto again = crb_experiment(g, 1.0, MeasurementKind::EnergyLevel, 5000, 150, 7);
  CHECK(again.variance == report.variance);
  CHECK(again.mean_estimate == report.mean_estimate);
}

TEST_CASE("energy measurements beat position measurements on the star") {
  Graph g = build_graph("star:8");
  auto energy =
      crb_experiment(g, 1.0, MeasurementKind::EnergyLevel, 4000, 150, 21);
  auto position =
      crb_experiment(g, 1.0, MeasurementKind::Position, 4000, 150, 21);
  CHECK(energy.fisher_quantum >= position.fisher_classical);
  CHECK(energy.variance <= position.variance);
}

TEST_CASE("experiment preconditions") {
  Graph g = build_graph("complete:4");
  CHECK_THROWS_AS(
      crb_experiment(g, 1.0, MeasurementKind::EnergyLevel, 100, 99, 1),
      std::invalid_argument);
  CHECK_THROWS_AS(
      crb_experiment(g, 0.0, MeasurementKind::EnergyLevel, 100, 100, 1),
      std::invalid_argument);
}

TEST_CASE("measurement kind names") {
  CHECK(to_string(MeasurementKind::EnergyLevel) == "energy");
  CHECK(to_string(MeasurementKind::Position) == "position");
  CHECK(measurement_kind_from_string("energy") == MeasurementKind::EnergyLevel);
  CHECK(measurement_kind_from_string("position") == MeasurementKind::Position);
  CHECK_THROWS_AS(measurement_kind_from_string("momentum"), std::invalid_argument);
}
