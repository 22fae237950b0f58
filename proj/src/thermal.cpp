#include "graphtherm/thermal.hpp"

#include <cmath>
#include <stdexcept>

#include "graphtherm/numerics.hpp"

namespace graphtherm {

namespace {

// 0/0 guard for position sums: a vanishing p(j|T) with a vanishing numerator
// would mean an unreachable vertex, impossible for connected graphs, so a
// live numerator over a dead probability is a hard error.
constexpr double kProbabilityFloor = 1e-300;
constexpr double kNumeratorFloor = 1e-150;

Eigen::VectorXd flat_state_weights(const ThermalModel& m) {
  const Spectrum& s = m.spectrum();
  Eigen::VectorXd w(s.dimension());
  for (int n = 0; n < s.level_count(); ++n) {
    for (int k = s.level_offset(n); k < s.level_offset(n + 1); ++k) {
      w(k) = m.state_weight(n);
    }
  }
  return w;
}

Eigen::VectorXd flat_energies(const Spectrum& s) {
  Eigen::VectorXd e(s.dimension());
  for (int n = 0; n < s.level_count(); ++n) {
    for (int k = s.level_offset(n); k < s.level_offset(n + 1); ++k) {
      e(k) = s.levels()[n].energy;
    }
  }
  return e;
}

}  // namespace

ThermalModel::ThermalModel(std::shared_ptr<const Spectrum> spectrum,
                           double temperature)
    : spectrum_(std::move(spectrum)), temperature_(temperature) {
  if (!spectrum_) throw std::invalid_argument("thermal model needs a spectrum");
  if (!(temperature_ > 0.0)) {
    throw std::invalid_argument("temperature must be positive (T = 0 is served "
                                "by zero_temperature_limit)");
  }
  if (spectrum_->levels().front().energy != 0.0) {
    throw std::invalid_argument("spectrum must be anchored at E_0 = 0");
  }
  const auto& levels = spectrum_->levels();
  state_weights_.resize(levels.size());
  populations_.resize(levels.size());
  z_ = 0.0;
  for (std::size_t n = 0; n < levels.size(); ++n) {
    // E_0 = 0 carries the largest Boltzmann factor, so no exponent shift is
    // needed; underflow of high levels at tiny T is benign.
    state_weights_[n] = std::exp(-levels[n].energy / temperature_);
    z_ += levels[n].degeneracy * state_weights_[n];
  }
  for (std::size_t n = 0; n < levels.size(); ++n) {
    state_weights_[n] /= z_;
    populations_[n] = levels[n].degeneracy * state_weights_[n];
  }
}

ThermalModel::ThermalModel(Spectrum spectrum, double temperature)
    : ThermalModel(std::make_shared<const Spectrum>(std::move(spectrum)),
                   temperature) {}

ThermalModel make_thermal(Spectrum spectrum, double temperature) {
  return ThermalModel(std::move(spectrum), temperature);
}

ThermalModel make_thermal(std::shared_ptr<const Spectrum> spectrum,
                          double temperature) {
  return ThermalModel(std::move(spectrum), temperature);
}

double energy_moment(const ThermalModel& m, int p) {
  if (p != 1 && p != 2) {
    throw std::invalid_argument("energy_moment supports p = 1 or 2");
  }
  const auto& levels = m.spectrum().levels();
  double sum = 0.0;
  for (std::size_t n = 0; n < levels.size(); ++n) {
    double e = levels[n].energy;
    sum += m.level_populations()[n] * (p == 1 ? e : e * e);
  }
  return sum;
}

double qfi(const ThermalModel& m) {
  const double t = m.temperature();
  const double m1 = energy_moment(m, 1);
  const double m2 = energy_moment(m, 2);
  const double variance = std::max(0.0, m2 - m1 * m1);
  return variance / (t * t * t * t);
}

std::vector<double> position_probabilities(const ThermalModel& m) {
  const Spectrum& s = m.spectrum();
  Eigen::VectorXd p = s.site_weights() * flat_state_weights(m);
  return {p.data(), p.data() + p.size()};
}

std::vector<double> energy_weighted_profile(const ThermalModel& m) {
  const Spectrum& s = m.spectrum();
  Eigen::VectorXd weights = flat_state_weights(m).cwiseProduct(flat_energies(s));
  Eigen::VectorXd h = s.site_weights() * weights;
  return {h.data(), h.data() + h.size()};
}

double energy_weighted(const ThermalModel& m, int vertex) {
  if (vertex < 0 || vertex >= m.spectrum().dimension()) {
    throw std::invalid_argument("vertex out of range");
  }
  return energy_weighted_profile(m)[vertex];
}

namespace {

double position_fisher_sum(const std::vector<double>& p,
                           const std::vector<double>& numerators) {
  double sum = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] < kProbabilityFloor) {
      if (std::abs(numerators[j]) < kNumeratorFloor) continue;
      throw std::runtime_error("vanishing position probability with nonzero "
                               "numerator; graph is not connected?");
    }
    sum += numerators[j] * numerators[j] / p[j];
  }
  return sum;
}

}  // namespace

double fi_position(const ThermalModel& m) {
  const double t = m.temperature();
  const auto p = position_probabilities(m);
  const auto h = energy_weighted_profile(m);
  const double mean = energy_moment(m, 1);
  const double sum = position_fisher_sum(p, h);
  // Cauchy-Schwarz guarantees sum >= <H>^2; clip the roundoff residue.
  return std::max(0.0, (sum - mean * mean)) / (t * t * t * t);
}

double fi_position_from_derivative(const ThermalModel& m) {
  const double t = m.temperature();
  const auto p = position_probabilities(m);
  const auto h = energy_weighted_profile(m);
  const double mean = energy_moment(m, 1);
  std::vector<double> dp(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    dp[j] = (h[j] - mean * p[j]) / (t * t);
  }
  return position_fisher_sum(p, dp);
}

double qfi_low_temperature(double e1, int g1, double temperature) {
  if (!(e1 > 0)) throw std::invalid_argument("E_1 must be positive");
  if (g1 < 1) throw std::invalid_argument("g_1 must be >= 1");
  if (!(temperature > 0)) throw std::invalid_argument("temperature must be positive");
  const double x = e1 / temperature;
  const double ex = std::exp(-x);
  const double z = 1.0 + g1 * ex;
  const double f = g1 * x * x * x * x * ex / (z * z);
  return f / (e1 * e1);
}

double solve_xmax(int g1) {
  if (g1 < 1) throw std::invalid_argument("g_1 must be >= 1");
  // e^x (x-4) - g1 (x+4) changes sign exactly once for x > 4.
  auto f = [g1](double x) { return std::exp(x) * (x - 4.0) - g1 * (x + 4.0); };
  const double lo = 4.0 + 1e-12;
  const double hi = 4.0 + 60.0 + std::log(static_cast<double>(g1));
  return bisect_root(f, lo, hi, 1e-12);
}

double fi_low_temperature(const Spectrum& s, double temperature) {
  if (!(temperature > 0)) throw std::invalid_argument("temperature must be positive");
  if (s.level_count() < 2) {
    throw std::invalid_argument("low-T FI needs at least two levels");
  }
  const auto [e1, g1] = algebraic_connectivity(s);
  const int n = s.dimension();
  const auto& w = s.site_weights();
  const int off = s.level_offset(1);
  // eta_j: total weight of vertex j inside the first-excited-level eigenspace.
  std::vector<double> eta(n, 0.0);
  for (int j = 0; j < n; ++j) {
    for (int k = off; k < off + g1; ++k) eta[j] += w(j, k);
  }
  const double boltz = std::exp(-e1 / temperature);
  const double z = 1.0 + g1 * boltz;
  double bracket = 0.0;
  for (int j = 0; j < n; ++j) {
    bracket += eta[j] * eta[j] / (1.0 / n + boltz * eta[j]);
  }
  bracket -= static_cast<double>(g1) * g1 / z;
  const double t4 = temperature * temperature * temperature * temperature;
  return e1 * e1 * boltz * boltz / (z * t4) * bracket;
}

double qfi_high_temperature(const DegreeStats& stats, int order,
                            double temperature) {
  if (!(temperature > 0)) throw std::invalid_argument("temperature must be positive");
  const double n = order;
  const double m = static_cast<double>(stats.edge_count);
  const double t4 = std::pow(temperature, 4);
  return (static_cast<double>(stats.degree_square_sum) +
          2.0 * m * (1.0 - 2.0 * m / n)) /
         (n * t4);
}

std::pair<double, double> qfi_high_temperature_bounds(int order, long long edges,
                                                      double temperature) {
  if (!(temperature > 0)) throw std::invalid_argument("temperature must be positive");
  if (edges < order - 1) {
    throw std::invalid_argument("bounds assume a connected graph (M >= N-1)");
  }
  const double n = order;
  const double m = static_cast<double>(edges);
  const double t4 = std::pow(temperature, 4);
  const double lower = 2.0 * m / (n * t4);
  const double upper =
      m / t4 * (1.0 - 2.0 * m * (n - 2.0) / (n * n * (n - 1.0)));
  return {lower, upper};
}

double fi_high_temperature(const DegreeStats& stats, int order,
                           double temperature) {
  if (!(temperature > 0)) throw std::invalid_argument("temperature must be positive");
  const long long numerator = order * stats.degree_square_sum -
                              4 * stats.edge_count * stats.edge_count;
  const double n = order;
  const double t4 = std::pow(temperature, 4);
  return static_cast<double>(numerator) / (n * n * t4);
}

double ratio_limit(const DegreeStats& stats, int order) {
  // Integer discriminant N sum d^2 - 4M^2 vanishes exactly iff regular.
  const long long disc = order * stats.degree_square_sum -
                         4 * stats.edge_count * stats.edge_count;
  if (disc == 0) return 0.0;
  const double lambda =
      2.0 * static_cast<double>(stats.edge_count) * order / static_cast<double>(disc);
  return 1.0 / (1.0 + lambda);
}

double qfi_exact_bipartite(int n1, int n2, double temperature) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("partite sets need >= 1 vertex");
  if (!(temperature > 0)) throw std::invalid_argument("temperature must be positive");
  const double t = temperature;
  const double t4 = t * t * t * t;
  const double a = n1, b = n2, n = a + b;
  const double z = 1.0 + (b - 1.0) * std::exp(-a / t) +
                   (a - 1.0) * std::exp(-b / t) + std::exp(-n / t);
  if (n1 == 1) {
    // Three-level star form S_N = K_{1,N-1}.
    const double sum = (n - 2.0) * std::exp(-1.0 / t) +
                       (n - 2.0) * (n - 1.0) * (n - 1.0) * std::exp(-(n + 1.0) / t) +
                       n * n * std::exp(-n / t);
    return sum / (t4 * z * z);
  }
  // Four-level closed form, expanded so that every exponent is negative.
  const double k = a * a * a * (b - 1.0) - b * b * (b - 2.0) +
                   a * b * b * (b + 1.0) - a * a * (2.0 * b * b - b - 2.0);
  const double sum = a * a * (b - 1.0) * std::exp(-a / t) +
                     b * b * (a - 1.0) * std::exp(-b / t) +
                     a * a * (a - 1.0) * std::exp(-(a + 2.0 * b) / t) +
                     b * b * (b - 1.0) * std::exp(-(2.0 * a + b) / t) +
                     k * std::exp(-n / t);
  return sum / (t4 * z * z);
}

double qfi_exact_complete(int order, double temperature) {
  if (order < 2) throw std::invalid_argument("complete graph requires N >= 2");
  if (!(temperature > 0)) throw std::invalid_argument("temperature must be positive");
  const double n = order;
  const double t = temperature;
  const double u = std::exp(-n / t);
  const double z = 1.0 + (n - 1.0) * u;
  return n * n * (n - 1.0) * u / (t * t * t * t * z * z);
}

Eigen::MatrixXcd gibbs_position_matrix(const ThermalModel& m) {
  const Spectrum& s = m.spectrum();
  const Eigen::VectorXd w = flat_state_weights(m);
  const auto& v = s.eigenvectors();
  return v * w.asDiagonal() * v.adjoint();
}

double coherence_l1_normalized(const Eigen::MatrixXcd& rho) {
  const auto n = rho.rows();
  if (rho.cols() != n) throw std::invalid_argument("density matrix must be square");
  if (n < 2) throw std::invalid_argument("coherence is undefined for N = 1");
  double sum = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      if (j != k) sum += std::abs(rho(j, k));
    }
  }
  return sum / static_cast<double>(n - 1);
}

double coherence_complete(int order, double temperature) {
  if (order < 2) throw std::invalid_argument("complete graph requires N >= 2");
  if (!(temperature > 0)) throw std::invalid_argument("temperature must be positive");
  const double n = order;
  const double u = std::exp(-n / temperature);
  return std::abs(1.0 - u) / (1.0 + (n - 1.0) * u);
}

std::pair<double, double> complete_qfi_coherence_identity(int order,
                                                          double temperature) {
  const double n = order;
  const double t = temperature;
  const double lhs =
      t * t * t * t * qfi_exact_complete(order, t) / (n - 1.0);
  const double c = coherence_complete(order, t);
  const double rhs = (1.0 - c) * (1.0 + (n - 1.0) * c);
  return {lhs, rhs};
}

ZeroTemperatureLimit zero_temperature_limit() { return {}; }

Eigen::MatrixXd ground_state_density(int order) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  return Eigen::MatrixXd::Constant(order, order, 1.0 / order);
}

FisherReport fisher_report(const DegreeStats& stats,
                           const std::shared_ptr<const Spectrum>& s,
                           double temperature) {
  ThermalModel model(s, temperature);
  const auto [e1, g1] = algebraic_connectivity(*s);
  const int n = s->dimension();
  FisherReport report;
  report.temperature = temperature;
  report.qfi = qfi(model);
  report.fi_position = fi_position(model);
  report.qfi_low = qfi_low_temperature(e1, g1, temperature);
  report.qfi_high = qfi_high_temperature(stats, n, temperature);
  report.fi_high = fi_high_temperature(stats, n, temperature);
  std::tie(report.qfi_high_lower, report.qfi_high_upper) =
      qfi_high_temperature_bounds(n, stats.edge_count, temperature);
  report.ratio_limit = ratio_limit(stats, n);
  report.coherence = coherence_l1_normalized(gibbs_position_matrix(model));
  return report;
}

FisherReport fisher_report(const Graph& g, const Spectrum& s, double temperature) {
  if (g.order() != s.dimension()) {
    throw std::invalid_argument("graph and spectrum dimensions differ");
  }
  return fisher_report(degree_stats(g),
                       std::make_shared<const Spectrum>(s), temperature);
}

}  // namespace graphtherm
