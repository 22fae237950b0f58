#pragma once

#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "graphtherm/graph.hpp"
#include "graphtherm/spectrum.hpp"

namespace graphtherm {

/// Gibbs state of a spectrum at temperature T (k_B = 1, hopping = 1, so
/// energy and temperature are dimensionless). Caches the partition function
/// and per-level populations. T = 0 is excluded; see zero_temperature_limit.
class ThermalModel {
 public:
  ThermalModel(std::shared_ptr<const Spectrum> spectrum, double temperature);
  ThermalModel(Spectrum spectrum, double temperature);

  const Spectrum& spectrum() const { return *spectrum_; }
  const std::shared_ptr<const Spectrum>& spectrum_ptr() const { return spectrum_; }
  double temperature() const { return temperature_; }
  /// Z = sum_n g_n exp(-E_n / T); >= 1 because E_0 = 0 contributes 1.
  double partition_function() const { return z_; }
  /// Per-level Boltzmann populations g_n exp(-E_n/T) / Z; sum to 1.
  const std::vector<double>& level_populations() const { return populations_; }
  /// Single-state weight exp(-E_n/T) / Z of level n.
  double state_weight(int level) const { return state_weights_[level]; }

 private:
  std::shared_ptr<const Spectrum> spectrum_;
  double temperature_ = 0.0;
  double z_ = 0.0;
  std::vector<double> populations_;
  std::vector<double> state_weights_;
};

ThermalModel make_thermal(Spectrum spectrum, double temperature);
ThermalModel make_thermal(std::shared_ptr<const Spectrum> spectrum,
                          double temperature);

/// <H^p> for p in {1, 2}.
double energy_moment(const ThermalModel& m, int p);

/// Quantum Fisher information (<H^2> - <H>^2) / T^4: the optimal
/// (energy-measurement) precision per shot.
double qfi(const ThermalModel& m);

/// p(j|T) = sum_k exp(-E_k/T)/Z |<j|e_k>|^2. Requires eigenvectors.
std::vector<double> position_probabilities(const ThermalModel& m);

/// <H rho_T>_j = sum_k exp(-E_k/T) E_k / Z |<j|e_k>|^2.
double energy_weighted(const ThermalModel& m, int vertex);
std::vector<double> energy_weighted_profile(const ThermalModel& m);

/// Fisher information of the vertex-occupation distribution,
/// (1/T^4) (sum_j <H rho>_j^2 / p_j - <H>^2).
double fi_position(const ThermalModel& m);

/// Same quantity evaluated from the definition sum_j (d_T p_j)^2 / p_j with
/// the analytic derivative d_T p_j = (<H rho>_j - <H> p_j) / T^2. Kept as an
/// independent route for cross-checks.
double fi_position_from_derivative(const ThermalModel& m);

/// Low-temperature QFI approximation f_{g1}(E1/T) / E1^2 with
/// f_g(x) = g x^4 e^-x / (1 + g e^-x)^2. Exact for two-level spectra.
double qfi_low_temperature(double e1, int g1, double temperature);

/// Root x > 4 of e^x = g1 (x+4)/(x-4); the maximizer of f_{g1}. The QFI
/// peak sits at T_max = E1 / x_max(g1).
double solve_xmax(int g1);

/// Low-temperature approximation of the position-measurement FI (two-level
/// truncation with site weights eta_j of the first excited level).
double fi_low_temperature(const Spectrum& s, double temperature);

/// High-temperature QFI: [sum d_k^2 + 2M(1 - 2M/N)] / (N T^4).
double qfi_high_temperature(const DegreeStats& stats, int order,
                            double temperature);

/// (lower, upper) bounds on the high-temperature QFI:
/// 2M/(N T^4) <= F <= (M/T^4)[1 - 2M(N-2)/(N^2 (N-1))].
std::pair<double, double> qfi_high_temperature_bounds(int order, long long edges,
                                                      double temperature);

/// High-temperature FI: (N sum d_j^2 - 4 M^2) / (N^2 T^4); zero for
/// regular graphs.
double fi_high_temperature(const DegreeStats& stats, int order,
                           double temperature);

/// lim_{T->inf} F_c/F_q = 1 / (1 + lambda) with
/// lambda = 2M / (sum d^2 - 4M^2/N); defined as 0 for regular graphs.
double ratio_limit(const DegreeStats& stats, int order);

/// Exact QFI of K_{N1,N2} at any T (four-level closed form, rearranged so
/// every exponential decays). N1 = 1 uses the three-level star form.
double qfi_exact_bipartite(int n1, int n2, double temperature);

/// Exact QFI of the complete graph, N^2 (N-1) e^{-N/T} / (T^4 Z^2).
double qfi_exact_complete(int order, double temperature);

/// Gibbs state in the position basis; Hermitian with unit trace.
Eigen::MatrixXcd gibbs_position_matrix(const ThermalModel& m);

/// l1 coherence sum_{j != k} |rho_jk| normalized by its maximum N-1.
double coherence_l1_normalized(const Eigen::MatrixXcd& rho);

/// Closed-form normalized coherence of the complete graph,
/// |1 - e^{-N/T}| / (1 + (N-1) e^{-N/T}).
double coherence_complete(int order, double temperature);

/// (lhs, rhs) of the complete-graph identity
/// T^4 F_q / (N-1) = [1 - C][1 + (N-1) C].
std::pair<double, double> complete_qfi_coherence_identity(int order,
                                                          double temperature);

/// T -> 0+ limits: QFI and FI vanish, normalized coherence is 1, and the
/// state is the uniform ground-state projector.
struct ZeroTemperatureLimit {
  double qfi = 0.0;
  double fi_position = 0.0;
  double coherence = 1.0;
};
ZeroTemperatureLimit zero_temperature_limit();
Eigen::MatrixXd ground_state_density(int order);

/// Everything the CSV/JSON emitters and the sweep machinery need at one
/// temperature.
struct FisherReport {
  double temperature = 0.0;
  double qfi = 0.0;
  double fi_position = 0.0;
  double qfi_low = 0.0;
  double qfi_high = 0.0;
  double fi_high = 0.0;
  double qfi_high_lower = 0.0;
  double qfi_high_upper = 0.0;
  double ratio_limit = 0.0;
  double coherence = 0.0;
};

FisherReport fisher_report(const Graph& g, const Spectrum& s, double temperature);
FisherReport fisher_report(const DegreeStats& stats,
                           const std::shared_ptr<const Spectrum>& s,
                           double temperature);

}  // namespace graphtherm
