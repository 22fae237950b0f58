#pragma once

#include <string>
#include <vector>

#include "graphtherm/graph.hpp"
#include "graphtherm/spectrum.hpp"
#include "graphtherm/thermal.hpp"

namespace graphtherm {

/// 400 log-spaced points over [1e-2 E_1, 1e3 E_max] covers both the
/// low- and high-temperature regimes for every family handled here.
inline constexpr int kDefaultSweepPoints = 400;
std::pair<double, double> default_sweep_range(const Spectrum& s);

struct SweepResult {
  std::string descriptor;
  std::vector<double> temperatures;       // strictly increasing
  std::vector<FisherReport> reports;      // one per grid point
  std::vector<double> ratio_fc_fq;        // F_c/F_q per point (0 where F_q = 0)
  double peak_temperature = 0.0;          // refined argmax of the QFI
  double peak_qfi = 0.0;                  // never below the best grid sample
};

/// FisherReport at each grid point plus a golden-section refinement of the
/// QFI peak around the grid argmax (1e-8 relative in T). Grid points
/// evaluate in parallel; results assemble in grid order.
SweepResult sweep(const Graph& g, const Spectrum& s, double t_lo, double t_hi,
                  int points);
SweepResult sweep(const Graph& g, double t_lo, double t_hi, int points);
SweepResult sweep_default(const Graph& g, int points = kDefaultSweepPoints);

/// One comparison row: the topology factors T^4 F_q^high, T^4 F_c^high and
/// the asymptotic ratio F_c/F_q computed from the degree statistics, the
/// same quantities from the per-family closed forms, and exact numerics at
/// T = t_factor * E_max.
struct Table1Row {
  std::string label;
  int order = 0;
  long long edges = 0;
  long long degree_square_sum = 0;
  double qfi_high_t4 = 0.0;
  double fi_high_t4 = 0.0;
  double ratio = 0.0;
  double closed_qfi_high_t4 = 0.0;
  double closed_fi_high_t4 = 0.0;
  double closed_ratio = 0.0;
  double numeric_qfi_t4 = 0.0;
  double numeric_fi_t4 = 0.0;
  double qfi_rel_dev = 0.0;  // numeric vs high-T factor
  double fi_rel_dev = 0.0;   // NaN when the factor is 0
};

/// Rows for K_N, C_N, K_{N1,N2}, S_N, P_N, the sqrt(N) x sqrt(N) grid and
/// torus. Requires square N and n1 + n2 == n.
std::vector<Table1Row> table1_report(int n, int n1, int n2,
                                     double t_factor = 1e3);

struct ApproximationRow {
  double temperature = 0.0;
  double qfi = 0.0;
  double qfi_low = 0.0;
  double qfi_high = 0.0;
  double err_low = 0.0;   // (approx - exact) / exact
  double err_high = 0.0;
};

struct ApproximationReport {
  std::string descriptor;
  std::vector<ApproximationRow> rows;
  double peak_temperature = 0.0;
  double err_low_at_peak = 0.0;
  double err_high_at_peak = 0.0;
};

/// Relative accuracy of the low- and high-temperature QFI approximations
/// over a temperature grid, summarized at the refined QFI peak.
ApproximationReport approximation_report(const Graph& g,
                                         const std::vector<double>& grid);

}  // namespace graphtherm
