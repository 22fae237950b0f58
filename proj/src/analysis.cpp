#include "graphtherm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "graphtherm/numerics.hpp"

namespace graphtherm {

namespace {

constexpr double kPeakRelTol = 1e-8;

// Golden-section refinement of the QFI around the grid argmax. The refined
// peak is never reported below the best grid sample.
void refine_peak(const std::shared_ptr<const Spectrum>& s,
                 const std::vector<double>& grid,
                 const std::vector<double>& qfi_values, double& peak_t,
                 double& peak_qfi) {
  auto best = std::max_element(qfi_values.begin(), qfi_values.end());
  int i = static_cast<int>(best - qfi_values.begin());
  peak_t = grid[i];
  peak_qfi = *best;
  const double lo = grid[std::max(i - 1, 0)];
  const double hi = grid[std::min<int>(i + 1, static_cast<int>(grid.size()) - 1)];
  if (!(lo < hi)) return;
  auto value = [&](double t) { return qfi(ThermalModel(s, t)); };
  auto refined = golden_section_max(value, lo, hi, kPeakRelTol);
  if (refined.value > peak_qfi) {
    peak_t = refined.x;
    peak_qfi = refined.value;
  }
}

}  // namespace

std::pair<double, double> default_sweep_range(const Spectrum& s) {
  const auto [e1, g1] = algebraic_connectivity(s);
  (void)g1;
  return {1e-2 * e1, 1e3 * s.max_energy()};
}

SweepResult sweep(const Graph& g, const Spectrum& s, double t_lo, double t_hi,
                  int points) {
  if (!(t_lo > 0) || !(t_hi > t_lo)) {
    throw std::invalid_argument("sweep requires 0 < t_lo < t_hi");
  }
  if (points < 2) throw std::invalid_argument("sweep requires >= 2 points");

  auto spectrum = std::make_shared<const Spectrum>(s);
  const auto stats = degree_stats(g);

  SweepResult result;
  result.descriptor = g.family_name();
  result.temperatures = log_spaced(t_lo, t_hi, points);
  result.reports.resize(points);
  parallel_for(points, [&](int i) {
    result.reports[i] = fisher_report(stats, spectrum, result.temperatures[i]);
  });

  result.ratio_fc_fq.resize(points);
  std::vector<double> qfi_values(points);
  for (int i = 0; i < points; ++i) {
    const auto& report = result.reports[i];
    qfi_values[i] = report.qfi;
    result.ratio_fc_fq[i] =
        report.qfi > 0.0 ? report.fi_position / report.qfi : 0.0;
  }
  refine_peak(spectrum, result.temperatures, qfi_values,
              result.peak_temperature, result.peak_qfi);
  return result;
}

SweepResult sweep(const Graph& g, double t_lo, double t_hi, int points) {
  return sweep(g, make_spectrum(g), t_lo, t_hi, points);
}

SweepResult sweep_default(const Graph& g, int points) {
  Spectrum s = make_spectrum(g);
  const auto [lo, hi] = default_sweep_range(s);
  return sweep(g, s, lo, hi, points);
}

namespace {

struct ClosedForms {
  double qfi_high_t4 = 0.0;
  double fi_high_t4 = 0.0;
  double ratio = 0.0;
};

// Per-family topology factors as printed in the comparison table.
ClosedForms closed_forms(const std::string& label, double n, double n1,
                         double n2) {
  ClosedForms c;
  if (label == "complete") {
    c = {n - 1.0, 0.0, 0.0};
  } else if (label == "cycle") {
    c = {2.0, 0.0, 0.0};
  } else if (label == "bipartite") {
    const double nn = n1 + n2;
    const double delta = std::abs(n2 - n1);
    c.qfi_high_t4 = (nn * nn - delta * delta) * (delta * delta + 2.0 * nn) /
                    (4.0 * nn * nn);
    c.fi_high_t4 = (nn * nn - delta * delta) * delta * delta / (4.0 * nn * nn);
    c.ratio = delta == 0.0 ? 0.0 : 1.0 / (1.0 + 2.0 * nn / (delta * delta));
  } else if (label == "star") {
    c.qfi_high_t4 = (n - 1.0) * (n * (n - 2.0) + 4.0) / (n * n);
    c.fi_high_t4 = (n - 1.0) * (n - 2.0) * (n - 2.0) / (n * n);
    c.ratio = (n - 2.0) * (n - 2.0) / (n * (n - 2.0) + 4.0);
  } else if (label == "path") {
    c.qfi_high_t4 = 2.0 * (n * n - 2.0) / (n * n);
    c.fi_high_t4 = 2.0 * (n - 2.0) / (n * n);
    c.ratio = (n - 2.0) / (n * n - 2.0);
  } else if (label == "grid") {
    const double root = std::sqrt(n);
    c.qfi_high_t4 = 4.0 * (n - 2.0) / n;
    c.fi_high_t4 = 4.0 * (root - 2.0) / n;
    c.ratio = (root - 2.0) / (n - 2.0);
  } else if (label == "torus") {
    c = {4.0, 0.0, 0.0};
  } else {
    throw std::invalid_argument("unknown table row: " + label);
  }
  return c;
}

}  // namespace

std::vector<Table1Row> table1_report(int n, int n1, int n2, double t_factor) {
  if (n < 3) throw std::invalid_argument("table requires N >= 3");
  if (n1 < 1 || n2 < 1 || n1 + n2 != n) {
    throw std::invalid_argument("bipartite row requires n1 + n2 = N");
  }
  const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  if (side * side != n || side < 3) {
    throw std::invalid_argument("lattice rows require square N with side >= 3");
  }
  if (!(t_factor > 0)) throw std::invalid_argument("t_factor must be positive");

  struct RowSpec {
    std::string label;
    std::string descriptor;
  };
  const std::vector<RowSpec> rows{
      {"complete", "complete:" + std::to_string(n)},
      {"cycle", "cycle:" + std::to_string(n)},
      {"bipartite",
       "bipartite:" + std::to_string(n1) + "," + std::to_string(n2)},
      {"star", "star:" + std::to_string(n)},
      {"path", "path:" + std::to_string(n)},
      {"grid", "grid:" + std::to_string(side) + "x" + std::to_string(side) + ":obc"},
      {"torus", "torus:" + std::to_string(side) + "x" + std::to_string(side)},
  };

  std::vector<Table1Row> table;
  table.reserve(rows.size());
  for (const auto& spec : rows) {
    Graph g = build_graph(spec.descriptor);
    const auto stats = degree_stats(g);
    auto spectrum = std::make_shared<const Spectrum>(make_spectrum(g));

    Table1Row row;
    row.label = spec.label;
    row.order = g.order();
    row.edges = stats.edge_count;
    row.degree_square_sum = stats.degree_square_sum;
    // The high-T formulas scale as T^-4, so their value at T = 1 is the
    // topology factor itself.
    row.qfi_high_t4 = qfi_high_temperature(stats, g.order(), 1.0);
    row.fi_high_t4 = fi_high_temperature(stats, g.order(), 1.0);
    row.ratio = ratio_limit(stats, g.order());

    const auto closed = closed_forms(spec.label, n, n1, n2);
    row.closed_qfi_high_t4 = closed.qfi_high_t4;
    row.closed_fi_high_t4 = closed.fi_high_t4;
    row.closed_ratio = closed.ratio;

    const double t = t_factor * spectrum->max_energy();
    const double t4 = t * t * t * t;
    ThermalModel model(spectrum, t);
    row.numeric_qfi_t4 = qfi(model) * t4;
    row.numeric_fi_t4 = fi_position(model) * t4;
    row.qfi_rel_dev =
        std::abs(row.numeric_qfi_t4 - row.qfi_high_t4) / row.qfi_high_t4;
    row.fi_rel_dev = row.fi_high_t4 > 0.0
                         ? std::abs(row.numeric_fi_t4 - row.fi_high_t4) /
                               row.fi_high_t4
                         : std::numeric_limits<double>::quiet_NaN();
    table.push_back(std::move(row));
  }
  return table;
}

ApproximationReport approximation_report(const Graph& g,
                                         const std::vector<double>& grid) {
  if (grid.size() < 2) {
    throw std::invalid_argument("approximation report needs >= 2 grid points");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0) || (i > 0 && !(grid[i] > grid[i - 1]))) {
      throw std::invalid_argument("grid must be positive and increasing");
    }
  }
  auto spectrum = std::make_shared<const Spectrum>(make_spectrum(g));
  const auto stats = degree_stats(g);
  const auto [e1, g1] = algebraic_connectivity(*spectrum);

  ApproximationReport report;
  report.descriptor = g.family_name();
  report.rows.resize(grid.size());
  parallel_for(static_cast<int>(grid.size()), [&](int i) {
    const double t = grid[i];
    ApproximationRow row;
    row.temperature = t;
    row.qfi = qfi(ThermalModel(spectrum, t));
    row.qfi_low = qfi_low_temperature(e1, g1, t);
    row.qfi_high = qfi_high_temperature(stats, g.order(), t);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.err_low = row.qfi > 1e-300 ? (row.qfi_low - row.qfi) / row.qfi : nan;
    row.err_high = row.qfi > 1e-300 ? (row.qfi_high - row.qfi) / row.qfi : nan;
    report.rows[i] = row;
  });

  std::vector<double> qfi_values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) qfi_values[i] = report.rows[i].qfi;
  double peak_qfi = 0.0;
  refine_peak(spectrum, grid, qfi_values, report.peak_temperature, peak_qfi);
  report.err_low_at_peak =
      (qfi_low_temperature(e1, g1, report.peak_temperature) - peak_qfi) / peak_qfi;
  report.err_high_at_peak =
      (qfi_high_temperature(stats, g.order(), report.peak_temperature) - peak_qfi) /
      peak_qfi;
  return report;
}

}  // namespace graphtherm
