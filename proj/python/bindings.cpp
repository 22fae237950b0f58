#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphtherm/analysis.hpp"
#include "graphtherm/estimation.hpp"
#include "graphtherm/graph.hpp"
#include "graphtherm/io.hpp"
#include "graphtherm/numerics.hpp"
#include "graphtherm/spectrum.hpp"
#include "graphtherm/thermal.hpp"

namespace py = pybind11;
using namespace graphtherm;

namespace {

SpectrumMethod method_from_string(const std::string& name) {
  if (name == "auto") return SpectrumMethod::Auto;
  if (name == "analytic") return SpectrumMethod::Analytic;
  if (name == "numeric") return SpectrumMethod::Numeric;
  throw std::invalid_argument("method must be auto, analytic, or numeric");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph-topology thermometry: Laplacian spectra, Gibbs states, "
            "quantum/position Fisher information, and Cramer-Rao experiments";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("order"),
           py::arg("edges"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("edges", &Graph::edges)
      .def("degree", &Graph::degree, py::arg("vertex"))
      .def("neighbors", &Graph::neighbors, py::arg("vertex"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def_property_readonly("family", &Graph::family_name)
      .def("adjacency_matrix", &Graph::adjacency_matrix)
      .def("laplacian_matrix", &Graph::laplacian_matrix)
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + g.family_name() + ", N=" + std::to_string(g.order()) +
               ", M=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<DegreeStats>(m, "DegreeStats")
      .def_readonly("edge_count", &DegreeStats::edge_count)
      .def_readonly("degrees", &DegreeStats::degrees)
      .def_readonly("degree_sum", &DegreeStats::degree_sum)
      .def_readonly("degree_square_sum", &DegreeStats::degree_square_sum);

  m.def("build_graph", &build_graph, py::arg("descriptor"));
  m.def("cartesian_product", &cartesian_product, py::arg("g1"), py::arg("g2"));
  m.def("degree_stats", &degree_stats, py::arg("graph"));
  m.def("is_circulant_labeled", &is_circulant_labeled, py::arg("graph"));
  m.def("is_connected", &is_connected, py::arg("graph"));
  m.def("read_edge_list", &read_edge_list_file, py::arg("path"));

  py::class_<SpectrumLevel>(m, "SpectrumLevel")
      .def_readonly("energy", &SpectrumLevel::energy)
      .def_readonly("degeneracy", &SpectrumLevel::degeneracy)
      .def("__repr__", [](const SpectrumLevel& level) {
        return "(E=" + format_double(level.energy) +
               ", g=" + std::to_string(level.degeneracy) + ")";
      });

  py::class_<Spectrum, std::shared_ptr<Spectrum>>(m, "Spectrum")
      .def_property_readonly("dimension", &Spectrum::dimension)
      .def_property_readonly("levels", &Spectrum::levels)
      .def_property_readonly("has_eigenvectors", &Spectrum::has_eigenvectors)
      .def_property_readonly(
          "eigenvectors",
          [](const Spectrum& s) -> Eigen::MatrixXcd { return s.eigenvectors(); })
      .def_property_readonly(
          "site_weights",
          [](const Spectrum& s) -> Eigen::MatrixXd { return s.site_weights(); })
      .def_property_readonly("source", [](const Spectrum& s) {
        return s.source() == SpectrumSource::Analytic ? "analytic" : "numeric";
      })
      .def("energy_sum", &Spectrum::energy_sum)
      .def("energy_square_sum", &Spectrum::energy_square_sum)
      .def("max_energy", &Spectrum::max_energy);

  m.def(
      "analytic_spectrum",
      [](const Graph& g) {
        return std::make_shared<Spectrum>(analytic_spectrum(g));
      },
      py::arg("graph"));
  m.def(
      "numeric_spectrum",
      [](const Graph& g, double tol) {
        return std::make_shared<Spectrum>(numeric_spectrum(g, tol));
      },
      py::arg("graph"), py::arg("group_tol") = kDefaultGroupTol);
  m.def(
      "make_spectrum",
      [](const Graph& g, const std::string& method, double tol) {
        return std::make_shared<Spectrum>(
            make_spectrum(g, method_from_string(method), tol));
      },
      py::arg("graph"), py::arg("method") = "auto",
      py::arg("group_tol") = kDefaultGroupTol);
  m.def("algebraic_connectivity",
        [](const Spectrum& s) { return algebraic_connectivity(s); },
        py::arg("spectrum"));

  py::class_<ThermalModel>(m, "ThermalModel")
      .def(py::init([](std::shared_ptr<Spectrum> s, double t) {
             return ThermalModel(std::shared_ptr<const Spectrum>(std::move(s)), t);
           }),
           py::arg("spectrum"), py::arg("temperature"))
      .def_property_readonly("temperature", &ThermalModel::temperature)
      .def_property_readonly("partition_function",
                             &ThermalModel::partition_function)
      .def_property_readonly("level_populations",
                             &ThermalModel::level_populations);

  m.def("energy_moment", &energy_moment, py::arg("model"), py::arg("p"));
  m.def("qfi", &qfi, py::arg("model"));
  m.def("position_probabilities", &position_probabilities, py::arg("model"));
  m.def("energy_weighted", &energy_weighted, py::arg("model"), py::arg("vertex"));
  m.def("energy_weighted_profile", &energy_weighted_profile, py::arg("model"));
  m.def("fi_position", &fi_position, py::arg("model"));
  m.def("fi_position_from_derivative", &fi_position_from_derivative,
        py::arg("model"));
  m.def("qfi_low_temperature", &qfi_low_temperature, py::arg("e1"),
        py::arg("g1"), py::arg("temperature"));
  m.def("solve_xmax", &solve_xmax, py::arg("g1"));
  m.def("fi_low_temperature", &fi_low_temperature, py::arg("spectrum"),
        py::arg("temperature"));
  m.def("qfi_high_temperature", &qfi_high_temperature, py::arg("stats"),
        py::arg("order"), py::arg("temperature"));
  m.def("qfi_high_temperature_bounds", &qfi_high_temperature_bounds,
        py::arg("order"), py::arg("edges"), py::arg("temperature"));
  m.def("fi_high_temperature", &fi_high_temperature, py::arg("stats"),
        py::arg("order"), py::arg("temperature"));
  m.def("ratio_limit", &ratio_limit, py::arg("stats"), py::arg("order"));
  m.def("qfi_exact_bipartite", &qfi_exact_bipartite, py::arg("n1"),
        py::arg("n2"), py::arg("temperature"));
  m.def("qfi_exact_complete", &qfi_exact_complete, py::arg("order"),
        py::arg("temperature"));
  m.def("gibbs_position_matrix", &gibbs_position_matrix, py::arg("model"));
  m.def("coherence_l1_normalized", &coherence_l1_normalized, py::arg("rho"));
  m.def("coherence_complete", &coherence_complete, py::arg("order"),
        py::arg("temperature"));
  m.def("complete_qfi_coherence_identity", &complete_qfi_coherence_identity,
        py::arg("order"), py::arg("temperature"));

  py::class_<ZeroTemperatureLimit>(m, "ZeroTemperatureLimit")
      .def_readonly("qfi", &ZeroTemperatureLimit::qfi)
      .def_readonly("fi_position", &ZeroTemperatureLimit::fi_position)
      .def_readonly("coherence", &ZeroTemperatureLimit::coherence);
  m.def("zero_temperature_limit", &zero_temperature_limit);
  m.def("ground_state_density", &ground_state_density, py::arg("order"));

  py::class_<FisherReport>(m, "FisherReport")
      .def_readonly("temperature", &FisherReport::temperature)
      .def_readonly("qfi", &FisherReport::qfi)
      .def_readonly("fi_position", &FisherReport::fi_position)
      .def_readonly("qfi_low", &FisherReport::qfi_low)
      .def_readonly("qfi_high", &FisherReport::qfi_high)
      .def_readonly("fi_high", &FisherReport::fi_high)
      .def_readonly("qfi_high_lower", &FisherReport::qfi_high_lower)
      .def_readonly("qfi_high_upper", &FisherReport::qfi_high_upper)
      .def_readonly("ratio_limit", &FisherReport::ratio_limit)
      .def_readonly("coherence", &FisherReport::coherence)
      .def("to_csv_row",
           [](const FisherReport& r) { return fisher_report_csv_row(r); })
      .def("to_json", [](const FisherReport& r) {
        return fisher_report_to_json(r).dump();
      });

  m.def(
      "fisher_report",
      [](const Graph& g, const Spectrum& s, double t) {
        return fisher_report(g, s, t);
      },
      py::arg("graph"), py::arg("spectrum"), py::arg("temperature"));

  py::enum_<MeasurementKind>(m, "MeasurementKind")
      .value("ENERGY", MeasurementKind::EnergyLevel)
      .value("POSITION", MeasurementKind::Position);

  py::class_<OutcomeSample>(m, "OutcomeSample")
      .def_readonly("kind", &OutcomeSample::kind)
      .def_readonly("counts", &OutcomeSample::counts)
      .def_readonly("shots", &OutcomeSample::shots)
      .def_readonly("true_temperature", &OutcomeSample::true_temperature)
      .def_readonly("seed", &OutcomeSample::seed);

  py::class_<EstimationTrial>(m, "EstimationTrial")
      .def_readonly("estimate", &EstimationTrial::estimate)
      .def_readonly("log_likelihood", &EstimationTrial::log_likelihood)
      .def_readonly("converged", &EstimationTrial::converged)
      .def_readonly("iterations", &EstimationTrial::iterations);

  m.def("sample_outcomes", &sample_outcomes, py::arg("model"), py::arg("kind"),
        py::arg("shots"), py::arg("seed"));
  m.def("mle_temperature", &mle_temperature, py::arg("sample"),
        py::arg("spectrum"), py::arg("bracket"));

  py::class_<CrbReport>(m, "CrbReport")
      .def_readonly("descriptor", &CrbReport::descriptor)
      .def_readonly("kind", &CrbReport::kind)
      .def_readonly("true_temperature", &CrbReport::true_temperature)
      .def_readonly("shots", &CrbReport::shots)
      .def_readonly("trials", &CrbReport::trials)
      .def_readonly("seed", &CrbReport::seed)
      .def_readonly("variance", &CrbReport::variance)
      .def_readonly("mean_estimate", &CrbReport::mean_estimate)
      .def_readonly("excluded_trials", &CrbReport::excluded_trials)
      .def_readonly("fisher_quantum", &CrbReport::fisher_quantum)
      .def_readonly("fisher_classical", &CrbReport::fisher_classical)
      .def_readonly("crb_quantum", &CrbReport::crb_quantum)
      .def_readonly("crb_classical", &CrbReport::crb_classical)
      .def_readonly("var_mf_ratio", &CrbReport::var_mf_ratio)
      .def_readonly("rng_name", &CrbReport::rng_name)
      .def_readonly("estimates", &CrbReport::estimates)
      .def("to_json", [](const CrbReport& r, bool include_trials) {
        return crb_report_to_json(r, include_trials).dump();
      }, py::arg("include_trials") = false);

  m.def("crb_experiment", &crb_experiment, py::arg("graph"),
        py::arg("temperature"), py::arg("kind"), py::arg("shots"),
        py::arg("trials"), py::arg("seed"));

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("descriptor", &SweepResult::descriptor)
      .def_readonly("temperatures", &SweepResult::temperatures)
      .def_readonly("reports", &SweepResult::reports)
      .def_readonly("ratio_fc_fq", &SweepResult::ratio_fc_fq)
      .def_readonly("peak_temperature", &SweepResult::peak_temperature)
      .def_readonly("peak_qfi", &SweepResult::peak_qfi)
      .def("to_csv", [](const SweepResult& r) { return sweep_to_csv(r); })
      .def("to_json", [](const SweepResult& r) { return sweep_to_json(r).dump(); });

  m.def(
      "sweep",
      [](const Graph& g, double t_lo, double t_hi, int points) {
        return sweep(g, t_lo, t_hi, points);
      },
      py::arg("graph"), py::arg("t_lo"), py::arg("t_hi"),
      py::arg("points") = kDefaultSweepPoints);
  m.def("sweep_default", &sweep_default, py::arg("graph"),
        py::arg("points") = kDefaultSweepPoints);

  py::class_<Table1Row>(m, "Table1Row")
      .def_readonly("label", &Table1Row::label)
      .def_readonly("order", &Table1Row::order)
      .def_readonly("edges", &Table1Row::edges)
      .def_readonly("degree_square_sum", &Table1Row::degree_square_sum)
      .def_readonly("qfi_high_t4", &Table1Row::qfi_high_t4)
      .def_readonly("fi_high_t4", &Table1Row::fi_high_t4)
      .def_readonly("ratio", &Table1Row::ratio)
      .def_readonly("closed_qfi_high_t4", &Table1Row::closed_qfi_high_t4)
      .def_readonly("closed_fi_high_t4", &Table1Row::closed_fi_high_t4)
      .def_readonly("closed_ratio", &Table1Row::closed_ratio)
      .def_readonly("numeric_qfi_t4", &Table1Row::numeric_qfi_t4)
      .def_readonly("numeric_fi_t4", &Table1Row::numeric_fi_t4)
      .def_readonly("qfi_rel_dev", &Table1Row::qfi_rel_dev)
      .def_readonly("fi_rel_dev", &Table1Row::fi_rel_dev);

  m.def("table1_report", &table1_report, py::arg("n"), py::arg("n1"),
        py::arg("n2"), py::arg("t_factor") = 1e3);

  py::class_<ApproximationRow>(m, "ApproximationRow")
      .def_readonly("temperature", &ApproximationRow::temperature)
      .def_readonly("qfi", &ApproximationRow::qfi)
      .def_readonly("qfi_low", &ApproximationRow::qfi_low)
      .def_readonly("qfi_high", &ApproximationRow::qfi_high)
      .def_readonly("err_low", &ApproximationRow::err_low)
      .def_readonly("err_high", &ApproximationRow::err_high);

  py::class_<ApproximationReport>(m, "ApproximationReport")
      .def_readonly("descriptor", &ApproximationReport::descriptor)
      .def_readonly("rows", &ApproximationReport::rows)
      .def_readonly("peak_temperature", &ApproximationReport::peak_temperature)
      .def_readonly("err_low_at_peak", &ApproximationReport::err_low_at_peak)
      .def_readonly("err_high_at_peak", &ApproximationReport::err_high_at_peak);

  m.def("approximation_report", &approximation_report, py::arg("graph"),
        py::arg("grid"));

  m.attr("__version__") = "0.1.0";
}
