#include "graphtherm/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "graphtherm/analysis.hpp"
#include "graphtherm/estimation.hpp"
#include "graphtherm/graph.hpp"
#include "graphtherm/io.hpp"
#include "graphtherm/numerics.hpp"
#include "graphtherm/spectrum.hpp"
#include "graphtherm/thermal.hpp"

namespace graphtherm {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;

struct CommonOptions {
  std::string descriptor;
  std::string edge_file;
  std::string out_path;
  std::string format = "csv";
  double group_tol = kDefaultGroupTol;
  bool force_analytic = false;
  bool force_numeric = false;
};

void add_graph_options(CLI::App& cmd, CommonOptions& opts) {
  cmd.add_option("descriptor", opts.descriptor,
                 "graph descriptor, e.g. cycle:8 or prod(path:3,cycle:4)");
  cmd.add_option("--edges", opts.edge_file,
                 "edge-list file (first line N, then one 'u v' per line)")
      ->excludes("descriptor");
}

void add_output_options(CLI::App& cmd, CommonOptions& opts,
                        bool with_format = true) {
  cmd.add_option("--out", opts.out_path, "output path (defaults to stdout)");
  if (with_format) {
    cmd.add_option("--format", opts.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  }
}

void add_spectrum_options(CLI::App& cmd, CommonOptions& opts) {
  cmd.add_option("--tol", opts.group_tol,
                 "degeneracy grouping tolerance (relative)");
  auto* analytic = cmd.add_flag("--analytic", opts.force_analytic,
                                "require the closed-form spectrum");
  cmd.add_flag("--numeric", opts.force_numeric,
               "force the numeric eigensolver path")
      ->excludes(analytic);
}

Graph load_graph(const CommonOptions& opts) {
  if (!opts.edge_file.empty()) return read_edge_list_file(opts.edge_file);
  if (opts.descriptor.empty()) {
    throw CLI::ValidationError("either a descriptor or --edges is required");
  }
  return build_graph(opts.descriptor);
}

std::string graph_label(const CommonOptions& opts, const Graph& g) {
  return opts.edge_file.empty() ? g.family_name() : opts.edge_file;
}

SpectrumMethod spectrum_method(const CommonOptions& opts) {
  if (opts.force_analytic) return SpectrumMethod::Analytic;
  if (opts.force_numeric) return SpectrumMethod::Numeric;
  return SpectrumMethod::Auto;
}

int emit(const CommonOptions& opts, const std::string& text, std::ostream& out,
         std::ostream& err) {
  if (opts.out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(opts.out_path);
  if (!file) {
    err << "error: cannot open output file '" << opts.out_path << "'\n";
    return kExitIo;
  }
  file << text;
  if (!file.good()) {
    err << "error: failed writing '" << opts.out_path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

std::string json_text(const nlohmann::json& value) { return value.dump(2) + "\n"; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Graph-topology thermometry: Laplacian spectra, Gibbs states, "
               "Fisher information, and Cramer-Rao experiments"};
  app.set_version_flag("--version", std::string(kVersionString));
  app.require_subcommand(1);

  // spectrum
  CommonOptions spectrum_opts;
  bool include_eigenvectors = false;
  auto* cmd_spectrum =
      app.add_subcommand("spectrum", "eigenvalues and degeneracy groups");
  add_graph_options(*cmd_spectrum, spectrum_opts);
  add_spectrum_options(*cmd_spectrum, spectrum_opts);
  add_output_options(*cmd_spectrum, spectrum_opts);
  cmd_spectrum->add_flag("--eigenvectors", include_eigenvectors,
                         "include the eigenvector matrix (json only)");

  // report
  CommonOptions report_opts;
  double report_t = 0.0;
  auto* cmd_report =
      app.add_subcommand("report", "full Fisher report at one temperature");
  add_graph_options(*cmd_report, report_opts);
  add_spectrum_options(*cmd_report, report_opts);
  add_output_options(*cmd_report, report_opts);
  cmd_report->add_option("--T", report_t, "temperature (> 0)")->required();

  // sweep
  CommonOptions sweep_opts;
  double sweep_tmin = 0.0, sweep_tmax = 0.0;
  int sweep_points = kDefaultSweepPoints;
  auto* cmd_sweep = app.add_subcommand(
      "sweep", "Fisher reports over a log-spaced temperature grid");
  add_graph_options(*cmd_sweep, sweep_opts);
  add_spectrum_options(*cmd_sweep, sweep_opts);
  add_output_options(*cmd_sweep, sweep_opts);
  cmd_sweep->add_option("--tmin", sweep_tmin, "grid start (default 1e-2 E_1)");
  cmd_sweep->add_option("--tmax", sweep_tmax, "grid end (default 1e3 E_max)");
  cmd_sweep->add_option("--points", sweep_points, "grid size (default 400)");

  // table1
  CommonOptions table_opts;
  int table_n = 16, table_n1 = 0, table_n2 = 0;
  double table_factor = 1e3;
  auto* cmd_table = app.add_subcommand(
      "table1", "high-temperature comparison table across families");
  cmd_table->add_option("--N", table_n, "common order (square number)")
      ->required();
  cmd_table->add_option("--N1", table_n1, "bipartite first set (default N/2-1)");
  cmd_table->add_option("--N2", table_n2, "bipartite second set (default N-N1)");
  cmd_table->add_option("--t-factor", table_factor,
                        "evaluation temperature as a multiple of E_max");
  add_output_options(*cmd_table, table_opts);

  // crb
  CommonOptions crb_opts;
  double crb_t = 0.0;
  std::string crb_kind = "energy";
  long long crb_shots = 0;
  int crb_trials = 0;
  std::uint64_t crb_seed = 0;
  bool crb_emit_trials = false;
  auto* cmd_crb = app.add_subcommand(
      "crb", "Monte Carlo Cramer-Rao check (JSON report)");
  add_graph_options(*cmd_crb, crb_opts);
  cmd_crb->add_option("--T", crb_t, "true temperature")->required();
  cmd_crb->add_option("--kind", crb_kind, "energy or position")
      ->check(CLI::IsMember({"energy", "position"}));
  cmd_crb->add_option("--M", crb_shots, "shots per trial")->required();
  cmd_crb->add_option("--trials", crb_trials, "number of trials (>= 100)")
      ->required();
  cmd_crb->add_option("--seed", crb_seed, "master RNG seed")->required();
  cmd_crb->add_flag("--emit-trials", crb_emit_trials,
                    "include per-trial estimates in the report");
  add_output_options(*cmd_crb, crb_opts, /*with_format=*/false);

  // coherence
  CommonOptions coh_opts;
  double coh_t = 0.0, coh_tmin = 0.0, coh_tmax = 0.0;
  int coh_points = 100;
  auto* cmd_coherence = app.add_subcommand(
      "coherence", "normalized l1 coherence of the Gibbs state");
  add_graph_options(*cmd_coherence, coh_opts);
  add_spectrum_options(*cmd_coherence, coh_opts);
  add_output_options(*cmd_coherence, coh_opts);
  auto* coh_t_opt =
      cmd_coherence->add_option("--T", coh_t, "single temperature");
  cmd_coherence->add_option("--tmin", coh_tmin, "grid start")->excludes(coh_t_opt);
  cmd_coherence->add_option("--tmax", coh_tmax, "grid end")->excludes(coh_t_opt);
  cmd_coherence->add_option("--points", coh_points, "grid size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream buffer;
    int code = app.exit(e, buffer, buffer);
    (code == 0 ? out : err) << buffer.str();
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*cmd_spectrum) {
      Graph g = load_graph(spectrum_opts);
      Spectrum s = make_spectrum(g, spectrum_method(spectrum_opts),
                                 spectrum_opts.group_tol);
      if (include_eigenvectors && spectrum_opts.format != "json") {
        throw std::invalid_argument("--eigenvectors requires --format json");
      }
      std::string text =
          spectrum_opts.format == "json"
              ? json_text(spectrum_to_json(s, include_eigenvectors))
              : spectrum_to_csv(s, graph_label(spectrum_opts, g));
      return emit(spectrum_opts, text, out, err);
    }

    if (*cmd_report) {
      if (!(report_t > 0)) {
        throw std::invalid_argument("--T must be positive");
      }
      Graph g = load_graph(report_opts);
      Spectrum s = make_spectrum(g, spectrum_method(report_opts),
                                 report_opts.group_tol);
      FisherReport report = fisher_report(g, s, report_t);
      std::string text =
          report_opts.format == "json"
              ? json_text(fisher_report_to_json(report))
              : fisher_report_csv_header() + "\n" +
                    fisher_report_csv_row(report) + "\n";
      return emit(report_opts, text, out, err);
    }

    if (*cmd_sweep) {
      Graph g = load_graph(sweep_opts);
      Spectrum s = make_spectrum(g, spectrum_method(sweep_opts),
                                 sweep_opts.group_tol);
      auto [lo, hi] = default_sweep_range(s);
      if (cmd_sweep->count("--tmin")) lo = sweep_tmin;
      if (cmd_sweep->count("--tmax")) hi = sweep_tmax;
      SweepResult result = sweep(g, s, lo, hi, sweep_points);
      if (!sweep_opts.edge_file.empty()) {
        result.descriptor = sweep_opts.edge_file;
      }
      std::string text = sweep_opts.format == "json"
                             ? json_text(sweep_to_json(result))
                             : sweep_to_csv(result);
      return emit(sweep_opts, text, out, err);
    }

    if (*cmd_table) {
      if (table_n1 == 0) table_n1 = std::max(1, table_n / 2 - 1);
      if (table_n2 == 0) table_n2 = table_n - table_n1;
      auto rows = table1_report(table_n, table_n1, table_n2, table_factor);
      std::string text = table_opts.format == "json"
                             ? json_text(table1_to_json(rows))
                             : table1_to_csv(rows);
      return emit(table_opts, text, out, err);
    }

    if (*cmd_crb) {
      Graph g = load_graph(crb_opts);
      auto report = crb_experiment(g, crb_t,
                                   measurement_kind_from_string(crb_kind),
                                   crb_shots, crb_trials, crb_seed);
      if (!crb_opts.edge_file.empty()) report.descriptor = crb_opts.edge_file;
      return emit(crb_opts,
                  json_text(crb_report_to_json(report, crb_emit_trials)), out,
                  err);
    }

    if (*cmd_coherence) {
      Graph g = load_graph(coh_opts);
      auto spectrum = std::make_shared<const Spectrum>(make_spectrum(
          g, spectrum_method(coh_opts), coh_opts.group_tol));
      std::vector<double> grid;
      if (cmd_coherence->count("--T")) {
        if (!(coh_t > 0)) throw std::invalid_argument("--T must be positive");
        grid = {coh_t};
      } else {
        auto [lo, hi] = default_sweep_range(*spectrum);
        if (cmd_coherence->count("--tmin")) lo = coh_tmin;
        if (cmd_coherence->count("--tmax")) hi = coh_tmax;
        grid = log_spaced(lo, hi, coh_points);
      }
      std::vector<double> coherences(grid.size()), qfis(grid.size());
      parallel_for(static_cast<int>(grid.size()), [&](int i) {
        ThermalModel model(spectrum, grid[i]);
        coherences[i] = coherence_l1_normalized(gibbs_position_matrix(model));
        qfis[i] = qfi(model);
      });
      const std::string label = graph_label(coh_opts, g);
      std::string text =
          coh_opts.format == "json"
              ? json_text(coherence_to_json(label, grid, coherences, qfis))
              : coherence_to_csv(label, grid, coherences, qfis);
      return emit(coh_opts, text, out, err);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace graphtherm
