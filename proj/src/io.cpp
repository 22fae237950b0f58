#include "graphtherm/io.hpp"

#include <cstdio>
#include <sstream>

namespace graphtherm {

using nlohmann::json;

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

namespace {

std::string join_csv(const std::vector<double>& values) {
  std::string row;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) row += ",";
    row += format_double(values[i]);
  }
  return row;
}

const char* source_name(SpectrumSource source) {
  return source == SpectrumSource::Analytic ? "analytic" : "numeric";
}

}  // namespace

json spectrum_to_json(const Spectrum& s, bool include_eigenvectors) {
  json out;
  out["n"] = s.dimension();
  out["source"] = source_name(s.source());
  json levels = json::array();
  for (const auto& level : s.levels()) {
    levels.push_back({{"energy", level.energy}, {"degeneracy", level.degeneracy}});
  }
  out["levels"] = std::move(levels);
  if (include_eigenvectors) {
    const auto& v = s.eigenvectors();
    std::vector<double> real, imag;
    real.reserve(v.size());
    imag.reserve(v.size());
    for (Eigen::Index r = 0; r < v.rows(); ++r) {
      for (Eigen::Index c = 0; c < v.cols(); ++c) {
        real.push_back(v(r, c).real());
        imag.push_back(v(r, c).imag());
      }
    }
    out["eigenvectors"] = {{"layout", "row-major"},
                           {"real", std::move(real)},
                           {"imag", std::move(imag)}};
  }
  return out;
}

std::string spectrum_to_csv(const Spectrum& s, const std::string& descriptor) {
  std::ostringstream out;
  out << "# " << kVersionString << " spectrum\n";
  out << "# graph=" << descriptor << " n=" << s.dimension() << " source="
      << source_name(s.source()) << "\n";
  out << "level,energy,degeneracy\n";
  for (int n = 0; n < s.level_count(); ++n) {
    out << n << "," << format_double(s.levels()[n].energy) << ","
        << s.levels()[n].degeneracy << "\n";
  }
  return out.str();
}

std::string fisher_report_csv_header() {
  return "T,qfi,fi,qfi_low,qfi_high,fi_high,bound_lo,bound_hi,ratio_limit,"
         "coherence";
}

std::string fisher_report_csv_row(const FisherReport& r) {
  return join_csv({r.temperature, r.qfi, r.fi_position, r.qfi_low, r.qfi_high,
                   r.fi_high, r.qfi_high_lower, r.qfi_high_upper, r.ratio_limit,
                   r.coherence});
}

json fisher_report_to_json(const FisherReport& r) {
  return {{"T", r.temperature},
          {"qfi", r.qfi},
          {"fi", r.fi_position},
          {"qfi_low", r.qfi_low},
          {"qfi_high", r.qfi_high},
          {"fi_high", r.fi_high},
          {"bound_lo", r.qfi_high_lower},
          {"bound_hi", r.qfi_high_upper},
          {"ratio_limit", r.ratio_limit},
          {"coherence", r.coherence}};
}

std::string sweep_to_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "# " << kVersionString << " sweep\n";
  out << "# graph=" << result.descriptor << " points="
      << result.temperatures.size() << " tmin="
      << format_double(result.temperatures.front()) << " tmax="
      << format_double(result.temperatures.back()) << "\n";
  out << fisher_report_csv_header() << "\n";
  for (const auto& report : result.reports) {
    out << fisher_report_csv_row(report) << "\n";
  }
  out << "# peak T_max=" << format_double(result.peak_temperature)
      << " qfi_max=" << format_double(result.peak_qfi) << "\n";
  return out.str();
}

json sweep_to_json(const SweepResult& result) {
  json reports = json::array();
  for (const auto& report : result.reports) {
    reports.push_back(fisher_report_to_json(report));
  }
  return {{"graph", result.descriptor},
          {"reports", std::move(reports)},
          {"ratio_fc_fq", result.ratio_fc_fq},
          {"peak", {{"T_max", result.peak_temperature},
                    {"qfi_max", result.peak_qfi}}}};
}

std::string table1_to_csv(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  out << "# " << kVersionString << " table1\n";
  out << "family,N,M,sum_deg_sq,qfi_high_T4,fi_high_T4,ratio,closed_qfi_high_T4,"
         "closed_fi_high_T4,closed_ratio,numeric_qfi_T4,numeric_fi_T4,"
         "qfi_rel_dev,fi_rel_dev\n";
  for (const auto& row : rows) {
    out << row.label << "," << row.order << "," << row.edges << ","
        << row.degree_square_sum << ","
        << join_csv({row.qfi_high_t4, row.fi_high_t4, row.ratio,
                     row.closed_qfi_high_t4, row.closed_fi_high_t4,
                     row.closed_ratio, row.numeric_qfi_t4, row.numeric_fi_t4,
                     row.qfi_rel_dev, row.fi_rel_dev})
        << "\n";
  }
  return out.str();
}

json table1_to_json(const std::vector<Table1Row>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    out.push_back({{"family", row.label},
                   {"N", row.order},
                   {"M", row.edges},
                   {"sum_deg_sq", row.degree_square_sum},
                   {"qfi_high_T4", row.qfi_high_t4},
                   {"fi_high_T4", row.fi_high_t4},
                   {"ratio", row.ratio},
                   {"closed_qfi_high_T4", row.closed_qfi_high_t4},
                   {"closed_fi_high_T4", row.closed_fi_high_t4},
                   {"closed_ratio", row.closed_ratio},
                   {"numeric_qfi_T4", row.numeric_qfi_t4},
                   {"numeric_fi_T4", row.numeric_fi_t4},
                   {"qfi_rel_dev", row.qfi_rel_dev},
                   {"fi_rel_dev", row.fi_rel_dev}});
  }
  return out;
}

json crb_report_to_json(const CrbReport& report, bool include_trials) {
  json out;
  out["config"] = {{"graph", report.descriptor},
                   {"kind", to_string(report.kind)},
                   {"T", report.true_temperature},
                   {"shots", report.shots},
                   {"trials", report.trials},
                   {"seed", report.seed},
                   {"bracket", {report.bracket.first, report.bracket.second}}};
  out["rng"] = report.rng_name;
  out["variance"] = report.variance;
  out["mean_estimate"] = report.mean_estimate;
  out["excluded_trials"] = report.excluded_trials;
  out["fisher_quantum"] = report.fisher_quantum;
  out["fisher_classical"] = report.fisher_classical;
  out["crb_quantum"] = report.crb_quantum;
  out["crb_classical"] = report.crb_classical;
  out["var_times_m_fisher"] = report.var_mf_ratio;
  if (include_trials) out["estimates"] = report.estimates;
  return out;
}

std::string coherence_to_csv(const std::string& descriptor,
                             const std::vector<double>& temperatures,
                             const std::vector<double>& coherences,
                             const std::vector<double>& qfis) {
  std::ostringstream out;
  out << "# " << kVersionString << " coherence\n";
  out << "# graph=" << descriptor << "\n";
  out << "T,coherence,qfi\n";
  for (std::size_t i = 0; i < temperatures.size(); ++i) {
    out << join_csv({temperatures[i], coherences[i], qfis[i]}) << "\n";
  }
  return out.str();
}

json coherence_to_json(const std::string& descriptor,
                       const std::vector<double>& temperatures,
                       const std::vector<double>& coherences,
                       const std::vector<double>& qfis) {
  return {{"graph", descriptor},
          {"T", temperatures},
          {"coherence", coherences},
          {"qfi", qfis}};
}

}  // namespace graphtherm
