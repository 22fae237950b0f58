#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "graphtherm/analysis.hpp"
#include "graphtherm/estimation.hpp"
#include "graphtherm/spectrum.hpp"
#include "graphtherm/thermal.hpp"

namespace graphtherm {

inline constexpr const char* kVersionString = "graphtherm 0.1.0";

/// Deterministic %.12g rendering used by every CSV emitter.
std::string format_double(double value);

nlohmann::json spectrum_to_json(const Spectrum& s, bool include_eigenvectors);
std::string spectrum_to_csv(const Spectrum& s, const std::string& descriptor);

std::string fisher_report_csv_header();
std::string fisher_report_csv_row(const FisherReport& report);
nlohmann::json fisher_report_to_json(const FisherReport& report);

std::string sweep_to_csv(const SweepResult& result);
nlohmann::json sweep_to_json(const SweepResult& result);

std::string table1_to_csv(const std::vector<Table1Row>& rows);
nlohmann::json table1_to_json(const std::vector<Table1Row>& rows);

nlohmann::json crb_report_to_json(const CrbReport& report, bool include_trials);

std::string coherence_to_csv(const std::string& descriptor,
                             const std::vector<double>& temperatures,
                             const std::vector<double>& coherences,
                             const std::vector<double>& qfis);
nlohmann::json coherence_to_json(const std::string& descriptor,
                                 const std::vector<double>& temperatures,
                                 const std::vector<double>& coherences,
                                 const std::vector<double>& qfis);

}  // namespace graphtherm
