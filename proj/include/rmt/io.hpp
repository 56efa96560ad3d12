#pragma once

#include "rmt/recover.hpp"
#include "rmt/types.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace rmt {

struct RandomRecoveryReport;
struct WishartReport;
struct NormalReport;

namespace io {

using json = nlohmann::json;

/// 17 significant digits, lowercase exponent: losslessly round-trips doubles.
std::string format_double(double v);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

/// Measure CSV, header "x,w".
std::string measure_to_csv(const DiscretizedMeasure& mu);
DiscretizedMeasure measure_from_csv(const std::string& text);

/// Moment CSV, single column with header "moment", index implicit from row
/// order starting at m_0.
std::string moments_to_csv(const std::vector<double>& moments);
std::vector<double> moments_from_csv(const std::string& text);

/// Recovered density CSV, header "x,density".
std::string density_to_csv(const RecoveredDensity& d);

/// True when the first line of a CSV file names the measure columns "x,w"
/// rather than the single "moment" column.
bool looks_like_measure_csv(const std::string& text);

json bordered_to_json(const BorderedJacobi& j);
BorderedJacobi bordered_from_json(const json& doc);

json atoms_to_json(const std::vector<SuspectedAtom>& atoms);
json support_to_json(const SupportInterval& s);
json coefficients_to_json(const JacobiCoefficients& coeffs);

json figure2_report_json(const RandomRecoveryReport& report);
json figure3_report_json(const WishartReport& report);
json figure4_report_json(const NormalReport& report);

} // namespace io
} // namespace rmt
