#include "rmt/io.hpp"

#include "rmt/experiment.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace rmt::io {

namespace {

std::vector<std::string> split_line(const std::string& line, char sep = ',') {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, sep)) out.push_back(field);
    return out;
}

double parse_double(const std::string& field) {
    std::size_t pos = 0;
    const double v = std::stod(field, &pos);
    while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos]))) ++pos;
    if (pos != field.size())
        throw std::invalid_argument("malformed numeric field: '" + field + "'");
    return v;
}

std::vector<std::string> non_empty_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string measure_to_csv(const DiscretizedMeasure& mu) {
    std::string out = "x,w\n";
    for (std::size_t i = 0; i < mu.size(); ++i) {
        out += format_double(mu.points[i]);
        out += ',';
        out += format_double(mu.weights[i]);
        out += '\n';
    }
    return out;
}

DiscretizedMeasure measure_from_csv(const std::string& text) {
    const auto lines = non_empty_lines(text);
    if (lines.empty() || split_line(lines[0]) != std::vector<std::string>{"x", "w"})
        throw std::invalid_argument("measure CSV must start with header 'x,w'");
    std::vector<double> xs, ws;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto fields = split_line(lines[i]);
        if (fields.size() != 2)
            throw std::invalid_argument("measure CSV rows need exactly two fields");
        xs.push_back(parse_double(fields[0]));
        ws.push_back(parse_double(fields[1]));
    }
    return {std::move(xs), std::move(ws)};
}

std::string moments_to_csv(const std::vector<double>& moments) {
    std::string out = "moment\n";
    for (double m : moments) {
        out += format_double(m);
        out += '\n';
    }
    return out;
}

std::vector<double> moments_from_csv(const std::string& text) {
    const auto lines = non_empty_lines(text);
    if (lines.empty() || lines[0] != "moment")
        throw std::invalid_argument("moment CSV must start with header 'moment'");
    std::vector<double> out;
    for (std::size_t i = 1; i < lines.size(); ++i) out.push_back(parse_double(lines[i]));
    return out;
}

std::string density_to_csv(const RecoveredDensity& d) {
    std::string out = "x,density\n";
    for (std::size_t i = 0; i < d.grid.size(); ++i) {
        out += format_double(d.grid[i]);
        out += ',';
        out += format_double(d.values[i]);
        out += '\n';
    }
    return out;
}

bool looks_like_measure_csv(const std::string& text) {
    const auto lines = non_empty_lines(text);
    return !lines.empty() && split_line(lines[0]) == std::vector<std::string>{"x", "w"};
}

json bordered_to_json(const BorderedJacobi& j) {
    return json{{"boundary_alpha", j.boundary_alpha},
                {"boundary_beta", j.boundary_beta},
                {"tail_alpha", j.tail_alpha},
                {"tail_beta", j.tail_beta},
                {"k", j.boundary_size()}};
}

BorderedJacobi bordered_from_json(const json& doc) {
    return {doc.at("boundary_alpha").get<std::vector<double>>(),
            doc.at("boundary_beta").get<std::vector<double>>(),
            doc.at("tail_alpha").get<double>(), doc.at("tail_beta").get<double>()};
}

json atoms_to_json(const std::vector<SuspectedAtom>& atoms) {
    json arr = json::array();
    for (const auto& atom : atoms)
        arr.push_back({{"location", atom.location}, {"residue", atom.residue}, {"note", atom.note}});
    return arr;
}

json support_to_json(const SupportInterval& s) {
    return json{{"lo", s.lo}, {"hi", s.hi}};
}

json coefficients_to_json(const JacobiCoefficients& coeffs) {
    return json{{"alpha", coeffs.alpha}, {"beta", coeffs.beta}};
}

json figure2_report_json(const RandomRecoveryReport& report) {
    json doc{{"figure", 2},
             {"seed", report.seed},
             {"k", report.k},
             {"original", bordered_to_json(report.original)},
             {"suspected_atoms", atoms_to_json(report.atoms)},
             {"resonance_unresolved", report.resonance_unresolved},
             {"support_mass", report.support_mass},
             {"density_csv", report.density_csv}};
    if (report.clean()) {
        doc["recovered"] = coefficients_to_json(report.recovered);
        doc["max_param_error"] = report.max_param_error;
    }
    return doc;
}

namespace {

json config_to_json(const ExperimentConfig& cfg) {
    return json{{"seed", cfg.seed},
                {"m", cfg.m},
                {"n", cfg.n},
                {"mu", cfg.mu_shift},
                {"bandwidth", cfg.bandwidth},
                {"lanczos_steps", cfg.lanczos_steps},
                {"grid_size", cfg.grid_size},
                {"moment_count", cfg.moment_count}};
}

} // namespace

json figure3_report_json(const WishartReport& report) {
    return json{{"figure", 3},
                {"config", config_to_json(report.config)},
                {"sample_mean", report.sample_mean},
                {"sample_sd", report.sample_sd},
                {"bandwidth", report.bandwidth},
                {"lanczos", coefficients_to_json(report.lanczos)},
                {"toeplitz_distance", report.toeplitz_dist},
                {"l1_error", report.l1_error},
                {"linf_error", report.linf_error},
                {"curve_csv", report.curve_csv}};
}

json figure4_report_json(const NormalReport& report) {
    return json{{"figure", 4},
                {"config", config_to_json(report.config)},
                {"coefficients", coefficients_to_json(report.coefficients)},
                {"recovered_mass", report.recovered_mass},
                {"l1_error", report.l1_error},
                {"linf_error", report.linf_error},
                {"curve_csv", report.curve_csv}};
}

} // namespace rmt::io
