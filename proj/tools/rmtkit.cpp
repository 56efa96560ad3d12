// Command-line front end: law tables, Wachter moment pyramids, Jacobi
// parameter computation, continued-fraction recovery, and the three
// experiment pipelines. Emits CSV/JSON plot data.
//
// Exit codes: 0 success, 2 argument or parameter validation, 3 non-realizable
// moment input, 4 Lanczos breakdown.

#include "rmt/experiment.hpp"
#include "rmt/io.hpp"
#include "rmt/jacobi.hpp"
#include "rmt/laws.hpp"
#include "rmt/recover.hpp"
#include "rmt/wachter_pyramid.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

namespace {

using rmt::io::json;

struct LawFlags {
    std::string name;
    double lambda = 1.0;
    double v = 2.0;
    double a = 1.0;
    double b = 1.0;
};

rmt::LawSpec make_law(const LawFlags& flags) {
    if (flags.name == "wigner") return rmt::LawSpec::wigner();
    if (flags.name == "mp" || flags.name == "marchenko-pastur")
        return rmt::LawSpec::marchenko_pastur(flags.lambda);
    if (flags.name == "km" || flags.name == "kesten-mckay")
        return rmt::LawSpec::kesten_mckay(flags.v);
    if (flags.name == "wachter") return rmt::LawSpec::wachter(flags.a, flags.b);
    throw std::invalid_argument("unknown law '" + flags.name +
                                "' (expected wigner, mp, km, or wachter)");
}

void emit(const std::string& output_prefix, const std::string& artifact,
          const std::string& extension, const std::string& content) {
    if (output_prefix.empty()) {
        std::cout << content;
        return;
    }
    rmt::io::write_file(output_prefix + artifact + "." + extension, content);
}

std::string csv_from_columns(const std::vector<std::string>& headers,
                             const std::vector<std::vector<double>>& columns) {
    std::string out;
    for (std::size_t i = 0; i < headers.size(); ++i) {
        out += headers[i];
        out += i + 1 == headers.size() ? '\n' : ',';
    }
    for (std::size_t row = 0; row < columns[0].size(); ++row) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            out += rmt::io::format_double(columns[i][row]);
            out += i + 1 == columns.size() ? '\n' : ',';
        }
    }
    return out;
}

std::string table(const std::string& format, const std::vector<std::string>& headers,
                  const std::vector<std::vector<double>>& columns) {
    if (format == "csv") return csv_from_columns(headers, columns);
    json doc;
    for (std::size_t i = 0; i < headers.size(); ++i) doc[headers[i]] = columns[i];
    return doc.dump(2) + "\n";
}

int run_law(const LawFlags& flags, int n_moments, int n_cumulants, int n_density,
            int n_cauchy, bool want_jacobi, const std::string& output,
            const std::string& format) {
    const rmt::LawSpec law = make_law(flags);
    const std::string ext = format == "csv" ? "csv" : "json";

    if (n_moments > 0) {
        std::vector<double> ms(static_cast<std::size_t>(n_moments));
        for (std::size_t n = 0; n < ms.size(); ++n)
            ms[n] = rmt::moment(law, static_cast<unsigned>(n));
        emit(output, "moments", ext,
             format == "csv" ? rmt::io::moments_to_csv(ms)
                             : json{{"law", law.name()}, {"moments", ms}}.dump(2) + "\n");
    }
    if (n_cumulants > 0) {
        std::vector<double> ks(static_cast<std::size_t>(n_cumulants));
        for (std::size_t n = 0; n < ks.size(); ++n)
            ks[n] = rmt::free_cumulant(law, static_cast<unsigned>(n) + 1);
        emit(output, "cumulants", ext, table(format, {"cumulant"}, {ks}));
    }
    if (n_density > 0) {
        const rmt::SupportInterval s = rmt::support(law);
        const double step = (s.hi - s.lo) / static_cast<double>(n_density);
        std::vector<double> xs, vals;
        for (int i = 0; i < n_density; ++i) {
            const double x = s.lo + (i + 0.5) * step;
            xs.push_back(x);
            vals.push_back(rmt::density(law, x));
        }
        emit(output, "density", ext, table(format, {"x", "density"}, {xs, vals}));
    }
    if (n_cauchy > 0) {
        const rmt::SupportInterval s = rmt::support(law);
        const double span = s.hi - s.lo;
        std::vector<double> zs, re, im;
        for (int i = 1; i <= n_cauchy; ++i) {
            const double z = s.hi + span * static_cast<double>(i) / static_cast<double>(n_cauchy);
            const rmt::Complex g = rmt::cauchy_transform(law, {z, 0.0});
            zs.push_back(z);
            re.push_back(g.real());
            im.push_back(g.imag());
        }
        emit(output, "cauchy", ext, table(format, {"z", "g_re", "g_im"}, {zs, re, im}));
    }
    if (want_jacobi) {
        const rmt::BorderedJacobi j = rmt::jacobi_params(law);
        if (format == "csv") {
            std::string out = "alpha,beta,role\n";
            for (std::size_t i = 0; i < j.boundary_size(); ++i)
                out += rmt::io::format_double(j.boundary_alpha[i]) + "," +
                       rmt::io::format_double(j.boundary_beta[i]) + ",boundary\n";
            out += rmt::io::format_double(j.tail_alpha) + "," +
                   rmt::io::format_double(j.tail_beta) + ",tail\n";
            emit(output, "jacobi", "csv", out);
        } else {
            emit(output, "jacobi", "json", rmt::io::bordered_to_json(j).dump(2) + "\n");
        }
    }
    return 0;
}

int run_pyramid(int k, const std::string& output) {
    const rmt::MomentPyramidTriangle triangle = rmt::wachter_pyramid(static_cast<unsigned>(k));
    json rows = json::array();
    for (const auto& row : triangle.rows) {
        json jrow = json::array();
        for (const auto& v : row) jrow.push_back(v.str());
        rows.push_back(jrow);
    }
    const json doc{{"moment_index", triangle.moment_index}, {"rows", rows}};
    emit(output, "pyramid", "json", doc.dump(2) + "\n");
    return 0;
}

rmt::MomentSequence load_moments(const std::string& text) {
    const std::vector<double> raw = rmt::io::moments_from_csv(text);
    if (raw.empty() || std::abs(raw[0] - 1.0) > 1e-12)
        throw rmt::NonRealizableMoments(0);
    return rmt::MomentSequence(raw);
}

int run_jacobi_cmd(const std::string& input, int steps, const std::string& output,
                   const std::string& format) {
    const std::string text = rmt::io::read_file(input);
    rmt::JacobiCoefficients coeffs;
    if (rmt::io::looks_like_measure_csv(text)) {
        coeffs = rmt::lanczos_discrete(rmt::io::measure_from_csv(text),
                                       static_cast<std::size_t>(steps));
    } else {
        coeffs = rmt::moments_to_jacobi(load_moments(text), static_cast<std::size_t>(steps));
    }
    emit(output, "jacobi", format == "csv" ? "csv" : "json",
         table(format, {"alpha", "beta"}, {coeffs.alpha, coeffs.beta}));
    return 0;
}

int run_recover(const std::string& input, std::optional<int> k, std::optional<int> steps,
                int grid, const std::string& output, const std::string& format) {
    const std::string text = rmt::io::read_file(input);
    const std::size_t nsteps =
        static_cast<std::size_t>(steps ? *steps : k ? *k + 1 : 6);

    rmt::JacobiCoefficients coeffs;
    if (rmt::io::looks_like_measure_csv(text)) {
        coeffs = rmt::lanczos_discrete(rmt::io::measure_from_csv(text), nsteps);
    } else {
        coeffs = rmt::moments_to_jacobi(load_moments(text), nsteps);
    }
    const rmt::BorderedJacobi bordered =
        k ? rmt::to_bordered(coeffs, 1e-8, static_cast<std::size_t>(*k))
          : rmt::to_bordered(coeffs);
    const rmt::RecoveredDensity density =
        rmt::recover_density(bordered, static_cast<std::size_t>(grid));

    emit(output, "density", format == "csv" ? "csv" : "json",
         format == "csv" ? rmt::io::density_to_csv(density)
                         : table("json", {"x", "density"}, {density.grid, density.values}));
    const json report{{"support", rmt::io::support_to_json(density.support)},
                      {"suspected_atoms", rmt::io::atoms_to_json(density.suspected_atoms)},
                      {"jacobi", rmt::io::bordered_to_json(bordered)},
                      {"lanczos_steps", nsteps}};
    emit(output, "report", "json", report.dump(2) + "\n");
    return 0;
}

int run_experiment(int figure, const rmt::ExperimentConfig& cfg, int k,
                   const std::string& outdir) {
    switch (figure) {
    case 2: {
        const auto report = rmt::run_figure2(cfg.seed, static_cast<std::size_t>(k), outdir);
        std::cout << rmt::io::figure2_report_json(report).dump(2) << "\n";
        return 0;
    }
    case 3: {
        const auto report = rmt::run_figure3(cfg, outdir);
        std::cout << rmt::io::figure3_report_json(report).dump(2) << "\n";
        return 0;
    }
    case 4: {
        const auto report = rmt::run_figure4(cfg, outdir);
        std::cout << rmt::io::figure4_report_json(report).dump(2) << "\n";
        return 0;
    }
    default:
        throw std::invalid_argument("experiment --figure must be 2, 3, or 4");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bordered-Toeplitz Jacobi encodings of random matrix laws"};
    app.require_subcommand(1);

    LawFlags law_flags;
    int n_moments = 0, n_cumulants = 0, n_density = 0, n_cauchy = 0;
    bool want_jacobi = false;
    std::string output, format = "csv";

    auto* law_cmd = app.add_subcommand("law", "closed-form law data");
    law_cmd->add_option("--law", law_flags.name, "wigner | mp | km | wachter")->required();
    law_cmd->add_option("--lambda", law_flags.lambda, "marchenko-pastur parameter");
    law_cmd->add_option("--v", law_flags.v, "kesten-mckay parameter");
    law_cmd->add_option("--a", law_flags.a, "wachter parameter a");
    law_cmd->add_option("--b", law_flags.b, "wachter parameter b");
    law_cmd->add_option("--moments", n_moments, "emit the first N moments");
    law_cmd->add_option("--cumulants", n_cumulants, "emit the first N free cumulants");
    law_cmd->add_option("--density", n_density, "emit N density samples");
    law_cmd->add_option("--cauchy", n_cauchy, "emit N Cauchy-transform samples right of support");
    law_cmd->add_flag("--jacobi", want_jacobi, "emit the Jacobi parameters");
    law_cmd->add_option("--output", output, "output file prefix (stdout when omitted)");
    law_cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    int pyramid_k = 1;
    auto* pyramid_cmd = app.add_subcommand("pyramid", "Wachter moment coefficient triangle");
    pyramid_cmd->add_option("--k", pyramid_k, "moment index")->required()->check(CLI::PositiveNumber);
    pyramid_cmd->add_option("--output", output, "output file prefix (stdout when omitted)");

    std::string input;
    int steps = 5;
    auto* jacobi_cmd = app.add_subcommand("jacobi", "Jacobi coefficients from a measure or moments");
    jacobi_cmd->add_option("--input", input, "measure CSV (x,w) or moment CSV")->required();
    jacobi_cmd->add_option("--steps", steps, "iteration count")->check(CLI::PositiveNumber);
    jacobi_cmd->add_option("--output", output, "output file prefix (stdout when omitted)");
    jacobi_cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    int tmp_k = 0, tmp_steps = 0, grid = 512;
    auto* recover_cmd = app.add_subcommand("recover", "density from nearly Toeplitz Jacobi data");
    recover_cmd->add_option("--input", input, "measure CSV (x,w) or moment CSV")->required();
    auto* k_opt = recover_cmd->add_option("--k", tmp_k, "boundary length (auto-trimmed when omitted)");
    auto* steps_opt = recover_cmd->add_option("--steps", tmp_steps, "iteration count");
    recover_cmd->add_option("--grid", grid, "density grid size")->check(CLI::PositiveNumber);
    recover_cmd->add_option("--output", output, "output file prefix (stdout when omitted)");
    recover_cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

    rmt::ExperimentConfig cfg;
    int figure = 0, exp_k = 3;
    std::string outdir = ".";
    auto* exp_cmd = app.add_subcommand("experiment", "figure pipelines");
    exp_cmd->add_option("--figure", figure, "2 | 3 | 4")->required();
    exp_cmd->add_option("--seed", cfg.seed, "generator seed");
    exp_cmd->add_option("--k", exp_k, "boundary length for figure 2");
    exp_cmd->add_option("--m", cfg.m, "matrix rows");
    exp_cmd->add_option("--n", cfg.n, "matrix columns");
    exp_cmd->add_option("--mu", cfg.mu_shift, "diagonal shift");
    exp_cmd->add_option("--bandwidth", cfg.bandwidth, "kernel width on the standardized axis");
    exp_cmd->add_option("--steps", cfg.lanczos_steps, "Lanczos steps");
    exp_cmd->add_option("--grid", cfg.grid_size, "grid size");
    exp_cmd->add_option("--moments", cfg.moment_count, "moment count for figure 4");
    exp_cmd->add_option("--output", outdir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::optional<int> recover_k, recover_steps;
    if (k_opt->count() > 0) recover_k = tmp_k;
    if (steps_opt->count() > 0) recover_steps = tmp_steps;

    try {
        if (law_cmd->parsed())
            return run_law(law_flags, n_moments, n_cumulants, n_density, n_cauchy, want_jacobi,
                           output, format);
        if (pyramid_cmd->parsed()) return run_pyramid(pyramid_k, output);
        if (jacobi_cmd->parsed()) return run_jacobi_cmd(input, steps, output, format);
        if (recover_cmd->parsed())
            return run_recover(input, recover_k, recover_steps, grid, output, format);
        if (exp_cmd->parsed()) return run_experiment(figure, cfg, exp_k, outdir);
    } catch (const rmt::NonRealizableMoments& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const rmt::LanczosBreakdown& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
