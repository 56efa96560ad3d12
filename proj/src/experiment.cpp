#include "rmt/experiment.hpp"

#include "rmt/io.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>

namespace rmt {

namespace {

constexpr double kPi = std::numbers::pi;

double silverman_bandwidth(const std::vector<double>& samples) {
    const double n = static_cast<double>(samples.size());
    double mean = 0.0;
    for (double s : samples) mean += s;
    mean /= n;
    double var = 0.0;
    for (double s : samples) var += (s - mean) * (s - mean);
    var /= n;
    return 1.06 * std::sqrt(var) * std::pow(n, -0.2);
}

double density_at(const BorderedJacobi& j, double x, const RecoverOptions& opts = {}) {
    try {
        return std::max(0.0, -continued_fraction_g(j, x, opts).imag() / kPi);
    } catch (const PoleSignal&) {
        return 0.0; // a grid point landed on a pole; the a.c. density is zero there
    }
}

} // namespace

void ExperimentConfig::validate() const {
    if (m < 2 || n < m)
        throw std::invalid_argument("ExperimentConfig: need n >= m >= 2");
    if (lanczos_steps < 1)
        throw std::invalid_argument("ExperimentConfig: need lanczos_steps >= 1");
    if (grid_size < 16)
        throw std::invalid_argument("ExperimentConfig: need grid_size >= 16");
    if (moment_count < 2)
        throw std::invalid_argument("ExperimentConfig: need moment_count >= 2");
}

std::vector<double> shifted_wishart_eigs(const std::vector<double>& x_row_major,
                                         std::size_t m, std::size_t n, double mu) {
    if (x_row_major.size() != m * n)
        throw std::invalid_argument("shifted_wishart_eigs: matrix size mismatch");
    const double inv_sqrt_m = 1.0 / std::sqrt(static_cast<double>(m));
    Eigen::MatrixXd A(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                x_row_major[i * n + j] * inv_sqrt_m;
    for (std::size_t i = 0; i < m; ++i)
        A(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) += mu;

    // The m x m Gram matrix carries the m squared singular values without the
    // n - m structural zeros of the n x n product.
    Eigen::MatrixXd gram = A * A.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> sample_shifted_wishart_eigs(const ExperimentConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> x(cfg.m * cfg.n);
    for (double& xi : x) xi = normal(rng);
    return shifted_wishart_eigs(x, cfg.m, cfg.n, cfg.mu_shift);
}

DiscretizedMeasure kernel_smooth(const std::vector<double>& samples, double bandwidth,
                                 std::size_t grid_size) {
    if (samples.size() < 2)
        throw std::invalid_argument("kernel_smooth: need at least 2 samples");
    if (grid_size < 2)
        throw std::invalid_argument("kernel_smooth: need grid_size >= 2");
    const double h = bandwidth > 0.0 ? bandwidth : silverman_bandwidth(samples);
    const auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
    const double lo = *mn - 3.0 * h, hi = *mx + 3.0 * h;
    const double dx = (hi - lo) / static_cast<double>(grid_size - 1);

    std::vector<double> xs(grid_size), ws(grid_size);
    double total = 0.0;
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double x = lo + static_cast<double>(i) * dx;
        double acc = 0.0;
        for (double s : samples) {
            const double t = (x - s) / h;
            acc += std::exp(-0.5 * t * t);
        }
        xs[i] = x;
        ws[i] = acc;
        total += acc;
    }
    for (double& w : ws) w /= total;
    return {std::move(xs), std::move(ws)};
}

MomentSequence normal_moments(std::size_t count) {
    if (count < 2)
        throw std::invalid_argument("normal_moments: need count >= 2");
    std::vector<double> ms(count, 0.0);
    ms[0] = 1.0;
    for (std::size_t n = 2; n < count; n += 2)
        ms[n] = ms[n - 2] * static_cast<double>(n - 1); // (n-1)!!
    return MomentSequence(std::move(ms));
}

RandomRecoveryReport run_figure2(std::uint64_t seed, std::size_t k, const std::string& output_dir) {
    if (k < 1)
        throw std::invalid_argument("run_figure2: need k >= 1");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.05, 0.4);
    std::uniform_real_distribution<double> spread(0.1, 0.6);
    std::uniform_real_distribution<double> tail_spread(0.6, 1.2);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    std::vector<double> alphas(k + 1), betas(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
        alphas[i] = mag(rng) * (coin(rng) < 0.5 ? -1.0 : 1.0);
        betas[i] = std::abs(alphas[i]) + (i == k ? tail_spread(rng) : spread(rng));
    }

    RandomRecoveryReport report;
    report.seed = seed;
    report.k = k;
    report.original = BorderedJacobi({alphas.begin(), alphas.end() - 1},
                                     {betas.begin(), betas.end() - 1}, alphas[k], betas[k]);

    const RecoveredDensity density = recover_density(report.original, 1024);
    report.atoms = density.suspected_atoms;

    double atom_mass = 0.0;
    for (const auto& atom : report.atoms) atom_mass += atom.residue;

    // Sharp near-atomic resonances need progressively finer quadrature; give
    // up and flag the case when doubling stops helping.
    std::size_t points = 32768;
    report.resonance_unresolved = true;
    for (int attempt = 0; attempt < 6; ++attempt) {
        report.support_mass = support_mass(report.original, points);
        if (std::abs(report.support_mass - (1.0 - atom_mass)) <= 1e-7) {
            report.resonance_unresolved = false;
            break;
        }
        points *= 2;
    }

    if (report.clean()) {
        const DiscretizedMeasure mu = discretize(report.original, points);
        report.recovered = lanczos_discrete(mu, k + 1);
        double err = 0.0;
        for (std::size_t i = 0; i <= k; ++i) {
            err = std::max(err, std::abs(report.recovered.alpha[i] - alphas[i]));
            err = std::max(err, std::abs(report.recovered.beta[i] - betas[i]));
        }
        report.max_param_error = err;
    }

    report.density_csv = output_dir + "/figure2_" + std::to_string(seed) + ".csv";
    io::write_file(report.density_csv, io::density_to_csv(density));
    io::write_file(output_dir + "/figure2_" + std::to_string(seed) + ".json",
                   io::figure2_report_json(report).dump(2) + "\n");
    return report;
}

WishartReport run_figure3(const ExperimentConfig& cfg, const std::string& output_dir) {
    cfg.validate();
    WishartReport report;
    report.config = cfg;

    const std::vector<double> eigs = sample_shifted_wishart_eigs(cfg);
    const double n = static_cast<double>(eigs.size());
    double mean = 0.0;
    for (double e : eigs) mean += e;
    mean /= n;
    double var = 0.0;
    for (double e : eigs) var += (e - mean) * (e - mean);
    const double sd = std::sqrt(var / n);
    report.sample_mean = mean;
    report.sample_sd = sd;

    // Standardize before smoothing: the Jacobi parameters of the smoothed
    // histogram then live on an O(1) scale regardless of the shift mu.
    std::vector<double> z(eigs.size());
    for (std::size_t i = 0; i < eigs.size(); ++i) z[i] = (eigs[i] - mean) / sd;

    report.bandwidth = cfg.bandwidth > 0.0 ? cfg.bandwidth : silverman_bandwidth(z);
    const DiscretizedMeasure smoothed = kernel_smooth(z, report.bandwidth, cfg.grid_size);

    report.lanczos = lanczos_discrete(smoothed, cfg.lanczos_steps);
    report.toeplitz_dist = toeplitz_distance(report.lanczos);
    const BorderedJacobi bordered = to_bordered(report.lanczos);

    const double dx = smoothed.points[1] - smoothed.points[0];
    double l1 = 0.0, linf = 0.0;
    std::vector<double> recovered(smoothed.size());
    for (std::size_t i = 0; i < smoothed.size(); ++i) {
        recovered[i] = density_at(bordered, smoothed.points[i]);
        const double diff = std::abs(recovered[i] - smoothed.weights[i] / dx);
        l1 += diff * dx;
        linf = std::max(linf, diff);
    }
    report.l1_error = l1;
    report.linf_error = linf;

    // Curves on the original eigenvalue axis.
    std::string csv = "x,smoothed,recovered\n";
    for (std::size_t i = 0; i < smoothed.size(); ++i) {
        csv += io::format_double(mean + sd * smoothed.points[i]);
        csv += ',';
        csv += io::format_double(smoothed.weights[i] / dx / sd);
        csv += ',';
        csv += io::format_double(recovered[i] / sd);
        csv += '\n';
    }
    report.curve_csv = output_dir + "/figure3_" + std::to_string(cfg.seed) + ".csv";
    io::write_file(report.curve_csv, csv);
    io::write_file(output_dir + "/figure3_" + std::to_string(cfg.seed) + ".json",
                   io::figure3_report_json(report).dump(2) + "\n");
    return report;
}

NormalReport run_figure4(const ExperimentConfig& cfg, const std::string& output_dir) {
    cfg.validate();
    NormalReport report;
    report.config = cfg;

    const MomentSequence ms = normal_moments(cfg.moment_count);
    const std::size_t steps = (cfg.moment_count - 1) / 2;
    report.coefficients = moments_to_jacobi(ms, steps);
    const BorderedJacobi bordered = to_bordered(report.coefficients);
    report.recovered_mass = support_mass(bordered, 32768);

    const std::size_t count = cfg.grid_size | 1; // odd so the grid hits 0
    const double lo = -4.0, hi = 4.0;
    const double dx = (hi - lo) / static_cast<double>(count - 1);
    double l1 = 0.0, linf = 0.0;
    std::string csv = "x,reference,recovered\n";
    for (std::size_t i = 0; i < count; ++i) {
        const double x = lo + static_cast<double>(i) * dx;
        const double ref = std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
        const double rec = density_at(bordered, x);
        const double diff = std::abs(rec - ref);
        const double trap = (i == 0 || i + 1 == count) ? 0.5 : 1.0;
        l1 += trap * diff * dx;
        linf = std::max(linf, diff);
        csv += io::format_double(x);
        csv += ',';
        csv += io::format_double(ref);
        csv += ',';
        csv += io::format_double(rec);
        csv += '\n';
    }
    report.l1_error = l1;
    report.linf_error = linf;

    report.curve_csv =
        output_dir + "/figure4_" + std::to_string(cfg.seed) + ".csv";
    io::write_file(report.curve_csv, csv);
    io::write_file(output_dir + "/figure4_" + std::to_string(cfg.seed) + ".json",
                   io::figure4_report_json(report).dump(2) + "\n");
    return report;
}

} // namespace rmt
