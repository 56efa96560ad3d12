#pragma once

#include "rmt/jacobi.hpp"
#include "rmt/recover.hpp"
#include "rmt/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rmt {

struct ExperimentConfig {
    std::uint64_t seed = 1;
    std::size_t m = 400;
    std::size_t n = 1200;
    double mu_shift = 5.0;
    /// Gaussian kernel width on the standardized (unit variance) axis;
    /// nonpositive selects Silverman's rule.
    double bandwidth = 0.07;
    std::size_t lanczos_steps = 6;
    std::size_t grid_size = 2048;
    std::size_t moment_count = 20;

    void validate() const;
};

/// Squared singular values of X/sqrt(m) + mu * I for the given row-major X,
/// computed through the m x m Gram matrix and returned ascending. The
/// rectangular identity has ones on positions (i, i).
std::vector<double> shifted_wishart_eigs(const std::vector<double>& x_row_major,
                                         std::size_t m, std::size_t n, double mu);

/// Draws X as m x n standard normals from a seeded generator (row-major
/// order) and returns shifted_wishart_eigs of the draw.
std::vector<double> sample_shifted_wishart_eigs(const ExperimentConfig& cfg);

/// Gaussian kernel density estimate on a uniform grid spanning
/// [min - 3h, max + 3h], weights renormalized to sum to one. bandwidth <= 0
/// selects Silverman's rule h = 1.06 sigma N^{-1/5}.
DiscretizedMeasure kernel_smooth(const std::vector<double>& samples, double bandwidth,
                                 std::size_t grid_size);

/// Standard normal moments m_0..m_{count-1}: (n-1)!! for even n, 0 for odd.
MomentSequence normal_moments(std::size_t count);

/// Recovery round trip on one random bordered matrix with |alpha_i| > 0 and
/// beta_i >= |alpha_i|: recover the density, rediscretize, rerun Lanczos and
/// compare parameters. Cases with detected atoms (or an unresolved
/// near-atomic resonance) are reported, not compared.
struct RandomRecoveryReport {
    std::uint64_t seed = 0;
    std::size_t k = 0;
    BorderedJacobi original;
    JacobiCoefficients recovered;
    std::vector<SuspectedAtom> atoms;
    bool resonance_unresolved = false;
    double max_param_error = 0.0;
    double support_mass = 0.0;
    std::string density_csv;

    bool clean() const { return atoms.empty() && !resonance_unresolved; }
};

RandomRecoveryReport run_figure2(std::uint64_t seed, std::size_t k,
                                 const std::string& output_dir = ".");

/// Shifted-Wishart pipeline: sample eigenvalues, standardize, smooth with a
/// Gaussian kernel, run Lanczos, recover the density from the bordered
/// matrix, and compare against the smoothed histogram.
struct WishartReport {
    ExperimentConfig config;
    double sample_mean = 0.0;
    double sample_sd = 0.0;
    double bandwidth = 0.0;
    JacobiCoefficients lanczos; // on the standardized axis
    double toeplitz_dist = 0.0;
    double l1_error = 0.0;
    double linf_error = 0.0;
    std::string curve_csv;
};

WishartReport run_figure3(const ExperimentConfig& cfg, const std::string& output_dir = ".");

/// Normal reconstruction from finitely many moments, compared against the
/// standard normal density on [-4, 4].
struct NormalReport {
    ExperimentConfig config;
    JacobiCoefficients coefficients;
    double recovered_mass = 0.0;
    double l1_error = 0.0;
    double linf_error = 0.0;
    std::string curve_csv;
};

NormalReport run_figure4(const ExperimentConfig& cfg, const std::string& output_dir = ".");

} // namespace rmt
