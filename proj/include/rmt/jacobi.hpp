#pragma once

#include "rmt/types.hpp"

#include <cstddef>
#include <optional>

namespace rmt {

struct LanczosOptions {
    double breakdown_tol = 1e-12;
};

/// Lanczos iteration over a grid measure: inner products are weighted sums,
/// polynomials are represented by their values on the grid. Runs with full
/// reorthogonalization against all previous basis vectors. Returns
/// alpha[0..steps-1], beta[0..steps-1]; throws LanczosBreakdown (carrying the
/// partial output) when some beta falls below breakdown_tol.
JacobiCoefficients lanczos_discrete(const DiscretizedMeasure& mu, std::size_t steps,
                                    const LanczosOptions& opts = {});

struct MomentJacobiOptions {
    double pd_tol = 1e-10;
    double breakdown_tol = 1e-12;
};

/// Jacobi coefficients from raw moments via the Cholesky factor R of the
/// Hankel matrix H[i][j] = m_{i+j} of order steps+1 (H = R^T R):
///   alpha_n = R[n][n+1]/R[n][n] - R[n-1][n]/R[n-1][n-1]
///   beta_n  = R[n+1][n+1]/R[n][n]
/// Throws NonRealizableMoments on a negative pivot and LanczosBreakdown when
/// a beta collapses (measure supported on fewer points than steps).
JacobiCoefficients moments_to_jacobi(const MomentSequence& m, std::size_t steps,
                                     const MomentJacobiOptions& opts = {});

/// Package plain coefficient vectors as a bordered matrix: the last entry
/// becomes the Toeplitz tail and the boundary is trimmed from the right while
/// entries match the tail within trim_tol. fixed_k skips trimming and uses
/// exactly k boundary entries (requires k < length).
BorderedJacobi to_bordered(const JacobiCoefficients& coeffs, double trim_tol = 1e-8,
                           std::optional<std::size_t> fixed_k = std::nullopt);

/// How far the trailing half of the coefficient vectors is from constant:
/// max deviation of the last ceil(L/2) entries from the final entries.
double toeplitz_distance(const JacobiCoefficients& coeffs);

} // namespace rmt
