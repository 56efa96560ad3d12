#include "rmt/jacobi.hpp"

#include <algorithm>
#include <cmath>

namespace rmt {

namespace {

double weighted_dot(const std::vector<double>& w, const std::vector<double>& p,
                    const std::vector<double>& q) {
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * p[i] * q[i];
    return acc;
}

// Cholesky H = R^T R of the Hankel matrix of order `order` built from
// `moments`, with pivot tolerance handling. Returns the rows of R; stops and
// reports via `rank` when a pivot is nonpositive within tolerance.
std::vector<std::vector<double>> hankel_cholesky(const std::vector<double>& moments,
                                                 std::size_t order, double pd_tol,
                                                 std::size_t& rank) {
    std::vector<std::vector<double>> R(order, std::vector<double>(order, 0.0));
    rank = order;
    for (std::size_t i = 0; i < order; ++i) {
        double pivot = moments[2 * i];
        for (std::size_t k = 0; k < i; ++k) pivot -= R[k][i] * R[k][i];
        const double scale = std::max(1.0, std::abs(moments[2 * i]));
        if (pivot < -pd_tol * scale)
            throw NonRealizableMoments(i);
        if (pivot <= pd_tol * scale) {
            rank = i;
            return R;
        }
        R[i][i] = std::sqrt(pivot);
        for (std::size_t j = i + 1; j < order; ++j) {
            double v = moments[i + j];
            for (std::size_t k = 0; k < i; ++k) v -= R[k][i] * R[k][j];
            R[i][j] = v / R[i][i];
        }
    }
    return R;
}

} // namespace

MomentSequence::MomentSequence(std::vector<double> moments, double pd_tol)
    : moments_(std::move(moments)) {
    if (moments_.empty())
        throw std::invalid_argument("MomentSequence: need at least m_0");
    for (double m : moments_)
        if (!std::isfinite(m))
            throw std::invalid_argument("MomentSequence: moments must be finite");
    if (std::abs(moments_[0] - 1.0) > 1e-12)
        throw std::invalid_argument("MomentSequence: m_0 must equal 1");
    const std::size_t order = (moments_.size() + 1) / 2; // largest Hankel the list can fill
    std::size_t rank = 0;
    hankel_cholesky(moments_, order, pd_tol, rank); // throws NonRealizableMoments if indefinite
}

JacobiCoefficients lanczos_discrete(const DiscretizedMeasure& mu, std::size_t steps,
                                    const LanczosOptions& opts) {
    if (steps == 0)
        throw std::invalid_argument("lanczos_discrete: need steps >= 1");
    if (steps > mu.size() - 1)
        throw std::invalid_argument("lanczos_discrete: steps must be <= number of grid points - 1");

    const std::size_t npts = mu.size();
    const std::vector<double>& x = mu.points;
    const std::vector<double>& w = mu.weights;

    JacobiCoefficients out;
    std::vector<std::vector<double>> basis; // q_0, q_1, ...
    basis.emplace_back(npts, 1.0);
    std::vector<double> q_prev(npts, 0.0);
    double beta_prev = 0.0;

    for (std::size_t n = 0; n < steps; ++n) {
        const std::vector<double>& q = basis.back();
        std::vector<double> v(npts);
        for (std::size_t i = 0; i < npts; ++i) v[i] = x[i] * q[i];
        const double alpha = weighted_dot(w, q, v);
        for (std::size_t i = 0; i < npts; ++i)
            v[i] -= beta_prev * q_prev[i] + alpha * q[i];
        // full reorthogonalization against the whole basis
        for (const auto& qq : basis) {
            const double proj = weighted_dot(w, qq, v);
            for (std::size_t i = 0; i < npts; ++i) v[i] -= proj * qq[i];
        }
        const double beta = std::sqrt(std::max(0.0, weighted_dot(w, v, v)));
        out.alpha.push_back(alpha);
        if (beta < opts.breakdown_tol)
            throw LanczosBreakdown(n, out);
        out.beta.push_back(beta);
        for (double& vi : v) vi /= beta;
        q_prev = q;
        beta_prev = beta;
        basis.push_back(std::move(v));
    }
    return out;
}

JacobiCoefficients moments_to_jacobi(const MomentSequence& m, std::size_t steps,
                                     const MomentJacobiOptions& opts) {
    if (steps == 0)
        throw std::invalid_argument("moments_to_jacobi: need steps >= 1");
    if (2 * steps > m.size() - 1)
        throw std::invalid_argument("moments_to_jacobi: need moments m_0..m_{2*steps}");

    const std::size_t order = steps + 1;
    std::size_t rank = order;
    const auto R = hankel_cholesky(m.moments(), order, opts.pd_tol, rank);

    JacobiCoefficients out;
    for (std::size_t n = 0; n < steps; ++n) {
        if (n + 1 > rank) break;
        const double prev = n == 0 ? 0.0 : R[n - 1][n] / R[n - 1][n - 1];
        out.alpha.push_back(R[n][n + 1] / R[n][n] - prev);
        const double beta = n + 1 < rank ? R[n + 1][n + 1] / R[n][n] : 0.0;
        if (beta < opts.breakdown_tol)
            throw LanczosBreakdown(n, out);
        out.beta.push_back(beta);
    }
    return out;
}

BorderedJacobi to_bordered(const JacobiCoefficients& coeffs, double trim_tol,
                           std::optional<std::size_t> fixed_k) {
    const std::size_t len = coeffs.size();
    if (len == 0 || coeffs.beta.size() != len)
        throw std::invalid_argument("to_bordered: need nonempty coefficient vectors of equal length");

    std::size_t k;
    double tail_alpha, tail_beta;
    if (fixed_k) {
        if (*fixed_k >= len)
            throw std::invalid_argument("to_bordered: fixed k must be < number of coefficients");
        k = *fixed_k;
        tail_alpha = coeffs.alpha[k];
        tail_beta = coeffs.beta[k];
    } else {
        tail_alpha = coeffs.alpha[len - 1];
        tail_beta = coeffs.beta[len - 1];
        k = len - 1;
        while (k > 0 && std::abs(coeffs.alpha[k - 1] - tail_alpha) <= trim_tol &&
               std::abs(coeffs.beta[k - 1] - tail_beta) <= trim_tol)
            --k;
    }
    return {{coeffs.alpha.begin(), coeffs.alpha.begin() + static_cast<std::ptrdiff_t>(k)},
            {coeffs.beta.begin(), coeffs.beta.begin() + static_cast<std::ptrdiff_t>(k)},
            tail_alpha,
            tail_beta};
}

double toeplitz_distance(const JacobiCoefficients& coeffs) {
    const std::size_t len = coeffs.size();
    if (len < 2 || coeffs.beta.size() != len)
        throw std::invalid_argument("toeplitz_distance: need length >= 2");
    const double alpha_last = coeffs.alpha[len - 1];
    const double beta_last = coeffs.beta[len - 1];
    double dist = 0.0;
    for (std::size_t i = len / 2; i < len; ++i) {
        dist = std::max(dist, std::abs(coeffs.alpha[i] - alpha_last));
        dist = std::max(dist, std::abs(coeffs.beta[i] - beta_last));
    }
    return dist;
}

} // namespace rmt
