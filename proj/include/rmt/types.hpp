#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmt {

using Complex = std::complex<double>;

/// Closed interval [lo, hi] carrying the support of a compactly supported measure.
struct SupportInterval {
    double lo = 0.0;
    double hi = 0.0;

    SupportInterval() = default;
    SupportInterval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
            throw std::invalid_argument("SupportInterval: need finite lo < hi");
    }

    double midpoint() const { return 0.5 * (lo + hi); }
    double half_width() const { return 0.5 * (hi - lo); }
    bool contains_interior(double x) const { return x > lo && x < hi; }
};

/// Jacobi recurrence coefficients alpha[0..L-1], beta[0..L-1] produced by a
/// Lanczos-type iteration.
struct JacobiCoefficients {
    std::vector<double> alpha;
    std::vector<double> beta;

    std::size_t size() const { return alpha.size(); }
};

/// Infinite symmetric tridiagonal (Jacobi) matrix that is Toeplitz beyond a
/// finite boundary: entries (alpha_i, beta_i) equal (boundary_alpha[i],
/// boundary_beta[i]) for i < k and (tail_alpha, tail_beta) for i >= k.
/// k == 0 means pure Toeplitz.
struct BorderedJacobi {
    std::vector<double> boundary_alpha;
    std::vector<double> boundary_beta;
    double tail_alpha = 0.0;
    double tail_beta = 1.0;

    BorderedJacobi() = default;
    BorderedJacobi(std::vector<double> balpha, std::vector<double> bbeta,
                   double talpha, double tbeta)
        : boundary_alpha(std::move(balpha)), boundary_beta(std::move(bbeta)),
          tail_alpha(talpha), tail_beta(tbeta) {
        if (boundary_alpha.size() != boundary_beta.size())
            throw std::invalid_argument("BorderedJacobi: boundary vectors must have equal length");
        if (!(tail_beta > 0.0))
            throw std::invalid_argument("BorderedJacobi: tail beta must be positive");
        for (double b : boundary_beta)
            if (!(b > 0.0))
                throw std::invalid_argument("BorderedJacobi: boundary betas must be positive");
    }

    std::size_t boundary_size() const { return boundary_alpha.size(); }

    double alpha_at(std::size_t i) const {
        return i < boundary_alpha.size() ? boundary_alpha[i] : tail_alpha;
    }
    double beta_at(std::size_t i) const {
        return i < boundary_beta.size() ? boundary_beta[i] : tail_beta;
    }
};

/// Probability measure sampled on a finite grid: strictly increasing points
/// with nonnegative weights summing to one.
struct DiscretizedMeasure {
    std::vector<double> points;
    std::vector<double> weights;

    DiscretizedMeasure() = default;
    DiscretizedMeasure(std::vector<double> pts, std::vector<double> wts)
        : points(std::move(pts)), weights(std::move(wts)) {
        validate();
    }

    std::size_t size() const { return points.size(); }

    void validate() const {
        if (points.size() != weights.size() || points.size() < 2)
            throw std::invalid_argument("DiscretizedMeasure: need >= 2 points with matching weights");
        double total = 0.0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (!std::isfinite(points[i]) || !std::isfinite(weights[i]) || weights[i] < 0.0)
                throw std::invalid_argument("DiscretizedMeasure: weights must be finite and nonnegative");
            if (i > 0 && !(points[i] > points[i - 1]))
                throw std::invalid_argument("DiscretizedMeasure: points must be strictly increasing");
            total += weights[i];
        }
        if (std::abs(total - 1.0) > 1e-12)
            throw std::invalid_argument("DiscretizedMeasure: weights must sum to 1");
    }
};

/// Signalled when a Lanczos-type iteration cannot continue because the measure
/// is supported on fewer points than requested steps. Carries the
/// coefficients computed before the breakdown.
class LanczosBreakdown : public std::runtime_error {
public:
    LanczosBreakdown(std::size_t step, JacobiCoefficients partial)
        : std::runtime_error("Lanczos breakdown at step " + std::to_string(step)),
          step_(step), partial_(std::move(partial)) {}

    std::size_t step() const { return step_; }
    const JacobiCoefficients& partial() const { return partial_; }

private:
    std::size_t step_;
    JacobiCoefficients partial_;
};

/// Signalled when a moment sequence admits no representing measure (its
/// Hankel matrix has a negative pivot).
class NonRealizableMoments : public std::runtime_error {
public:
    explicit NonRealizableMoments(std::size_t pivot_index)
        : std::runtime_error("moment sequence not realizable: negative Hankel pivot at index " +
                             std::to_string(pivot_index)),
          pivot_index_(pivot_index) {}

    std::size_t pivot_index() const { return pivot_index_; }

private:
    std::size_t pivot_index_;
};

/// Finite list of raw moments m_0..m_N with m_0 = 1. Construction checks that
/// the Hankel matrix H[i][j] = m_{i+j} is positive semidefinite by attempting
/// its Cholesky factorization.
class MomentSequence {
public:
    explicit MomentSequence(std::vector<double> moments, double pd_tol = 1e-10);

    const std::vector<double>& moments() const { return moments_; }
    double operator[](std::size_t i) const { return moments_.at(i); }
    std::size_t size() const { return moments_.size(); }

private:
    std::vector<double> moments_;
};

} // namespace rmt
