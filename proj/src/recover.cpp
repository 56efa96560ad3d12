#include "rmt/recover.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rmt {

namespace {

constexpr double kPi = std::numbers::pi;

double param_scale(const BorderedJacobi& j) {
    double s = std::abs(j.tail_alpha) + 2.0 * j.tail_beta;
    for (std::size_t i = 0; i < j.boundary_size(); ++i)
        s = std::max(s, std::abs(j.boundary_alpha[i]) + 2.0 * j.boundary_beta[i]);
    return std::max(1.0, s);
}

// 1/g as a real function of real x outside the tail support. Strictly
// increasing between its poles; its zeros are the atoms.
double inverse_g(const BorderedJacobi& j, double x) {
    const double r = (x - j.tail_alpha) * (x - j.tail_alpha) - 4.0 * j.tail_beta * j.tail_beta;
    const double s = (x >= j.tail_alpha ? 1.0 : -1.0) * std::sqrt(std::max(0.0, r));
    const double tail = x - j.tail_alpha + s;
    const std::size_t k = j.boundary_size();
    if (k == 0) return 0.5 * tail;
    double d = x - j.boundary_alpha[k - 1] - 2.0 * j.boundary_beta[k - 1] * j.boundary_beta[k - 1] / tail;
    for (std::size_t i = k - 1; i-- > 0;)
        d = x - j.boundary_alpha[i] - j.boundary_beta[i] * j.boundary_beta[i] / d;
    return d;
}

} // namespace

SupportInterval tail_support(const BorderedJacobi& j) {
    return {j.tail_alpha - 2.0 * j.tail_beta, j.tail_alpha + 2.0 * j.tail_beta};
}

Complex tail_g(const BorderedJacobi& j, double x) {
    if (!std::isfinite(x))
        throw std::invalid_argument("tail_g: x must be finite");
    const double dx = x - j.tail_alpha;
    const double r = dx * dx - 4.0 * j.tail_beta * j.tail_beta;
    if (r < 0.0) return {dx, std::sqrt(-r)};
    return {dx + (dx >= 0.0 ? 1.0 : -1.0) * std::sqrt(r), 0.0};
}

Complex continued_fraction_g(const BorderedJacobi& j, double x, const RecoverOptions& opts) {
    const Complex tail = tail_g(j, x);
    const bool off_support = tail.imag() == 0.0;
    const double scale = param_scale(j);
    const std::size_t k = j.boundary_size();
    if (k == 0) return 2.0 / tail;

    Complex d = x - j.boundary_alpha[k - 1] -
                2.0 * j.boundary_beta[k - 1] * j.boundary_beta[k - 1] / tail;
    if (off_support && std::abs(d) < opts.pole_tol * scale)
        throw PoleSignal(x, k - 1);
    for (std::size_t i = k - 1; i-- > 0;) {
        d = x - j.boundary_alpha[i] - j.boundary_beta[i] * j.boundary_beta[i] / d;
        if (off_support && std::abs(d) < opts.pole_tol * scale)
            throw PoleSignal(x, i);
    }
    return 1.0 / d;
}

std::vector<SuspectedAtom> find_atoms(const BorderedJacobi& j, const RecoverOptions& opts) {
    const SupportInterval sup = tail_support(j);
    const std::size_t k = j.boundary_size();
    const std::size_t n = k + opts.truncation;

    Eigen::VectorXd diag(n), sub(n - 1);
    for (std::size_t i = 0; i < n; ++i) diag[static_cast<Eigen::Index>(i)] = j.alpha_at(i);
    for (std::size_t i = 0; i + 1 < n; ++i) sub[static_cast<Eigen::Index>(i)] = j.beta_at(i);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

    const double scale = param_scale(j);
    const double edge_tol = 1e-9 * scale;
    std::vector<SuspectedAtom> atoms;
    for (Eigen::Index idx = 0; idx < solver.eigenvalues().size(); ++idx) {
        const double e = solver.eigenvalues()[idx];
        if (e > sup.lo - edge_tol && e < sup.hi + edge_tol) continue;

        // Bracket the zero of the locally increasing 1/g around the candidate
        // and bisect. A bracket that never validates is still reported, with
        // the truncation eigenvalue as the location estimate.
        const double edge = e > sup.hi ? sup.hi : sup.lo;
        double half = std::min(std::abs(e - edge) / 2.0, 1e-3 * scale);
        double x0 = e - half, x1 = e + half;
        bool bracketed = false;
        for (int attempt = 0; attempt < 60; ++attempt) {
            if (inverse_g(j, x0) < 0.0 && inverse_g(j, x1) > 0.0) {
                bracketed = true;
                break;
            }
            half *= 0.5;
            x0 = e - half;
            x1 = e + half;
        }
        if (!bracketed) {
            atoms.push_back({e, 0.0, "pole location from matrix truncation only"});
            continue;
        }
        for (int iter = 0; iter < 100; ++iter) {
            const double xm = 0.5 * (x0 + x1);
            (inverse_g(j, xm) < 0.0 ? x0 : x1) = xm;
        }
        const double loc = 0.5 * (x0 + x1);
        const double h = std::max(1e-9, 1e-7 * std::abs(loc));
        const double slope = (inverse_g(j, loc + h) - inverse_g(j, loc - h)) / (2.0 * h);
        const double residue = slope != 0.0 ? 1.0 / std::abs(slope) : 0.0;
        atoms.push_back({loc, residue, "zero of 1/g outside the tail support"});
    }
    return atoms;
}

RecoveredDensity recover_density(const BorderedJacobi& j, std::size_t grid_size,
                                 const RecoverOptions& opts) {
    if (grid_size < 16)
        throw std::invalid_argument("recover_density: need grid_size >= 16");

    RecoveredDensity out;
    out.support = tail_support(j);
    out.suspected_atoms = find_atoms(j, opts);

    const double step = (out.support.hi - out.support.lo) / static_cast<double>(grid_size);
    out.grid.resize(grid_size);
    out.values.resize(grid_size);
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double x = out.support.lo + (static_cast<double>(i) + 0.5) * step;
        out.grid[i] = x;
        double value = -continued_fraction_g(j, x, opts).imag() / kPi;
        if (value < 0.0) value = 0.0; // clamp the tiny negatives from rounding
        out.values[i] = value;
    }
    return out;
}

DiscretizedMeasure discretize(const BorderedJacobi& j, std::size_t points,
                              const RecoverOptions& opts) {
    if (points < 2)
        throw std::invalid_argument("discretize: need at least 2 points");
    const SupportInterval s = tail_support(j);
    const double c = s.midpoint(), r = s.half_width();
    std::vector<double> xs(points), ws(points);
    double total = 0.0;
    for (std::size_t i = 0; i < points; ++i) {
        const double theta =
            (static_cast<double>(points - 1 - i) + 0.5) * kPi / static_cast<double>(points);
        xs[i] = c + r * std::cos(theta);
        const double density = std::max(0.0, -continued_fraction_g(j, xs[i], opts).imag() / kPi);
        ws[i] = density * std::sin(theta);
        total += ws[i];
    }
    for (double& w : ws) w /= total;
    return {std::move(xs), std::move(ws)};
}

double support_mass(const BorderedJacobi& j, std::size_t points, const RecoverOptions& opts) {
    const SupportInterval s = tail_support(j);
    const double c = s.midpoint(), r = s.half_width();
    double total = 0.0;
    for (std::size_t i = 0; i < points; ++i) {
        const double theta = (static_cast<double>(i) + 0.5) * kPi / static_cast<double>(points);
        const double x = c + r * std::cos(theta);
        const double density = std::max(0.0, -continued_fraction_g(j, x, opts).imag() / kPi);
        total += density * std::sin(theta);
    }
    return total * r * kPi / static_cast<double>(points);
}

} // namespace rmt
