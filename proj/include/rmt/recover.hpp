#pragma once

#include "rmt/types.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace rmt {

struct RecoverOptions {
    double pole_tol = 1e-9;
    double atom_tol = 1e-9;
    /// Toeplitz rows appended to the boundary when locating point spectrum
    /// outside the tail support.
    std::size_t truncation = 600;
};

/// Support interval of the Toeplitz tail: [alpha - 2 beta, alpha + 2 beta].
SupportInterval tail_support(const BorderedJacobi& j);

/// Innermost continued-fraction term x - alpha + sqrt((alpha - x)^2 - 4 beta^2)
/// for the Toeplitz tail. Inside the tail support the square root of the
/// negative radicand is +i sqrt|.|; outside it carries sign(x - alpha), which
/// makes the full fraction decay like 1/x at both infinities.
Complex tail_g(const BorderedJacobi& j, double x);

/// Signalled when the continued fraction hits a vanishing level at a real
/// point outside the tail support; such points are candidate atoms.
class PoleSignal : public std::domain_error {
public:
    PoleSignal(double x, std::size_t level)
        : std::domain_error("continued fraction pole near x = " + std::to_string(x)),
          x_(x), level_(level) {}
    double x() const { return x_; }
    std::size_t level() const { return level_; }

private:
    double x_;
    std::size_t level_;
};

/// Cauchy transform of the bordered matrix, evaluated from the innermost
/// level outward:
///   level_k = tail_g(x); d = x - alpha_{k-1} - 2 beta_{k-1}^2 / level_k;
///   d <- x - alpha_i - beta_i^2 / d for i = k-2..0; g = 1/d.
/// A pure Toeplitz matrix (k = 0) evaluates to 2 / tail_g(x).
Complex continued_fraction_g(const BorderedJacobi& j, double x,
                             const RecoverOptions& opts = {});

struct SuspectedAtom {
    double location = 0.0;
    double residue = 0.0;
    std::string note;
};

/// Point spectrum outside the tail support. Candidates come from the
/// eigenvalues of a long finite truncation of the bordered matrix; each is
/// refined by bisection on the increasing function 1/g and weighted by the
/// residue 1/|d'(x)|.
std::vector<SuspectedAtom> find_atoms(const BorderedJacobi& j, const RecoverOptions& opts = {});

struct RecoveredDensity {
    SupportInterval support;
    std::vector<double> grid;
    std::vector<double> values;
    std::vector<SuspectedAtom> suspected_atoms;
};

/// Density -Im(g)/pi on a uniform grid over the open tail support (endpoints
/// excluded by half a grid step). Tiny negative values are clamped to zero;
/// poles outside the support are reported as suspected atoms, not failures.
RecoveredDensity recover_density(const BorderedJacobi& j, std::size_t grid_size,
                                 const RecoverOptions& opts = {});

/// Cosine-spaced discretization of the absolutely continuous part over the
/// tail support, normalized to total weight one. Suitable for feeding the
/// recovered measure back into the Lanczos iteration.
DiscretizedMeasure discretize(const BorderedJacobi& j, std::size_t points,
                              const RecoverOptions& opts = {});

/// Unnormalized integral of -Im(g)/pi over the tail support with `points`
/// cosine-rule nodes; equals one minus the mass of any atoms when resolved.
double support_mass(const BorderedJacobi& j, std::size_t points,
                    const RecoverOptions& opts = {});

} // namespace rmt
