#pragma once

#include "rmt/combinatorics.hpp"
#include "rmt/types.hpp"

#include <cstddef>

namespace rmt {

enum class LawKind { WignerSemicircle, MarchenkoPastur, KestenMcKay, Wachter };

/// One of the four classical level-density laws with validated parameters:
/// Marchenko-Pastur needs lambda >= 1, Kesten-McKay needs v >= 2, Wachter
/// needs a >= 1 and b >= 1.
class LawSpec {
public:
    static LawSpec wigner();
    static LawSpec marchenko_pastur(double lambda);
    static LawSpec kesten_mckay(double v);
    static LawSpec wachter(double a, double b);

    LawKind kind() const { return kind_; }
    double lambda() const { return lambda_; }
    double v() const { return v_; }
    double a() const { return a_; }
    double b() const { return b_; }

    std::string name() const;

private:
    explicit LawSpec(LawKind kind) : kind_(kind) {}

    LawKind kind_;
    double lambda_ = 0.0;
    double v_ = 0.0;
    double a_ = 0.0;
    double b_ = 0.0;
};

SupportInterval support(const LawSpec& law);

/// Density of the law at x; zero outside the open support interval.
double density(const LawSpec& law, double x);

/// Cauchy transform g(z) = integral of 1/(z - x) d mu(x), with the branch
/// fixed by g(z) ~ 1/z at infinity. Real z strictly inside the support is a
/// domain error; use the recovery module for on-support boundary values.
Complex cauchy_transform(const LawSpec& law, Complex z);

/// Raw moment m_n; exactly zero for odd n of the symmetric laws.
double moment(const LawSpec& law, unsigned n);

/// Free cumulant kappa_n, n >= 1.
double free_cumulant(const LawSpec& law, unsigned n);

/// Exact rational moment / cumulant. The double parameters are taken at their
/// exact binary value, so results are exact for exactly representable inputs.
BigRational moment_exact(const LawSpec& law, unsigned n);
BigRational free_cumulant_exact(const LawSpec& law, unsigned n);

/// R-transform, the branch whose power series around w = 0 has no pole; the
/// removable singularity at w = 0 evaluates to kappa_1.
Complex r_transform(const LawSpec& law, Complex w);

/// S-transform S(z) = R^{-1}(z) / z.
Complex s_transform(const LawSpec& law, Complex z);

/// Jacobi parameters as a boundary of length one plus the constant tail.
BorderedJacobi jacobi_params(const LawSpec& law);

/// Monic orthogonal polynomial q_n of the law, evaluated via the
/// Chebyshev-U closed form
///   q_n = beta1^{n-1} (x - alpha0) U_{n-1}(y) - beta0^2 beta1^{n-2} U_{n-2}(y),
/// y = (x - alpha1) / (2 beta1). q_0 = 1. The family is monic, not
/// orthonormal; its squared norm is prod_{i<n} beta_i^2.
double orthogonal_poly(const LawSpec& law, unsigned n, double x);

/// Squared L2-norm of orthogonal_poly(law, n) under the law, computed by
/// quadrature on a cosine-spaced discretization.
double orthogonal_poly_norm(const LawSpec& law, unsigned n, std::size_t points = 20000);

/// Cosine-spaced discretization of the law over its support: points cluster
/// at the square-root edges, weights are density times the arc-length factor,
/// renormalized to sum to one.
DiscretizedMeasure discretize(const LawSpec& law, std::size_t points);

namespace detail {

// Closed-form moment kernels shared by the double and exact-rational paths.
template <class T>
T wigner_moment(unsigned n) {
    if (n % 2 != 0) return T(0);
    return scalar_from_bigint<T>(catalan(n / 2));
}

template <class T>
T mp_moment(unsigned n, const T& lambda) {
    return narayana_poly<T>(n, lambda);
}

template <class T>
T km_moment(unsigned n, const T& v) {
    if (n == 0) return T(1);
    if (n % 2 != 0) return T(0);
    const unsigned half = n / 2;
    T acc(0);
    for (unsigned j = 1; j <= half; ++j) {
        // binom(n-j, n/2) * j / (n-j) is an integer (a Catalan-triangle entry).
        BigInt coeff = binomial(n - j, half) * j / (n - j);
        T term = scalar_from_bigint<T>(coeff);
        for (unsigned p = 0; p < j; ++p) term *= v;
        for (unsigned p = 0; p < half - j; ++p) term *= (v - T(1));
        acc += term;
    }
    return acc;
}

template <class T>
T wachter_moment(unsigned k, const T& a, const T& b) {
    if (k == 0) return T(1);
    const T c = a + b;
    const T au = a * (c - T(1));
    const T ratio = au / (c * c);
    T acc(0);
    for (unsigned j = 0; j + 2 <= k; ++j) {
        T factor(1);
        for (unsigned p = 0; p < j + 2; ++p) factor *= ratio;
        acc += factor * narayana_poly<T>(j + 1, b / au);
    }
    return a / c - c * acc;
}

template <class T>
T wachter_cumulant(unsigned n, const T& a, const T& b) {
    // kappa_n = -N_{n-1}(-b/a) (-a)^n / (a+b)^{2n-1}; kappa_1 = a/(a+b).
    const T c = a + b;
    T num = narayana_poly<T>(n - 1, -b / a);
    T apow(1);
    for (unsigned p = 0; p < n; ++p) apow *= -a;
    T cpow(1);
    for (unsigned p = 0; p < 2 * n - 1; ++p) cpow *= c;
    return -num * apow / cpow;
}

} // namespace detail

} // namespace rmt
