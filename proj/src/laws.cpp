#include "rmt/laws.hpp"

#include <cmath>
#include <numbers>

namespace rmt {

namespace {

constexpr double kPi = std::numbers::pi;

bool finite(double x) { return std::isfinite(x); }

// Principal-branch sqrt of (z - lo)(z - hi), scaled by `lead`. The product of
// the per-factor principal branches behaves like +lead*z at +infinity and cuts
// exactly along [lo, hi], which is the branch with g(z) ~ 1/z.
Complex edge_sqrt(Complex z, double lo, double hi, double lead) {
    return lead * std::sqrt(z - lo) * std::sqrt(z - hi);
}

void reject_on_support(const LawSpec& law, Complex z) {
    if (z.imag() == 0.0) {
        const SupportInterval s = support(law);
        if (s.contains_interior(z.real()))
            throw std::domain_error("cauchy_transform: real z strictly inside the support");
    }
}

} // namespace

LawSpec LawSpec::wigner() { return LawSpec(LawKind::WignerSemicircle); }

LawSpec LawSpec::marchenko_pastur(double lambda) {
    if (!(lambda >= 1.0) || !std::isfinite(lambda))
        throw std::invalid_argument("marchenko-pastur requires lambda >= 1");
    LawSpec law(LawKind::MarchenkoPastur);
    law.lambda_ = lambda;
    return law;
}

LawSpec LawSpec::kesten_mckay(double v) {
    if (!(v >= 2.0) || !std::isfinite(v))
        throw std::invalid_argument("kesten-mckay requires v >= 2");
    LawSpec law(LawKind::KestenMcKay);
    law.v_ = v;
    return law;
}

LawSpec LawSpec::wachter(double a, double b) {
    if (!(a >= 1.0) || !(b >= 1.0) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("wachter requires a >= 1 and b >= 1");
    LawSpec law(LawKind::Wachter);
    law.a_ = a;
    law.b_ = b;
    return law;
}

std::string LawSpec::name() const {
    switch (kind_) {
    case LawKind::WignerSemicircle: return "wigner";
    case LawKind::MarchenkoPastur: return "marchenko-pastur";
    case LawKind::KestenMcKay: return "kesten-mckay";
    case LawKind::Wachter: return "wachter";
    }
    return "unknown";
}

SupportInterval support(const LawSpec& law) {
    switch (law.kind()) {
    case LawKind::WignerSemicircle:
        return {-2.0, 2.0};
    case LawKind::MarchenkoPastur: {
        const double s = std::sqrt(law.lambda());
        return {(1.0 - s) * (1.0 - s), (1.0 + s) * (1.0 + s)};
    }
    case LawKind::KestenMcKay: {
        const double e = 2.0 * std::sqrt(law.v() - 1.0);
        return {-e, e};
    }
    case LawKind::Wachter: {
        const double a = law.a(), b = law.b(), c = a + b;
        const double sb = std::sqrt(b), sa = std::sqrt(a * (c - 1.0));
        const double lo = (sb - sa) / c, hi = (sb + sa) / c;
        return {lo * lo, hi * hi};
    }
    }
    throw std::logic_error("support: unknown law");
}

double density(const LawSpec& law, double x) {
    if (!finite(x))
        throw std::invalid_argument("density: x must be finite");
    const SupportInterval s = support(law);
    if (!s.contains_interior(x)) return 0.0;
    const double edge = std::sqrt((s.hi - x) * (x - s.lo));
    switch (law.kind()) {
    case LawKind::WignerSemicircle:
        return edge / (2.0 * kPi);
    case LawKind::MarchenkoPastur:
        return edge / (2.0 * kPi * x);
    case LawKind::KestenMcKay: {
        const double v = law.v();
        return v * edge / (2.0 * kPi * (v * v - x * x));
    }
    case LawKind::Wachter: {
        const double c = law.a() + law.b();
        return c * edge / (2.0 * kPi * x * (1.0 - x));
    }
    }
    throw std::logic_error("density: unknown law");
}

Complex cauchy_transform(const LawSpec& law, Complex z) {
    if (!finite(z.real()) || !finite(z.imag()))
        throw std::invalid_argument("cauchy_transform: z must be finite");
    reject_on_support(law, z);
    const SupportInterval s = support(law);
    switch (law.kind()) {
    case LawKind::WignerSemicircle:
        return (z - edge_sqrt(z, s.lo, s.hi, 1.0)) / 2.0;
    case LawKind::MarchenkoPastur: {
        // (1 - lambda + z - sqrt(...)) / (2z), conjugated to remove the
        // removable singularity at z = 0.
        const double lambda = law.lambda();
        return 2.0 / (1.0 - lambda + z + edge_sqrt(z, s.lo, s.hi, 1.0));
    }
    case LawKind::KestenMcKay: {
        // ((v-2)z - v sqrt(...)) / (2(v^2 - z^2)) in conjugate form, which is
        // regular at the removable points z = +-v.
        const double v = law.v();
        return 2.0 * (v - 1.0) / ((v - 2.0) * z + v * edge_sqrt(z, s.lo, s.hi, 1.0));
    }
    case LawKind::Wachter: {
        // (1 - a + (a+b-2)z - sqrt(...)) / (2z(1-z)) in conjugate form; the
        // z(1-z) factor cancels exactly.
        const double a = law.a(), b = law.b(), c = a + b;
        return 2.0 * (c - 1.0) / (1.0 - a + (c - 2.0) * z + edge_sqrt(z, s.lo, s.hi, c));
    }
    }
    throw std::logic_error("cauchy_transform: unknown law");
}

double moment(const LawSpec& law, unsigned n) {
    if (n == 0) return 1.0;
    switch (law.kind()) {
    case LawKind::WignerSemicircle:
        return detail::wigner_moment<double>(n);
    case LawKind::MarchenkoPastur:
        return detail::mp_moment<double>(n, law.lambda());
    case LawKind::KestenMcKay:
        return detail::km_moment<double>(n, law.v());
    case LawKind::Wachter:
        // The alternating sum cancels heavily for large n; extended precision
        // keeps the relative error of small moments in check.
        return static_cast<double>(
            detail::wachter_moment<long double>(n, law.a(), law.b()));
    }
    throw std::logic_error("moment: unknown law");
}

double free_cumulant(const LawSpec& law, unsigned n) {
    if (n < 1)
        throw std::invalid_argument("free_cumulant: need n >= 1");
    switch (law.kind()) {
    case LawKind::WignerSemicircle:
        return n == 2 ? 1.0 : 0.0;
    case LawKind::MarchenkoPastur:
        return law.lambda();
    case LawKind::KestenMcKay: {
        if (n % 2 != 0) return 0.0;
        const unsigned h = (n - 2) / 2;
        const double sign = h % 2 == 0 ? 1.0 : -1.0;
        return sign * law.v() * catalan(h).convert_to<double>();
    }
    case LawKind::Wachter:
        return static_cast<double>(
            detail::wachter_cumulant<long double>(n, law.a(), law.b()));
    }
    throw std::logic_error("free_cumulant: unknown law");
}

BigRational moment_exact(const LawSpec& law, unsigned n) {
    if (n == 0) return BigRational(1);
    switch (law.kind()) {
    case LawKind::WignerSemicircle:
        return detail::wigner_moment<BigRational>(n);
    case LawKind::MarchenkoPastur:
        return detail::mp_moment<BigRational>(n, BigRational(law.lambda()));
    case LawKind::KestenMcKay:
        return detail::km_moment<BigRational>(n, BigRational(law.v()));
    case LawKind::Wachter:
        return detail::wachter_moment<BigRational>(n, BigRational(law.a()), BigRational(law.b()));
    }
    throw std::logic_error("moment_exact: unknown law");
}

BigRational free_cumulant_exact(const LawSpec& law, unsigned n) {
    if (n < 1)
        throw std::invalid_argument("free_cumulant_exact: need n >= 1");
    switch (law.kind()) {
    case LawKind::WignerSemicircle:
        return BigRational(n == 2 ? 1 : 0);
    case LawKind::MarchenkoPastur:
        return BigRational(law.lambda());
    case LawKind::KestenMcKay: {
        if (n % 2 != 0) return BigRational(0);
        const unsigned h = (n - 2) / 2;
        BigRational value = BigRational(catalan(h)) * BigRational(law.v());
        return h % 2 == 0 ? value : -value;
    }
    case LawKind::Wachter:
        return detail::wachter_cumulant<BigRational>(n, BigRational(law.a()), BigRational(law.b()));
    }
    throw std::logic_error("free_cumulant_exact: unknown law");
}

Complex r_transform(const LawSpec& law, Complex w) {
    if (!finite(w.real()) || !finite(w.imag()))
        throw std::invalid_argument("r_transform: w must be finite");
    switch (law.kind()) {
    case LawKind::WignerSemicircle:
        return w;
    case LawKind::MarchenkoPastur: {
        if (w == Complex(1.0, 0.0))
            throw std::domain_error("r_transform: pole at w = 1 for marchenko-pastur");
        return law.lambda() / (1.0 - w);
    }
    case LawKind::KestenMcKay: {
        // (-v + v sqrt(1 + 4w^2)) / (2w), conjugated: regular at w = 0.
        const double v = law.v();
        return 2.0 * v * w / (1.0 + std::sqrt(1.0 + 4.0 * w * w));
    }
    case LawKind::Wachter: {
        // (-a - b + w + sqrt((a+b)^2 + 2(a-b)w + w^2)) / (2w), conjugated.
        const double a = law.a(), b = law.b(), c = a + b;
        return 2.0 * a / (std::sqrt(w * w + 2.0 * (a - b) * w + c * c) + c - w);
    }
    }
    throw std::logic_error("r_transform: unknown law");
}

Complex s_transform(const LawSpec& law, Complex z) {
    if (!finite(z.real()) || !finite(z.imag()))
        throw std::invalid_argument("s_transform: z must be finite");
    switch (law.kind()) {
    case LawKind::WignerSemicircle:
        return 1.0;
    case LawKind::MarchenkoPastur: {
        if (z == Complex(0.0, 0.0))
            throw std::domain_error("s_transform: pole at z = 0 for marchenko-pastur");
        return (z - law.lambda()) / (z * z);
    }
    case LawKind::KestenMcKay: {
        const double v = law.v();
        if (z == Complex(v, 0.0) || z == Complex(-v, 0.0))
            throw std::domain_error("s_transform: pole at z = +-v for kesten-mckay");
        return v / (v * v - z * z);
    }
    case LawKind::Wachter: {
        if (z == Complex(0.0, 0.0) || z == Complex(1.0, 0.0))
            throw std::domain_error("s_transform: pole at z in {0, 1} for wachter");
        const double a = law.a(), b = law.b();
        return (a - (a + b) * z) / (z * z * (z - 1.0));
    }
    }
    throw std::logic_error("s_transform: unknown law");
}

BorderedJacobi jacobi_params(const LawSpec& law) {
    switch (law.kind()) {
    case LawKind::WignerSemicircle:
        return {{0.0}, {1.0}, 0.0, 1.0};
    case LawKind::MarchenkoPastur: {
        const double lambda = law.lambda(), s = std::sqrt(lambda);
        return {{lambda}, {s}, lambda + 1.0, s};
    }
    case LawKind::KestenMcKay: {
        const double v = law.v();
        return {{0.0}, {std::sqrt(v)}, 0.0, std::sqrt(v - 1.0)};
    }
    case LawKind::Wachter: {
        const double a = law.a(), b = law.b(), c = a + b;
        const double alpha0 = a / c;
        const double beta0 = std::sqrt(a * b) / (c * std::sqrt(c));
        const double alpha1 = (a * a - a + a * b + b) / (c * c);
        const double beta1 = std::sqrt(a * b * (c - 1.0)) / (c * c);
        return {{alpha0}, {beta0}, alpha1, beta1};
    }
    }
    throw std::logic_error("jacobi_params: unknown law");
}

double orthogonal_poly(const LawSpec& law, unsigned n, double x) {
    if (n == 0) return 1.0;
    const BorderedJacobi j = jacobi_params(law);
    const double alpha0 = j.boundary_alpha[0], beta0 = j.boundary_beta[0];
    const double alpha1 = j.tail_alpha, beta1 = j.tail_beta;
    const double y = (x - alpha1) / (2.0 * beta1);
    if (n == 1) return x - alpha0;
    return std::pow(beta1, n - 1) * (x - alpha0) * chebyshev_u(static_cast<int>(n) - 1, y) -
           beta0 * beta0 * std::pow(beta1, n - 2) * chebyshev_u(static_cast<int>(n) - 2, y);
}

double orthogonal_poly_norm(const LawSpec& law, unsigned n, std::size_t points) {
    const DiscretizedMeasure mu = discretize(law, points);
    double acc = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const double q = orthogonal_poly(law, n, mu.points[i]);
        acc += mu.weights[i] * q * q;
    }
    return acc;
}

DiscretizedMeasure discretize(const LawSpec& law, std::size_t points) {
    if (points < 2)
        throw std::invalid_argument("discretize: need at least 2 points");
    const SupportInterval s = support(law);
    const double c = s.midpoint(), r = s.half_width();
    std::vector<double> xs(points), ws(points);
    double total = 0.0;
    for (std::size_t i = 0; i < points; ++i) {
        // theta midpoints descending so the x grid comes out ascending
        const double theta = (static_cast<double>(points - 1 - i) + 0.5) * kPi / static_cast<double>(points);
        xs[i] = c + r * std::cos(theta);
        ws[i] = density(law, xs[i]) * std::sin(theta);
        total += ws[i];
    }
    for (double& w : ws) w /= total;
    return {std::move(xs), std::move(ws)};
}

} // namespace rmt
