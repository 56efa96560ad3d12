#include "rmt/wachter_pyramid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rmt {

namespace {

// N_n(r) with r = b / (a(a+b-1)), cleared of its denominators by multiplying
// through (a(a+b-1))^n: returns sum_t N_{n,t} b^t (a(a+b-1))^{n-t}.
BivariatePolynomial cleared_narayana(unsigned n, const BivariatePolynomial& au) {
    BivariatePolynomial acc;
    for (unsigned t = 1; t <= n; ++t) {
        BivariatePolynomial term = BivariatePolynomial::monomial(BigRational(narayana(n, t)), 0, t);
        acc += term * au.pow(n - t);
    }
    return acc;
}

} // namespace

ExactWachterMoment wachter_moment_exact(unsigned k) {
    if (k < 1)
        throw std::invalid_argument("wachter_moment_exact: need k >= 1");

    const auto a = BivariatePolynomial::monomial(1, 1, 0);
    const auto b = BivariatePolynomial::monomial(1, 0, 1);
    const auto c = a + b;
    const auto au = a * (c - BivariatePolynomial::constant(1)); // a(a+b-1)

    // m_k = a/(a+b) - sum_{j=0}^{k-2} (a(a+b-1))^{j+2} N_{j+1}(b/(a(a+b-1))) / (a+b)^{2j+3}
    // over the common denominator (a+b)^D with D = 2k-1 (D = 1 when k = 1).
    const unsigned D = (k == 1) ? 1 : 2 * k - 1;
    BivariatePolynomial num = a * c.pow(D - 1);
    for (unsigned j = 0; j + 2 <= k; ++j) {
        // (a(a+b-1))^{j+2} N_{j+1}(b/(a(a+b-1))) clears into au^{j+2-t} b^t terms.
        BivariatePolynomial cleared = cleared_narayana(j + 1, au) * au; // au^{(j+1)-t} * au = au^{j+2-t}
        num -= cleared * c.pow(D - (2 * j + 3));
    }

    ExactWachterMoment result{num, D};
    while (result.denominator_power > 0) {
        auto quotient = result.numerator.divide_by_a_plus_b();
        if (!quotient) break;
        result.numerator = std::move(*quotient);
        --result.denominator_power;
    }
    return result;
}

MomentPyramidTriangle wachter_pyramid(unsigned k) {
    const ExactWachterMoment m = wachter_moment_exact(k);

    // rows keyed by degree in b; within a row, descending degree in a.
    std::map<unsigned, std::map<unsigned, BigInt, std::greater<unsigned>>, std::greater<unsigned>> grouped;
    for (const auto& [key, coeff] : m.numerator.terms()) {
        if (denominator(coeff) != 1)
            throw std::logic_error("wachter_pyramid: non-integer numerator coefficient");
        BigInt v = numerator(coeff);
        grouped[key.second][key.first] = v < 0 ? BigInt(-v) : v;
    }

    MomentPyramidTriangle triangle;
    triangle.moment_index = k;
    for (const auto& [_, row] : grouped) {
        std::vector<BigInt> out;
        out.reserve(row.size());
        for (const auto& [__, v] : row) out.push_back(v);
        triangle.rows.push_back(std::move(out));
    }
    return triangle;
}

} // namespace rmt
