#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace rmt {

using BigInt = boost::multiprecision::cpp_int;
/// Exact rational, always stored reduced with positive denominator.
using BigRational = boost::multiprecision::cpp_rational;

BigInt binomial(unsigned n, unsigned k);

/// Catalan number C_n = binom(2n, n) / (n + 1), exact.
BigInt catalan(unsigned n);

/// Narayana number N_{n,j} = binom(n, j) binom(n, j-1) / n, requires 1 <= j <= n.
BigInt narayana(unsigned n, unsigned j);

/// Chebyshev polynomial of the second kind via the recurrence
/// U_{-1} = 0, U_0 = 1, U_n = 2x U_{n-1} - U_{n-2}. Accepts n >= -1.
double chebyshev_u(int n, double x);

namespace detail {
template <class T> T scalar_from_bigint(const BigInt& v);
template <> inline BigRational scalar_from_bigint<BigRational>(const BigInt& v) { return BigRational(v); }
template <> inline double scalar_from_bigint<double>(const BigInt& v) { return v.convert_to<double>(); }
template <> inline long double scalar_from_bigint<long double>(const BigInt& v) {
    return v.convert_to<long double>();
}
} // namespace detail

/// Narayana polynomial N_n(r) = sum_j N_{n,j} r^j with N_0(r) = 1.
/// Exact when instantiated with BigRational.
template <class T>
T narayana_poly(unsigned n, const T& r) {
    if (n == 0) return T(1);
    // Horner over descending j with exact integer coefficients.
    T acc = detail::scalar_from_bigint<T>(narayana(n, n));
    for (unsigned j = n; j-- > 1;) {
        acc = acc * r + detail::scalar_from_bigint<T>(narayana(n, j));
    }
    return acc * r;
}

} // namespace rmt
