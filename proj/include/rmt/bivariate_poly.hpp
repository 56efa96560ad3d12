#pragma once

#include "rmt/combinatorics.hpp"

#include <map>
#include <optional>
#include <utility>

namespace rmt {

/// Exact polynomial in two formal symbols (a, b) with rational coefficients.
/// Zero coefficients are never stored.
class BivariatePolynomial {
public:
    using Key = std::pair<unsigned, unsigned>; // (deg_a, deg_b)
    using TermMap = std::map<Key, BigRational>;

    BivariatePolynomial() = default;

    static BivariatePolynomial constant(const BigRational& c);
    /// c * a^i * b^j
    static BivariatePolynomial monomial(const BigRational& c, unsigned i, unsigned j);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned degree_a() const;
    unsigned degree_b() const;

    BigRational coefficient(unsigned i, unsigned j) const;

    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    BivariatePolynomial& operator-=(const BivariatePolynomial& o);
    BivariatePolynomial operator+(const BivariatePolynomial& o) const;
    BivariatePolynomial operator-(const BivariatePolynomial& o) const;
    BivariatePolynomial operator*(const BivariatePolynomial& o) const;
    BivariatePolynomial& operator*=(const BigRational& c);
    BivariatePolynomial pow(unsigned e) const;

    bool operator==(const BivariatePolynomial& o) const { return terms_ == o.terms_; }

    /// Exact quotient by (a + b), or nullopt when the division leaves a remainder.
    std::optional<BivariatePolynomial> divide_by_a_plus_b() const;

    template <class T>
    T evaluate(const T& a, const T& b) const {
        T acc(0);
        for (const auto& [key, coeff] : terms_) {
            T term = detail::scalar_from_bigint<T>(numerator(coeff)) /
                     detail::scalar_from_bigint<T>(denominator(coeff));
            for (unsigned i = 0; i < key.first; ++i) term *= a;
            for (unsigned j = 0; j < key.second; ++j) term *= b;
            acc += term;
        }
        return acc;
    }

private:
    void insert(const Key& key, const BigRational& c);

    TermMap terms_;
};

} // namespace rmt
