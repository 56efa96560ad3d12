#include "rmt/bivariate_poly.hpp"

#include <algorithm>

namespace rmt {

BivariatePolynomial BivariatePolynomial::constant(const BigRational& c) {
    return monomial(c, 0, 0);
}

BivariatePolynomial BivariatePolynomial::monomial(const BigRational& c, unsigned i, unsigned j) {
    BivariatePolynomial p;
    if (c != 0) p.terms_[{i, j}] = c;
    return p;
}

unsigned BivariatePolynomial::degree_a() const {
    unsigned d = 0;
    for (const auto& [key, _] : terms_) d = std::max(d, key.first);
    return d;
}

unsigned BivariatePolynomial::degree_b() const {
    unsigned d = 0;
    for (const auto& [key, _] : terms_) d = std::max(d, key.second);
    return d;
}

BigRational BivariatePolynomial::coefficient(unsigned i, unsigned j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? BigRational(0) : it->second;
}

void BivariatePolynomial::insert(const Key& key, const BigRational& c) {
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        if (c != 0) terms_[key] = c;
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
    for (const auto& [key, c] : o.terms_) insert(key, c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
    for (const auto& [key, c] : o.terms_) insert(key, -c);
    return *this;
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
    BivariatePolynomial r = *this;
    r += o;
    return r;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& o) const {
    BivariatePolynomial r = *this;
    r -= o;
    return r;
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
    BivariatePolynomial r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            r.insert({k1.first + k2.first, k1.second + k2.second}, c1 * c2);
    return r;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BigRational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [_, coeff] : terms_) coeff *= c;
    return *this;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned e) const {
    BivariatePolynomial r = constant(1);
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
}

std::optional<BivariatePolynomial> BivariatePolynomial::divide_by_a_plus_b() const {
    if (is_zero()) return BivariatePolynomial();
    // Synthetic division in a: writing p = sum_i c_i(b) a^i, the quotient by
    // (a + b) satisfies q_{d-1} = c_d and q_{i-1} = c_i - b q_i, with
    // remainder c_0 - b q_0 in the variable b alone.
    unsigned da = degree_a();
    std::vector<std::map<unsigned, BigRational>> cs(da + 1);
    for (const auto& [key, c] : terms_) cs[key.first][key.second] = c;

    BivariatePolynomial q;
    std::map<unsigned, BigRational> carry = cs[da];
    for (unsigned i = da; i-- > 0;) {
        for (const auto& [j, c] : carry) q.insert({i, j}, c);
        std::map<unsigned, BigRational> next = cs[i];
        for (const auto& [j, c] : carry) {
            auto& slot = next[j + 1];
            slot -= c;
            if (slot == 0) next.erase(j + 1);
        }
        carry = std::move(next);
    }
    if (!carry.empty()) return std::nullopt;
    return q;
}

} // namespace rmt
