#pragma once

#include "rmt/bivariate_poly.hpp"

#include <cstddef>
#include <vector>

namespace rmt {

/// The k-th Wachter moment written as numerator(a, b) / (a + b)^denominator_power
/// with every exactly dividing factor of (a + b) cancelled from the numerator.
struct ExactWachterMoment {
    BivariatePolynomial numerator;
    unsigned denominator_power = 0;

    template <class T>
    T evaluate(const T& a, const T& b) const {
        T num = numerator.evaluate(a, b);
        T den(1);
        for (unsigned i = 0; i < denominator_power; ++i) den *= (a + b);
        return num / den;
    }
};

ExactWachterMoment wachter_moment_exact(unsigned k);

/// Coefficient triangle of a Wachter moment numerator: absolute values of the
/// coefficients grouped by degree in b (top row = highest degree), each row
/// ordered by descending degree in a. The top row of triangle k is the
/// Narayana row N_{k,1}..N_{k,k}, which sums to the Catalan number C_k.
struct MomentPyramidTriangle {
    unsigned moment_index = 0;
    std::vector<std::vector<BigInt>> rows;
};

MomentPyramidTriangle wachter_pyramid(unsigned k);

} // namespace rmt
