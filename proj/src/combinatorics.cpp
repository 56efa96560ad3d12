#include "rmt/combinatorics.hpp"

namespace rmt {

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1; // divides exactly: result is binom(n, i+1) * remaining factor
    }
    return result;
}

BigInt catalan(unsigned n) {
    return binomial(2 * n, n) / (n + 1);
}

BigInt narayana(unsigned n, unsigned j) {
    if (j < 1 || j > n)
        throw std::invalid_argument("narayana: need 1 <= j <= n");
    return binomial(n, j) * binomial(n, j - 1) / n;
}

double chebyshev_u(int n, double x) {
    if (n < -1)
        throw std::invalid_argument("chebyshev_u: need n >= -1");
    if (n == -1) return 0.0;
    double prev = 0.0; // U_{-1}
    double cur = 1.0;  // U_0
    for (int i = 1; i <= n; ++i) {
        double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace rmt
