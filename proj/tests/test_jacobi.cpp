#include "rmt/io.hpp"
#include "rmt/jacobi.hpp"
#include "rmt/laws.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace rmt;

TEST_CASE("lanczos on a discretized wigner law reproduces constant coefficients") {
    const DiscretizedMeasure mu = discretize(LawSpec::wigner(), 10000);
    const JacobiCoefficients coeffs = lanczos_discrete(mu, 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(std::abs(coeffs.alpha[i] - 0.0) <= 1e-6);
        CHECK(std::abs(coeffs.beta[i] - 1.0) <= 1e-6);
    }
}

TEST_CASE("lanczos on two equal atoms at +-1") {
    const DiscretizedMeasure mu({-1.0, 1.0}, {0.5, 0.5});
    const JacobiCoefficients coeffs = lanczos_discrete(mu, 1);
    CHECK(coeffs.alpha[0] == doctest::Approx(0.0));
    CHECK(coeffs.beta[0] == doctest::Approx(1.0));
}

TEST_CASE("lanczos on marchenko-pastur reproduces the bordered row") {
    const DiscretizedMeasure mu = discretize(LawSpec::marchenko_pastur(2), 10000);
    const JacobiCoefficients coeffs = lanczos_discrete(mu, 5);
    CHECK(coeffs.alpha[0] == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(coeffs.beta[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
    for (std::size_t i = 1; i < 5; ++i) {
        CHECK(coeffs.alpha[i] == doctest::Approx(3.0).epsilon(1e-8));
        CHECK(coeffs.beta[i] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
    }
}

TEST_CASE("lanczos signals breakdown when the measure has too few effective atoms") {
    // five grid points but only two carry weight
    const DiscretizedMeasure mu({-2.0, -1.0, 0.0, 1.0, 2.0}, {0.5, 0.0, 0.0, 0.0, 0.5});
    CHECK_THROWS_AS(lanczos_discrete(mu, 3), LanczosBreakdown);
    try {
        lanczos_discrete(mu, 3);
    } catch (const LanczosBreakdown& e) {
        CHECK(e.step() == 1);
        REQUIRE(e.partial().alpha.size() == 2);
        CHECK(e.partial().alpha[0] == doctest::Approx(0.0));
        CHECK(e.partial().beta[0] == doctest::Approx(2.0));
    }
    CHECK_THROWS_AS(lanczos_discrete(mu, 5), std::invalid_argument); // steps > points - 1
}

TEST_CASE("lanczos output stays orthonormal under the measure") {
    const DiscretizedMeasure mu = discretize(LawSpec::wachter(2, 3), 4000);
    const JacobiCoefficients coeffs = lanczos_discrete(mu, 6);
    // rebuild the basis from the output coefficients and test the Gram matrix
    std::vector<std::vector<double>> q;
    q.emplace_back(mu.size(), 1.0);
    std::vector<double> prev(mu.size(), 0.0);
    double beta_prev = 0.0;
    for (std::size_t n = 0; n + 1 < 6; ++n) {
        std::vector<double> next(mu.size());
        for (std::size_t i = 0; i < mu.size(); ++i)
            next[i] = ((mu.points[i] - coeffs.alpha[n]) * q.back()[i] - beta_prev * prev[i]) /
                      coeffs.beta[n];
        prev = q.back();
        beta_prev = coeffs.beta[n];
        q.push_back(std::move(next));
    }
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            double inner = 0.0;
            for (std::size_t p = 0; p < mu.size(); ++p)
                inner += mu.weights[p] * q[i][p] * q[j][p];
            CHECK(std::abs(inner - (i == j ? 1.0 : 0.0)) <= 1e-8);
        }
}

TEST_CASE("lanczos output reproduces the measure moments (gauss exactness)") {
    const LawSpec law = LawSpec::kesten_mckay(3);
    const JacobiCoefficients coeffs = lanczos_discrete(discretize(law, 10000), 5);
    for (unsigned n = 0; n <= 8; ++n) { // n <= 2*steps - 2
        const double reproduced = oracles::tridiagonal_moment(coeffs, n);
        const double expected = moment(law, n);
        const double scale = std::max({1.0, std::abs(expected)});
        CHECK(std::abs(reproduced - expected) / scale <= 1e-8);
    }
}

TEST_CASE("lanczos is shift- and scale-equivariant") {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> pts, wts;
    double x = 0.0, total = 0.0;
    for (int i = 0; i < 30; ++i) {
        x += 0.05 + unit(rng);
        pts.push_back(x);
        wts.push_back(0.1 + unit(rng));
        total += wts.back();
    }
    for (double& w : wts) w /= total;
    const DiscretizedMeasure mu(pts, wts);
    const JacobiCoefficients base = lanczos_discrete(mu, 8);

    const double shift = 2.7, scale = 3.1;
    std::vector<double> shifted = pts, scaled = pts;
    for (double& p : shifted) p += shift;
    for (double& p : scaled) p *= scale;
    const JacobiCoefficients js = lanczos_discrete(DiscretizedMeasure(shifted, wts), 8);
    const JacobiCoefficients jc = lanczos_discrete(DiscretizedMeasure(scaled, wts), 8);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(std::abs(js.alpha[i] - (base.alpha[i] + shift)) <= 1e-10 * (1.0 + std::abs(base.alpha[i])));
        CHECK(std::abs(js.beta[i] - base.beta[i]) <= 1e-10);
        CHECK(std::abs(jc.alpha[i] - scale * base.alpha[i]) <= 1e-9);
        CHECK(std::abs(jc.beta[i] - scale * base.beta[i]) <= 1e-9);
    }
}

TEST_CASE("moment sequence validation") {
    CHECK_THROWS_AS(MomentSequence({2.0, 0.0, 1.0}), std::invalid_argument); // m_0 != 1
    CHECK_THROWS_AS(MomentSequence({1.0, 0.0, -1.0}), NonRealizableMoments); // negative variance
    CHECK_NOTHROW(MomentSequence({1.0, 0.0, 1.0, 0.0, 2.0}));
    CHECK_NOTHROW(MomentSequence({1.0, 0.5, 0.25})); // point mass: rank deficient but realizable
}

TEST_CASE("moments_to_jacobi recovers wigner coefficients") {
    const MomentSequence ms({1, 0, 1, 0, 2, 0, 5, 0, 14});
    const JacobiCoefficients coeffs = moments_to_jacobi(ms, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(coeffs.alpha[i]) <= 1e-10);
        CHECK(std::abs(coeffs.beta[i] - 1.0) <= 1e-10);
    }
}

TEST_CASE("moments_to_jacobi breaks down on a point mass, keeping alpha_0") {
    const double c = 0.8;
    const MomentSequence ms({1.0, c, c * c});
    try {
        moments_to_jacobi(ms, 1);
        FAIL("expected breakdown");
    } catch (const LanczosBreakdown& e) {
        CHECK(e.step() == 0);
        REQUIRE(e.partial().alpha.size() == 1);
        CHECK(e.partial().alpha[0] == doctest::Approx(c));
        CHECK(e.partial().beta.empty());
    }
}

TEST_CASE("both coefficient paths agree on the four laws") {
    const std::vector<LawSpec> laws{LawSpec::wigner(), LawSpec::marchenko_pastur(2),
                                    LawSpec::kesten_mckay(3), LawSpec::wachter(2, 3)};
    for (const LawSpec& law : laws) {
        std::vector<double> raw;
        for (unsigned n = 0; n <= 10; ++n) raw.push_back(moment(law, n));
        const JacobiCoefficients from_moments = moments_to_jacobi(MomentSequence(raw), 5);
        const JacobiCoefficients from_grid = lanczos_discrete(discretize(law, 10000), 5);
        for (std::size_t i = 0; i < 5; ++i) {
            CHECK(std::abs(from_moments.alpha[i] - from_grid.alpha[i]) <= 1e-8);
            CHECK(std::abs(from_moments.beta[i] - from_grid.beta[i]) <= 1e-8);
        }
    }
}

TEST_CASE("to_bordered trims constant runs") {
    const BorderedJacobi toeplitz = to_bordered({{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}});
    CHECK(toeplitz.boundary_size() == 0);
    CHECK(toeplitz.tail_alpha == 0.0);
    CHECK(toeplitz.tail_beta == 1.0);

    const double s2 = std::sqrt(2.0);
    const BorderedJacobi mp = to_bordered({{2.0, 3.0, 3.0}, {s2, s2, s2}});
    CHECK(mp.boundary_size() == 1);
    CHECK(mp.boundary_alpha[0] == 2.0);
    CHECK(mp.boundary_beta[0] == s2);
    CHECK(mp.tail_alpha == 3.0);
    CHECK(mp.tail_beta == s2);

    // equal alphas but distinct betas keep the boundary
    const BorderedJacobi w = to_bordered({{0.5, 0.5}, {1.0 / (2.0 * s2), 0.25}});
    CHECK(w.boundary_size() == 1);
    CHECK(w.boundary_beta[0] == doctest::Approx(1.0 / (2.0 * s2)));
    CHECK(w.tail_beta == 0.25);

    const BorderedJacobi fixed = to_bordered({{2.0, 3.0, 3.0}, {s2, s2, s2}}, 1e-8, 2);
    CHECK(fixed.boundary_size() == 2);
}

TEST_CASE("to_bordered handles single-entry input and rejects bad shapes") {
    const BorderedJacobi single = to_bordered({{0.7}, {1.3}});
    CHECK(single.boundary_size() == 0);
    CHECK(single.tail_alpha == 0.7);
    CHECK(single.tail_beta == 1.3);
    CHECK_THROWS_AS(to_bordered({{}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(to_bordered({{1.0}, {1.0}}, 1e-8, 1), std::invalid_argument);
}

TEST_CASE("toeplitz distance looks at the trailing half") {
    CHECK(toeplitz_distance({{1.0, 1.0, 1.0}, {2.0, 2.0, 2.0}}) == 0.0);
    CHECK(toeplitz_distance({{2.0, 3.0, 3.0, 3.0}, {1.0, 1.0, 1.0, 1.0}}) == 0.0);
    CHECK(toeplitz_distance({{0.0, 0.0, 0.3, 0.0}, {1.0, 1.0, 1.0, 1.1}}) ==
          doctest::Approx(0.3));
}

TEST_CASE("measure and moment CSV round trips") {
    const DiscretizedMeasure mu = discretize(LawSpec::marchenko_pastur(2), 50);
    const DiscretizedMeasure back = io::measure_from_csv(io::measure_to_csv(mu));
    REQUIRE(back.size() == mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        CHECK(back.points[i] == mu.points[i]); // 17 digits round-trip exactly
        CHECK(back.weights[i] == mu.weights[i]);
    }

    const std::vector<double> ms{1.0, 0.5, 1.0 / 3.0, 0.25};
    CHECK(io::moments_from_csv(io::moments_to_csv(ms)) == ms);

    CHECK_THROWS_AS(io::measure_from_csv("a,b\n1,2\n"), std::invalid_argument);
    CHECK_THROWS_AS(io::moments_from_csv("x,w\n1,2\n"), std::invalid_argument);
}
