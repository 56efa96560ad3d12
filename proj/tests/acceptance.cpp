// End-to-end acceptance suite. Runs every criterion at its pinned tolerance
// and prints one PASS/FAIL line each; exits nonzero if any criterion fails.

#include "rmt/combinatorics.hpp"
#include "rmt/experiment.hpp"
#include "rmt/jacobi.hpp"
#include "rmt/laws.hpp"
#include "rmt/recover.hpp"
#include "rmt/wachter_pyramid.hpp"

#include "support/oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <vector>

using namespace rmt;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s %2d  %s (%s)\n", pass ? "PASS" : "FAIL", index, name.c_str(), detail.c_str());
    if (!pass) ++failures;
}

std::vector<LawSpec> reference_laws() {
    return {LawSpec::wigner(),
            LawSpec::marchenko_pastur(1),
            LawSpec::marchenko_pastur(2),
            LawSpec::marchenko_pastur(4),
            LawSpec::kesten_mckay(2),
            LawSpec::kesten_mckay(3),
            LawSpec::kesten_mckay(5),
            LawSpec::wachter(1, 1),
            LawSpec::wachter(2, 3)};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

void criterion1_jacobi_rows() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const LawSpec& law : reference_laws()) {
        const BorderedJacobi expected = jacobi_params(law);
        const JacobiCoefficients got = lanczos_discrete(discretize(law, 10000), 6);
        for (std::size_t i = 0; i < 6; ++i) {
            worst = std::max(worst, std::abs(got.alpha[i] - expected.alpha_at(i)));
            worst = std::max(worst, std::abs(got.beta[i] - expected.beta_at(i)));
        }
    }
    const double elapsed = seconds_since(start);
    report(1, "lanczos on discretized laws reproduces the known jacobi rows",
           worst <= 1e-5 && elapsed <= 10.0,
           fmt("max err %.2e, %.1fs", worst, elapsed));
}

void criterion2_exact_recovery() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const LawSpec& law : reference_laws()) {
        const RecoveredDensity rec = recover_density(jacobi_params(law), 512);
        for (std::size_t i = 0; i < rec.grid.size(); ++i)
            worst = std::max(worst, std::abs(rec.values[i] - density(law, rec.grid[i])));
    }
    const double elapsed = seconds_since(start);
    report(2, "continued-fraction recovery matches the closed-form densities",
           worst <= 1e-9 && elapsed <= 1.0, fmt("Linf %.2e, %.2fs", worst, elapsed));
}

void criterion3_moment_formulas() {
    double worst = 0.0;
    for (const LawSpec& law : reference_laws()) {
        const SupportInterval s = support(law);
        for (unsigned n = 0; n <= 12; ++n) {
            const double closed = moment(law, n);
            const double quad = oracles::cosine_quadrature(
                [&](double x) { return std::pow(x, n) * density(law, x); }, s.lo, s.hi, 40000);
            if (closed == 0.0) {
                // exactly vanishing odd moments: quadrature noise scales with
                // the integrand peak, not the zero integral
                const double peak = std::pow(std::max(std::abs(s.lo), std::abs(s.hi)), n);
                worst = std::max(worst, std::abs(quad) / (1e-4 * (1.0 + peak)));
            } else {
                worst = std::max(worst, std::abs(closed - quad) / std::abs(closed));
            }
        }
    }
    const double expected_wigner[13] = {1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42, 0, 132};
    bool wigner_exact = true;
    for (unsigned n = 0; n <= 12; ++n)
        wigner_exact = wigner_exact && moment(LawSpec::wigner(), n) == expected_wigner[n];
    report(3, "moment formulas agree with endpoint-adapted quadrature",
           worst <= 1e-8 && wigner_exact,
           fmt("max rel err %.2e, wigner sequence exact=%.0f", worst, wigner_exact ? 1.0 : 0.0));
}

void criterion4_free_cumulants() {
    bool exact_ok = true;
    double worst = 0.0;
    for (const LawSpec& law : reference_laws()) {
        std::vector<BigRational> ms{BigRational(1)};
        for (unsigned n = 1; n <= 8; ++n) ms.push_back(moment_exact(law, n));
        const auto kappa = oracles::cumulants_from_moments<BigRational>(ms);
        for (unsigned n = 1; n <= 8; ++n) {
            exact_ok = exact_ok && kappa[n] == free_cumulant_exact(law, n);
            const double diff = std::abs(kappa[n].convert_to<double>() - free_cumulant(law, n));
            worst = std::max(worst, diff);
        }
    }
    report(4, "closed-form cumulants equal the non-crossing partition inversion",
           exact_ok && worst <= 1e-10,
           fmt("exact rational match=%.0f, double gap %.2e", exact_ok ? 1.0 : 0.0, worst));
}

void criterion5_transform_identities() {
    double worst = 0.0;
    for (const LawSpec& law : reference_laws()) {
        const SupportInterval s = support(law);
        for (int i = 0; i < 20; ++i) {
            const double offset = 0.5 * std::pow(10.0, 2.0 * i / 19.0);
            for (double z : {s.hi + offset, s.lo - offset}) {
                const Complex g = cauchy_transform(law, {z, 0.0});
                const Complex lhs = r_transform(law, g) + 1.0 / g;
                worst = std::max(worst, std::abs(lhs - Complex(z, 0.0)) / std::max(1.0, std::abs(z)));
            }
            const double z = 0.35 * (i + 1) / 20.0;
            const Complex w = z * s_transform(law, {z, 0.0});
            worst = std::max(worst, std::abs(r_transform(law, w) - Complex(z, 0.0)));
        }
    }
    report(5, "R and S transform identities hold at sampled points", worst <= 1e-9,
           fmt("max defect %.2e", worst));
}

void criterion6_pyramid() {
    bool rows_ok = true;
    for (unsigned k = 1; k <= 8; ++k) {
        const MomentPyramidTriangle t = wachter_pyramid(k);
        rows_ok = rows_ok && !t.rows.empty() && t.rows.front().size() == k;
        BigInt sum = 0;
        for (unsigned j = 1; j <= k && rows_ok; ++j) {
            rows_ok = rows_ok && t.rows.front()[j - 1] == narayana(k, j);
            sum += t.rows.front()[j - 1];
        }
        rows_ok = rows_ok && sum == catalan(k);
    }

    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> par(1.0, 5.0);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const double a = par(rng), b = par(rng);
        const LawSpec law = LawSpec::wachter(a, b);
        for (unsigned k = 1; k <= 10; ++k) {
            const double exact =
                wachter_moment_exact(k).evaluate<BigRational>(BigRational(a), BigRational(b))
                    .convert_to<double>();
            const double closed = moment(law, k);
            worst = std::max(worst,
                             std::abs(exact - closed) / std::max(1.0, std::abs(exact)));
        }
    }
    report(6, "wachter pyramid rows are narayana/catalan and moments match exactly",
           rows_ok && worst <= 1e-10,
           fmt("rows ok=%.0f, moment rel gap %.2e", rows_ok ? 1.0 : 0.0, worst));
}

void criterion7_random_roundtrip() {
    const std::string dir =
        (std::filesystem::temp_directory_path() / "rmt_acceptance_fig2").string();
    std::filesystem::create_directories(dir);
    int clean = 0, flagged = 0;
    double worst = 0.0;
    bool ok = true;
    for (std::size_t k : {std::size_t{3}, std::size_t{5}}) {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const RandomRecoveryReport rep = run_figure2(seed, k, dir);
            if (!rep.clean()) {
                ++flagged; // atoms may emerge: logged, not failed
                continue;
            }
            ++clean;
            worst = std::max(worst, rep.max_param_error);
            ok = ok && rep.max_param_error <= 1e-4;
        }
    }
    report(7, "random bordered matrices round-trip through recovery", ok && clean > 0,
           fmt("clean %.0f (worst err %.1e)", static_cast<double>(clean), worst) +
               fmt(", atom cases %.0f", static_cast<double>(flagged)));
}

void criterion8_wishart() {
    const auto start = std::chrono::steady_clock::now();
    const std::string dir =
        (std::filesystem::temp_directory_path() / "rmt_acceptance_fig3").string();
    std::filesystem::create_directories(dir);
    ExperimentConfig cfg; // m=400, n=1200, mu=5, 6 steps -> k=5 boundary
    cfg.seed = 1;
    const WishartReport rep = run_figure3(cfg, dir);
    const double elapsed = seconds_since(start);
    report(8, "shifted-wishart histogram is recovered from six lanczos steps",
           rep.l1_error <= 0.05 && rep.toeplitz_dist <= 0.05 && elapsed <= 60.0,
           fmt("L1 %.3f, toeplitz dist %.3f", rep.l1_error, rep.toeplitz_dist) +
               fmt(", %.1fs", elapsed));
}

void criterion9_normal() {
    const std::string dir =
        (std::filesystem::temp_directory_path() / "rmt_acceptance_fig4").string();
    std::filesystem::create_directories(dir);
    ExperimentConfig cfg;
    cfg.moment_count = 20;
    const NormalReport n20 = run_figure4(cfg, dir);
    cfg.moment_count = 10;
    const NormalReport n10 = run_figure4(cfg, dir);
    report(9, "normal reconstruction improves from 10 to 20 moments",
           n20.l1_error <= 0.05 && n10.l1_error > n20.l1_error,
           fmt("L1(20)=%.4f, L1(10)=%.4f", n20.l1_error, n10.l1_error));
}

void criterion10_path_equivalence() {
    double worst = 0.0;
    for (const LawSpec& law : reference_laws()) {
        std::vector<double> raw;
        for (unsigned n = 0; n <= 10; ++n) raw.push_back(moment(law, n));
        const JacobiCoefficients a = moments_to_jacobi(MomentSequence(raw), 5);
        const JacobiCoefficients b = lanczos_discrete(discretize(law, 10000), 5);
        for (std::size_t i = 0; i < 5; ++i) {
            worst = std::max(worst, std::abs(a.alpha[i] - b.alpha[i]));
            worst = std::max(worst, std::abs(a.beta[i] - b.beta[i]));
        }
    }
    report(10, "moment path and grid path produce the same coefficients", worst <= 1e-6,
           fmt("max gap %.2e", worst));
}

} // namespace

int main() {
    criterion1_jacobi_rows();
    criterion2_exact_recovery();
    criterion3_moment_formulas();
    criterion4_free_cumulants();
    criterion5_transform_identities();
    criterion6_pyramid();
    criterion7_random_roundtrip();
    criterion8_wishart();
    criterion9_normal();
    criterion10_path_equivalence();
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
