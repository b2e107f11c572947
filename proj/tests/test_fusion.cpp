#include "doctest.h"

#include <cmath>
#include <numeric>

#include "alcove/fusion.hpp"
#include "alcove/numerics.hpp"

using namespace alcove;
using namespace alcove::fusion;

TEST_CASE("alcove enumeration and quantum dimensions") {
    // SU(2) level k has k+1 dominant weights.
    for (int k = 1; k <= 6; ++k)
        CHECK(alcove_weights(2, k).size() == static_cast<std::size_t>(k + 1));
    // SU(3) level 1 has 3 weights; level 2 has 6.
    CHECK(alcove_weights(3, 1).size() == 3);
    CHECK(alcove_weights(3, 2).size() == 6);
    // upsilon_zero on SU(2) agrees with upsilon_su2 at m = 0.
    for (int k = 1; k <= 8; ++k)
        for (int n = 0; n <= k; ++n)
            CHECK(upsilon_zero(2, k, {n, 0}) ==
                  doctest::Approx(upsilon_su2(n, 0, k)).epsilon(1e-12));
    // S-matrix symmetry: Upsilon_n(m) sin(pi(m+1)/q) is symmetric in (n, m).
    const double q = 5.0 + 2.0;
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 5; ++m)
            CHECK(upsilon_su2(n, m, 5) * std::sin(M_PI * (m + 1) / q) ==
                  doctest::Approx(upsilon_su2(m, n, 5) * std::sin(M_PI * (n + 1) / q))
                      .epsilon(1e-12));
}

TEST_CASE("su2 fusion rules") {
    // Level-3 fusion of 2 (x) 2 = 0 + 2 (the level truncates the 4).
    CHECK(fusion_su2(2, 2, 0, 3) == 1);
    CHECK(fusion_su2(2, 2, 2, 3) == 1);
    CHECK(fusion_su2(2, 2, 4, 3) == 0);
    // Parity constraint.
    CHECK(fusion_su2(2, 2, 1, 3) == 0);
    // At large level this is the classical Clebsch-Gordan rule.
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j)
            for (int s = 0; s <= 8; ++s) {
                const long long classical =
                    (s >= std::abs(i - j) && s <= i + j && (i + j + s) % 2 == 0) ? 1 : 0;
                CHECK(fusion_su2(i, j, s, 50) == classical);
            }
}

TEST_CASE("tensor power weight multiplicities match the multinomial oracle") {
    // For SU(3), V(std)^(x)p has weight mult p! / (a! b! c!) at the class of
    // a e_1 + b e_2 + c e_3 with a+b+c = p.
    for (int p = 1; p <= 7; ++p)
        for (int a = 0; a <= p; ++a)
            for (int b = 0; a + b <= p; ++b) {
                const int c = p - a - b;
                double mult = 1.0;
                for (int i = 1; i <= p; ++i) mult *= i;
                for (int i = 1; i <= a; ++i) mult /= i;
                for (int i = 1; i <= b; ++i) mult /= i;
                for (int i = 1; i <= c; ++i) mult /= i;
                const WeightA mu = {a, b, c};
                CHECK(tensor_power_weight_mult(3, p, mu) ==
                      static_cast<long long>(std::llround(mult)));
            }
}

TEST_CASE("fusion_bkf agrees with fusion_su2 at one step") {
    for (int k = 1; k <= 6; ++k)
        for (int i = 0; i <= k; ++i)
            for (int s = 0; s <= k; ++s)
                CHECK(fusion_bkf(2, k, 1, {i, 0}, {s, 0}) == fusion_su2(i, 1, s, k));
}

TEST_CASE("fusion_bkf against the walk-counting oracle") {
    // Small independent spot checks (the acceptance gate sweeps wider).
    for (int p = 0; p <= 6; ++p) {
        CHECK(fusion_bkf(2, 3, p, {0, 0}, {p % 2 == 0 ? 0 : 1, 0}) ==
              alcove_count_bruteforce(2, 3, p, {0, 0}, {p % 2 == 0 ? 0 : 1, 0}));
        CHECK(fusion_bkf(3, 2, p, {0, 0, 0}, {0, 0, 0}) ==
              alcove_count_bruteforce(3, 2, p, {0, 0, 0}, {0, 0, 0}));
        CHECK(fusion_bkf(3, 2, p, {1, 0, 0}, {1, 1, 0}) ==
              alcove_count_bruteforce(3, 2, p, {1, 0, 0}, {1, 1, 0}));
    }
}

TEST_CASE("doob kernel rows are stochastic and fix the stationary law") {
    for (int d : {2, 3})
        for (int k = 1; k <= (d == 2 ? 6 : 3); ++k) {
            const auto weights = alcove_weights(d, k);
            const auto mu = stationary_measure(d, k);
            CHECK(std::accumulate(mu.begin(), mu.end(), 0.0) ==
                  doctest::Approx(1.0).epsilon(1e-12));
            for (std::size_t i = 0; i < weights.size(); ++i) {
                double row = 0.0;
                for (std::size_t j = 0; j < weights.size(); ++j)
                    row += alcove_doob_kernel(d, k, weights[i], weights[j]);
                CHECK(row == doctest::Approx(1.0).epsilon(1e-10));
            }
            // mu Q = mu.
            for (std::size_t j = 0; j < weights.size(); ++j) {
                double acc = 0.0;
                for (std::size_t i = 0; i < weights.size(); ++i)
                    acc += mu[i] * alcove_doob_kernel(d, k, weights[i], weights[j]);
                CHECK(acc == doctest::Approx(mu[j]).epsilon(1e-10));
            }
        }
}

TEST_CASE("asymptotic ratio stabilizes across admissible pairs") {
    // SU(2) level 3: compare two admissible (lam, beta) pairs at large p.
    const double r1 = asymptotic_ratio(2, 3, 60, {0, 0}, {0, 0});
    const double r2 = asymptotic_ratio(2, 3, 60, {1, 0}, {1, 0});
    const double r3 = asymptotic_ratio(2, 3, 61, {0, 0}, {1, 0});
    CHECK(r1 == doctest::Approx(r2).epsilon(0.02));
    CHECK(r1 == doctest::Approx(r3).epsilon(0.02));
}

TEST_CASE("circle walk spectrum for two particles is cos(pi j / N)") {
    // d = 2: gaps (g, N - g), g = 1..N-1; the kernel is the +-1 chain on a
    // path with killing, spectrum cos(pi j / N), j = 1..N-1.
    const long long N = 7;
    const auto spec = circle_walk_spectrum(2, N);
    REQUIRE(spec.size() == static_cast<std::size_t>(N - 1));
    for (long long j = 1; j < N; ++j)
        CHECK(spec[static_cast<std::size_t>(N - 1 - j)] ==
              doctest::Approx(std::cos(M_PI * static_cast<double>(j) /
                                       static_cast<double>(N)))
                  .epsilon(1e-10));
}

TEST_CASE("horn measure: mass one and weak convergence of the mean") {
    for (auto [a, b] : std::vector<std::pair<double, double>>{
             {0.5, 0.5}, {0.25, 0.5}, {0.3, 0.4}}) {
        const DiscreteMeasure mu = horn_mu_k(400, a, b);
        CHECK(mu.total_mass() == doctest::Approx(1.0).epsilon(1e-9));
        double mean_k = 0.0;
        for (std::size_t i = 0; i < mu.points.size(); ++i)
            mean_k += mu.points[i][0] * mu.weights[i];
        // Continuum mean by quadrature of x * density.
        const double lo = std::abs(a - b), hi = std::min(a + b, 2.0 - a - b);
        const int n = 4000;
        double mean_c = 0.0;
        const double h = (hi - lo) / n;
        for (int i = 0; i < n; ++i) {
            const double x = lo + (i + 0.5) * h;
            mean_c += x * horn_density_su2(x, a, b) * h;
        }
        CHECK(mean_k == doctest::Approx(mean_c).epsilon(0.01));
    }
}

TEST_CASE("horn density integrates to one and matches its cdf") {
    for (auto [a, b] : std::vector<std::pair<double, double>>{
             {0.5, 0.5}, {0.25, 0.5}, {0.6, 0.7}}) {
        const double lo = std::abs(a - b), hi = std::min(a + b, 2.0 - a - b);
        CHECK(horn_cdf_su2(lo, a, b) == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(horn_cdf_su2(hi, a, b) == doctest::Approx(1.0).epsilon(1e-10));
        // CDF derivative check at interior points.
        for (double f : {0.25, 0.5, 0.75}) {
            const double x = lo + f * (hi - lo);
            const double h = 1e-6;
            const double num =
                (horn_cdf_su2(x + h, a, b) - horn_cdf_su2(x - h, a, b)) / (2.0 * h);
            CHECK(num == doctest::Approx(horn_density_su2(x, a, b)).epsilon(1e-5));
        }
    }
}
