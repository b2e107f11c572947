#include "doctest.h"

#include <cmath>
#include <vector>

#include "alcove/affine.hpp"
#include "alcove/numerics.hpp"
#include "alcove/su2.hpp"

using namespace alcove;
using namespace alcove::su2;

namespace {
constexpr double kPi = 3.141592653589793238462643383279;

double qdist(const Quat& a, const Quat& b) {
    return std::sqrt((a.w - b.w) * (a.w - b.w) + (a.x - b.x) * (a.x - b.x) +
                     (a.y - b.y) * (a.y - b.y) + (a.z - b.z) * (a.z - b.z));
}
} // namespace

TEST_CASE("quaternion algebra and the torus") {
    Quat i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    CHECK(qdist(i * j, k) == doctest::Approx(0.0));
    CHECK(qdist(j * k, i) == doctest::Approx(0.0));
    CHECK(qdist(i * i, Quat{-1, 0, 0, 0}) == doctest::Approx(0.0));
    // Torus is a one-parameter subgroup and matches the exponential.
    CHECK(qdist(torus(0.3) * torus(0.4), torus(0.7)) < 1e-14);
    CHECK(qdist(su2_exp({0.0, 0.0, kPi * 0.3}), torus(0.3)) < 1e-14);
    // Unit norm is preserved by multiplication.
    Stream rng = derive_stream(3, {label("su2-alg")});
    Quat u = haar_su2(rng), v = haar_su2(rng);
    CHECK((u * v).norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(qdist(u * u.conj(), Quat{1, 0, 0, 0}) < 1e-14);
}

TEST_CASE("radial part: torus values and conjugation invariance") {
    Stream rng = derive_stream(5, {label("su2-radial")});
    for (double x : {0.1, 0.37, 0.62, 0.95}) {
        CHECK(radial_part(torus(x), 1.0) == doctest::Approx(x).epsilon(1e-12));
        CHECK(radial_part(torus(x), 2.5) == doctest::Approx(2.5 * x).epsilon(1e-12));
        // Folding: T(-x) and T(x) share the radial coordinate.
        CHECK(radial_part(torus(-x), 1.0) == doctest::Approx(x).epsilon(1e-12));
        const Quat u = haar_su2(rng);
        const Quat g = u * torus(x) * u.conj();
        CHECK(radial_part(g, 1.0) == doctest::Approx(x).epsilon(1e-10));
    }
}

TEST_CASE("stochastic exponential reduces to the exponential on commuting input") {
    // One increment: solves the ODE exactly.
    const AlgVector v = {0.2, -0.5, 0.8};
    const Quat one = stochastic_exponential(2.0, {v});
    CHECK(qdist(one, su2_exp({0.1, -0.25, 0.4})) < 1e-14);
    // Many collinear increments commute, so the product telescopes.
    std::vector<AlgVector> incs(1000, AlgVector{0.0, 0.0, 0.001});
    const Quat many = stochastic_exponential(1.0, incs);
    CHECK(qdist(many, su2_exp({0.0, 0.0, 1.0})) < 1e-9);
}

TEST_CASE("haar radial law matches 2 sin^2(pi x)") {
    Stream rng = derive_stream(7, {label("su2-haar")});
    const std::size_t n = 40000;
    std::vector<double> sample(n);
    for (auto& s : sample) s = radial_part(haar_su2(rng), 1.0);
    // CDF of density 2 sin^2(pi x) on (0,1).
    const auto cdf = [](double x) {
        return x - std::sin(2.0 * kPi * x) / (2.0 * kPi);
    };
    CHECK(ks_statistic(sample, cdf) < 0.01);
}

TEST_CASE("conjugation product radial stays in the Horn interval") {
    Stream rng = derive_stream(11, {label("su2-horn")});
    for (auto [a, b] : std::vector<std::pair<double, double>>{
             {0.5, 0.5}, {0.25, 0.5}, {0.1, 0.3}, {0.7, 0.6}}) {
        const double lo = std::abs(a - b);
        const double hi = std::min(a + b, 2.0 - a - b);
        for (int rep = 0; rep < 200; ++rep) {
            const double c = conjugation_product_radial(a, b, rng);
            CHECK(c >= lo - 1e-12);
            CHECK(c <= hi + 1e-12);
        }
    }
}

TEST_CASE("sheet cartan projection is calibrated to a standard Brownian motion") {
    Stream rng = derive_stream(13, {label("su2-sheet")});
    const std::size_t n = 4000;
    double sum = 0.0, sumsq = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        const SheetSample s = sheet_radial_sample(1.0, 1e-3, rng);
        CHECK(s.radial >= 0.0);
        CHECK(s.radial <= 1.0);
        sum += s.cartan;
        sumsq += s.cartan * s.cartan;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    // Var of the sample variance of N(0,1) is about 2/n.
    CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(var - 1.0) < 4.0 * std::sqrt(2.0 / static_cast<double>(n)));
}

TEST_CASE("phi_hat_general: chi -> 0 limit and the two-dimensional reduction") {
    for (double a : {0.2, 0.5, 0.8}) {
        const double at0 = phi_hat_general(2.0, 0.0, 1.0, a);
        const double near0 = phi_hat_general(2.0, 1e-6, 1.0, a);
        CHECK(near0 == doctest::Approx(at0).epsilon(1e-6));
        // At theta = 2 the chi = 0 value is (2/pi) phi_hat_2d(tau, a).
        CHECK(at0 ==
              doctest::Approx(2.0 / kPi * affine::phi_hat_2d(1.0, a)).epsilon(1e-10));
        // The conditional-moment formula is exactly 1 at chi = 0.
        CHECK(kirillov_frenkel_formula(2.0, 0.0, 1.0, a) == doctest::Approx(1.0));
    }
    // Antisymmetry of the orbit sum makes the formula even in chi.
    CHECK(kirillov_frenkel_formula(1.0, 0.5, 1.0, 0.4) ==
          doctest::Approx(kirillov_frenkel_formula(1.0, -0.5, 1.0, 0.4)).epsilon(1e-10));
}

TEST_CASE("kf_samples are reproducible and the check is coherent at chi = 0") {
    const auto s1 = kf_samples(1.0, 1.0, 50, 1e-2, 99);
    const auto s2 = kf_samples(1.0, 1.0, 50, 1e-2, 99);
    REQUIRE(s1.size() == s2.size());
    for (std::size_t i = 0; i < s1.size(); ++i) {
        CHECK(s1[i][0] == s2[i][0]);
        CHECK(s1[i][1] == s2[i][1]);
    }
    const auto res =
        kirillov_frenkel_check(1.0, 1.0, 0.5, 0.2, {0.0}, 2000, 1e-2, 7);
    REQUIRE(res.hits > 50);
    CHECK(res.mc_mean[0] == doctest::Approx(1.0));
    CHECK(res.formula[0] == doctest::Approx(1.0));
}
