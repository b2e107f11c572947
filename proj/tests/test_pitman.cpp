#include "doctest.h"

#include <cmath>

#include "alcove/pitman.hpp"

using namespace alcove;
using namespace alcove::pitman;

namespace {
Path line_path(std::initializer_list<double> ts, std::initializer_list<double> vs) {
    Path p;
    p.times = ts;
    p.values = vs;
    return p;
}
} // namespace

TEST_CASE("pitman transform on explicit piecewise paths") {
    // f(t) = -t on [0,1]: inf f = -t, so P1 f = -t + 2t = t.
    Path p = line_path({0.0, 0.5, 1.0}, {0.0, -0.5, -1.0});
    Path p1 = pitman_transform(p, 1);
    CHECK(p1.values[1] == doctest::Approx(0.5));
    CHECK(p1.values[2] == doctest::Approx(1.0));
    // Levy variant adds only one copy of the correction.
    Path l1 = levy_transform(p, 1);
    CHECK(l1.values[2] == doctest::Approx(0.0));
    // f(t) = 2t: inf (s - f) = -t, so P0 f = 2t - 2t = 0.
    Path q = line_path({0.0, 0.5, 1.0}, {0.0, 1.0, 2.0});
    Path q0 = pitman_transform(q, 0);
    CHECK(q0.values[2] == doctest::Approx(0.0));
    // A path already inside the cone 0 <= f <= t is fixed by both.
    Path in = line_path({0.0, 1.0, 2.0}, {0.0, 0.5, 1.0});
    CHECK(pitman_transform(in, 0).values == in.values);
    CHECK(pitman_transform(in, 1).values == in.values);
}

TEST_CASE("pitman transform is idempotent and dominates the wall") {
    Stream rng = derive_stream(17, {label("pitman-basic")});
    for (int rep = 0; rep < 10; ++rep) {
        Path b = brownian_path(1.0, 1e-3, rng);
        Path t1 = pitman_transform(b, 1);
        // P1 output is nonnegative.
        for (double v : t1.values) CHECK(v >= -1e-12);
        // Idempotency.
        Path t11 = pitman_transform(t1, 1);
        for (std::size_t i = 0; i < t1.size(); ++i)
            CHECK(t11.values[i] == doctest::Approx(t1.values[i]).epsilon(1e-12));
        // P0 output stays below the time diagonal.
        Path t0 = pitman_transform(b, 0);
        for (std::size_t i = 0; i < t0.size(); ++i)
            CHECK(t0.values[i] <= t0.times[i] + 1e-12);
    }
}

TEST_CASE("string coordinates reconstruct the iterated transform") {
    Stream rng = derive_stream(23, {label("pitman-strings")});
    Path b = brownian_path(1.0, 1e-3, rng);
    const std::size_t n = 12;
    const auto xi = string_coordinates(b, n);
    Path it = iterate_pitman(b, n);
    // Endpoint: f_n(T) = f(T) + sum_k xi_k * (spatial of alpha_k).
    double end = b.values.back();
    for (std::size_t k = 0; k < n; ++k)
        end += (k % 2 == 1 ? 2.0 : -2.0) * xi[k];
    CHECK(it.values.back() == doctest::Approx(end).epsilon(1e-10));
    for (double x : xi) CHECK(x >= 0.0);
}

TEST_CASE("cone membership tests") {
    CHECK(in_gamma_infinity({3.0, 2.0, 3.0, 3.0}));        // 2/1 >= 3/2 >= 3/3
    CHECK_FALSE(in_gamma_infinity({-1.0, 2.0, 1.0}));      // x0 < 0
    CHECK_FALSE(in_gamma_infinity({0.0, 1.0, 3.0}));       // 1/1 < 3/2
    // Gamma(lambda) shrinks as lambda approaches the corner.
    const std::vector<double> xi = {0.0, 2.0, 0.0};
    CHECK(in_gamma_lambda(xi, 10.0, 5.0));
    CHECK_FALSE(in_gamma_lambda(xi, 1.0, 0.05));
}

TEST_CASE("string coordinates of a converged path satisfy the cone conditions") {
    Stream rng = derive_stream(29, {label("pitman-cone")});
    int inside = 0;
    const int reps = 25;
    for (int rep = 0; rep < reps; ++rep) {
        Path b = brownian_path(1.0, 1e-3, rng);
        // Enough stages for the slowest-converging path in this batch.
        const auto xi = string_coordinates(b, 80);
        const auto hw = highest_weight_limit(b);
        // Discretization leaves a small slack in the cone inequalities.
        if (in_gamma_infinity(xi, 1e-2) && in_gamma_lambda(xi, hw.t, hw.x, 1e-2))
            ++inside;
    }
    CHECK(inside == reps);
}

TEST_CASE("highest weight limit lands inside the chamber and converges") {
    Stream rng = derive_stream(31, {label("pitman-hw")});
    for (int rep = 0; rep < 20; ++rep) {
        Path b = brownian_path(1.0, 1e-3, rng);
        const auto hw = highest_weight_limit(b, 1e-6, 200);
        CHECK(hw.converged);
        CHECK(hw.x >= -1e-9);
        CHECK(hw.x <= hw.t + 1e-9);
    }
}

TEST_CASE("time inversion pipeline produces values in (0,1) at time 1") {
    Stream rng = derive_stream(37, {label("pitman-inv")});
    for (int rep = 0; rep < 20; ++rep) {
        Path b = brownian_path_log_grid(1e-3, 1.0, 2000, rng);
        Path z = time_inversion_pipeline(b);
        CHECK(z.times.front() == doctest::Approx(1.0));
        CHECK(z.times.back() == doctest::Approx(1000.0));
        CHECK(z.values.front() >= -1e-9);
        CHECK(z.values.front() <= 1.0 + 1e-9);
    }
}
