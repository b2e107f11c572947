#pragma once

#include <array>
#include <vector>

#include "alcove/rng.hpp"

namespace alcove {
namespace su2 {

// Unit quaternion (w, x, y, z) representing the SU(2) matrix
// [[w+iz, y+ix], [-y+ix, w-iz]]; the imaginary units correspond to the
// Lie algebra basis i*sigma_1, i*sigma_2, i*sigma_3.
struct Quat {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    Quat operator*(const Quat& o) const;
    Quat conj() const { return {w, -x, -y, -z}; }
    double norm() const;
    void renormalize();
};

// Lie algebra element v1 i*sigma_1 + v2 i*sigma_2 + v3 i*sigma_3.
using AlgVector = std::array<double, 3>;

// Group exponential: angle-axis quaternion (cos|v|, sin|v| v/|v|).
Quat su2_exp(const AlgVector& v);

// Maximal torus element with radial coordinate x:
// T(x) = diag(e^{i pi x}, e^{-i pi x}).
Quat torus(double x);

// Solution at s = 1 of the right-invariant equation tau dX = X o dx over
// the increment list, by exponential (geodesic) Euler steps.
Quat stochastic_exponential(double tau, const std::vector<AlgVector>& increments);

// Radial coordinate of X at level tau: eigenangle folded into the alcove,
// a = tau * arccos(clamp(trace/2)) / pi in [0, tau].
double radial_part(const Quat& X, double tau);

// Haar-distributed element (normalized 4D Gaussian).
Quat haar_su2(Stream& rng);

// Radial part of u T(a) u^{-1} T(b) for Haar u; the SU(2) quantum
// Horn/conjugation product sampler.  a, b, result in (0,1).
double conjugation_product_radial(double a, double b, Stream& rng);

// One Brownian sheet radial sample at level t: the driving path has
// calibrated covariance so that the Cartan projection `cartan` is a
// standard Brownian motion at time t; `radial` lies in [0, t].
struct SheetSample {
    double radial;
    double cartan;
};
SheetSample sheet_radial_sample(double t, double s_step, Stream& rng);

// Affine orbit sum phi_hat_{theta d + X}(tau L0 + phi_a) for rank one:
//   (1 / sin(pi chi / theta)) * sum_w det(w) e^{theta e_w + y_w chi / 2},
// where w runs over the affine Weyl orbit of (tau, a) and chi is the
// coordinate of X.  chi = 0 is handled by the derivative limit.
double phi_hat_general(double theta, double chi, double tau, double a);

// Conditional exponential-moment formula: the ratio
// phi_hat_{theta d + X} / phi_hat_{theta d} at (tau L0 + phi_a).
double kirillov_frenkel_formula(double theta, double chi, double tau, double a);

// Simulated (radial, cartan) pairs of the stochastic exponential at level
// tau driven by noise with the invariant-metric variance tau/theta; the
// raw material of the conditional-expectation check below.
std::vector<std::array<double, 2>> kf_samples(double theta, double tau,
                                              std::size_t replicas, double s_step,
                                              std::uint64_t seed);

// Monte Carlo check of the same conditional expectation.  Simulates
// `replicas` driving paths with the covariance dictated by (theta, tau),
// conditions on the radial part falling in [a - bin/2, a + bin/2], and
// averages e^{chi * cartan / 2} for each requested chi.
struct KirillovFrenkelResult {
    double a;
    double bin_width;
    std::size_t hits = 0;
    std::vector<double> chi;
    std::vector<double> mc_mean;
    std::vector<double> mc_se;
    std::vector<double> formula;
};
KirillovFrenkelResult kirillov_frenkel_check(double theta, double tau, double a,
                                             double bin_width,
                                             const std::vector<double>& chis,
                                             std::size_t replicas, double s_step,
                                             std::uint64_t seed);

} // namespace su2
} // namespace alcove
