#pragma once

#include <cstdint>
#include <vector>

#include "alcove/numerics.hpp"
#include "alcove/rng.hpp"

namespace alcove {
namespace sl2 {

// Quantum dimension s_x(q) = (q^{x+1} - q^{-(x+1)}) / (q - q^{-1}),
// with the q -> 1 limit x + 1.  x >= -1 is allowed (s_{-1} = 0).
double schur_value(long long x, double q);

// One-step kernel of the drifted nearest-neighbour walk on Z:
// K(x, x+1) = q / (q + 1/q), K(x, x-1) = q^{-1} / (q + 1/q).
double walk_kernel(long long x, long long y, double q);

// n-step kernel K^n(x,y) in closed form (binomial path count).
double walk_kernel_n(long long x, long long y, long long n, double q);

// Doob h-transform of the walk killed at -1, h(x) = q^{-x} s_x(q):
// L(x,y) = (q^{-y} s_y / (q^{-x} s_x)) K(x,y), a Markov kernel on Z_{>=0}.
double doob_kernel(long long x, long long y, double q);

// n-step transition of the transformed walk via the reflection identity:
// L^n(x,y) = (q^{-y} s_y / (q^{-x} s_x)) (K^n(x,y) - q^{2y+2} K^n(x,-y-2)).
double reflected_n_step(long long x, long long y, long long n, double q);

// Spectral measure of the rank-one walk driven by the irreducible of
// highest weight omega: atoms y in {-omega, -omega+2, ..., omega} with
// weight q^y / s_omega(q).
DiscreteMeasure step_measure(long long omega, double q);

// Multiplicity of V(z) in V(omega) (x) V(x) for sl2, by the reflected
// counting rule m_V(z - x) - m_V(-(z+1) - (x+1)); values in {0, 1}.
long long clebsch_gordan_mult(long long x, long long omega, long long z);

// Markov kernel on dominant weights induced by tensoring with V(omega):
// Q(x,z) = (s_z / (s_x s_omega)) * mult.
double rep_markov_kernel(long long x, long long z, long long omega, double q);

// Transition density of the Bessel(3)-type diffusion obtained in the
// scaling limit: Doob transform of Brownian motion killed at 0 through
// phi_gamma(x) = 1 - e^{-2 gamma x} (h(x) = x when gamma = 0), with the
// entrance limits at x = 0.
double bessel3_transition(double t, double x, double y, double gamma);

// CDF in y of the gamma = 0 entrance law at time t,
// f(y) = sqrt(2/pi) t^{-3/2} y^2 exp(-y^2 / 2t).
double bessel3_entrance_cdf(double t, double y);

// Simulate n steps of the transformed chain started at x0; returns the
// terminal position.  Draws come from the provided stream only.
long long simulate_doob_chain(long long x0, long long n, long long omega,
                              double q, Stream& rng);

} // namespace sl2
} // namespace alcove
