#pragma once

#include <cstdint>
#include <vector>

#include "alcove/numerics.hpp"
#include "alcove/rng.hpp"

namespace alcove {
namespace fusion {

// Type A_{d-1} weights are kept as integer vectors of length d modulo the
// all-ones vector e (only component differences matter); the normalized
// representative of a dominant weight has a weakly decreasing component
// list ending in 0.  The level of lambda is lambda_1 - lambda_d.
using WeightA = std::vector<long long>;

// All dominant weights of level <= k, normalized.
std::vector<WeightA> alcove_weights(int d, int k);

// Discretized character at the origin (quantum dimension):
//   Upsilon_lambda(0) = prod_{i<j} sin(pi (l_i - l_j + j - i)/(k+d))
//                              / sin(pi (j - i)/(k+d)).
double upsilon_zero(int d, int k, const WeightA& lam);

// SU(2) discretized character: Upsilon_n(m) =
//   sin(pi (n+1)(m+1)/(k+2)) / sin(pi (m+1)/(k+2)),  0 <= n, m <= k.
double upsilon_su2(int n, int m, int k);

// SU(2) fusion coefficient N_{ij}^s at level k (0 or 1):
// |i-j| <= s <= min(i+j, 2k-i-j) and i + j + s even.
long long fusion_su2(int i, int j, int s, int k);

// Weight multiplicity of the p-th tensor power of the standard
// representation at the class of mu, by DP convolution over steps.
long long tensor_power_weight_mult(int d, int p, const WeightA& mu);

// Fusion coefficient of V(beta) in V(lambda) (x) V(std)^{(x) p} at level k,
// by the affine Kac-Walton alternating sum over the level-k affine Weyl
// group (finite permutations composed with translations by (k+d) Q^v).
long long fusion_bkf(int d, int k, int p, const WeightA& lam, const WeightA& beta);

// Number of p-step walks lambda -> beta with steps +e_i that stay inside
// the closed level-k alcove of dominant weights; the combinatorial oracle
// for fusion_bkf.
long long alcove_count_bruteforce(int d, int k, int p, const WeightA& lam,
                                  const WeightA& beta);

// Doob kernel of the alcove walk driven by the standard representation:
// Q(lam, beta) = N_{lam,std}^beta Upsilon_beta(0) /
//                (Upsilon_lam(0) Upsilon_std(0)).
double alcove_doob_kernel(int d, int k, const WeightA& lam, const WeightA& beta);

// Stationary law mu(lam) = Upsilon_lam(0)^2, normalized over the alcove.
std::vector<double> stationary_measure(int d, int k);

// Perron-normalized fusion power N_{lam,p}^beta /
// (Upsilon_std(0)^p Upsilon_lam(0) Upsilon_beta(0)); converges in p to a
// constant independent of the admissible pair (lam, beta).
double asymptotic_ratio(int d, int k, int p, const WeightA& lam, const WeightA& beta);

// Spectrum of the gap chain of d nearest-neighbour particles on Z/NZ
// killed on collision (the d-player ruin chain), ascending order.
std::vector<double> circle_walk_spectrum(int d, long long n_sites);

// Predicted spectrum: (Upsilon_std(sigma) + conj) / (2d) over the level
// N - d alcove, i.e. (1/d) sum_i cos(2 pi (x_i - mean x)) with
// x = (sigma + rho) / N.
std::vector<double> predicted_circle_spectrum(int d, long long n_sites);

// Discrete Horn measure at level k for the conjugation product of SU(2)
// orbits with radial coordinates a and b: atoms (s+1)/(k+2) weighted by
// N_{xi,gamma}^s Upsilon_s(0) / (Upsilon_xi(0) Upsilon_gamma(0)) with
// xi = [ka], gamma = [kb] (nearest integers).
DiscreteMeasure horn_mu_k(int k, double a, double b);

// Density (and CDF) of the radial part of T_a u T_b u^{-1} for Haar u:
// (pi/2) sin(pi x) / (sin(pi a) sin(pi b)) on [r, s],
// r = min(|a-b|, ...), s per the folded interval.
double horn_density_su2(double x, double a, double b);
double horn_cdf_su2(double x, double a, double b);

} // namespace fusion
} // namespace alcove
