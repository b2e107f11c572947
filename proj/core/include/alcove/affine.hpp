#pragma once

#include <cstdint>
#include <vector>

#include "alcove/numerics.hpp"
#include "alcove/rng.hpp"

namespace alcove {
namespace affine {

// Weights of the rank-one affine algebra in the coordinates
// (level, spatial, depth): the weight  level * L0 + spatial * (a1/2) + depth * d,
// where L0 is the fundamental weight, a1 the finite simple root and d the
// null root.  `spatial` is counted in units of a1/2 throughout.
struct Weight {
    long long level = 0;
    long long spatial = 0;
    long long depth = 0;   // coefficient of the null root (<= 0 below a top)

    bool operator==(const Weight& o) const {
        return level == o.level && spatial == o.spatial && depth == o.depth;
    }
};

// Weyl vector restricted to the coordinates above: 2*L0 + a1/2.
inline Weight rho() { return Weight{2, 1, 0}; }

// Affine Weyl group element: the translation by k*a1 composed (on the
// left) with the finite reflection when `reflect` is set.
struct WeylElement {
    long long translate = 0;
    bool reflect = false;
    int det() const { return reflect ? -1 : 1; }
};

// Action on a weight:  t_{k a1}(x L0 + y a1/2 + z d)
//   = x L0 + (y + 2 k x) a1/2 + (z - (k y + k^2 x)) d,
// and the reflection negates the spatial coordinate.
Weight weyl_apply(const WeylElement& w, const Weight& lam);

// Multiplicity of the weight L0 + j*a1 - N*d in the level-one basic
// representation: the partition number p(N - j^2).  `j` is the coefficient
// of a1 (spatial coordinate 2j), `N >= 0` the depth below the top.
double basic_rep_multiplicity(long long j, long long N);

// Normalized character of the irreducible with highest weight
// lam = x L0 + y a1/2 (depth coordinate 0), evaluated at a*d with a > 0:
//   ch(a) = sum_k (y+1+2k(x+2)) e^{-a(k(y+1)+k^2(x+2))}
//         / sum_k (1+4k)        e^{-a(k+2k^2)}  ,
// the boundary limit of the Weyl-Kac character formula.
double char_ratio(long long level, long long spatial, double a);

// Step measure of the level-one walk: atoms (j, N) for the weights
// L0 + j*a1 - N*d, weight p(N - j^2) e^{-aN} normalized by the character.
// Truncated once the neglected tail is below `tol` in relative mass.
// Points are stored as {2j, -N} = (spatial, depth) coordinates.
DiscreteMeasure step_measure_level1(double a, double tol = 1e-12);

// Projected multiplicity of the component class of `beta` in
// V(L0) (x) V(lam), with depth shifts weighted by the Boltzmann factor:
//   sum_{z>=0} e^{-az} sum_w det(w) mult( w(beta - z d + rho) - (lam + rho) ).
// `lam`, `beta` are dominant with depth 0 and beta.level = lam.level + 1.
// The z-sum stops after three consecutive shifts contribute less than
// 1e-12 in relative terms.
double tensor_mult_projected(const Weight& lam, const Weight& beta, double a);

// Same quantity in closed form: extending the depth sum over all of Z
// adds only vanishing multiplicities, after which each Weyl term sums to
// the full partition generating function:
//   sum_w det(w) e^{-a (j_w^2 - depth_w)} F(a),
// where w(beta + rho) - (lam + rho) = L0 + j_w a1 + depth_w d.
double tensor_mult_projected_closed(const Weight& lam, const Weight& beta, double a);

// Transition kernel of the Doob-transformed tensor chain,
//   Q(lam, beta) = ch_beta(a) * mult / (ch_lam(a) * ch_L0(a)).
double chain_kernel(const Weight& lam, const Weight& beta, double a);

// Minimal space-time harmonic function of the conditioned walk scaling
// limit: phi(t, x) = sum_k (x + 2kt) exp(-2(kx + k^2 t)), harmonic for
// d/dt + (1/2) d^2/dx^2 on the cone {0 <= x <= t} and vanishing on its
// boundary.
double phi_hat_2d(double t, double x);

// Density in y of the conditioned space-time Brownian motion at time t,
// started at the corner (0,0); supported on (0, t).  Obtained by time
// inversion from the entrance law of Brownian motion conditioned to stay
// in (0,1).
double conditioned_density(double t, double y);

// CDF of the same law.
double conditioned_cdf(double t, double y);

// Entrance density/CDF at time s of Brownian motion conditioned to stay
// in (0,1), started at 0 (used by the path-transform pipeline too).
double interval_entrance_density(double s, double y);
double interval_entrance_cdf(double s, double y);

// Markov chain of dominant classes driven by the level-one walk; one step
// raises the level by one.  Kernel rows are cached.  `a` is the drift
// parameter (the scaling limit uses a = 2/n).
class ChainSimulator {
public:
    explicit ChainSimulator(double a);

    // Run n steps from the origin class (level 0); returns the terminal
    // spatial coordinate (in a1/2 units, an even integer in [0, n]).
    long long run(long long n, Stream& rng);

    // Kernel row from (level, spatial): matching chain_kernel entries.
    const std::vector<std::pair<long long, double>>& row(long long level,
                                                         long long spatial);

private:
    double a_;
    double f_a_;       // partition generating function F(a)
    double ch_l0_;     // character of the basic representation at a*d
    std::vector<std::vector<std::vector<std::pair<long long, double>>>> cache_;
    double char_cached(long long level, long long spatial);
    std::vector<std::vector<double>> char_cache_;
};

// Simulate the rescaled chain: n steps with a = 2/n (drift parameter
// exposed for experimentation), rescaled terminal value spatial/n in [0,1].
double simulate_affine_chain(long long n, Stream& rng, double a_override = 0.0);

} // namespace affine
} // namespace alcove
