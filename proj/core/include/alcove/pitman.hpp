#pragma once

#include <cstddef>
#include <vector>

#include "alcove/rng.hpp"

namespace alcove {
namespace pitman {

// Continuous path on a (not necessarily uniform) time grid; values are the
// spatial coordinate f(t) with the implicit origin f(0) = 0.
struct Path {
    std::vector<double> times;
    std::vector<double> values;

    std::size_t size() const { return times.size(); }
};

// Uniform grid on [0, horizon] with the given step (t = 0 included).
Path brownian_path(double horizon, double step, Stream& rng);

// Geometric grid of n points on [t_min, t_max], Brownian values.
Path brownian_path_log_grid(double t_min, double t_max, std::size_t n, Stream& rng);

// Pitman transform attached to the simple reflection `index`:
//   index 1:  f  ->  f - 2 inf_{s<=t} f(s)
//   index 0:  f  ->  f + 2 inf_{s<=t} (s - f(s))
// The running infima include the origin (0, 0).
Path pitman_transform(const Path& p, int index);

// Levy-type transform: same corrections with coefficient 1.
Path levy_transform(const Path& p, int index);

// Apply n Pitman transforms with alternating indices 0, 1, 0, ...
Path iterate_pitman(const Path& p, std::size_t n);

// String coordinates xi_k (values at the path endpoint) along the
// alternating sequence: xi_k = (-inf <stage-k path, alpha_k^v>)_+ where
// the stage-k path has already absorbed stages 0..k-1.
std::vector<double> string_coordinates(const Path& p, std::size_t n_stages);

// Membership tests for the limit cone and its cut-off by a dominant
// weight lam = (t, x); coordinates as produced by string_coordinates.
bool in_gamma_infinity(const std::vector<double>& xi, double tol = 1e-9);
bool in_gamma_lambda(const std::vector<double>& xi, double t, double x,
                     double tol = 1e-9);

// Limit of the capped iterates L_{n+1} P_n ... P_0 applied to p.
struct HighestWeight {
    double t = 0.0;        // path horizon
    double x = 0.0;        // limiting endpoint value
    std::size_t stages = 0;
    bool converged = false;
};
HighestWeight highest_weight_limit(const Path& p, double tol = 1e-6,
                                   std::size_t n_max = 200);

// Full capped iterate as a path (used by the time-inversion pipeline).
Path capped_iterate(const Path& p, double tol = 1e-6, std::size_t n_max = 200);

// Endpoint gap between consecutive Pitman iterates,
// |P_{n+1}...P_0 p - P_n...P_0 p| evaluated at the horizon.
double iterate_gap(const Path& p, std::size_t n);

// Time inversion: z(u) = u * (L P ... P b)(1/u) on the inverted grid.
// The input path should live on [t_min, t_max] with t_min > 0; the output
// lives on [1/t_max, 1/t_min] in increasing time order.
Path time_inversion_pipeline(const Path& b, double tol = 1e-6,
                             std::size_t n_max = 200);

} // namespace pitman
} // namespace alcove
