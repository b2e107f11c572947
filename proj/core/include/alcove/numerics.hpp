#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace alcove {

// Gaussian heat kernel p_t(x,y) = (2*pi*t)^(-1/2) exp(-(y-x)^2 / (2t)).
// Throws std::invalid_argument for t <= 0.
double heat_kernel(double t, double x, double y);

// Sum of a two-sided signed series sum_{k in Z} term(k).  The window
// [-K, K] grows geometrically until tail_bound(K) < tol; throws
// std::runtime_error if no K <= k_max satisfies the bound.  Used for
// alternating theta-like sums where naive term-size stopping rules are
// unsafe: the caller supplies a certified tail bound instead.
double signed_series_sum(const std::function<double(long long)>& term,
                         const std::function<double(long long)>& tail_bound,
                         double tol, long long k_max = 1000000);

// Number of partitions of m (p(0) = 1, p(m) = 0 for m < 0), via Euler's
// pentagonal number recurrence with memoization.  Exact in 64 bits up to
// m = 405; throws std::overflow_error beyond.
std::uint64_t partition_number(long long m);

// Same recurrence carried in doubles, for the large arguments that appear
// inside Boltzmann-weighted sums.  Relative error stays far below 1e-10
// over the ranges used here.
double partition_number_real(long long m);

// Generating function F(a) = sum_m p(m) e^{-a m} = prod_n (1-e^{-an})^{-1}
// via the Euler product, a > 0.
double partition_generating(double a);

// One-sample Kolmogorov-Smirnov statistic: sup-norm distance between the
// empirical CDF of `sample` and the reference CDF.  Sorts a copy.
double ks_statistic(std::vector<double> sample,
                    const std::function<double(double)>& cdf);

// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

// Kolmogorov-Smirnov distance evaluated only at the given cell boundaries.
// For samples supported on a lattice the plain KS statistic against a
// continuous law is bounded below by half the cell mass, which says
// nothing about convergence; evaluating at cell boundaries (interval
// censoring) removes that artifact.
double ks_statistic_binned(const std::vector<double>& sample,
                           const std::function<double(double)>& cdf,
                           const std::vector<double>& boundaries);

// Finitely supported measure on R^d points with nonnegative weights.
struct DiscreteMeasure {
    std::vector<std::vector<double>> points;
    std::vector<double> weights;

    double total_mass() const;
    void normalize();                 // throws if total mass is 0
    std::size_t size() const { return weights.size(); }
};

// Sample from the categorical law given by (normalized) weights.
class CategoricalSampler {
public:
    explicit CategoricalSampler(const std::vector<double>& weights);
    std::size_t sample(double u) const;   // u uniform on (0,1)

private:
    std::vector<double> cumulative_;
};

} // namespace alcove
