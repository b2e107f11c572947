#include "alcove/sl2.hpp"

#include <cmath>
#include <stdexcept>

namespace alcove {
namespace sl2 {

namespace {

// Binomial coefficients in doubles, grown on demand.
double binomial(long long n, long long k) {
    static std::vector<std::vector<double>> pascal = {{1.0}};
    if (k < 0 || k > n) return 0.0;
    while (static_cast<long long>(pascal.size()) <= n) {
        const std::size_t m = pascal.size();
        std::vector<double> row(m + 1, 1.0);
        for (std::size_t j = 1; j < m; ++j)
            row[j] = pascal[m - 1][j - 1] + pascal[m - 1][j];
        pascal.push_back(std::move(row));
    }
    return pascal[n][k];
}

} // namespace

double schur_value(long long x, double q) {
    if (x < -1)
        throw std::invalid_argument("schur_value: x must be >= -1");
    if (q == 1.0)
        return static_cast<double>(x + 1);
    const double num = std::pow(q, x + 1) - std::pow(q, -(x + 1));
    return num / (q - 1.0 / q);
}

double walk_kernel(long long x, long long y, double q) {
    if (y == x + 1) return q / (q + 1.0 / q);
    if (y == x - 1) return (1.0 / q) / (q + 1.0 / q);
    return 0.0;
}

double walk_kernel_n(long long x, long long y, long long n, double q) {
    const long long d = y - x;
    if (n < 0 || std::llabs(d) > n || ((n + d) % 2) != 0) return 0.0;
    const long long up = (n + d) / 2;
    return binomial(n, up) * std::pow(q, d) / std::pow(q + 1.0 / q, n);
}

double doob_kernel(long long x, long long y, double q) {
    if (x < 0 || y < 0) return 0.0;
    if (std::llabs(y - x) != 1) return 0.0;
    const double hy = std::pow(q, -y) * schur_value(y, q);
    const double hx = std::pow(q, -x) * schur_value(x, q);
    return hy / hx * walk_kernel(x, y, q);
}

double reflected_n_step(long long x, long long y, long long n, double q) {
    if (x < 0 || y < 0) return 0.0;
    const double hy = std::pow(q, -y) * schur_value(y, q);
    const double hx = std::pow(q, -x) * schur_value(x, q);
    const double direct = walk_kernel_n(x, y, n, q);
    const double mirror = std::pow(q, 2 * y + 2) * walk_kernel_n(x, -y - 2, n, q);
    return hy / hx * (direct - mirror);
}

DiscreteMeasure step_measure(long long omega, double q) {
    if (omega < 0)
        throw std::invalid_argument("step_measure: omega must be >= 0");
    DiscreteMeasure mu;
    const double ch = schur_value(omega, q);
    for (long long y = -omega; y <= omega; y += 2) {
        mu.points.push_back({static_cast<double>(y)});
        mu.weights.push_back(std::pow(q, y) / ch);
    }
    return mu;
}

long long clebsch_gordan_mult(long long x, long long omega, long long z) {
    const auto m = [omega](long long y) -> long long {
        return (std::llabs(y) <= omega && ((y - omega) % 2) == 0) ? 1 : 0;
    };
    return m(z - x) - m(-(z + 1) - (x + 1));
}

double rep_markov_kernel(long long x, long long z, long long omega, double q) {
    if (x < 0 || z < 0) return 0.0;
    const long long mult = clebsch_gordan_mult(x, omega, z);
    if (mult == 0) return 0.0;
    return static_cast<double>(mult) * schur_value(z, q) /
           (schur_value(x, q) * schur_value(omega, q));
}

double bessel3_transition(double t, double x, double y, double gamma) {
    if (!(t > 0.0))
        throw std::invalid_argument("bessel3_transition: t must be positive");
    if (x < 0.0 || gamma < 0.0)
        throw std::invalid_argument("bessel3_transition: x, gamma must be >= 0");
    if (y <= 0.0) return 0.0;
    if (x == 0.0) {
        // Entrance law at the wall.
        if (gamma == 0.0)
            return std::sqrt(2.0 / 3.141592653589793) * std::pow(t, -1.5) *
                   y * y * std::exp(-y * y / (2.0 * t));
        return (1.0 - std::exp(-2.0 * gamma * y)) * (y / t) *
               std::exp(gamma * y - gamma * gamma * t / 2.0) *
               heat_kernel(t, 0.0, y) / gamma;
    }
    if (gamma == 0.0)
        return (y / x) * (heat_kernel(t, x, y) - heat_kernel(t, -x, y));
    // Doob transform of the killed drifted kernel by h(x) = 1 - e^{-2 gamma x}
    // (the probability of never hitting 0, harmonic for the drifted motion):
    //   q_t(x, y) = (h(y)/h(x)) e^{gamma(y-x) - gamma^2 t/2}
    //               (p_t(x, y) - p_t(x, -y)).
    const double hy = 1.0 - std::exp(-2.0 * gamma * y);
    const double hx = 1.0 - std::exp(-2.0 * gamma * x);
    return hy / hx * std::exp(gamma * (y - x) - gamma * gamma * t / 2.0) *
           (heat_kernel(t, x, y) - heat_kernel(t, -x, y));
}

double bessel3_entrance_cdf(double t, double y) {
    if (y <= 0.0) return 0.0;
    const double s = y / std::sqrt(t);
    return std::erf(s / std::sqrt(2.0)) -
           std::sqrt(2.0 / 3.141592653589793) * s * std::exp(-s * s / 2.0);
}

long long simulate_doob_chain(long long x0, long long n, long long omega,
                              double q, Stream& rng) {
    if (x0 < 0)
        throw std::invalid_argument("simulate_doob_chain: x0 must be >= 0");
    long long x = x0;
    std::vector<double> w;
    std::vector<long long> zs;
    for (long long step = 0; step < n; ++step) {
        w.clear();
        zs.clear();
        for (long long z = std::max<long long>(0, x - omega); z <= x + omega; ++z) {
            if (((z - x - omega) % 2) != 0) continue;
            const double p = rep_markov_kernel(x, z, omega, q);
            if (p > 0.0) {
                w.push_back(p);
                zs.push_back(z);
            }
        }
        const double u = rng.uniform();
        double acc = 0.0;
        std::size_t pick = w.size() - 1;
        for (std::size_t i = 0; i < w.size(); ++i) {
            acc += w[i];
            if (u <= acc) { pick = i; break; }
        }
        x = zs[pick];
    }
    return x;
}

} // namespace sl2
} // namespace alcove
