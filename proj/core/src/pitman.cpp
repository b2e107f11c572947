#include "alcove/pitman.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace alcove {
namespace pitman {

Path brownian_path(double horizon, double step, Stream& rng) {
    if (!(horizon > 0.0) || !(step > 0.0))
        throw std::invalid_argument("brownian_path: bad horizon/step");
    const std::size_t n = static_cast<std::size_t>(std::llround(horizon / step));
    Path p;
    p.times.resize(n + 1);
    p.values.resize(n + 1);
    p.times[0] = 0.0;
    p.values[0] = 0.0;
    const double sd = std::sqrt(step);
    for (std::size_t i = 1; i <= n; ++i) {
        p.times[i] = static_cast<double>(i) * step;
        p.values[i] = p.values[i - 1] + sd * rng.normal();
    }
    return p;
}

Path brownian_path_log_grid(double t_min, double t_max, std::size_t n, Stream& rng) {
    if (!(t_min > 0.0) || !(t_max > t_min) || n < 2)
        throw std::invalid_argument("brownian_path_log_grid: bad grid");
    Path p;
    p.times.resize(n);
    p.values.resize(n);
    const double r = std::log(t_max / t_min) / static_cast<double>(n - 1);
    double prev_t = 0.0, prev_v = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = t_min * std::exp(r * static_cast<double>(i));
        p.times[i] = t;
        p.values[i] = prev_v + std::sqrt(t - prev_t) * rng.normal();
        prev_t = t;
        prev_v = p.values[i];
    }
    return p;
}

namespace {

// Shared body of the Pitman/Levy transforms; coeff is 2 or 1.
Path reflect_transform(const Path& p, int index, double coeff) {
    if (index != 0 && index != 1)
        throw std::invalid_argument("transform index must be 0 or 1");
    Path out;
    out.times = p.times;
    out.values.resize(p.values.size());
    double run = 0.0;   // running inf of <path, alpha_index^v>, from (0,0)
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double pairing = (index == 1) ? p.values[i]
                                            : p.times[i] - p.values[i];
        run = std::min(run, pairing);
        // Correction xi(t) = (-running inf)_+, added along alpha_index:
        // alpha_1 raises the value, alpha_0 lowers it.
        const double xi = -run;
        out.values[i] = p.values[i] + (index == 1 ? coeff : -coeff) * xi;
    }
    return out;
}

} // namespace

Path pitman_transform(const Path& p, int index) {
    return reflect_transform(p, index, 2.0);
}

Path levy_transform(const Path& p, int index) {
    return reflect_transform(p, index, 1.0);
}

Path iterate_pitman(const Path& p, std::size_t n) {
    Path cur = p;
    for (std::size_t k = 0; k < n; ++k)
        cur = pitman_transform(cur, static_cast<int>(k % 2));
    return cur;
}

std::vector<double> string_coordinates(const Path& p, std::size_t n_stages) {
    std::vector<double> xi(n_stages, 0.0);
    Path cur = p;
    for (std::size_t k = 0; k < n_stages; ++k) {
        const int index = static_cast<int>(k % 2);
        double run = 0.0;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            const double pairing = (index == 1) ? cur.values[i]
                                                : cur.times[i] - cur.values[i];
            run = std::min(run, pairing);
        }
        xi[k] = -run;   // >= 0 by construction
        cur = pitman_transform(cur, index);
    }
    return xi;
}

bool in_gamma_infinity(const std::vector<double>& xi, double tol) {
    if (xi.empty()) return true;
    if (xi[0] < -tol) return false;
    for (std::size_t k = 1; k + 1 < xi.size(); ++k) {
        const double a = xi[k] / static_cast<double>(k);
        const double b = xi[k + 1] / static_cast<double>(k + 1);
        if (b < -tol || a < b - tol) return false;
    }
    return true;
}

bool in_gamma_lambda(const std::vector<double>& xi, double t, double x, double tol) {
    // sigma(xi) = sum_k xi_k alpha_k (finitely supported coordinates);
    // spatial coordinate of alpha_0 is -2 and of alpha_1 is +2.
    double sigma = 0.0;
    for (std::size_t k = 0; k < xi.size(); ++k)
        sigma += (k % 2 == 1 ? 2.0 : -2.0) * xi[k];
    double prefix = 0.0;
    for (std::size_t k = 0; k < xi.size(); ++k) {
        const double ak = (k % 2 == 1 ? 2.0 : -2.0);
        const double rest = sigma - prefix - 0.5 * xi[k] * ak;
        // <(0, v), alpha_0^v> = -v ; <(0, v), alpha_1^v> = v.
        const double lhs = (k % 2 == 1) ? rest : -rest;
        const double rhs = (k % 2 == 1) ? x : t - x;
        if (lhs > rhs + tol) return false;
        prefix += xi[k] * ak;
    }
    return true;
}

namespace {

double sup_diff(const Path& a, const Path& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d = std::max(d, std::abs(a.values[i] - b.values[i]));
    return d;
}

struct CappedResult {
    Path path;
    std::size_t stages;
    bool converged;
};

CappedResult capped_limit(const Path& p, double tol, std::size_t n_max) {
    Path cur = p;                    // P_{n} ... P_0 p
    Path capped_prev;
    bool have_prev = false;
    for (std::size_t n = 0; n < n_max; ++n) {
        cur = pitman_transform(cur, static_cast<int>(n % 2));
        Path capped = levy_transform(cur, static_cast<int>((n + 1) % 2));
        if (have_prev && sup_diff(capped, capped_prev) < tol)
            return {std::move(capped), n + 1, true};
        capped_prev = std::move(capped);
        have_prev = true;
    }
    return {std::move(capped_prev), n_max, false};
}

} // namespace

HighestWeight highest_weight_limit(const Path& p, double tol, std::size_t n_max) {
    CappedResult r = capped_limit(p, tol, n_max);
    HighestWeight hw;
    hw.t = r.path.times.back();
    hw.x = r.path.values.back();
    hw.stages = r.stages;
    hw.converged = r.converged;
    return hw;
}

Path capped_iterate(const Path& p, double tol, std::size_t n_max) {
    return capped_limit(p, tol, n_max).path;
}

double iterate_gap(const Path& p, std::size_t n) {
    Path cur = iterate_pitman(p, n + 1);
    Path next = pitman_transform(cur, static_cast<int>((n + 1) % 2));
    return std::abs(next.values.back() - cur.values.back());
}

Path time_inversion_pipeline(const Path& b, double tol, std::size_t n_max) {
    if (b.times.empty() || !(b.times.front() > 0.0))
        throw std::invalid_argument("time_inversion_pipeline: grid must start at t > 0");
    const Path y = capped_limit(b, tol, n_max).path;
    Path z;
    z.times.resize(y.size());
    z.values.resize(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        const std::size_t j = y.size() - 1 - i;
        z.times[i] = 1.0 / y.times[j];
        z.values[i] = z.times[i] * y.values[j];
    }
    return z;
}

} // namespace pitman
} // namespace alcove
