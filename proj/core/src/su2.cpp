#include "alcove/su2.hpp"

#include <cmath>
#include <stdexcept>

namespace alcove {
namespace su2 {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
}

Quat Quat::operator*(const Quat& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
}

double Quat::norm() const {
    return std::sqrt(w * w + x * x + y * y + z * z);
}

void Quat::renormalize() {
    const double n = norm();
    w /= n; x /= n; y /= n; z /= n;
}

Quat su2_exp(const AlgVector& v) {
    const double a = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (a < 1e-300) return Quat{1.0, 0.0, 0.0, 0.0};
    const double s = std::sin(a) / a;
    return {std::cos(a), s * v[0], s * v[1], s * v[2]};
}

Quat torus(double x) {
    return {std::cos(kPi * x), 0.0, 0.0, std::sin(kPi * x)};
}

Quat stochastic_exponential(double tau, const std::vector<AlgVector>& increments) {
    if (!(tau > 0.0))
        throw std::invalid_argument("stochastic_exponential: tau must be positive");
    Quat x;
    std::size_t since_norm = 0;
    for (const auto& dv : increments) {
        x = x * su2_exp({dv[0] / tau, dv[1] / tau, dv[2] / tau});
        if (++since_norm == 64) {
            x.renormalize();
            since_norm = 0;
        }
    }
    x.renormalize();
    return x;
}

double radial_part(const Quat& x, double tau) {
    const double c = std::max(-1.0, std::min(1.0, x.w));
    return tau * std::acos(c) / kPi;
}

Quat haar_su2(Stream& rng) {
    Quat q{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
    q.renormalize();
    return q;
}

double conjugation_product_radial(double a, double b, Stream& rng) {
    const Quat u = haar_su2(rng);
    const Quat g = u * torus(a) * u.conj() * torus(b);
    return radial_part(g, 1.0);
}

SheetSample sheet_radial_sample(double t, double s_step, Stream& rng) {
    if (!(t > 0.0) || !(s_step > 0.0))
        throw std::invalid_argument("sheet_radial_sample: bad parameters");
    const std::size_t n = static_cast<std::size_t>(std::llround(1.0 / s_step));
    const double sd = kPi * std::sqrt(t * s_step);
    Quat x;
    double v3 = 0.0;
    std::size_t since_norm = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const AlgVector dv = {sd * rng.normal(), sd * rng.normal(), sd * rng.normal()};
        v3 += dv[2];
        x = x * su2_exp({dv[0] / t, dv[1] / t, dv[2] / t});
        if (++since_norm == 64) {
            x.renormalize();
            since_norm = 0;
        }
    }
    x.renormalize();
    return {radial_part(x, t), v3 / kPi};
}

namespace {

// Alternating orbit sum S(c) = sum_w det(w) e^{theta e_w + y_w c} with
// w(tau, a) = (tau, +-(a + 2 k tau), -(k a + k^2 tau)).
double orbit_sum(double theta, double c, double tau, double a) {
    double sum = 0.0;
    int small_run = 0;
    for (long long k = 0;; k = (k > 0 ? -k : -k + 1)) {
        const double kk = static_cast<double>(k);
        const double e = -(kk * a + kk * kk * tau);
        const double y = a + 2.0 * kk * tau;
        const double tp = std::exp(theta * e + y * c);
        const double tm = -std::exp(theta * e - y * c);
        sum += tp + tm;
        const double mag = std::abs(tp) + std::abs(tm);
        small_run = (mag < 1e-18 * std::max(std::abs(sum), 1e-300)) ? small_run + 1 : 0;
        if (small_run >= 4 && std::llabs(k) > 2) break;
        if (std::llabs(k) > 1000000)
            throw std::runtime_error("phi_hat_general: no convergence");
    }
    return sum;
}

// d/dc of the orbit sum at c = 0.
double orbit_sum_derivative(double theta, double tau, double a) {
    double sum = 0.0;
    int small_run = 0;
    for (long long k = 0;; k = (k > 0 ? -k : -k + 1)) {
        const double kk = static_cast<double>(k);
        const double e = -(kk * a + kk * kk * tau);
        const double y = a + 2.0 * kk * tau;
        const double t = 2.0 * y * std::exp(theta * e);
        sum += t;
        small_run = (std::abs(t) < 1e-18 * std::max(std::abs(sum), 1e-300))
                        ? small_run + 1 : 0;
        if (small_run >= 4 && std::llabs(k) > 2) break;
        if (std::llabs(k) > 1000000)
            throw std::runtime_error("phi_hat_general: no convergence");
    }
    return sum;
}

// d/dc of the orbit sum at c = theta / 2.  At that point the sum itself
// telescopes to zero (the k-th reflected term equals the (k+1)-th direct
// term), and the derivative collapses to a single-family sum with
// coefficients y_k + y_{k-1}.
double orbit_sum_derivative_wall(double theta, double tau, double a) {
    double sum = 0.0;
    int small_run = 0;
    for (long long k = 0;; k = (k > 0 ? -k : -k + 1)) {
        const double kk = static_cast<double>(k);
        const double t = (2.0 * a + (4.0 * kk - 2.0) * tau) *
                         std::exp(theta * (a * (0.5 - kk) + tau * kk * (1.0 - kk)));
        sum += t;
        small_run = (std::abs(t) < 1e-18 * std::max(std::abs(sum), 1e-300))
                        ? small_run + 1 : 0;
        if (small_run >= 4 && std::llabs(k) > 2) break;
        if (std::llabs(k) > 1000000)
            throw std::runtime_error("phi_hat_general: no convergence");
    }
    return sum;
}

} // namespace

double phi_hat_general(double theta, double chi, double tau, double a) {
    if (!(theta > 0.0) || !(tau > 0.0))
        throw std::invalid_argument("phi_hat_general: theta, tau must be positive");
    if (std::abs(std::abs(chi) - theta) < 1e-9 * theta) {
        // l'Hopital limit at the opposite wall chi = theta, where both the
        // orbit sum and sin(pi chi / theta) vanish.
        return -theta / (2.0 * kPi) * orbit_sum_derivative_wall(theta, tau, a);
    }
    if (chi == 0.0) {
        // l'Hopital limit of the alternating sum over sin(pi chi / theta);
        // the sum vanishes at chi = 0, so the ratio tends to
        // (theta / 2 pi) * d/dc [orbit sum] at c = 0.
        return theta / (2.0 * kPi) * orbit_sum_derivative(theta, tau, a);
    }
    return orbit_sum(theta, chi / 2.0, tau, a) / std::sin(kPi * chi / theta);
}

double kirillov_frenkel_formula(double theta, double chi, double tau, double a) {
    return phi_hat_general(theta, chi, tau, a) / phi_hat_general(theta, 0.0, tau, a);
}

std::vector<std::array<double, 2>> kf_samples(double theta, double tau,
                                              std::size_t replicas, double s_step,
                                              std::uint64_t seed) {
    if (!(theta > 0.0) || !(tau > 0.0) || !(s_step > 0.0))
        throw std::invalid_argument("kf_samples: bad parameters");
    const std::size_t n = static_cast<std::size_t>(std::llround(1.0 / s_step));
    // Driving noise in the normalized invariant metric: orthonormal basis
    // vectors are sqrt(2) pi i sigma_j, path variance tau / theta.
    const double sd = std::sqrt(2.0) * kPi * std::sqrt(tau / theta * s_step);
    std::vector<std::array<double, 2>> out(replicas);
    for (std::size_t r = 0; r < replicas; ++r) {
        Stream rng = derive_stream(seed, {label("kirillov-frenkel"), r});
        Quat x;
        double v3 = 0.0;
        std::size_t since_norm = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const AlgVector dv = {sd * rng.normal(), sd * rng.normal(), sd * rng.normal()};
            v3 += dv[2];
            x = x * su2_exp({dv[0] / tau, dv[1] / tau, dv[2] / tau});
            if (++since_norm == 64) {
                x.renormalize();
                since_norm = 0;
            }
        }
        x.renormalize();
        // Cartan coordinate b; the pairing used downstream is (X|x_1) = chi b / 2.
        out[r] = {radial_part(x, tau), v3 / kPi};
    }
    return out;
}

KirillovFrenkelResult kirillov_frenkel_check(double theta, double tau, double a,
                                             double bin_width,
                                             const std::vector<double>& chis,
                                             std::size_t replicas, double s_step,
                                             std::uint64_t seed) {
    const auto samples = kf_samples(theta, tau, replicas, s_step, seed);
    KirillovFrenkelResult res;
    res.a = a;
    res.bin_width = bin_width;
    res.chi = chis;
    std::vector<double> sum(chis.size(), 0.0), sumsq(chis.size(), 0.0);
    for (const auto& s : samples) {
        if (std::abs(s[0] - a) > bin_width / 2.0) continue;
        ++res.hits;
        for (std::size_t c = 0; c < chis.size(); ++c) {
            const double v = std::exp(chis[c] * s[1] / 2.0);
            sum[c] += v;
            sumsq[c] += v * v;
        }
    }
    for (std::size_t c = 0; c < chis.size(); ++c) {
        const double m = res.hits ? sum[c] / static_cast<double>(res.hits) : 0.0;
        const double var = res.hits > 1
            ? (sumsq[c] - static_cast<double>(res.hits) * m * m) /
                  static_cast<double>(res.hits - 1)
            : 0.0;
        res.mc_mean.push_back(m);
        res.mc_se.push_back(res.hits ? std::sqrt(std::max(0.0, var) /
                                                 static_cast<double>(res.hits))
                                     : 0.0);
        res.formula.push_back(kirillov_frenkel_formula(theta, chis[c], tau, a));
    }
    return res;
}

} // namespace su2
} // namespace alcove
