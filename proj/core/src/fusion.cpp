#include "alcove/fusion.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace alcove {
namespace fusion {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

void check_weight(int d, const WeightA& w, const char* who) {
    if (static_cast<int>(w.size()) != d)
        throw std::invalid_argument(std::string(who) + ": weight has wrong rank");
}

bool is_dominant(const WeightA& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    return true;
}

WeightA normalized(WeightA w) {
    const long long base = w.back();
    for (auto& c : w) c -= base;
    return w;
}

// rho in the U(d)-style representative: (d-1, d-2, ..., 0).
WeightA rho_vec(int d) {
    WeightA r(d);
    for (int i = 0; i < d; ++i) r[i] = d - 1 - i;
    return r;
}

} // namespace

std::vector<WeightA> alcove_weights(int d, int k) {
    std::vector<WeightA> out;
    WeightA w(d, 0);
    // Enumerate weakly decreasing vectors with w_1 <= k and w_d = 0.
    while (true) {
        out.push_back(w);
        int i = d - 2;
        while (i >= 0) {
            const long long cap = (i == 0) ? k : w[i - 1];
            if (w[i] < cap) {
                ++w[i];
                for (int j = i + 1; j < d - 1; ++j) w[j] = 0;
                break;
            }
            --i;
        }
        if (i < 0) break;
    }
    if (d == 1) out = {WeightA{0}};
    return out;
}

double upsilon_zero(int d, int k, const WeightA& lam) {
    check_weight(d, lam, "upsilon_zero");
    const double q = static_cast<double>(k + d);
    double v = 1.0;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            const double num = std::sin(kPi * static_cast<double>(lam[i] - lam[j] + j - i) / q);
            const double den = std::sin(kPi * static_cast<double>(j - i) / q);
            v *= num / den;
        }
    return v;
}

double upsilon_su2(int n, int m, int k) {
    const double q = static_cast<double>(k + 2);
    return std::sin(kPi * static_cast<double>((n + 1) * (m + 1)) / q) /
           std::sin(kPi * static_cast<double>(m + 1) / q);
}

long long fusion_su2(int i, int j, int s, int k) {
    if (s < std::abs(i - j)) return 0;
    if (s > std::min(i + j, 2 * k - i - j)) return 0;
    if (((i + j + s) % 2) != 0) return 0;
    return 1;
}

long long tensor_power_weight_mult(int d, int p, const WeightA& mu) {
    check_weight(d, mu, "tensor_power_weight_mult");
    // Classes after p steps are exactly the step-count vectors c >= 0 with
    // sum p; convolve step by step.
    std::map<WeightA, long long> layer;
    layer[WeightA(d, 0)] = 1;
    for (int step = 0; step < p; ++step) {
        std::map<WeightA, long long> next;
        for (const auto& [c, cnt] : layer)
            for (int i = 0; i < d; ++i) {
                WeightA c2 = c;
                ++c2[i];
                next[c2] += cnt;
            }
        layer = std::move(next);
    }
    // Shift mu to its step-count representative: c = mu + t e, sum c = p.
    long long s = 0;
    for (long long v : mu) s += v;
    if (((p - s) % d) != 0) return 0;
    const long long t = (p - s) / d;
    WeightA c(mu);
    for (auto& v : c) {
        v += t;
        if (v < 0) return 0;
    }
    const auto it = layer.find(c);
    return it == layer.end() ? 0 : it->second;
}

namespace {

// Multinomial weight multiplicity of V(std)^{(x) p} at class mu; closed
// form used inside the alternating sums where the DP map would be slow.
long long power_mult_closed(int d, int p, const WeightA& mu) {
    long long s = 0;
    for (long long v : mu) s += v;
    if (((p - s) % d) != 0) return 0;
    const long long t = (p - s) / d;
    __int128 m = 1;
    long long rem = p;
    for (int i = 0; i < d; ++i) {
        const long long c = mu[i] + t;
        if (c < 0) return 0;
        // multiply binomial(rem, c) into m
        __int128 b = 1;
        for (long long x = 1; x <= c; ++x)
            b = b * (rem - c + x) / x;
        m *= b;
        rem -= c;
    }
    if (rem != 0) return 0;
    return static_cast<long long>(m);
}

// Enumerate sum-zero integer translation vectors q with |q_i| <= bound.
void enumerate_translations(int d, long long bound, WeightA& q, int pos,
                            long long partial,
                            const std::function<void(const WeightA&)>& fn) {
    if (pos == d - 1) {
        const long long last = -partial;
        if (std::llabs(last) <= bound) {
            q[pos] = last;
            fn(q);
        }
        return;
    }
    for (long long v = -bound; v <= bound; ++v) {
        q[pos] = v;
        enumerate_translations(d, bound, q, pos + 1, partial + v, fn);
    }
}

std::vector<std::vector<int>> permutations(int d) {
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

int permutation_sign(const std::vector<int>& s) {
    int sign = 1;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j]) sign = -sign;
    return sign;
}

} // namespace

long long fusion_bkf(int d, int k, int p, const WeightA& lam, const WeightA& beta) {
    check_weight(d, lam, "fusion_bkf");
    check_weight(d, beta, "fusion_bkf");
    if (!is_dominant(lam) || !is_dominant(beta))
        throw std::invalid_argument("fusion_bkf: weights must be dominant");
    const WeightA rho = rho_vec(d);
    const long long kd = k + d;
    const long long bound = (p + 2 * kd) / kd + 2;

    WeightA lr(d), br(d);
    for (int i = 0; i < d; ++i) {
        lr[i] = lam[i] + rho[i];
        br[i] = beta[i] + rho[i];
    }

    __int128 total = 0;
    WeightA q(d, 0);
    for (const auto& sigma : permutations(d)) {
        const int sign = permutation_sign(sigma);
        enumerate_translations(d, bound, q, 0, 0, [&](const WeightA& qq) {
            WeightA mu(d);
            for (int i = 0; i < d; ++i)
                mu[i] = br[sigma[i]] + kd * qq[i] - lr[i];
            const long long m = power_mult_closed(d, p, mu);
            if (m != 0) total += sign * static_cast<__int128>(m);
        });
    }
    return static_cast<long long>(total);
}

long long alcove_count_bruteforce(int d, int k, int p, const WeightA& lam,
                                  const WeightA& beta) {
    check_weight(d, lam, "alcove_count_bruteforce");
    check_weight(d, beta, "alcove_count_bruteforce");
    std::map<WeightA, long long> layer;
    layer[normalized(lam)] = 1;
    for (int step = 0; step < p; ++step) {
        std::map<WeightA, long long> next;
        for (const auto& [w, cnt] : layer)
            for (int i = 0; i < d; ++i) {
                WeightA w2 = w;
                ++w2[i];
                if (!is_dominant(w2)) continue;         // killed at a wall
                w2 = normalized(w2);
                if (w2.front() - w2.back() > k) continue;  // level wall
                next[w2] += cnt;
            }
        layer = std::move(next);
    }
    const auto it = layer.find(normalized(beta));
    return it == layer.end() ? 0 : it->second;
}

double alcove_doob_kernel(int d, int k, const WeightA& lam, const WeightA& beta) {
    const long long n = fusion_bkf(d, k, 1, lam, beta);
    if (n == 0) return 0.0;
    WeightA std_w(d, 0);
    std_w[0] = 1;
    return static_cast<double>(n) * upsilon_zero(d, k, beta) /
           (upsilon_zero(d, k, lam) * upsilon_zero(d, k, std_w));
}

std::vector<double> stationary_measure(int d, int k) {
    const auto ws = alcove_weights(d, k);
    std::vector<double> mu(ws.size());
    double total = 0.0;
    for (std::size_t i = 0; i < ws.size(); ++i) {
        const double u = upsilon_zero(d, k, ws[i]);
        mu[i] = u * u;
        total += mu[i];
    }
    for (double& m : mu) m /= total;
    return mu;
}

double asymptotic_ratio(int d, int k, int p, const WeightA& lam, const WeightA& beta) {
    const long long n = fusion_bkf(d, k, p, lam, beta);
    WeightA std_w(d, 0);
    std_w[0] = 1;
    return static_cast<double>(n) /
           (std::pow(upsilon_zero(d, k, std_w), p) * upsilon_zero(d, k, lam) *
            upsilon_zero(d, k, beta));
}

std::vector<double> circle_walk_spectrum(int d, long long n_sites) {
    if (d < 2 || n_sites <= d)
        throw std::invalid_argument("circle_walk_spectrum: need N > d >= 2");
    // States: gap vectors g (distance from particle i to particle i+1,
    // cyclically), g_i >= 1, sum g = N.
    std::vector<WeightA> states;
    WeightA g(d, 1);
    const auto fill = [&](auto&& self, int pos, long long rem) -> void {
        if (pos == d - 1) {
            if (rem >= 1) {
                g[pos] = rem;
                states.push_back(g);
            }
            return;
        }
        for (long long v = 1; v <= rem - (d - 1 - pos); ++v) {
            g[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    fill(fill, 0, n_sites);

    std::map<WeightA, int> index;
    for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = static_cast<int>(i);

    Eigen::MatrixXd kmat = Eigen::MatrixXd::Zero(states.size(), states.size());
    const double w = 1.0 / (2.0 * d);
    for (std::size_t si = 0; si < states.size(); ++si) {
        for (int i = 0; i < d; ++i) {
            const int prev = (i + d - 1) % d;
            for (int dir = -1; dir <= 1; dir += 2) {
                WeightA g2 = states[si];
                g2[i] -= dir;      // particle i steps forward (dir = +1)
                g2[prev] += dir;
                if (g2[i] < 1 || g2[prev] < 1) continue;   // collision: killed
                kmat(index.at(g2), si) += w;
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(kmat);
    std::vector<double> eig(es.eigenvalues().data(),
                            es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<double> predicted_circle_spectrum(int d, long long n_sites) {
    const int k = static_cast<int>(n_sites) - d;
    const auto ws = alcove_weights(d, k);
    const WeightA rho = rho_vec(d);
    std::vector<double> eig;
    eig.reserve(ws.size());
    for (const auto& sigma : ws) {
        double mean = 0.0;
        std::vector<double> x(d);
        for (int i = 0; i < d; ++i) {
            x[i] = static_cast<double>(sigma[i] + rho[i]) / static_cast<double>(n_sites);
            mean += x[i];
        }
        mean /= d;
        double v = 0.0;
        for (int i = 0; i < d; ++i)
            v += std::cos(2.0 * kPi * (x[i] - mean));
        eig.push_back(v / d);
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

namespace {

// Folded support of the SU(2) conjugation product density.
void horn_support(double a, double b, double& r, double& s) {
    const double lo = std::abs(a - b);
    const double hi = std::min(a + b, 2.0 - (a + b));
    r = std::min(lo, hi);
    s = std::max(lo, hi);
}

} // namespace

DiscreteMeasure horn_mu_k(int k, double a, double b) {
    if (!(a > 0.0) || !(a < 1.0) || !(b > 0.0) || !(b < 1.0))
        throw std::invalid_argument("horn_mu_k: a, b must lie in (0,1)");
    const int xi = static_cast<int>(std::llround(k * a));
    const int ga = static_cast<int>(std::llround(k * b));
    DiscreteMeasure mu;
    for (int s = 0; s <= k; ++s) {
        const long long n = fusion_su2(xi, ga, s, k);
        if (n == 0) continue;
        const double w = static_cast<double>(n) * upsilon_su2(s, 0, k) /
                         (upsilon_su2(xi, 0, k) * upsilon_su2(ga, 0, k));
        mu.points.push_back({static_cast<double>(s + 1) / static_cast<double>(k + 2)});
        mu.weights.push_back(w);
    }
    return mu;
}

double horn_density_su2(double x, double a, double b) {
    double r, s;
    horn_support(a, b, r, s);
    if (x <= r || x >= s) return 0.0;
    return (kPi / 2.0) * std::sin(kPi * x) / (std::sin(kPi * a) * std::sin(kPi * b));
}

double horn_cdf_su2(double x, double a, double b) {
    double r, s;
    horn_support(a, b, r, s);
    if (x <= r) return 0.0;
    if (x >= s) return 1.0;
    return (std::cos(kPi * r) - std::cos(kPi * x)) /
           (2.0 * std::sin(kPi * a) * std::sin(kPi * b));
}

} // namespace fusion
} // namespace alcove
