#include "alcove/affine.hpp"

#include <cmath>
#include <stdexcept>

namespace alcove {
namespace affine {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
}

Weight weyl_apply(const WeylElement& w, const Weight& lam) {
    const long long k = w.translate;
    Weight out;
    out.level = lam.level;
    out.spatial = lam.spatial + 2 * k * lam.level;
    out.depth = lam.depth - (k * lam.spatial + k * k * lam.level);
    if (w.reflect) out.spatial = -out.spatial;
    return out;
}

double basic_rep_multiplicity(long long j, long long N) {
    if (N < 0) return 0.0;
    return partition_number_real(N - j * j);
}

namespace {

// Numerator of the boundary character formula for highest weight
// (level, spatial); the denominator is the same series at (0, 0).
double char_series(long long level, long long spatial, double a) {
    const double x2 = static_cast<double>(level + 2);
    const double y1 = static_cast<double>(spatial + 1);
    const double t = a * x2;
    if (t < kPi) {
        // The direct alternating sum cancels down to O(e^{-pi^2/t}) of the
        // term size, which destroys double precision for small a.  Use the
        // Poisson-dual form instead: all terms are dominated by m = 1
        // (which is positive since y1/(2 x2) < 1/2), so no cancellation.
        const double c = y1 / (2.0 * x2);
        double s = 0.0;
        for (long long m = 1;; ++m) {
            const double mm = static_cast<double>(m);
            const double env = mm * std::exp(-kPi * kPi * mm * mm / t);
            s += env * std::sin(2.0 * kPi * mm * c);
            // Break on the exponential envelope, not the full term: the sine
            // can vanish at one m while later terms still matter.
            if (m > 1 && env < 1e-18 * std::max(std::abs(s), 1e-300))
                break;
            if (m > 10000)
                throw std::runtime_error("char_series: no convergence (dual)");
        }
        return 2.0 * x2 * std::exp(a * y1 * y1 / (4.0 * x2)) * 2.0 *
               std::pow(kPi, 1.5) * std::pow(t, -1.5) * s;
    }
    double sum = y1;   // k = 0
    for (long long k = 1;; ++k) {
        const double kk = static_cast<double>(k);
        const double tp = (y1 + 2.0 * kk * x2) * std::exp(-a * (kk * y1 + kk * kk * x2));
        const double tm = (y1 - 2.0 * kk * x2) * std::exp(-a * (-kk * y1 + kk * kk * x2));
        sum += tp + tm;
        if (std::abs(tp) + std::abs(tm) < 1e-18 * std::abs(sum) && kk * kk * x2 * a > 2.0)
            return sum;
        if (k > 100000)
            throw std::runtime_error("char_series: no convergence");
    }
}

} // namespace

double char_ratio(long long level, long long spatial, double a) {
    if (!(a > 0.0))
        throw std::invalid_argument("char_ratio: a must be positive");
    if (level < 0 || spatial < 0 || spatial > level)
        throw std::invalid_argument("char_ratio: weight must be dominant");
    return char_series(level, spatial, a) / char_series(0, 0, a);
}

DiscreteMeasure step_measure_level1(double a, double tol) {
    if (!(a > 0.0))
        throw std::invalid_argument("step_measure_level1: a must be positive");
    // Total mass factorizes: F(a) * sum_j e^{-a j^2}.
    const double f = partition_generating(a);
    double theta = 1.0;
    for (long long j = 1;; ++j) {
        const double t = 2.0 * std::exp(-a * static_cast<double>(j * j));
        theta += t;
        if (t < 1e-18 * theta) break;
    }
    const double total = f * theta;
    DiscreteMeasure mu;
    double acc = 0.0;
    for (long long n = 0;; ++n) {
        for (long long j = 0; j * j <= n; ++j) {
            const double w = partition_number_real(n - j * j) *
                             std::exp(-a * static_cast<double>(n));
            if (w <= 0.0) continue;
            mu.points.push_back({static_cast<double>(2 * j), static_cast<double>(-n)});
            mu.weights.push_back(w);
            acc += w;
            if (j > 0) {
                mu.points.push_back({static_cast<double>(-2 * j), static_cast<double>(-n)});
                mu.weights.push_back(w);
                acc += w;
            }
        }
        if (total - acc < tol * total) break;
        if (n > 2000000)
            throw std::runtime_error("step_measure_level1: truncation failed");
    }
    mu.normalize();
    return mu;
}

namespace {

// Spatial and depth coordinates of w(beta + rho) - (lam + rho) for
// w = s^eps t_k; the level coordinate is always 1.
struct WeylTerm {
    long long spatial;
    long long depth;
    int det;
};

WeylTerm weyl_term(const Weight& lamr, const Weight& betar, long long k, bool reflect) {
    Weight img = weyl_apply(WeylElement{k, reflect}, betar);
    return WeylTerm{img.spatial - lamr.spatial, img.depth - lamr.depth,
                    reflect ? -1 : 1};
}

Weight add_rho(const Weight& w) {
    return Weight{w.level + 2, w.spatial + 1, w.depth};
}

void check_pair(const Weight& lam, const Weight& beta, const char* who) {
    if (lam.depth != 0 || beta.depth != 0)
        throw std::invalid_argument(std::string(who) + ": weights must have depth 0");
    if (beta.level != lam.level + 1)
        throw std::invalid_argument(std::string(who) + ": beta.level must be lam.level + 1");
    if (lam.spatial < 0 || lam.spatial > lam.level ||
        beta.spatial < 0 || beta.spatial > beta.level)
        throw std::invalid_argument(std::string(who) + ": weights must be dominant");
}

} // namespace

double tensor_mult_projected(const Weight& lam, const Weight& beta, double a) {
    check_pair(lam, beta, "tensor_mult_projected");
    if (((beta.spatial - lam.spatial) % 2 + 2) % 2 != 0) return 0.0;
    const Weight lamr = add_rho(lam);
    const Weight betar = add_rho(beta);

    double total = 0.0;
    int small_run = 0;
    for (long long z = 0;; ++z) {
        // Depth shift z below the top class of beta.
        double term = 0.0;
        int dead_run = 0;
        for (long long k = 0;; k = (k > 0 ? -k : -k + 1)) {
            bool alive = false;
            for (int r = 0; r < 2; ++r) {
                const WeylTerm w = weyl_term(lamr, betar, k, r == 1);
                if ((((w.spatial % 2) + 2) % 2) != 0) continue;
                const long long j = w.spatial / 2;
                const long long n = z - w.depth;
                if (n - j * j >= 0) {
                    term += w.det * partition_number_real(n - j * j);
                    alive = true;
                }
            }
            // The partition argument shrinks quadratically in |k|; once
            // both signs have been dead twice in a row nothing follows.
            dead_run = alive ? 0 : dead_run + 1;
            if (dead_run >= 4 && std::llabs(k) > 2) break;
            if (std::llabs(k) > z + betar.level + 8) break;
        }
        total += std::exp(-a * static_cast<double>(z)) * term;
        const double contrib = std::exp(-a * static_cast<double>(z)) * std::abs(term);
        if (total > 0.0 && contrib < 1e-12 * total)
            ++small_run;
        else
            small_run = 0;
        if (small_run >= 3) break;
        if (z > 2000000)
            throw std::runtime_error("tensor_mult_projected: truncation failed");
    }
    return total;
}

double tensor_mult_projected_closed(const Weight& lam, const Weight& beta, double a) {
    check_pair(lam, beta, "tensor_mult_projected_closed");
    if (((beta.spatial - lam.spatial) % 2 + 2) % 2 != 0) return 0.0;
    const Weight lamr = add_rho(lam);
    const Weight betar = add_rho(beta);
    const double f = partition_generating(a);

    {
        // Dual (Poisson-resummed) form of the alternating Weyl sum below.
        // The direct sum cancels down to O(e^{-pi^2/(aA)}) of its term size,
        // so for small a the dual form is mandatory: completing the square
        // in the translation index k turns the two reflection families into
        //   sqrt(pi/(aA)) e^{a(Lb(Y^2-Yb^2)+Yb^2)/(4A)} *
        //     sum_{m>=1} 4 e^{-pi^2 m^2/(aA)} sin(pi m Yb/Lb) sin(pi m Y/(Lb-1))
        // with Y = lam.spatial+1, Yb = beta.spatial+1, Lb = beta.level+2,
        // A = Lb(Lb-1); every factor of the m = 1 term is positive.
        const double yv = static_cast<double>(lamr.spatial);
        const double ybv = static_cast<double>(betar.spatial);
        const double lb = static_cast<double>(betar.level);
        const double bigA = lb * (lb - 1.0);
        const double t = a * bigA;
        if (t < kPi) {
            double s = 0.0;
            for (long long m = 1;; ++m) {
                const double mm = static_cast<double>(m);
                const double env = 4.0 * std::exp(-kPi * kPi * mm * mm / t);
                s += env * std::sin(kPi * mm * ybv / lb) *
                     std::sin(kPi * mm * yv / (lb - 1.0));
                // Envelope-based stop: a sine can vanish at one m.
                if (m > 1 && env < 1e-18 * std::max(std::abs(s), 1e-300))
                    break;
                if (m > 10000)
                    throw std::runtime_error(
                        "tensor_mult_projected_closed: no convergence (dual)");
            }
            const double pref =
                std::sqrt(kPi / t) *
                std::exp(a * (lb * (yv * yv - ybv * ybv) + ybv * ybv) /
                         (4.0 * bigA));
            return f * pref * s;
        }
    }

    double sum = 0.0;
    int small_run = 0;
    for (long long k = 0;; k = (k > 0 ? -k : -k + 1)) {
        double mag = 0.0;
        for (int r = 0; r < 2; ++r) {
            const WeylTerm w = weyl_term(lamr, betar, k, r == 1);
            if ((((w.spatial % 2) + 2) % 2) != 0) continue;
            const long long j = w.spatial / 2;
            // Summing the Boltzmann weights over all depth shifts turns
            // each Weyl term into e^{-a(j^2 + depth)} F(a): the shift z
            // decomposes as z = n + depth + j^2 with n the partition index.
            const double e = -a * static_cast<double>(j * j + w.depth);
            const double t = w.det * std::exp(e);
            sum += t;
            mag = std::max(mag, std::abs(t));
        }
        small_run = (mag < 1e-18 * std::max(std::abs(sum), 1e-300)) ? small_run + 1 : 0;
        if (small_run >= 4 && std::llabs(k) > 2) break;
        if (std::llabs(k) > 100000)
            throw std::runtime_error("tensor_mult_projected_closed: no convergence");
    }
    return f * sum;
}

double chain_kernel(const Weight& lam, const Weight& beta, double a) {
    const double m = tensor_mult_projected(lam, beta, a);
    if (m == 0.0) return 0.0;
    return char_ratio(beta.level, beta.spatial, a) * m /
           (char_ratio(lam.level, lam.spatial, a) * char_ratio(1, 0, a));
}

double phi_hat_2d(double t, double x) {
    if (!(t > 0.0)) throw std::invalid_argument("phi_hat_2d: t must be positive");
    if (2.0 * t < kPi) {
        // Poisson-dual (spectral) form; the direct alternating sum loses
        // precision for small t (same resummation as in char_series with
        // a = 2, y1 = x, x2 = t).
        const double tp = 2.0 * t;
        double s = 0.0;
        for (long long m = 1;; ++m) {
            const double mm = static_cast<double>(m);
            const double env = mm * std::exp(-kPi * kPi * mm * mm / tp);
            s += env * std::sin(kPi * mm * x / t);
            // Envelope-based stop: the sine can vanish at one m while later
            // terms still matter (e.g. x/t = 1/2 kills every even m).
            if (m > 1 && env < 1e-18 * std::max(std::abs(s), 1e-300))
                break;
            if (m > 10000)
                throw std::runtime_error("phi_hat_2d: no convergence (dual)");
        }
        return 2.0 * t * std::exp(x * x / (2.0 * t)) * 2.0 *
               std::pow(kPi, 1.5) * std::pow(tp, -1.5) * s;
    }
    double sum = x;   // k = 0
    for (long long k = 1;; ++k) {
        const double kk = static_cast<double>(k);
        const double tp = (x + 2.0 * kk * t) * std::exp(-2.0 * (kk * x + kk * kk * t));
        const double tm = (x - 2.0 * kk * t) * std::exp(-2.0 * (-kk * x + kk * kk * t));
        sum += tp + tm;
        if (std::abs(tp) + std::abs(tm) < 1e-18 * std::max(std::abs(sum), 1e-300) &&
            2.0 * kk * kk * t > 2.0)
            return sum;
        if (k > 1000000)
            throw std::runtime_error("phi_hat_2d: no convergence");
    }
}

double interval_entrance_density(double s, double y) {
    if (!(s > 0.0))
        throw std::invalid_argument("interval_entrance_density: s must be positive");
    if (y <= 0.0 || y >= 1.0) return 0.0;
    if (s >= 0.1) {
        // Spectral form: 2 sin(pi y) sum_m m e^{-(m^2-1) pi^2 s / 2} sin(m pi y).
        double sum = 0.0;
        for (long long m = 1;; ++m) {
            const double mm = static_cast<double>(m);
            const double c = std::exp(-(mm * mm - 1.0) * kPi * kPi * s / 2.0);
            if (m > 1 && mm * c < 1e-16) break;
            sum += mm * c * std::sin(mm * kPi * y);
        }
        return 2.0 * std::sin(kPi * y) * sum;
    }
    // Reflection form, accurate for small s.
    double sum = 0.0;
    for (long long k = 0;; k = (k > 0 ? -k : -k + 1)) {
        const double u = y + 2.0 * static_cast<double>(k);
        const double t = (u / s) * heat_kernel(s, 0.0, u);
        sum += t;
        if (k < -2 && std::abs(u) > 3.0 && std::abs(t) < 1e-16 * std::max(std::abs(sum), 1e-300))
            break;
    }
    return (2.0 / kPi) * std::exp(kPi * kPi * s / 2.0) * std::sin(kPi * y) * sum;
}

double interval_entrance_cdf(double s, double y) {
    if (!(s > 0.0))
        throw std::invalid_argument("interval_entrance_cdf: s must be positive");
    if (y <= 0.0) return 0.0;
    if (y >= 1.0) return 1.0;
    if (s >= 0.02) {
        // Term-by-term integral of the spectral form.
        double cdf = y - std::sin(2.0 * kPi * y) / (2.0 * kPi);
        for (long long m = 2;; ++m) {
            const double mm = static_cast<double>(m);
            const double c = std::exp(-(mm * mm - 1.0) * kPi * kPi * s / 2.0);
            if (mm * c < 1e-16) break;
            cdf += mm * c *
                   (std::sin((mm - 1.0) * kPi * y) / ((mm - 1.0) * kPi) -
                    std::sin((mm + 1.0) * kPi * y) / ((mm + 1.0) * kPi));
        }
        return std::min(1.0, std::max(0.0, cdf));
    }
    // Composite Simpson fallback for very small s.
    const int n = 4000;
    const double h = y / n;
    double acc = interval_entrance_density(s, 0.0 + 1e-300) +
                 interval_entrance_density(s, y);
    for (int i = 1; i < n; ++i)
        acc += interval_entrance_density(s, i * h) * ((i % 2) ? 4.0 : 2.0);
    return std::min(1.0, std::max(0.0, acc * h / 3.0));
}

double conditioned_density(double t, double y) {
    if (!(t > 0.0)) throw std::invalid_argument("conditioned_density: t must be positive");
    if (y <= 0.0 || y >= t) return 0.0;
    return interval_entrance_density(1.0 / t, y / t) / t;
}

double conditioned_cdf(double t, double y) {
    if (!(t > 0.0)) throw std::invalid_argument("conditioned_cdf: t must be positive");
    return interval_entrance_cdf(1.0 / t, y / t);
}

ChainSimulator::ChainSimulator(double a) : a_(a) {
    if (!(a > 0.0))
        throw std::invalid_argument("ChainSimulator: a must be positive");
    f_a_ = partition_generating(a);
    ch_l0_ = char_ratio(1, 0, a);
}

double ChainSimulator::char_cached(long long level, long long spatial) {
    if (static_cast<long long>(char_cache_.size()) <= level)
        char_cache_.resize(level + 1);
    auto& row = char_cache_[level];
    if (static_cast<long long>(row.size()) <= spatial)
        row.resize(level + 1, -1.0);
    if (row[spatial] < 0.0)
        row[spatial] = char_ratio(level, spatial, a_);
    return row[spatial];
}

const std::vector<std::pair<long long, double>>&
ChainSimulator::row(long long level, long long spatial) {
    if (static_cast<long long>(cache_.size()) <= level)
        cache_.resize(level + 1);
    auto& lvl = cache_[level];
    if (static_cast<long long>(lvl.size()) <= spatial)
        lvl.resize(level + 2);
    auto& r = lvl[spatial];
    if (!r.empty()) return r;

    const Weight lam{level, spatial, 0};
    const double ch_lam = char_cached(level, spatial);
    double sum = 0.0;
    std::vector<std::pair<long long, double>> entries;
    for (long long y = ((spatial % 2) + 2) % 2; y <= level + 1; y += 2) {
        const Weight beta{level + 1, y, 0};
        const double m = tensor_mult_projected_closed(lam, beta, a_);
        if (m <= 0.0) continue;
        const double p = char_cached(level + 1, y) * m / (ch_lam * ch_l0_);
        entries.emplace_back(y, p);
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-8)
        throw std::runtime_error("ChainSimulator: kernel row does not sum to 1");
    for (auto& e : entries) e.second /= sum;
    r = std::move(entries);
    return r;
}

long long ChainSimulator::run(long long n, Stream& rng) {
    long long level = 0, spatial = 0;
    for (long long step = 0; step < n; ++step) {
        const auto& r = row(level, spatial);
        const double u = rng.uniform();
        double acc = 0.0;
        std::size_t pick = r.size() - 1;
        for (std::size_t i = 0; i < r.size(); ++i) {
            acc += r[i].second;
            if (u <= acc) { pick = i; break; }
        }
        spatial = r[pick].first;
        ++level;
    }
    return spatial;
}

double simulate_affine_chain(long long n, Stream& rng, double a_override) {
    const double a = (a_override > 0.0) ? a_override : 2.0 / static_cast<double>(n);
    thread_local ChainSimulator* sim = nullptr;
    thread_local double sim_a = -1.0;
    if (sim == nullptr || sim_a != a) {
        delete sim;
        sim = new ChainSimulator(a);
        sim_a = a;
    }
    return static_cast<double>(sim->run(n, rng)) / static_cast<double>(n);
}

} // namespace affine
} // namespace alcove
