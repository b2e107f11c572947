#include "alcove/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace alcove {

double heat_kernel(double t, double x, double y) {
    if (!(t > 0.0))
        throw std::invalid_argument("heat_kernel: t must be positive");
    const double d = y - x;
    return std::exp(-d * d / (2.0 * t)) / std::sqrt(6.283185307179586 * t);
}

double signed_series_sum(const std::function<double(long long)>& term,
                         const std::function<double(long long)>& tail_bound,
                         double tol, long long k_max) {
    long long k_hi = 8;
    double sum = term(0);
    long long covered = 0;   // terms with |k| <= covered already added
    while (true) {
        for (long long k = covered + 1; k <= k_hi; ++k)
            sum += term(k) + term(-k);
        covered = k_hi;
        if (tail_bound(covered) < tol)
            return sum;
        if (covered >= k_max)
            throw std::runtime_error("signed_series_sum: tail bound not met");
        k_hi = std::min(k_max, 2 * k_hi);
    }
}

namespace {

// Pentagonal-number recurrence shared by the exact and floating variants:
// p(n) = sum_{k>=1} (-1)^{k+1} [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ].
template <typename T, typename Add>
void extend_partition_table(std::vector<T>& table, long long m, Add add) {
    while (static_cast<long long>(table.size()) <= m) {
        const long long n = static_cast<long long>(table.size());
        T acc = 0;
        for (long long k = 1;; ++k) {
            const long long g1 = k * (3 * k - 1) / 2;
            const long long g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const bool plus = (k % 2) == 1;
            add(acc, table[n - g1], plus);
            if (g2 <= n) add(acc, table[n - g2], plus);
        }
        table.push_back(acc);
    }
}

} // namespace

std::uint64_t partition_number(long long m) {
    if (m < 0) return 0;
    if (m > 405)
        throw std::overflow_error("partition_number: p(m) exceeds 64 bits for m > 405");
    static std::vector<std::uint64_t> table = {1};
    extend_partition_table(table, m, [](std::uint64_t& acc, std::uint64_t v, bool plus) {
        if (plus) acc += v; else acc -= v;
    });
    return table[m];
}

double partition_number_real(long long m) {
    if (m < 0) return 0.0;
    static std::vector<double> table = {1.0};
    extend_partition_table(table, m, [](double& acc, double v, bool plus) {
        if (plus) acc += v; else acc -= v;
    });
    return table[m];
}

double partition_generating(double a) {
    if (!(a > 0.0))
        throw std::invalid_argument("partition_generating: a must be positive");
    double log_f = 0.0;
    for (long long n = 1;; ++n) {
        const double q = std::exp(-a * static_cast<double>(n));
        if (q < 1e-18) break;
        log_f -= std::log1p(-q);
    }
    return std::exp(log_f);
}

double ks_statistic(std::vector<double> sample,
                    const std::function<double(double)>& cdf) {
    if (sample.empty())
        throw std::invalid_argument("ks_statistic: empty sample");
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(f - static_cast<double>(i + 1) / n));
    }
    return d;
}

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("ks_statistic_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na -
                                 static_cast<double>(j) / nb));
    }
    return d;
}

double ks_statistic_binned(const std::vector<double>& sample,
                           const std::function<double(double)>& cdf,
                           const std::vector<double>& boundaries) {
    if (sample.empty() || boundaries.empty())
        throw std::invalid_argument("ks_statistic_binned: empty input");
    std::vector<double> sorted(sample);
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (double b : boundaries) {
        const auto it = std::upper_bound(sorted.begin(), sorted.end(), b);
        const double femp = static_cast<double>(it - sorted.begin()) / n;
        d = std::max(d, std::abs(femp - cdf(b)));
    }
    return d;
}

double DiscreteMeasure::total_mass() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

void DiscreteMeasure::normalize() {
    const double s = total_mass();
    if (!(s > 0.0))
        throw std::runtime_error("DiscreteMeasure::normalize: zero total mass");
    for (double& w : weights) w /= s;
}

CategoricalSampler::CategoricalSampler(const std::vector<double>& weights) {
    if (weights.empty())
        throw std::invalid_argument("CategoricalSampler: empty weights");
    cumulative_.resize(weights.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 0.0)
            throw std::invalid_argument("CategoricalSampler: negative weight");
        acc += weights[i];
        cumulative_[i] = acc;
    }
    if (!(acc > 0.0))
        throw std::invalid_argument("CategoricalSampler: zero total mass");
    for (double& c : cumulative_) c /= acc;
    cumulative_.back() = 1.0;
}

std::size_t CategoricalSampler::sample(double u) const {
    const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
    return static_cast<std::size_t>(it - cumulative_.begin());
}

} // namespace alcove
