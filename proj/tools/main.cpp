// alcove -- command-line harness for the alcove library.
//
// Subcommands: sl2, affine, pitman, radial, fusion, verify.  Common flags:
// --seed, --replicas, --step, --out, --threads, --config.  Each experiment
// writes a CSV (one row per replica or grid point), JSONL for measures, and
// a JSON summary with (statistic, tolerance, pass).  Exit codes: 0 on pass,
// 2 when a tolerance is exceeded, 1 on usage or configuration errors.
//
// Determinism: every replica draws from a counter-based stream keyed by
// (seed, experiment label, replica index), so output bytes depend only on
// the flags, never on --threads.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "alcove/affine.hpp"
#include "alcove/checks.hpp"
#include "alcove/fusion.hpp"
#include "alcove/pitman.hpp"
#include "alcove/rng.hpp"
#include "alcove/sl2.hpp"
#include "alcove/su2.hpp"

namespace {

using json = nlohmann::json;
using namespace alcove;

constexpr int kSchemaVersion = 1;

struct Common {
    std::uint64_t seed = 20260826;
    std::size_t replicas = 100000;
    double step = 1e-3;
    std::string out = "alcove-out";
    int threads = 1;
    std::string config;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--seed", c.seed, "root seed for all random streams");
    sub->add_option("--replicas", c.replicas, "number of Monte Carlo replicas");
    sub->add_option("--step", c.step, "grid step (process time units)");
    sub->add_option("--out", c.out, "output directory");
    sub->add_option("--threads", c.threads, "worker count (never affects results)");
    sub->add_option("--config", c.config, "JSON config file; explicit flags win");
}

// Apply config values to every option of `sub` that was not given on the
// command line.  Flags win, per the documented precedence.
void apply_config(CLI::App* sub, const std::string& path) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    json cfg;
    try {
        in >> cfg;
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--config", std::string("malformed JSON: ") + e.what());
    }
    for (auto& [key, value] : cfg.items()) {
        CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (opt == nullptr)
            throw CLI::ValidationError("--config", "unknown key '" + key + "'");
        if (opt->count() > 0) continue;   // flag given explicitly; it wins
        const std::string s = value.is_string() ? value.get<std::string>() : value.dump();
        opt->clear();
        if (!opt->results().empty()) opt->clear();
        opt->add_result(s);
        opt->run_callback();
    }
}

// Deterministic chunked parallel loop; the work split never changes results
// because every iteration derives its own stream.
template <typename F>
void parallel_for(std::size_t n, int threads, F&& body) {
    const int nt = std::max(1, threads);
    if (nt == 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < nt; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = static_cast<std::size_t>(w); i < n;
                 i += static_cast<std::size_t>(nt))
                body(i);
        });
    for (auto& t : pool) t.join();
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::filesystem::path ensure_out(const Common& c) {
    std::filesystem::path dir(c.out);
    std::filesystem::create_directories(dir);
    return dir;
}

void write_text(const std::filesystem::path& p, const std::string& body) {
    std::ofstream out(p, std::ios::binary);
    out << body;
    if (!out) throw std::runtime_error("cannot write " + p.string());
}

// One-sample Kolmogorov-Smirnov statistic against a CDF; `bounds`, when
// non-empty, restricts the comparison to lattice cell boundaries (the
// correct statistic for samples that live on a lattice).
template <typename Cdf>
double ks_stat(std::vector<double> s, Cdf cdf, const std::vector<double>& bounds) {
    std::sort(s.begin(), s.end());
    const double n = static_cast<double>(s.size());
    double d = 0.0;
    if (!bounds.empty()) {
        for (double x : bounds) {
            const double emp = static_cast<double>(
                std::upper_bound(s.begin(), s.end(), x) - s.begin()) / n;
            d = std::max(d, std::abs(emp - cdf(x)));
        }
        return d;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double f = cdf(s[i]);
        d = std::max({d, std::abs(f - static_cast<double>(i) / n),
                      std::abs(f - static_cast<double>(i + 1) / n)});
    }
    return d;
}

int finish(const Common& c, const std::string& name, json summary, bool pass) {
    summary["schema_version"] = kSchemaVersion;
    summary["experiment"] = name;
    summary["seed"] = c.seed;
    summary["pass"] = pass;
    const auto dir = ensure_out(c);
    write_text(dir / (name + "_summary.json"), summary.dump(2) + "\n");
    std::printf("%s\n", summary.dump(2).c_str());
    return pass ? 0 : 2;
}

// ----------------------------------------------------------------- sl2 ----

int run_sl2(const Common& c, long long n_steps, long long omega, double tol) {
    const double root_n = std::sqrt(static_cast<double>(n_steps));
    std::vector<long long> end(c.replicas);
    parallel_for(c.replicas, c.threads, [&](std::size_t i) {
        Stream rng = derive_stream(c.seed, {label("cli-sl2"), i});
        end[i] = sl2::simulate_doob_chain(0, n_steps, omega, 1.0, rng);
    });

    std::ostringstream csv;
    csv << "replica,endpoint,scaled\n";
    std::vector<double> scaled(c.replicas);
    for (std::size_t i = 0; i < c.replicas; ++i) {
        scaled[i] = static_cast<double>(end[i]) / root_n;
        csv << i << ',' << end[i] << ',' << num(scaled[i]) << '\n';
    }
    write_text(ensure_out(c) / "sl2_samples.csv", csv.str());

    std::vector<double> bounds;   // walk lives on a lattice of spacing 2
    for (long long j = 0; 2.0 * static_cast<double>(j) / root_n < 6.0; ++j)
        bounds.push_back(static_cast<double>(2 * j + 1) / root_n);
    const double ks = ks_stat(
        scaled, [](double y) { return sl2::bessel3_entrance_cdf(1.0, y); }, bounds);

    json s;
    s["replicas"] = c.replicas;
    s["steps"] = n_steps;
    s["omega"] = omega;
    s["statistic"] = ks;
    s["tolerance"] = tol;
    s["reference"] = "Bessel(3) entrance law at t=1";
    return finish(c, "sl2", s, ks < tol);
}

// -------------------------------------------------------------- affine ----

int run_affine(const Common& c, long long n_steps, double a, double tol) {
    const double a_eff = a > 0.0 ? a : 2.0 / static_cast<double>(n_steps);
    affine::ChainSimulator sim(a_eff);
    std::vector<long long> end(c.replicas);
    // The simulator caches kernel rows, so replicas run sequentially.
    for (std::size_t i = 0; i < c.replicas; ++i) {
        Stream rng = derive_stream(c.seed, {label("cli-affine"), i});
        end[i] = sim.run(n_steps, rng);
    }

    std::ostringstream csv;
    csv << "replica,endpoint,scaled\n";
    std::vector<double> scaled(c.replicas);
    for (std::size_t i = 0; i < c.replicas; ++i) {
        scaled[i] = static_cast<double>(end[i]) / static_cast<double>(n_steps);
        csv << i << ',' << end[i] << ',' << num(scaled[i]) << '\n';
    }
    write_text(ensure_out(c) / "affine_samples.csv", csv.str());

    std::vector<double> bounds;   // lattice spacing 2/n on [0,1]
    for (long long j = 0; j <= n_steps / 2; ++j)
        bounds.push_back(static_cast<double>(2 * j + 1) / static_cast<double>(n_steps));
    const double ks = ks_stat(
        scaled, [](double y) { return affine::conditioned_cdf(1.0, y); }, bounds);

    json s;
    s["replicas"] = c.replicas;
    s["steps"] = n_steps;
    s["a"] = a_eff;
    s["statistic"] = ks;
    s["tolerance"] = tol;
    s["reference"] = "conditioned radial law at t=1";
    return finish(c, "affine", s, ks < tol);
}

// -------------------------------------------------------------- pitman ----

int run_pitman(const Common& c, double t, double tol) {
    std::vector<double> x(c.replicas);
    std::vector<std::size_t> stages(c.replicas);
    parallel_for(c.replicas, c.threads, [&](std::size_t i) {
        Stream rng = derive_stream(c.seed, {label("cli-pitman"), i});
        const pitman::Path b = pitman::brownian_path(t, c.step, rng);
        const auto hw = pitman::highest_weight_limit(b, 1e-6, 200);
        x[i] = hw.x;
        stages[i] = hw.stages;
    });

    std::ostringstream csv;
    csv << "replica,x,stages\n";
    for (std::size_t i = 0; i < c.replicas; ++i)
        csv << i << ',' << num(x[i]) << ',' << stages[i] << '\n';
    write_text(ensure_out(c) / "pitman_samples.csv", csv.str());

    const double ks = ks_stat(
        x, [t](double y) { return affine::conditioned_cdf(t, y); }, {});

    json s;
    s["replicas"] = c.replicas;
    s["t"] = t;
    s["step"] = c.step;
    s["statistic"] = ks;
    s["tolerance"] = tol;
    s["reference"] = "conditioned radial law";
    return finish(c, "pitman", s, ks < tol);
}

// -------------------------------------------------------------- radial ----

int run_radial(const Common& c, double t, double tol) {
    std::vector<double> rad(c.replicas), wind(c.replicas);
    parallel_for(c.replicas, c.threads, [&](std::size_t i) {
        Stream rng = derive_stream(c.seed, {label("cli-radial"), i});
        const auto s = su2::sheet_radial_sample(t, c.step, rng);
        rad[i] = s.radial;
        wind[i] = s.cartan;
    });

    std::ostringstream csv;
    csv << "replica,radial,cartan\n";
    for (std::size_t i = 0; i < c.replicas; ++i)
        csv << i << ',' << num(rad[i]) << ',' << num(wind[i]) << '\n';
    write_text(ensure_out(c) / "radial_samples.csv", csv.str());

    const double ks = ks_stat(
        rad, [t](double y) { return affine::conditioned_cdf(t, y); }, {});

    json s;
    s["replicas"] = c.replicas;
    s["t"] = t;
    s["step"] = c.step;
    s["statistic"] = ks;
    s["tolerance"] = tol;
    s["reference"] = "conditioned radial law";
    return finish(c, "radial", s, ks < tol);
}

// -------------------------------------------------------------- fusion ----

int run_fusion(const Common& c, int d, int k, double tol) {
    const auto dir = ensure_out(c);

    // Stationary measure of the fusion Doob chain, as a JSONL measure.
    const auto weights = fusion::alcove_weights(d, k);
    const auto mu = fusion::stationary_measure(d, k);
    std::ostringstream jl;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        json row;
        row["weight"] = weights[i];
        row["mass"] = mu[i];
        jl << row.dump() << '\n';
    }
    write_text(dir / "fusion_stationary.jsonl", jl.str());

    // Invariance residual max_beta |(mu Q)(beta) - mu(beta)|.
    double resid = 0.0;
    for (std::size_t b = 0; b < weights.size(); ++b) {
        double acc = 0.0;
        for (std::size_t l = 0; l < weights.size(); ++l)
            acc += mu[l] * fusion::alcove_doob_kernel(d, k, weights[l], weights[b]);
        resid = std::max(resid, std::abs(acc - mu[b]));
    }

    // SU(2) fusion table (d = 2 only; higher rank tables grow too fast).
    if (d == 2) {
        std::ostringstream csv;
        csv << "i,j,s,coefficient\n";
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j)
                for (int s = 0; s <= k; ++s) {
                    const long long nij = fusion::fusion_su2(i, j, s, k);
                    if (nij != 0) csv << i << ',' << j << ',' << s << ',' << nij << '\n';
                }
        write_text(dir / "fusion_table.csv", csv.str());
    }

    json s;
    s["d"] = d;
    s["k"] = k;
    s["alcove_size"] = weights.size();
    s["statistic"] = resid;
    s["tolerance"] = tol;
    s["reference"] = "stationarity of the fusion Doob chain";
    return finish(c, "fusion", s, resid < tol);
}

// -------------------------------------------------------------- verify ----

int run_verify(const Common& c, double scale, std::vector<std::string> ids) {
    checks::CheckOptions opts;
    opts.seed = c.seed;
    opts.scale = scale;
    opts.threads = c.threads;
    if (ids.empty()) ids = checks::check_ids();

    json report = json::array();
    int failures = 0;
    for (const auto& id : ids) {
        const checks::CheckResult r = checks::run_check(id, opts);
        std::printf("%s %-18s stat=%.6g thr=%.6g [%.1fs] %s\n",
                    r.pass ? "PASS" : "FAIL", r.id.c_str(), r.statistic,
                    r.threshold, r.seconds, r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failures;
        json row;
        row["id"] = r.id;
        row["anchor"] = r.anchor;
        row["statistic"] = r.statistic;
        row["threshold"] = r.threshold;
        row["pass"] = r.pass;
        row["detail"] = r.detail;
        row["seconds"] = r.seconds;
        report.push_back(row);
    }
    json s;
    s["schema_version"] = kSchemaVersion;
    s["experiment"] = "verify";
    s["seed"] = c.seed;
    s["scale"] = scale;
    s["checks"] = report;
    s["pass"] = failures == 0;
    write_text(ensure_out(c) / "verify_summary.json", s.dump(2) + "\n");
    if (failures > 0) {
        std::printf("VERIFY: %d criterion(s) failed\n", failures);
        return 2;
    }
    std::printf("VERIFY: all %zu criteria passed\n", ids.size());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"alcove: reflected walks, affine characters and radial laws"};
    app.require_subcommand(1);

    Common c;

    auto* sl2_cmd = app.add_subcommand("sl2", "reflected sl2 walk vs Bessel(3) entrance law");
    long long sl2_n = 200, sl2_omega = 1;
    double sl2_tol = 0.02;
    add_common(sl2_cmd, c);
    sl2_cmd->add_option("--n", sl2_n, "number of walk steps");
    sl2_cmd->add_option("--omega", sl2_omega, "step representation weight");
    sl2_cmd->add_option("--tol", sl2_tol, "KS tolerance");

    auto* aff_cmd = app.add_subcommand("affine", "affine tensor chain vs conditioned radial law");
    long long aff_n = 100;
    double aff_a = 0.0, aff_tol = 0.03;
    add_common(aff_cmd, c);
    aff_cmd->add_option("--n", aff_n, "number of chain steps");
    aff_cmd->add_option("--a", aff_a, "character parameter (default 2/n)");
    aff_cmd->add_option("--tol", aff_tol, "KS tolerance");

    auto* pit_cmd = app.add_subcommand("pitman", "iterated path transforms vs conditioned radial law");
    double pit_t = 1.0, pit_tol = 0.03;
    add_common(pit_cmd, c);
    pit_cmd->add_option("--t", pit_t, "path horizon (process time)");
    pit_cmd->add_option("--tol", pit_tol, "KS tolerance");

    auto* rad_cmd = app.add_subcommand("radial", "sheet radial samples vs conditioned radial law");
    double rad_t = 1.0, rad_tol = 0.03;
    add_common(rad_cmd, c);
    rad_cmd->add_option("--t", rad_t, "diffusion time");
    rad_cmd->add_option("--tol", rad_tol, "KS tolerance");

    auto* fus_cmd = app.add_subcommand("fusion", "fusion table and stationary measure");
    int fus_d = 2, fus_k = 6;
    double fus_tol = 1e-10;
    add_common(fus_cmd, c);
    fus_cmd->add_option("--d", fus_d, "rank parameter (SU(d))");
    fus_cmd->add_option("--k", fus_k, "fusion level");
    fus_cmd->add_option("--tol", fus_tol, "residual tolerance");

    auto* ver_cmd = app.add_subcommand("verify", "run the acceptance suite");
    double ver_scale = 1.0;
    std::vector<std::string> ver_ids;
    add_common(ver_cmd, c);
    ver_cmd->add_option("--scale", ver_scale, "replica multiplier (< 1 for smoke runs)");
    ver_cmd->add_option("--ids", ver_ids, "subset of criterion identifiers");

    try {
        app.parse(argc, argv);
        CLI::App* active = app.get_subcommands().front();
        apply_config(active, c.config);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (sl2_cmd->parsed()) return run_sl2(c, sl2_n, sl2_omega, sl2_tol);
        if (aff_cmd->parsed()) return run_affine(c, aff_n, aff_a, aff_tol);
        if (pit_cmd->parsed()) return run_pitman(c, pit_t, pit_tol);
        if (rad_cmd->parsed()) return run_radial(c, rad_t, rad_tol);
        if (fus_cmd->parsed()) return run_fusion(c, fus_d, fus_k, fus_tol);
        if (ver_cmd->parsed()) return run_verify(c, ver_scale, ver_ids);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "alcove: %s\n", e.what());
        return 1;
    }
    return 1;
}
