// Acceptance gate: runs every registered statistical/exact check and prints
// one PASS/FAIL line per criterion.  Exit code 0 if all pass, 2 otherwise.
//
// Environment overrides (useful for smoke runs):
//   ALCOVE_SCALE    replica multiplier (default 1.0)
//   ALCOVE_SEED     base seed (default 20260826)
//   ALCOVE_THREADS  worker threads (default 1)

#include <cstdio>
#include <cstdlib>
#include <string>

#include "alcove/checks.hpp"

int main(int argc, char** argv) {
    alcove::checks::CheckOptions opts;
    if (const char* s = std::getenv("ALCOVE_SCALE")) opts.scale = std::atof(s);
    if (const char* s = std::getenv("ALCOVE_SEED"))
        opts.seed = std::strtoull(s, nullptr, 10);
    if (const char* s = std::getenv("ALCOVE_THREADS")) opts.threads = std::atoi(s);
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--scale") opts.scale = std::atof(argv[i + 1]);
        else if (flag == "--seed") opts.seed = std::strtoull(argv[i + 1], nullptr, 10);
        else if (flag == "--threads") opts.threads = std::atoi(argv[i + 1]);
    }

    int failures = 0;
    for (const auto& id : alcove::checks::check_ids()) {
        const auto r = alcove::checks::run_check(id, opts);
        std::printf("%s %-18s stat=%.6g thr=%.6g [%.1fs] %s\n",
                    r.pass ? "PASS" : "FAIL", r.id.c_str(), r.statistic,
                    r.threshold, r.seconds, r.detail.c_str());
        std::fflush(stdout);
        if (!r.pass) ++failures;
    }
    if (failures) {
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
        return 2;
    }
    std::printf("ACCEPTANCE: all criteria passed\n");
    return 0;
}
