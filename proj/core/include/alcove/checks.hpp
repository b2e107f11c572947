#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace alcove {
namespace checks {

struct CheckResult {
    std::string id;        // short stable identifier, e.g. "C06-bessel3"
    std::string anchor;    // one-line statement of the property checked
    double statistic = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct CheckOptions {
    std::uint64_t seed = 20260826;
    double scale = 1.0;    // replica multiplier (< 1 for smoke runs)
    int threads = 1;
};

// All registered check identifiers, in report order.
std::vector<std::string> check_ids();

// Run a single check by identifier; throws std::invalid_argument for an
// unknown id.
CheckResult run_check(const std::string& id, const CheckOptions& opts);

// Run the complete suite.
std::vector<CheckResult> run_all_checks(const CheckOptions& opts);

} // namespace checks
} // namespace alcove
