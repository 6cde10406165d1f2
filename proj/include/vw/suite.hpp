#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vw/json_io.hpp"

namespace vw {

/// Configuration of a property-suite run. The seed has a fixed published
/// default so CI runs are reproducible; `trials` scales the sampled
/// properties; `max_n` (when nonzero) lowers the hyperspace base caps.
struct SuiteConfig {
    std::string suite = "all";
    std::uint64_t seed = 0xC0FFEEull;
    int trials = 200;
    int max_n = 0;
    std::string format = "text";

    HyperLimits limits() const;
    void validate() const; // throws ConfigError
};

struct PropertyResult {
    std::string suite;
    std::string name;
    long long checks = 0;
    long long failures = 0;
    io::json counterexample; // null when everything passed
    double wall_ms = 0;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<PropertyResult> properties;
    bool ok = false;
    double wall_ms = 0;
};

/// Runs the selected suite (or all of them). Deterministic per seed.
Report run_suite(const SuiteConfig& cfg);

/// Timing is excluded by default so reports with equal seeds are
/// byte-identical run to run.
io::json report_to_json(const Report& r, bool include_timing = false);
std::string report_to_text(const Report& r);

std::vector<std::string> suite_names();

/// Deterministic helper: runs fn(0..n-1) across a small thread pool; the
/// work items must be independent.
void parallel_for(int n, const std::function<void(int)>& fn);

} // namespace vw
