// Run orchestration: JSON run-configuration parsing with key/line error
// reporting, task dispatch (kernel scans, solve, claim verification,
// expansion, summary report) and artifact writing.
#pragma once

#include <string>
#include <vector>

#include "forcing.hpp"
#include "params.hpp"

namespace tpns {

/// Parsed run configuration.
struct RunConfig {
    Params params;
    ForcingSpec forcing;
    std::vector<std::string> tasks;
    std::string output_dir;
    long seed = 0;
    int threads = 1; ///< accepted for interface stability; results never
                     ///< depend on it (execution is single-threaded)
};

/// Parse and validate a configuration document. Errors name the offending
/// key and its line in the document. Throws ConfigError.
RunConfig parse_run_config(const std::string& text);

/// Execute all tasks. Returns 0 when everything passed, 1 when at least one
/// verification failed. Throws ConfigError / NumericError / IoError.
int run_config(const RunConfig& cfg);

} // namespace tpns
