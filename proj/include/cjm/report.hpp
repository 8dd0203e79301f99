#pragma once

#include "cjm/builders.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cjm {

// Rejected configuration; callers map this to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string family;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<Rational> q;
    std::optional<std::vector<Rational>> u;
    std::vector<std::string> checks{"all"};
};

struct RunResult {
    int exitCode = 0; // 0 all requested checks passed, 1 a check failed
    nlohmann::ordered_json report;
    std::string human;
};

// Canonical execution order; "all" expands to this. Unknown names throw
// ConfigError.
std::vector<std::string> expand_checks(const std::vector<std::string>& requested);

// Validates the configuration against the family (throws ConfigError), builds
// the instance, runs the requested checks and assembles both report forms.
// The JSON is byte-stable for a fixed configuration.
RunResult run(const RunConfig& config);

// Text for the parameter-search command: the validated set and every
// separation factor.
std::string params_text(int n, int m);

} // namespace cjm
