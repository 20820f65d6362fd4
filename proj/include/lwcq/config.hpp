#ifndef LWCQ_CONFIG_HPP
#define LWCQ_CONFIG_HPP

#include <cstddef>
#include <string>

namespace lwcq {

/// Runtime defaults; loaded from an optional JSON config file, with
/// command-line flags taking precedence.
struct Config {
    double tol = 1e-8;
    long long iter_cap = (1LL << 31);
    std::size_t term_budget = 10'000'000;
    int vars = 10;        // truncation variable count N
    int deg = 8;          // truncation degree cap D
    int zero_budget = 3;  // slice parameter for matrix operations
    double q = 0.5;
    bool json = false;

    void validate() const;  // all numeric settings positive
};

/// Loads overrides from a JSON file; unknown keys are rejected.
Config load_config_file(const std::string& path, Config base = {});

/// Resolves the config path from the LWCQ_CONFIG environment variable
/// (empty result when unset).
std::string config_path_from_env();

}  // namespace lwcq

#endif
