#pragma once

#include "gleib/json_io.hpp"
#include "gleib/torus.hpp"

namespace gleib {

struct VerifyOptions {
    int max_dim = 12;
    BruteForceOptions brute;
    /// Seed for the randomized property checks.
    std::uint64_t seed = 20240611;
};

/// Runs every family claim up to max_dim and returns
/// {"passed", "scope", "claims": [{"claim", "family", "n", "field", "passed", "detail", "elapsed_ms"}]}.
Json verify_paper(const VerifyOptions& options);

}  // namespace gleib
