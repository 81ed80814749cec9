#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padic/checks.hpp"

namespace padic::cli {

/// Fixed-seed sampling plan for the identity suite.
struct SuitePlan {
    std::uint64_t seed = 20240611;
    long points_per_regime = 1;
    std::vector<long> n_values{2, 3, 4, 6, 8, 9, 12};
    std::vector<Identity> identities = all_identities();

    /// Fields: seed, points_per_regime, n_values, identities (names); any
    /// subset may be given.
    static SuitePlan from_json(const std::string& text);
};

struct SuiteConfig {
    long p = 3;
    /// Degree used for points that need an extension (at least 2).
    int extension_degree = 2;
    std::optional<std::vector<long>> extension_modulus;
    long target = 5;
    std::optional<long> depth_min;
    std::optional<long> depth_max;
    long guard = 4;
    unsigned workers = 1;
};

/// Requests for every identity over every compatible regime; rational points
/// live in Q_p, extension points in the unramified extension.
std::vector<CheckRequest> suite_requests(const SuitePlan& plan, const SuiteConfig& config);

/// Runs the requests, concurrently when workers > 1, returning reports in
/// request order.
std::vector<CheckReport> run_suite(const std::vector<CheckRequest>& requests, unsigned workers);

}  // namespace padic::cli
