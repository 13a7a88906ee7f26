#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fd2p/report.hpp"

namespace fd2p {

struct SuiteConfig {
    uint64_t p = 3;
    uint32_t n = 1;
    std::optional<std::vector<uint64_t>> poly;
    uint64_t seed = 0;
    uint64_t group_bound = 1'000'000;
    uint64_t algebra_bound = 10'000'000;
};

/// Run every verification check applicable at the configured scale.
/// Brute-force checks beyond the bounds are reported as skipped.
/// Construction errors (invalid p, bad polynomial) propagate as exceptions.
CheckReport run_suite(const SuiteConfig& cfg);

} // namespace fd2p
