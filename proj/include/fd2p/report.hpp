#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fd2p/common.hpp"

namespace fd2p {

/// One verification result. paper_ref carries the lemma/theorem label the
/// check certifies ("Lemma 2", "Theorem 9", ...), or "artifact" for plumbing
/// checks with no single source result.
struct CheckRecord {
    std::string check_id;
    std::string paper_ref;
    uint64_t p = 0;
    uint32_t n = 0;
    std::string poly;
    std::string status;   // "pass" | "fail" | "skipped"
    std::string reason;   // skip reason or failure detail; empty on pass
    std::string expected;
    std::string actual;
    int64_t elapsed_ms = 0;
};

struct CheckReport {
    std::string tool = kToolName;
    std::string version = kToolVersion;
    uint64_t seed = 0;
    uint64_t group_bound = 0;
    uint64_t algebra_bound = 0;
    std::vector<CheckRecord> checks;

    size_t count_status(const std::string& status) const;
    size_t passed() const { return count_status("pass"); }
    size_t failed() const { return count_status("fail"); }
    size_t skipped() const { return count_status("skipped"); }

    /// Pretty JSON with sorted keys; stable for fixture diffing apart from
    /// the elapsed_ms fields.
    std::string to_json() const;

    int exit_code() const { return failed() == 0 ? 0 : 1; }
};

} // namespace fd2p
