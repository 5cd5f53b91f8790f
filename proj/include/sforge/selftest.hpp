#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sforge/constructions.hpp"

namespace sforge {

struct SelftestOptions {
    std::uint64_t seed = 1;
    int jobs = 1;
    int max_field_bits = 20; // suites over larger fields are skipped
    bool slow_oracles = false;
};

struct SuiteResult {
    std::string name;
    std::string status; // "pass", "fail", "skipped"
    std::string detail;
};

struct SelftestReport {
    std::vector<SuiteResult> suites;
    bool ok = true;
};

/// Runs the invariant suites of every module over the desk-scale towers
/// (p,h,ell) = (3,1,3), (5,1,3), (3,1,5).  Deterministic for a fixed seed.
SelftestReport run_selftest(const SelftestOptions& opts);

} // namespace sforge
