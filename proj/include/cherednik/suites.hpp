#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cherednik/config.hpp"

namespace cherednik {

struct CheckResult {
    std::string name;
    std::string anchor;  // stable identifier of the law being checked
    std::string status;  // pass | fail | skipped
    std::string witness; // counterexample serialization on failure
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.status == "fail") return false;
        return true;
    }
};

const std::vector<std::string>& suite_names(); // pbw commute presentation tdo norms tower

/// Runs one deterministic suite. `inject` feeds a serialized operator into the
/// pbw suite as an expected-to-fail negative control.
SuiteReport run_suite(const Run& run, const std::string& suite, std::uint64_t seed,
                      const std::string& inject = "");

/// Relation checks of the rational presentation as operator identities on all
/// monomials up to the degree bound.
std::vector<CheckResult> verify_rational_presentation(const Algebra& H, unsigned degree_bound);

/// Deterministic JSON document; byte-identical for equal config + seed.
std::string report_json(const RunConfig& cfg, std::uint64_t seed,
                        const std::vector<SuiteReport>& reports);

} // namespace cherednik
