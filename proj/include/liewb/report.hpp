#pragma once

#include <string>
#include <vector>

namespace liewb {

// Outcome of one verified identity instance.
struct CheckResult {
    std::string identity;  // which identity family, e.g. "witt-ghost-equation"
    std::string params;    // instance parameters, e.g. "p=2 k=3 m=1"
    bool pass = false;
    std::string witness;   // first discrepancy when failing; empty otherwise
};

// A batch of checks from one verifier run.
struct Report {
    std::vector<CheckResult> checks;

    void add(std::string identity, std::string params, bool pass, std::string witness = "") {
        checks.push_back({std::move(identity), std::move(params), pass, std::move(witness)});
    }
    void merge(const Report& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

} // namespace liewb
