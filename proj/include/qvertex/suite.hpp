#pragma once

#include "qvertex/report.hpp"

#include <functional>
#include <vector>

namespace qv::checks {

/// One acceptance criterion: a numbered group of checks that must all pass.
struct Criterion {
    int number = 0;
    std::string description;
    std::vector<CheckReport> reports;

    bool passed() const {
        for (const auto& r : reports)
            if (!r.passed()) return false;
        return true;
    }
};

struct SuiteOptions {
    bool quick = false;   // reduced caps, for smoke runs
    int jobs = 1;         // worker threads; report order stays deterministic
    int rcap_override = -1;
    bool weak = false;    // set when overrides lower the reference caps
};

/// The full verification matrix. Each criterion bundles the checks backing
/// one acceptance line.
std::vector<Criterion> run_paper_suite(SuiteOptions opts);

/// Helper for the operator-spectrum matrix: all mu inside a k x 3 box,
/// all degrees up to dmax.
CheckReport check_diagonal_matrix(int k, int dmax);

} // namespace qv::checks
