// Acceptance suite: runs every criterion of the verification matrix at full
// scale and prints one pass/fail line per criterion. Exit code 0 only when
// everything passes. All comparisons are exact; there are no tolerances.

#include "qvertex/suite.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    qv::checks::SuiteOptions opts;
    opts.jobs = 1;
    if (const char* env = std::getenv("QVERTEX_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) opts.jobs = j;
    }
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) opts.quick = true;

    auto criteria = qv::checks::run_paper_suite(opts);
    bool all = true;
    for (const auto& c : criteria) {
        bool ok = c.passed();
        all = all && ok;
        long long ms = 0;
        for (const auto& r : c.reports) ms += r.elapsed_ms;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << " [" << ms << " ms]: "
                  << c.description << "\n";
        if (!ok)
            for (const auto& r : c.reports)
                if (!r.passed()) std::cout << r.to_text();
    }
    std::cout << (all ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES present") << "\n";
    return all ? 0 : 1;
}
