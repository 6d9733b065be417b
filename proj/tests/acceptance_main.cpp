// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <cstdio>

#include "ncgas/acceptance.hpp"

int main() {
    bool all = true;
    ncgas::acceptance::run_all({}, [&](const ncgas::acceptance::CriterionResult& r) {
        std::fputs(ncgas::acceptance::format_result(r).c_str(), stdout);
        std::fflush(stdout);
        all = all && r.passed;
    });
    std::puts(all ? "acceptance: all criteria passed" : "acceptance: FAILED");
    return all ? 0 : 1;
}
