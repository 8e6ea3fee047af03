// Runs every library verification suite at its default bound and reports
// one line per suite.

#include "derange/verify.hpp"

#include <iostream>

int main() {
    int failures = 0;
    for (const auto& r : derange::verify::run_all({})) {
        std::cout << (r.ok() ? "PASS" : "FAIL") << " " << r.suite << ": " << r.cases
                  << " checks in " << r.wall_seconds << " s\n";
        for (const auto& f : r.failures)
            std::cout << "  " << f.check << ": expected " << f.expected << ", got " << f.got << "\n";
        if (!r.ok()) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
