#pragma once

#include "derange/families.hpp"
#include "derange/intpoly.hpp"

#include <string>
#include <vector>

namespace derange::verify {

struct Failure {
    std::string check;
    std::string expected;
    std::string got;
};

struct SuiteResult {
    std::string suite;
    long cases = 0;
    std::vector<Failure> failures;
    double wall_seconds = 0.0;
    bool ok() const { return failures.empty(); }
};

struct Options {
    int max_n = -1;  // -1 picks the per-suite default
    int jobs = 1;
    bool allow_large = false;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one named suite; "all" runs every suite and returns one result per
/// suite via run_all.
SuiteResult run_suite(const std::string& name, const Options& opt = {});
std::vector<SuiteResult> run_all(const Options& opt = {});

/// Distribution of a family recomputed directly from the enumeration
/// streams, independent of the cached calculator scans. Supported for the
/// families with a one-pass enumeration definition.
IntPoly enumerated(Family f, int n, bool allow_large = false);

}  // namespace derange::verify
