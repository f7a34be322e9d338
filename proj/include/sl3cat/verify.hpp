#pragma once

// The acceptance suite: one entry per verification criterion, each with its
// tolerance pinned in code.  The CLI's verify-all and the acceptance test
// binary both run through this module.

#include <string>
#include <vector>

namespace sl3cat::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Options {
    // The per-criterion ranges written in the suite are hard minimums; the
    // knobs below only extend coverage beyond them.
    int max_level = 8;
    int max_m = 10;
};

std::vector<CriterionResult> run_acceptance(const Options& opts = {});

} // namespace sl3cat::verify
