// Acceptance runner: one line per verification criterion, nonzero exit on
// any failure.

#include "sl3cat/verify.hpp"

#include <cstdio>

int main() {
    auto results = sl3cat::verify::run_acceptance({});
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        std::printf("[%2d] %s %s\n      %s\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str());
    }
    std::printf("%s\n", all ? "acceptance: all 13 criteria passed" : "acceptance: FAILURES present");
    return all ? 0 : 1;
}
