#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace limdens {

struct CriterionResult {
    int id = 0;
    std::string tag;   // counts, alpha, unary, mod2, szmielew, twoid, coset,
                       // lift, constants-like, s3c, walk, fo-oracle, modes, orbit
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs the acceptance criteria (all, or the ones matching `only`), printing
// one "[PASS]/[FAIL] C<k> ..." line per criterion to `out`.
std::vector<CriterionResult> run_acceptance(std::ostream& out, const std::string& only = "",
                                            uint64_t seed = 20240613);

}  // namespace limdens
