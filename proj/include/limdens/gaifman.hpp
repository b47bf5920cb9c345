#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "limdens/structure.hpp"

namespace limdens {

// Undirected Gaifman adjacency of a finite structure: {x, y} is an edge when
// some unary f maps one to the other. Group carriers are not supported here.
struct GaifmanGraph {
    int size = 0;
    std::vector<std::vector<int>> adj;

    static GaifmanGraph from_structure(const FiniteStructure& fs);
    std::vector<int> distances_from(int src) const;  // -1 marks unreachable
};

// Distance in the Gaifman graph; -1 encodes infinity (different components).
int gaifman_distance(const FiniteStructure& fs, int x, int y);

// Induced substructure on the radius-r neighborhood of a center tuple, with
// partial unary tables (-1 where the image leaves the ball).
struct Ball {
    int radius = 0;
    std::vector<int> elements;  // original indices, sorted ascending
    std::vector<int> centers;   // original indices, tuple order
    std::vector<std::string> unary_names;
    std::vector<std::vector<int>> unary;  // local indexing, -1 = outside

    int size() const { return static_cast<int>(elements.size()); }
    int local_index(int orig) const;
    std::string to_dot() const;
};

Ball ball(const FiniteStructure& fs, const std::vector<int>& centers, int r);

// The radius-r ball around any element of the infinite bijective Z-chain:
// a (2r+1)-element S-path with the center in the middle.
Ball zchain_ball(int r);

// Canonical byte string: equal codes iff a center-preserving isomorphism
// exists (the radius is not part of the code, only the induced structure).
// Layout (version tag "LDB1"): symbol count, component count, then per
// component (sorted): shape tag P/C/R/G, size, the out-edge matrix under a
// canonical numbering, and (center tuple position, visit index) pairs.
using LocalTypeCode = std::vector<uint8_t>;

LocalTypeCode canonical_ball_code(const Ball& b);
std::string code_hex(const LocalTypeCode& code);

// Exact center-preserving isomorphism search (independent of the codes; used
// as their oracle in tests). Intended for balls of at most ~64 elements.
bool balls_isomorphic(const Ball& a, const Ball& b);

// True iff the structure has s elements of r-ball code alpha, pairwise at
// Gaifman distance > 2r. Greedy packing first, then exact search while the
// candidate count stays within the budget.
bool local_sentence_eval(const FiniteStructure& fs, const LocalTypeCode& alpha, int r, int s,
                         int exact_budget = 10000);

struct BallCheckResult {
    bool ok = false;
    bool hypothesis_holds = false;
    std::string detail;
};

// Checks that u(a_k) -> u(a_k) is a center-preserving isomorphism between
// B_2r(a-bar) in the free structure and in the one-identity quotient,
// under the projection-gap hypothesis |Pi1(t1) - Pi1(t2)| > (e0+4) r.
BallCheckResult free_vs_quotient_ball_check(const VarietySpec& spec, const Presentation& p,
                                            int r);

}  // namespace limdens
