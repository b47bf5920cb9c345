#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "limdens/term.hpp"

namespace limdens {

// Smith-form data for an integer row lattice L in Z^n: a unimodular V and
// diagonal d_1 | d_2 | ... with U*A*V = D. Membership of w reduces to
// divisibility of the coordinates of w*V.
struct SmithSolver {
    int n = 0;
    std::vector<Integer> diag;                // nonzero invariant entries, d_1 | d_2 | ...
    std::vector<std::vector<Integer>> V;      // n x n, columns past rank() span the free part

    int rank() const { return static_cast<int>(diag.size()); }
    int free_rank() const { return n - rank(); }
    std::vector<Integer> transform(const std::vector<long long>& w) const;  // w*V
    bool contains(const std::vector<long long>& w) const;
    // Invariant factors > 1 of Z^n / L.
    std::vector<Integer> torsion() const;
};

SmithSolver smith_solve(const std::vector<std::vector<long long>>& rows, int n);

struct VarietySpec {
    Family family = Family::CommutativeGenBij;
    Signature signature;
    std::vector<std::vector<long long>> relations;      // abelianized defining identities
    std::map<std::string, std::string> declared_inverses;  // symbol -> word text

    void validate() const;  // also checks declared inverses against the lattice
    std::string to_json_string() const;                  // canonical, bit-exact round-trip
    static VarietySpec from_json_string(const std::string& text);

    static VarietySpec basic_bijective();
    // {f, g} with f + g = 0.
    static VarietySpec inverse_pair(const std::string& f = "f", const std::string& g = "g");
    // {f} with k f = 0 (f^k = id).
    static VarietySpec single_torsion(long long k);
    static VarietySpec s3c();
};

std::vector<long long> abelianize(const Term& t, int n_symbols);
std::vector<long long> abelianize_word(const std::vector<int>& word, int n_symbols);

struct GaifmanGroup {
    int n = 0;                       // number of function symbols
    int rank = 0;                    // infinite cyclic factors of G(V)
    std::vector<Integer> torsion;    // invariant factors > 1
    std::vector<long long> pi1;      // projection of each symbol, defined iff rank >= 1
    SmithSolver lattice;             // the relation lattice L
    std::vector<std::vector<long long>> relations;  // generating rows of L

    bool infinite() const { return rank >= 1; }
    long long pi1_of_vec(const std::vector<long long>& v) const;
    long long pi1_of_term(const Term& t) const;
    long long pi1_of_word(const std::vector<int>& word) const;
    // Solver for L + Z*extra, the coset lattice of Lemma-style checks.
    SmithSolver augmented(const std::vector<long long>& extra) const;
};

// Z^n modulo the abelianized relation lattice; errors on an empty signature.
GaifmanGroup gaifman_group(const VarietySpec& spec);

// Projection onto the first infinite cyclic factor; errors when rank = 0.
long long projection_pi1(const GaifmanGroup& g, const Term& t);

// A word u with abelianization(u) + e_sym in the relation lattice. Declared
// inverses are verified by lattice membership; otherwise a bounded search
// runs. Empty result means the spec is not verifiably generalized bijective.
std::optional<std::vector<int>> inverse_word(const VarietySpec& spec, int symbol,
                                             int search_bound = 64);

struct E0Bound {
    long long e0 = 0;        // max_i |Pi_1(f_i)|
    long long e0_slack = 0;  // e0 + 4, the variant used for ball-type checks
};

E0Bound e0_bound(const GaifmanGroup& g);

}  // namespace limdens
