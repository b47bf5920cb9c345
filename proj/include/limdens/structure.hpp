#pragma once

#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "limdens/variety.hpp"

namespace limdens {

struct StructureDescriptor;

struct ZChain {};        // bijective Z-chain
struct Cycle {           // m-cycle, bijective or single-unary depending on family
    long long size = 1;
};
struct OmegaChain {};    // free single-unary structure on one generator
struct RhoShape {        // chain of `chain` elements feeding a cycle of `cycle` elements
    long long chain = 1;
    long long cycle = 1;
};
struct CyclicGroup {
    long long order = 1;
};
struct IntegersGroup {};

// One-identity quotient for a commutative generalized bijective variety:
// m generator components, where either the component of generator gi is
// G(V)/<tstar> (gi == gj) or the components of gi and gj are merged into one
// free component via a_j = t2^{-1} t1 (a_i).
struct LatticeQuotientData {
    VarietySpec spec;
    GaifmanGroup group;
    int generators = 1;
    int gi = 0;
    int gj = 0;
    std::vector<long long> tstar;   // vec(t2) - vec(t1), gi == gj
    std::vector<long long> offset;  // vec(t1) - vec(t2), gi != gj
    SmithSolver coset;              // L + Z*tstar (gi == gj)

    bool merged() const { return gi != gj; }
    // Word problem: <a-bar | t1(a_gi) = t2(a_gj)> |= u(a_bu) = v(a_bv).
    bool term_equal(const Term& u, int base_u, const Term& v, int base_v) const;
    // Size of the component of each generator (nullopt = infinite); merged
    // generators share one entry keyed by min(gi, gj).
    std::map<int, std::optional<Integer>> component_sizes() const;
};
using LatticeQuotientPtr = std::shared_ptr<const LatticeQuotientData>;
struct LatticeQuotient {
    LatticeQuotientPtr data;
};

struct DisjointUnion {
    std::vector<StructureDescriptor> parts;
};

// The S^3(c) = c example: the substructure generated by a and the 3- or
// 1-cycle of c, possibly merged when the identity relates a to c.
struct ConstantAugmented {
    std::shared_ptr<StructureDescriptor> part_a;
    std::shared_ptr<StructureDescriptor> part_c;
    bool merged = false;
    long long a_offset = 0;  // position of a on c's cycle when merged
};

struct StructureDescriptor {
    Family family = Family::BasicBijective;
    std::variant<ZChain, Cycle, OmegaChain, RhoShape, CyclicGroup, IntegersGroup,
                 LatticeQuotient, DisjointUnion, ConstantAugmented>
        value;

    bool is_finite() const;
    std::optional<Integer> size() const;  // nullopt when infinite
    std::string variant_name() const;
    std::string to_json_string() const;
};

// Explicit carrier for first-order evaluation. Unary symbols get one total
// table each; the abelian group carrier additionally has binary "+".
struct FiniteStructure {
    int size = 0;
    std::vector<std::string> unary_names;
    std::vector<std::vector<int>> unary;
    std::vector<std::string> binary_names;
    std::vector<std::vector<int>> binary;  // row-major size x size
    std::map<std::string, int> named;

    int unary_index(const std::string& name) const;
    int binary_index(const std::string& name) const;
    std::string to_dot() const;
};

// --- builders ---------------------------------------------------------------

// Bijective one-generator identity, normalized through X: t(a) = t'(a).
StructureDescriptor build_bijective(const Identity& id, const Signature& sig);
// Single unary f^r(a) = f^r'(a).
StructureDescriptor build_unary(const Identity& id);
// Abelian one-generator, one-relator.
StructureDescriptor build_abelian(const Relator& r);
// Unordered pair of bijective identities; GCD(0, x) = x, GCD(0, 0) -> ZChain.
StructureDescriptor build_two_identity_bijective(const Identity& a, const Identity& b,
                                                 const Signature& sig);
StructureDescriptor build_two_identity_bijective(long long m1, long long m2);
// <a | t*(a) = a> |= u(a) = v(a), decided by membership of vec(v) - vec(u)
// in the lattice generated by the variety relations plus vec(t*).
bool coset_equal(const Term& u, const Term& v, const Term& tstar, const GaifmanGroup& g);
// Same decision against a precomputed coset lattice L + Z*t*, for sweeps.
bool coset_equal(const Term& u, const Term& v, const SmithSolver& coset_lattice);
// Commutative generalized bijective variety, m generators, one identity.
StructureDescriptor build_genbij(const Presentation& p, const VarietySpec& spec);
// The S^3(c) = c variety of the constants example.
StructureDescriptor build_constant_example(const Identity& id);

// Word problem on a built structure, for terms with generator/constant bases.
bool term_equal(const StructureDescriptor& desc, const Term& u, const Term& v);

FiniteStructure materialize_finite(const StructureDescriptor& desc,
                                   long long element_budget = 1000000);

long long cycle_gcd(long long a, long long b);

}  // namespace limdens
