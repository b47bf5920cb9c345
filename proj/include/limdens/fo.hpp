#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "limdens/structure.hpp"

namespace limdens {

// First-order terms over a mixed signature: unary/binary function symbols by
// name, named elements (generators, constants, group zero), variables.
struct FoTerm {
    enum class Kind { Var, Name, App };
    Kind kind = Kind::Var;
    std::string name;
    std::vector<FoTerm> args;

    static FoTerm var(std::string n) { return {Kind::Var, std::move(n), {}}; }
    static FoTerm named(std::string n) { return {Kind::Name, std::move(n), {}}; }
    static FoTerm app(std::string f, std::vector<FoTerm> a) { return {Kind::App, std::move(f), std::move(a)}; }
};

struct FoFormula;
using FoPtr = std::shared_ptr<const FoFormula>;

struct FoFormula {
    enum class Kind { Eq, Not, And, Or, Implies, Exists, Forall };
    Kind kind = Kind::Eq;
    FoTerm lhs, rhs;          // Eq
    std::vector<FoPtr> kids;  // Not: 1, And/Or: n, Implies: 2, quantifiers: 1
    std::string var;          // quantified variable name
};

FoPtr fo_eq(FoTerm a, FoTerm b);
FoPtr fo_ne(FoTerm a, FoTerm b);
FoPtr fo_not(FoPtr f);
FoPtr fo_and(std::vector<FoPtr> fs);
FoPtr fo_or(std::vector<FoPtr> fs);
FoPtr fo_implies(FoPtr a, FoPtr b);
FoPtr fo_exists(std::string var, FoPtr body);
FoPtr fo_forall(std::string var, FoPtr body);

// k-fold application f^k(t); k = 0 returns t.
FoTerm fo_iter(const std::string& sym, long long k, FoTerm t);
// c * t in additive group notation, built from "+" and "0".
FoTerm fo_scale(long long c, const FoTerm& t);

int quantifier_depth(const FoFormula& f);

// Infix text format, e.g. "exists x. exists y. (x != y & f(x) = f(y))" or
// "exists x. 3x = a". Identifiers bound by a quantifier parse as variables,
// anything else as a named element or function symbol.
FoPtr parse_sentence(const std::string& text);
std::string print_sentence(const FoFormula& f);

// Exhaustive Tarskian evaluation; throws BudgetExceeded when
// size^quantifier_depth exceeds the budget.
bool eval_fo_finite(const FiniteStructure& fs, const FoFormula& sentence,
                    double budget = 1e8);
// Same evaluator, named generators/constants resolved from fs.named; kept as
// the separate entry point for sentences with named generators.
bool eval_with_constants(const FiniteStructure& fs, const FoFormula& sentence,
                         double budget = 1e8);

// --- invariant sentence families --------------------------------------------

struct Invariant {
    enum class Kind {
        BijAlpha,     // at least k cycles of size n
        BijBeta,      // a chain of length at least n
        UnaryPsiA,    // unique element with no f-preimage
        UnaryPsiC,    // unique element with two f-preimages
        UnaryPsi,     // no element with more than two f-preimages
        UnaryAlphaN,  // no cycle of length n
        UnaryBetaN,   // a and c not connected by a chain of length n
        NotInjective,
        SzAlpha,  // |p^n G| >= k
        SzBeta,   // dim(p^n G / p^{n+1} G) >= k
        SzGamma,  // dim((p^n G)[p]) >= k
        SzDelta,  // dim((p^n G)[p] / (p^{n+1} G)[p]) >= k
        OneCycle,
        TermEq,
        TermNeq,
    };
    Kind kind = Kind::OneCycle;
    long long p = 0, n = 0, k = 1;
    std::string u_text, v_text;  // TermEq / TermNeq payload

    std::string name() const;
};

// "SzBeta p=3 n=0 k=1", "BijAlpha n=1 k=1", "OneCycle",
// "TermEq u=S^2(a) v=a", ...
Invariant parse_invariant(const std::string& text);

// Catalogued truth tables on descriptors, including the infinite ones.
bool eval_invariant(const StructureDescriptor& desc, const Invariant& inv);

// Szmielew invariant on C_m (m given) or on Z (m = nullopt).
bool szmielew_eval(std::optional<long long> m, const Invariant& inv);

// Explicit FO rendering of a catalogued family in the family's language; used
// as the oracle cross-check against eval_invariant.
FoPtr render_invariant_fo(const Invariant& inv, Family family);

}  // namespace limdens
