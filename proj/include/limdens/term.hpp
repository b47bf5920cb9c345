#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "limdens/bigint.hpp"

namespace limdens {

// Presentation families supported by the builders and counters.
enum class Family {
    BasicBijective,       // {S, S^-1}, one generator, identities t(a) = a
    TwoIdBijective,       // same language, unordered pairs of identities t(a) = a
    SingleUnary,          // {f}, no axioms, identities f^r(a_i) = f^r'(a_j)
    AbelianGroups,        // one generator, relator words over {a, a^-1}
    CommutativeGenBij,    // unary symbols with abelianized relations, t(a_i) = t'(a_j)
    ConstantBijectiveS3c, // {S, S^-1, c} with S^3(c) = c, identities t(x) = t'(y), x,y in {a,c}
    MultiUnaryFree,       // {f_1..f_n}, no axioms, t(a_i) = t'(a_j)
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct Signature {
    std::vector<std::string> function_symbols;  // all unary, n >= 1
    std::vector<std::string> constants;
    int generator_count = 1;

    int n_symbols() const { return static_cast<int>(function_symbols.size()); }
    int symbol_index(const std::string& name) const;
    int constant_index(const std::string& name) const;
    void validate() const;

    static Signature bijective();              // {S, S^-1}
    static Signature single_unary();           // {f}
    static Signature multi_unary(int n);       // {f1..fn} (or {f} for n = 1)
    static Signature s3c();                    // {S, S^-1} with constant c
};

// Base of a term: a generator a_i or a declared constant.
struct TermBase {
    bool is_constant = false;
    int index = 0;  // generator index or constant index, 0-based

    friend bool operator==(const TermBase&, const TermBase&) = default;
    friend auto operator<=>(const TermBase&, const TermBase&) = default;
};

// A term over a unary signature: syms[0] is the outermost symbol, so
// {s0, s1, s2} over base b denotes s0(s1(s2(b))).
struct Term {
    std::vector<int> syms;
    TermBase base;

    int length() const { return static_cast<int>(syms.size()); }
    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;
};

struct Identity {
    Term lhs;
    Term rhs;

    int length() const { return lhs.length() + rhs.length(); }
    friend bool operator==(const Identity&, const Identity&) = default;
    friend auto operator<=>(const Identity&, const Identity&) = default;
};

// Abelian relator: word over {+a, -a}, letters stored as +1/-1.
struct Relator {
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
    long long x_statistic() const;
    friend bool operator==(const Relator&, const Relator&) = default;
    friend auto operator<=>(const Relator&, const Relator&) = default;
};

struct Presentation {
    int generator_count = 1;
    std::vector<Identity> identities;
};

struct ParseError : Error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Text grammar: symbols by declared name (longest match, so S^-1 beats S),
// sym^k(x) for k-fold application, generators a or a1..a9, constants by name.
Term parse_term(const std::string& text, const Signature& sig);
Identity parse_identity(const std::string& text, const Signature& sig);
// Relator words: "a a a^-1" or signed coefficient form "3a - 1a"; "0" is the
// empty relator.
Relator parse_relator(const std::string& text);
// Word over function symbols only, e.g. "S^-1" or "f f": used for declared
// inverse certificates.
std::vector<int> parse_word(const std::string& text, const Signature& sig);

std::string print_term(const Term& t, const Signature& sig);
std::string print_identity(const Identity& id, const Signature& sig);
std::string print_relator(const Relator& r);
std::string print_word(const std::vector<int>& word, const Signature& sig);

// Signed symbol-count difference for a two-symbol +/- alphabet (symbol 0
// counts +1, symbol 1 counts -1). Errors on other signatures; multi-symbol
// terms need the variety-model projection instead.
long long x_statistic(const Term& t, const Signature& sig);

// Streams every identity of exactly the given length for the family, in a
// fixed deterministic order: lhs length ascending within total length, then
// lexicographic symbol strings, then base pair.
void enumerate_identities(const Signature& sig, Family family, int length,
                          const std::function<void(const Identity&)>& visit);
void enumerate_relators(int length, const std::function<void(const Relator&)>& visit);

std::vector<Identity> list_identities(const Signature& sig, Family family, int length);

// Closed-form count of identities of exactly the given length (relators for
// the abelian family), matching what enumeration produces.
Integer identity_count_exact(const Signature& sig, Family family, long long length);
// Number of identities of length at most s, N(s).
Integer identity_count_upto(const Signature& sig, Family family, long long s);

}  // namespace limdens
