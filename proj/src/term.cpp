#include "limdens/term.hpp"

#include <algorithm>
#include <cctype>

namespace limdens {

std::string family_name(Family f) {
    switch (f) {
        case Family::BasicBijective: return "bijective";
        case Family::TwoIdBijective: return "two-id-bijective";
        case Family::SingleUnary: return "unary";
        case Family::AbelianGroups: return "abelian";
        case Family::CommutativeGenBij: return "genbij";
        case Family::ConstantBijectiveS3c: return "s3c";
        case Family::MultiUnaryFree: return "multi-unary";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "bijective" || name == "basic-bijective") return Family::BasicBijective;
    if (name == "two-id-bijective") return Family::TwoIdBijective;
    if (name == "unary" || name == "single-unary-free") return Family::SingleUnary;
    if (name == "abelian" || name == "abelian-groups") return Family::AbelianGroups;
    if (name == "genbij" || name == "commutative-genbij") return Family::CommutativeGenBij;
    if (name == "s3c" || name == "constant-bijective-s3c") return Family::ConstantBijectiveS3c;
    if (name == "multi-unary" || name == "multi-unary-free") return Family::MultiUnaryFree;
    return std::nullopt;
}

int Signature::symbol_index(const std::string& name) const {
    for (size_t i = 0; i < function_symbols.size(); ++i)
        if (function_symbols[i] == name) return static_cast<int>(i);
    return -1;
}

int Signature::constant_index(const std::string& name) const {
    for (size_t i = 0; i < constants.size(); ++i)
        if (constants[i] == name) return static_cast<int>(i);
    return -1;
}

void Signature::validate() const {
    if (function_symbols.empty()) throw Error("signature needs at least one function symbol");
    if (generator_count < 1) throw Error("signature needs at least one generator");
    for (size_t i = 0; i < function_symbols.size(); ++i)
        for (size_t j = i + 1; j < function_symbols.size(); ++j)
            if (function_symbols[i] == function_symbols[j])
                throw Error("duplicate function symbol: " + function_symbols[i]);
}

Signature Signature::bijective() { return Signature{{"S", "S^-1"}, {}, 1}; }
Signature Signature::single_unary() { return Signature{{"f"}, {}, 1}; }

Signature Signature::multi_unary(int n) {
    Signature sig;
    if (n == 1) {
        sig.function_symbols = {"f"};
    } else {
        for (int i = 1; i <= n; ++i) sig.function_symbols.push_back("f" + std::to_string(i));
    }
    return sig;
}

Signature Signature::s3c() { return Signature{{"S", "S^-1"}, {"c"}, 1}; }

long long Relator::x_statistic() const {
    long long x = 0;
    for (int d : letters) x += d;
    return x;
}

long long x_statistic(const Term& t, const Signature& sig) {
    if (sig.n_symbols() != 2)
        throw Error("x_statistic needs a two-symbol +/- alphabet; use the variety projection instead");
    long long x = 0;
    for (int s : t.syms) x += (s == 0) ? 1 : -1;
    return x;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Cursor {
    const std::string& text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    bool try_eat(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!try_eat(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    bool starts_with(const std::string& s) const { return text.compare(pos, s.size(), s) == 0; }

    long long parse_int() {
        skip_ws();
        size_t start = pos;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos;
        } else if (peek() == '+') {
            ++pos;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected integer", start);
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000) throw ParseError("exponent too large", start);
            ++pos;
        }
        return neg ? -v : v;
    }
};

// Longest declared symbol name starting at the cursor.
int match_symbol(Cursor& c, const Signature& sig) {
    c.skip_ws();
    int best = -1;
    size_t best_len = 0;
    for (int i = 0; i < sig.n_symbols(); ++i) {
        const std::string& name = sig.function_symbols[i];
        if (name.size() > best_len && c.starts_with(name)) {
            best = i;
            best_len = name.size();
        }
    }
    if (best >= 0) c.pos += best_len;
    return best;
}

int paired_inverse(const Signature& sig, int sym) {
    const std::string& name = sig.function_symbols[sym];
    if (name.size() > 3 && name.ends_with("^-1")) return sig.symbol_index(name.substr(0, name.size() - 3));
    return sig.symbol_index(name + "^-1");
}

TermBase parse_base(Cursor& c, const Signature& sig) {
    c.skip_ws();
    // Constants first, longest name wins.
    int best = -1;
    size_t best_len = 0;
    for (size_t i = 0; i < sig.constants.size(); ++i) {
        if (sig.constants[i].size() > best_len && c.starts_with(sig.constants[i])) {
            best = static_cast<int>(i);
            best_len = sig.constants[i].size();
        }
    }
    if (best >= 0) {
        c.pos += best_len;
        return TermBase{true, best};
    }
    if (c.peek() == 'a') {
        ++c.pos;
        int idx = 0;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) idx = (c.text[c.pos++] - '0') - 1;
        if (idx < 0 || idx >= sig.generator_count)
            throw ParseError("generator index out of range", c.pos);
        return TermBase{false, idx};
    }
    throw ParseError("expected a generator or constant", c.pos);
}

Term parse_term_inner(Cursor& c, const Signature& sig) {
    c.skip_ws();
    size_t save = c.pos;
    int sym = match_symbol(c, sig);
    if (sym >= 0) {
        long long k = 1;
        if (c.peek() == '^') {
            ++c.pos;
            k = c.parse_int();
        }
        if (k < 0) {
            int inv = paired_inverse(sig, sym);
            if (inv < 0) throw ParseError("negative exponent without a paired inverse symbol", save);
            sym = inv;
            k = -k;
        }
        if (c.peek() != '(') {
            // Not an application after all (e.g. constant whose name shadows
            // a symbol prefix); rewind and try a bare base.
            c.pos = save;
        } else {
            c.expect('(');
            Term inner = parse_term_inner(c, sig);
            c.expect(')');
            Term t;
            t.syms.assign(static_cast<size_t>(k), sym);
            t.syms.insert(t.syms.end(), inner.syms.begin(), inner.syms.end());
            t.base = inner.base;
            return t;
        }
    }
    Term t;
    t.base = parse_base(c, sig);
    return t;
}

}  // namespace

Term parse_term(const std::string& text, const Signature& sig) {
    Cursor c{text};
    Term t = parse_term_inner(c, sig);
    if (!c.eof()) throw ParseError("trailing input after term", c.pos);
    return t;
}

Identity parse_identity(const std::string& text, const Signature& sig) {
    size_t eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("identity needs '='", text.size());
    Identity id;
    id.lhs = parse_term(text.substr(0, eq), sig);
    id.rhs = parse_term(text.substr(eq + 1), sig);
    return id;
}

Relator parse_relator(const std::string& text) {
    Cursor c{text};
    Relator r;
    if (c.eof()) return r;
    if (c.peek() == '0') {
        ++c.pos;
        if (!c.eof()) throw ParseError("trailing input after 0 relator", c.pos);
        return r;
    }
    int sign = 1;
    bool first = true;
    while (!c.eof()) {
        c.skip_ws();
        if (!first) {
            if (c.try_eat('+'))
                sign = 1;
            else if (c.try_eat('-'))
                sign = -1;
            else
                sign = 1;
        } else {
            if (c.try_eat('-')) sign = -1;
        }
        first = false;
        c.skip_ws();
        long long count = 1;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) count = c.parse_int();
        if (c.peek() != 'a') throw ParseError("expected generator letter 'a'", c.pos);
        ++c.pos;
        int letter = sign;
        if (c.starts_with("^-1")) {
            c.pos += 3;
            letter = -sign;
        }
        if (count < 0 || count > 1000000) throw ParseError("bad coefficient", c.pos);
        for (long long i = 0; i < count; ++i) r.letters.push_back(letter);
    }
    return r;
}

std::vector<int> parse_word(const std::string& text, const Signature& sig) {
    Cursor c{text};
    std::vector<int> word;
    while (!c.eof()) {
        int sym = match_symbol(c, sig);
        if (sym < 0) throw ParseError("expected function symbol", c.pos);
        long long k = 1;
        if (c.peek() == '^') {
            ++c.pos;
            k = c.parse_int();
            if (k < 0) throw ParseError("negative exponent not allowed in word", c.pos);
        }
        for (long long i = 0; i < k; ++i) word.push_back(sym);
    }
    return word;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string base_name(const TermBase& b, const Signature& sig) {
    if (b.is_constant) return sig.constants[b.index];
    if (sig.generator_count == 1) return "a";
    return "a" + std::to_string(b.index + 1);
}

}  // namespace

std::string print_term(const Term& t, const Signature& sig) {
    std::string out;
    int closes = 0;
    size_t i = 0;
    while (i < t.syms.size()) {
        size_t j = i;
        while (j < t.syms.size() && t.syms[j] == t.syms[i]) ++j;
        out += sig.function_symbols[t.syms[i]];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        out += "(";
        ++closes;
        i = j;
    }
    out += base_name(t.base, sig);
    out.append(closes, ')');
    return out;
}

std::string print_identity(const Identity& id, const Signature& sig) {
    return print_term(id.lhs, sig) + " = " + print_term(id.rhs, sig);
}

std::string print_relator(const Relator& r) {
    if (r.letters.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < r.letters.size(); ++i) {
        if (i) out += " ";
        out += r.letters[i] > 0 ? "a" : "a^-1";
    }
    return out;
}

std::string print_word(const std::vector<int>& word, const Signature& sig) {
    std::string out;
    size_t i = 0;
    while (i < word.size()) {
        size_t j = i;
        while (j < word.size() && word[j] == word[i]) ++j;
        if (!out.empty()) out += " ";
        out += sig.function_symbols[word[i]];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Advances a base-n odometer; returns false after the last string.
bool next_string(std::vector<int>& digits, int n) {
    for (size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < n) return true;
        digits[i] = 0;
    }
    return false;
}

void enumerate_left_only(const Signature& sig, int length,
                         const std::function<void(const Identity&)>& visit) {
    Identity id;
    id.lhs.syms.assign(static_cast<size_t>(length), 0);
    if (length == 0) {
        visit(id);
        return;
    }
    do {
        visit(id);
    } while (next_string(id.lhs.syms, sig.n_symbols()));
}

void enumerate_two_sided(const Signature& sig, int length, bool constant_bases,
                         const std::function<void(const Identity&)>& visit) {
    const int n = sig.n_symbols();
    const int m = sig.generator_count;
    std::vector<TermBase> bases;
    for (int i = 0; i < m; ++i) bases.push_back(TermBase{false, i});
    if (constant_bases)
        for (size_t i = 0; i < sig.constants.size(); ++i)
            bases.push_back(TermBase{true, static_cast<int>(i)});
    Identity id;
    for (int ll = 0; ll <= length; ++ll) {
        id.lhs.syms.assign(static_cast<size_t>(ll), 0);
        bool more_l = true;
        while (more_l) {
            id.rhs.syms.assign(static_cast<size_t>(length - ll), 0);
            bool more_r = true;
            while (more_r) {
                for (const TermBase& bl : bases) {
                    id.lhs.base = bl;
                    for (const TermBase& br : bases) {
                        id.rhs.base = br;
                        visit(id);
                    }
                }
                more_r = !id.rhs.syms.empty() && next_string(id.rhs.syms, n);
                if (id.rhs.syms.empty()) break;
            }
            more_l = !id.lhs.syms.empty() && next_string(id.lhs.syms, n);
            if (id.lhs.syms.empty()) break;
        }
    }
}

}  // namespace

void enumerate_identities(const Signature& sig, Family family, int length,
                          const std::function<void(const Identity&)>& visit) {
    if (length < 0) return;
    switch (family) {
        case Family::BasicBijective:
        case Family::TwoIdBijective:
            enumerate_left_only(sig, length, visit);
            return;
        case Family::SingleUnary:
        case Family::CommutativeGenBij:
        case Family::MultiUnaryFree:
            enumerate_two_sided(sig, length, false, visit);
            return;
        case Family::ConstantBijectiveS3c:
            enumerate_two_sided(sig, length, true, visit);
            return;
        case Family::AbelianGroups:
            throw Error("abelian family enumerates relators, not identities");
    }
}

void enumerate_relators(int length, const std::function<void(const Relator&)>& visit) {
    if (length < 0) return;
    Relator r;
    r.letters.assign(static_cast<size_t>(length), 0);
    std::vector<int> digits(static_cast<size_t>(length), 0);
    auto emit = [&] {
        for (int i = 0; i < length; ++i) r.letters[static_cast<size_t>(i)] = digits[static_cast<size_t>(i)] == 0 ? 1 : -1;
        visit(r);
    };
    if (length == 0) {
        visit(r);
        return;
    }
    do {
        emit();
    } while (next_string(digits, 2));
}

std::vector<Identity> list_identities(const Signature& sig, Family family, int length) {
    std::vector<Identity> out;
    enumerate_identities(sig, family, length, [&](const Identity& id) { out.push_back(id); });
    return out;
}

Integer identity_count_exact(const Signature& sig, Family family, long long length) {
    if (length < 0) return 0;
    const long long m = sig.generator_count;
    const long long n = sig.n_symbols();
    switch (family) {
        case Family::BasicBijective:
        case Family::TwoIdBijective:
        case Family::AbelianGroups:
            return ipow(2, static_cast<unsigned long>(length));
        case Family::SingleUnary:
            return Integer(m) * m * (length + 1);
        case Family::CommutativeGenBij:
        case Family::MultiUnaryFree:
            return Integer(m) * m * ipow(n, static_cast<unsigned long>(length)) * (length + 1);
        case Family::ConstantBijectiveS3c: {
            long long b = m + static_cast<long long>(sig.constants.size());
            return Integer(b) * b * ipow(2, static_cast<unsigned long>(length)) * (length + 1);
        }
    }
    return 0;
}

namespace {

// T_n(s) = sum_{m=0..s} (m+1) n^m.
Integer weighted_geometric(long long n, long long s) {
    if (s < 0) return 0;
    if (n == 1) return Integer(s + 1) * (s + 2) / 2;
    Integer np = ipow(n, static_cast<unsigned long>(s + 1));
    Integer num = Integer(s + 1) * np * n - Integer(s + 2) * np + 1;
    Integer den = Integer(n - 1) * (n - 1);
    return num / den;
}

}  // namespace

Integer identity_count_upto(const Signature& sig, Family family, long long s) {
    if (s < 0) return 0;
    const long long m = sig.generator_count;
    const long long n = sig.n_symbols();
    switch (family) {
        case Family::BasicBijective:
        case Family::TwoIdBijective:
        case Family::AbelianGroups:
            return ipow(2, static_cast<unsigned long>(s + 1)) - 1;
        case Family::SingleUnary:
            return Integer(m) * m * (s + 1) * (s + 2) / 2;
        case Family::CommutativeGenBij:
        case Family::MultiUnaryFree:
            return Integer(m) * m * weighted_geometric(n, s);
        case Family::ConstantBijectiveS3c: {
            long long b = m + static_cast<long long>(sig.constants.size());
            return Integer(b) * b * weighted_geometric(2, s);
        }
    }
    return 0;
}

}  // namespace limdens
