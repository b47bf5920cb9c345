#include "limdens/fo.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace limdens {

FoPtr fo_eq(FoTerm a, FoTerm b) {
    auto f = std::make_shared<FoFormula>();
    f->kind = FoFormula::Kind::Eq;
    f->lhs = std::move(a);
    f->rhs = std::move(b);
    return f;
}
FoPtr fo_not(FoPtr g) {
    auto f = std::make_shared<FoFormula>();
    f->kind = FoFormula::Kind::Not;
    f->kids = {std::move(g)};
    return f;
}
FoPtr fo_ne(FoTerm a, FoTerm b) { return fo_not(fo_eq(std::move(a), std::move(b))); }
FoPtr fo_and(std::vector<FoPtr> fs) {
    if (fs.size() == 1) return fs[0];
    auto f = std::make_shared<FoFormula>();
    f->kind = FoFormula::Kind::And;
    f->kids = std::move(fs);
    return f;
}
FoPtr fo_or(std::vector<FoPtr> fs) {
    if (fs.size() == 1) return fs[0];
    auto f = std::make_shared<FoFormula>();
    f->kind = FoFormula::Kind::Or;
    f->kids = std::move(fs);
    return f;
}
FoPtr fo_implies(FoPtr a, FoPtr b) {
    auto f = std::make_shared<FoFormula>();
    f->kind = FoFormula::Kind::Implies;
    f->kids = {std::move(a), std::move(b)};
    return f;
}
FoPtr fo_exists(std::string var, FoPtr body) {
    auto f = std::make_shared<FoFormula>();
    f->kind = FoFormula::Kind::Exists;
    f->var = std::move(var);
    f->kids = {std::move(body)};
    return f;
}
FoPtr fo_forall(std::string var, FoPtr body) {
    auto f = std::make_shared<FoFormula>();
    f->kind = FoFormula::Kind::Forall;
    f->var = std::move(var);
    f->kids = {std::move(body)};
    return f;
}

FoTerm fo_iter(const std::string& sym, long long k, FoTerm t) {
    for (long long i = 0; i < k; ++i) t = FoTerm::app(sym, {std::move(t)});
    return t;
}

FoTerm fo_scale(long long c, const FoTerm& t) {
    if (c <= 0) return FoTerm::named("0");
    FoTerm acc = t;
    for (long long i = 1; i < c; ++i) acc = FoTerm::app("+", {std::move(acc), t});
    return acc;
}

int quantifier_depth(const FoFormula& f) {
    int d = 0;
    for (const FoPtr& k : f.kids) d = std::max(d, quantifier_depth(*k));
    if (f.kind == FoFormula::Kind::Exists || f.kind == FoFormula::Kind::Forall) ++d;
    return d;
}

// --- evaluation ---------------------------------------------------------------

namespace {

struct Env {
    std::vector<std::pair<std::string, int>> binds;
    int lookup(const std::string& v) const {
        for (size_t i = binds.size(); i-- > 0;)
            if (binds[i].first == v) return binds[i].second;
        return -1;
    }
};

int eval_term(const FiniteStructure& fs, const FoTerm& t, const Env& env) {
    switch (t.kind) {
        case FoTerm::Kind::Var: {
            int v = env.lookup(t.name);
            if (v < 0) throw Error("unbound variable " + t.name);
            return v;
        }
        case FoTerm::Kind::Name: {
            auto it = fs.named.find(t.name);
            if (it == fs.named.end()) throw Error("unknown name " + t.name);
            return it->second;
        }
        case FoTerm::Kind::App: {
            if (t.args.size() == 1) {
                int f = fs.unary_index(t.name);
                if (f < 0) throw Error("unknown function symbol " + t.name);
                return fs.unary[static_cast<size_t>(f)][static_cast<size_t>(eval_term(fs, t.args[0], env))];
            }
            if (t.args.size() == 2) {
                int f = fs.binary_index(t.name);
                if (f < 0) throw Error("unknown binary symbol " + t.name);
                int x = eval_term(fs, t.args[0], env);
                int y = eval_term(fs, t.args[1], env);
                return fs.binary[static_cast<size_t>(f)][static_cast<size_t>(x) * static_cast<size_t>(fs.size) +
                                                         static_cast<size_t>(y)];
            }
            throw Error("unsupported arity");
        }
    }
    throw Error("bad term");
}

bool eval_rec(const FiniteStructure& fs, const FoFormula& f, Env& env) {
    switch (f.kind) {
        case FoFormula::Kind::Eq:
            return eval_term(fs, f.lhs, env) == eval_term(fs, f.rhs, env);
        case FoFormula::Kind::Not:
            return !eval_rec(fs, *f.kids[0], env);
        case FoFormula::Kind::And:
            for (const FoPtr& k : f.kids)
                if (!eval_rec(fs, *k, env)) return false;
            return true;
        case FoFormula::Kind::Or:
            for (const FoPtr& k : f.kids)
                if (eval_rec(fs, *k, env)) return true;
            return false;
        case FoFormula::Kind::Implies:
            return !eval_rec(fs, *f.kids[0], env) || eval_rec(fs, *f.kids[1], env);
        case FoFormula::Kind::Exists:
        case FoFormula::Kind::Forall: {
            bool exists = f.kind == FoFormula::Kind::Exists;
            env.binds.emplace_back(f.var, 0);
            for (int x = 0; x < fs.size; ++x) {
                env.binds.back().second = x;
                bool v = eval_rec(fs, *f.kids[0], env);
                if (v == exists) {
                    env.binds.pop_back();
                    return exists;
                }
            }
            env.binds.pop_back();
            return !exists;
        }
    }
    throw Error("bad formula");
}

}  // namespace

bool eval_fo_finite(const FiniteStructure& fs, const FoFormula& sentence, double budget) {
    int d = quantifier_depth(sentence);
    if (fs.size > 1 && d * std::log(static_cast<double>(fs.size)) > std::log(budget))
        throw BudgetExceeded("universe^depth exceeds evaluation budget");
    Env env;
    return eval_rec(fs, sentence, env);
}

bool eval_with_constants(const FiniteStructure& fs, const FoFormula& sentence, double budget) {
    return eval_fo_finite(fs, sentence, budget);
}

// --- text format ----------------------------------------------------------------

namespace {

struct SCursor {
    const std::string& text;
    size_t pos = 0;
    std::vector<std::string> bound;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool try_word(const std::string& w) {
        skip_ws();
        if (text.compare(pos, w.size(), w) != 0) return false;
        char after = pos + w.size() < text.size() ? text[pos + w.size()] : '\0';
        if (std::isalnum(static_cast<unsigned char>(after)) || after == '_') return false;
        pos += w.size();
        return true;
    }
    bool try_tok(const std::string& t) {
        skip_ws();
        if (text.compare(pos, t.size(), t) != 0) return false;
        pos += t.size();
        return true;
    }
    void expect_tok(const std::string& t) {
        if (!try_tok(t)) throw ParseError("expected '" + t + "'", pos);
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) throw ParseError("expected identifier", pos);
        return text.substr(start, pos - start);
    }
    bool is_bound(const std::string& v) const {
        return std::find(bound.begin(), bound.end(), v) != bound.end();
    }
};

FoTerm parse_fo_term(SCursor& c);

FoTerm parse_fo_primary(SCursor& c) {
    c.skip_ws();
    long long coeff = -1;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff = 0;
        while (std::isdigit(static_cast<unsigned char>(c.peek()))) coeff = coeff * 10 + (c.text[c.pos++] - '0');
        if (!std::isalpha(static_cast<unsigned char>(c.peek())) && c.peek() != '_') {
            // a bare numeral is a named element, e.g. the group zero
            return FoTerm::named(std::to_string(coeff));
        }
    }
    std::string id = c.ident();
    long long expo = 1;
    if (c.peek() == '^') {
        ++c.pos;
        c.skip_ws();
        bool neg = c.try_tok("-");
        expo = 0;
        while (std::isdigit(static_cast<unsigned char>(c.peek()))) expo = expo * 10 + (c.text[c.pos++] - '0');
        if (neg) {
            id += "^-1";  // the inverse symbol's declared name
            expo = std::max<long long>(expo, 1);
        }
    }
    FoTerm t;
    if (c.peek() == '(') {
        c.expect_tok("(");
        FoTerm inner = parse_fo_term(c);
        c.expect_tok(")");
        t = fo_iter(id, expo, std::move(inner));
    } else {
        t = c.is_bound(id) ? FoTerm::var(id) : FoTerm::named(id);
    }
    if (coeff >= 0) t = fo_scale(coeff, t);
    return t;
}

FoTerm parse_fo_term(SCursor& c) {
    FoTerm t = parse_fo_primary(c);
    while (true) {
        c.skip_ws();
        if (c.peek() == '+') {
            ++c.pos;
            t = FoTerm::app("+", {std::move(t), parse_fo_primary(c)});
        } else if (c.peek() == '-' && c.pos + 1 < c.text.size() && c.text[c.pos + 1] != '>') {
            ++c.pos;
            FoTerm rhs = parse_fo_primary(c);
            t = FoTerm::app("+", {std::move(t), FoTerm::app("-", {std::move(rhs)})});
        } else {
            break;
        }
    }
    return t;
}

FoPtr parse_fo_formula(SCursor& c);

FoPtr parse_fo_unary(SCursor& c) {
    c.skip_ws();
    if (c.peek() == '!' && !(c.pos + 1 < c.text.size() && c.text[c.pos + 1] == '=')) {
        ++c.pos;
        return fo_not(parse_fo_unary(c));
    }
    if (c.peek() == '(') {
        size_t save = c.pos;
        ++c.pos;
        FoPtr f;
        try {
            f = parse_fo_formula(c);
            c.expect_tok(")");
            return f;
        } catch (const ParseError&) {
            c.pos = save;
        }
    }
    FoTerm l = parse_fo_term(c);
    c.skip_ws();
    if (c.try_tok("!=")) return fo_ne(std::move(l), parse_fo_term(c));
    c.expect_tok("=");
    return fo_eq(std::move(l), parse_fo_term(c));
}

FoPtr parse_fo_conj(SCursor& c) {
    std::vector<FoPtr> fs{parse_fo_unary(c)};
    while (c.try_tok("&")) fs.push_back(parse_fo_unary(c));
    return fo_and(std::move(fs));
}

FoPtr parse_fo_disj(SCursor& c) {
    std::vector<FoPtr> fs{parse_fo_conj(c)};
    while (!c.eof() && c.peek() == '|' && c.try_tok("|")) fs.push_back(parse_fo_conj(c));
    return fo_or(std::move(fs));
}

FoPtr parse_fo_formula(SCursor& c) {
    if (c.try_word("exists") || c.try_word("forall")) {
        bool ex = c.text.compare(c.pos - 6, 6, "exists") == 0;
        std::string v = c.ident();
        c.expect_tok(".");
        c.bound.push_back(v);
        FoPtr body = parse_fo_formula(c);
        c.bound.pop_back();
        return ex ? fo_exists(v, std::move(body)) : fo_forall(v, std::move(body));
    }
    FoPtr f = parse_fo_disj(c);
    if (c.try_tok("->")) return fo_implies(std::move(f), parse_fo_formula(c));
    return f;
}

}  // namespace

FoPtr parse_sentence(const std::string& text) {
    SCursor c{text};
    FoPtr f = parse_fo_formula(c);
    if (!c.eof()) throw ParseError("trailing input after sentence", c.pos);
    return f;
}

namespace {

std::string print_fo_term(const FoTerm& t) {
    switch (t.kind) {
        case FoTerm::Kind::Var:
        case FoTerm::Kind::Name:
            return t.name;
        case FoTerm::Kind::App:
            if (t.args.size() == 2)
                return "(" + print_fo_term(t.args[0]) + " " + t.name + " " + print_fo_term(t.args[1]) + ")";
            return t.name + "(" + print_fo_term(t.args[0]) + ")";
    }
    return "?";
}

}  // namespace

std::string print_sentence(const FoFormula& f) {
    switch (f.kind) {
        case FoFormula::Kind::Eq:
            return print_fo_term(f.lhs) + " = " + print_fo_term(f.rhs);
        case FoFormula::Kind::Not:
            return "!(" + print_sentence(*f.kids[0]) + ")";
        case FoFormula::Kind::And:
        case FoFormula::Kind::Or: {
            std::string sep = f.kind == FoFormula::Kind::And ? " & " : " | ";
            std::string out = "(";
            for (size_t i = 0; i < f.kids.size(); ++i) {
                if (i) out += sep;
                out += print_sentence(*f.kids[i]);
            }
            return out + ")";
        }
        case FoFormula::Kind::Implies:
            return "(" + print_sentence(*f.kids[0]) + " -> " + print_sentence(*f.kids[1]) + ")";
        case FoFormula::Kind::Exists:
            return "exists " + f.var + ". " + print_sentence(*f.kids[0]);
        case FoFormula::Kind::Forall:
            return "forall " + f.var + ". " + print_sentence(*f.kids[0]);
    }
    return "?";
}

// --- invariant families ----------------------------------------------------------

std::string Invariant::name() const {
    auto pnk = [&](const std::string& base) {
        return base + " p=" + std::to_string(p) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
    };
    switch (kind) {
        case Kind::BijAlpha: return "BijAlpha n=" + std::to_string(n) + " k=" + std::to_string(k);
        case Kind::BijBeta: return "BijBeta n=" + std::to_string(n);
        case Kind::UnaryPsiA: return "UnaryPsiA";
        case Kind::UnaryPsiC: return "UnaryPsiC";
        case Kind::UnaryPsi: return "UnaryPsi";
        case Kind::UnaryAlphaN: return "UnaryAlphaN n=" + std::to_string(n);
        case Kind::UnaryBetaN: return "UnaryBetaN n=" + std::to_string(n);
        case Kind::NotInjective: return "NotInjective";
        case Kind::SzAlpha: return pnk("SzAlpha");
        case Kind::SzBeta: return pnk("SzBeta");
        case Kind::SzGamma: return pnk("SzGamma");
        case Kind::SzDelta: return pnk("SzDelta");
        case Kind::OneCycle: return "OneCycle";
        case Kind::TermEq: return "TermEq u=" + u_text + " v=" + v_text;
        case Kind::TermNeq: return "TermNeq u=" + u_text + " v=" + v_text;
    }
    return "?";
}

Invariant parse_invariant(const std::string& text) {
    SCursor c{text};
    std::string head = c.ident();
    Invariant inv;
    using K = Invariant::Kind;
    if (head == "BijAlpha") inv.kind = K::BijAlpha;
    else if (head == "BijBeta") inv.kind = K::BijBeta;
    else if (head == "UnaryPsiA") inv.kind = K::UnaryPsiA;
    else if (head == "UnaryPsiC") inv.kind = K::UnaryPsiC;
    else if (head == "UnaryPsi") inv.kind = K::UnaryPsi;
    else if (head == "UnaryAlphaN") inv.kind = K::UnaryAlphaN;
    else if (head == "UnaryBetaN") inv.kind = K::UnaryBetaN;
    else if (head == "NotInjective") inv.kind = K::NotInjective;
    else if (head == "SzAlpha") inv.kind = K::SzAlpha;
    else if (head == "SzBeta") inv.kind = K::SzBeta;
    else if (head == "SzGamma") inv.kind = K::SzGamma;
    else if (head == "SzDelta") inv.kind = K::SzDelta;
    else if (head == "OneCycle") inv.kind = K::OneCycle;
    else if (head == "TermEq") inv.kind = K::TermEq;
    else if (head == "TermNeq") inv.kind = K::TermNeq;
    else throw ParseError("unknown invariant family " + head, 0);
    while (!c.eof()) {
        std::string key = c.ident();
        c.expect_tok("=");
        c.skip_ws();
        size_t start = c.pos;
        while (c.pos < c.text.size() && !std::isspace(static_cast<unsigned char>(c.text[c.pos]))) ++c.pos;
        std::string value = c.text.substr(start, c.pos - start);
        if (key == "p") inv.p = std::stoll(value);
        else if (key == "n") inv.n = std::stoll(value);
        else if (key == "k") inv.k = std::stoll(value);
        else if (key == "u") inv.u_text = value;
        else if (key == "v") inv.v_text = value;
        else throw ParseError("unknown invariant parameter " + key, start);
    }
    return inv;
}

bool szmielew_eval(std::optional<long long> m, const Invariant& inv) {
    using K = Invariant::Kind;
    const long long p = inv.p, n = inv.n, k = inv.k;
    if (p < 2) throw Error("szmielew invariants need a prime p");
    if (!m) {  // the free group Z
        switch (inv.kind) {
            case K::SzAlpha: return true;       // p^n Z is infinite
            case K::SzBeta: return k <= 1;      // dim(p^n Z / p^{n+1} Z) = 1
            case K::SzGamma: return k <= 0;     // Z is torsion-free
            case K::SzDelta: return k <= 0;
            default: throw Error("not a szmielew invariant");
        }
    }
    long long mm = *m;
    if (mm < 1) throw Error("group order must be positive");
    long long r = 0, rest = mm;
    while (rest % p == 0) {
        rest /= p;
        ++r;
    }
    switch (inv.kind) {
        case K::SzAlpha: {
            // |p^n C_m| = m / gcd(p^n, m) = m / p^min(n, r)
            long long g = 1;
            for (long long i = 0; i < std::min(n, r); ++i) g *= p;
            return mm / g >= k;
        }
        case K::SzBeta: return (r > n ? 1 : 0) >= k;
        case K::SzGamma: return (r > n ? 1 : 0) >= k;
        case K::SzDelta: return (r == n + 1 ? 1 : 0) >= k;
        default: throw Error("not a szmielew invariant");
    }
}

namespace {

Signature family_signature(Family f) {
    switch (f) {
        case Family::BasicBijective:
        case Family::TwoIdBijective:
            return Signature::bijective();
        case Family::SingleUnary: return Signature::single_unary();
        case Family::ConstantBijectiveS3c: return Signature::s3c();
        default: throw Error("no default signature for family " + family_name(f));
    }
}

bool union_invariant(const DisjointUnion& u, const Invariant& inv);

}  // namespace

bool eval_invariant(const StructureDescriptor& desc, const Invariant& inv) {
    using K = Invariant::Kind;
    if (inv.kind == K::TermEq || inv.kind == K::TermNeq) {
        Signature sig;
        if (const auto* lq = std::get_if<LatticeQuotient>(&desc.value))
            sig = lq->data->spec.signature;
        else
            sig = family_signature(desc.family);
        bool eq = term_equal(desc, parse_term(inv.u_text, sig), parse_term(inv.v_text, sig));
        return inv.kind == K::TermEq ? eq : !eq;
    }
    return std::visit(
        [&](const auto& d) -> bool {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ZChain>) {
                switch (inv.kind) {
                    case K::BijAlpha: return false;
                    case K::BijBeta: return true;
                    case K::OneCycle: return false;
                    case K::NotInjective: return false;
                    default: break;
                }
            } else if constexpr (std::is_same_v<T, Cycle>) {
                bool unary = desc.family == Family::SingleUnary;
                if (unary) {
                    switch (inv.kind) {
                        case K::UnaryPsiA: return false;
                        case K::UnaryPsiC: return false;
                        case K::UnaryPsi: return true;
                        case K::UnaryAlphaN: return d.size != inv.n;
                        case K::UnaryBetaN: return true;
                        case K::NotInjective: return false;
                        case K::OneCycle: return d.size == 1;
                        default: break;
                    }
                } else {
                    switch (inv.kind) {
                        case K::BijAlpha: return inv.k == 1 && d.size == inv.n;
                        case K::BijBeta: return d.size > inv.n;
                        case K::OneCycle: return d.size == 1;
                        case K::NotInjective: return false;
                        default: break;
                    }
                }
            } else if constexpr (std::is_same_v<T, OmegaChain>) {
                switch (inv.kind) {
                    case K::UnaryPsiA: return true;
                    case K::UnaryPsiC: return false;
                    case K::UnaryPsi: return true;
                    case K::UnaryAlphaN: return true;
                    case K::UnaryBetaN: return true;
                    case K::NotInjective: return false;
                    case K::OneCycle: return false;
                    default: break;
                }
            } else if constexpr (std::is_same_v<T, RhoShape>) {
                switch (inv.kind) {
                    case K::UnaryPsiA: return true;
                    case K::UnaryPsiC: return true;
                    case K::UnaryPsi: return true;
                    case K::UnaryAlphaN: return d.cycle != inv.n;
                    case K::UnaryBetaN:
                        return !(inv.n >= d.chain && (inv.n - d.chain) % d.cycle == 0);
                    case K::NotInjective: return true;
                    case K::OneCycle: return false;
                    default: break;
                }
            } else if constexpr (std::is_same_v<T, CyclicGroup>) {
                return szmielew_eval(d.order, inv);
            } else if constexpr (std::is_same_v<T, IntegersGroup>) {
                return szmielew_eval(std::nullopt, inv);
            } else if constexpr (std::is_same_v<T, LatticeQuotient>) {
                if (desc.family == Family::BasicBijective) {
                    auto sizes = d.data->component_sizes();
                    switch (inv.kind) {
                        case K::BijAlpha: {
                            long long cnt = 0;
                            for (const auto& [g, sz] : sizes)
                                if (sz && *sz == inv.n) ++cnt;
                            return cnt >= inv.k;
                        }
                        case K::BijBeta:
                            for (const auto& [g, sz] : sizes)
                                if (!sz || *sz > inv.n) return true;
                            return false;
                        case K::OneCycle: {
                            auto total = desc.size();
                            return total && *total == 1;
                        }
                        default: break;
                    }
                }
            } else if constexpr (std::is_same_v<T, DisjointUnion>) {
                return union_invariant(d, inv);
            } else if constexpr (std::is_same_v<T, ConstantAugmented>) {
                // handled by TermEq/TermNeq above; nothing else catalogued
            }
            throw Error("eval_invariant: unsupported pair (" + desc.variant_name() + ", " +
                        inv.name() + ")");
        },
        desc.value);
}

namespace {

bool union_invariant(const DisjointUnion& u, const Invariant& inv) {
    using K = Invariant::Kind;
    auto count_parts = [&](auto pred) {
        long long c = 0;
        for (const auto& p : u.parts)
            if (pred(p)) ++c;
        return c;
    };
    switch (inv.kind) {
        case K::BijAlpha:
            return count_parts([&](const StructureDescriptor& p) {
                       const auto* c = std::get_if<Cycle>(&p.value);
                       return c && p.family != Family::SingleUnary && c->size == inv.n;
                   }) >= inv.k;
        case K::BijBeta:
            return count_parts([&](const StructureDescriptor& p) {
                       if (std::holds_alternative<ZChain>(p.value)) return true;
                       const auto* c = std::get_if<Cycle>(&p.value);
                       return c && c->size > inv.n;
                   }) >= 1;
        case K::OneCycle: {
            if (u.parts.size() != 1) return false;
            return eval_invariant(u.parts[0], inv);
        }
        case K::NotInjective:
            return count_parts([](const StructureDescriptor& p) {
                       return std::holds_alternative<RhoShape>(p.value);
                   }) >= 1;
        case K::UnaryPsi:
            return true;
        case K::UnaryPsiA:
            return count_parts([](const StructureDescriptor& p) {
                       return std::holds_alternative<RhoShape>(p.value) ||
                              std::holds_alternative<OmegaChain>(p.value);
                   }) == 1;
        case K::UnaryPsiC:
            return count_parts([](const StructureDescriptor& p) {
                       return std::holds_alternative<RhoShape>(p.value);
                   }) == 1;
        case K::UnaryAlphaN:
            for (const auto& p : u.parts)
                if (!eval_invariant(p, inv)) return false;
            return true;
        case K::UnaryBetaN:
            for (const auto& p : u.parts)
                if (std::holds_alternative<RhoShape>(p.value) && !eval_invariant(p, inv)) return false;
            return true;
        default:
            throw Error("eval_invariant: unsupported pair (DisjointUnion, " + inv.name() + ")");
    }
}

// --- FO renderings -----------------------------------------------------------

FoTerm from_term(const Term& t, const Signature& sig) {
    std::string base;
    if (t.base.is_constant)
        base = sig.constants[static_cast<size_t>(t.base.index)];
    else
        base = sig.generator_count == 1 ? "a" : "a" + std::to_string(t.base.index + 1);
    FoTerm ft = FoTerm::named(base);
    for (size_t i = t.syms.size(); i-- > 0;)
        ft = FoTerm::app(sig.function_symbols[static_cast<size_t>(t.syms[i])], {std::move(ft)});
    return ft;
}

// x has no f-preimage
FoPtr no_preimage(const std::string& f, const FoTerm& x, const std::string& zvar) {
    return fo_forall(zvar, fo_ne(FoTerm::app(f, {FoTerm::var(zvar)}), x));
}

// x has (at least) two f-preimages; guarded nesting keeps evaluation cheap
FoPtr two_preimages(const std::string& f, const FoTerm& x, const std::string& z1,
                    const std::string& z2) {
    return fo_exists(z1, fo_and({fo_eq(FoTerm::app(f, {FoTerm::var(z1)}), x),
                                 fo_exists(z2, fo_and({fo_ne(FoTerm::var(z2), FoTerm::var(z1)),
                                                       fo_eq(FoTerm::app(f, {FoTerm::var(z2)}), x)}))}));
}

// x lies on a cycle of length exactly n
FoPtr exact_period(const std::string& f, const std::string& xvar, long long n) {
    std::vector<FoPtr> conj{fo_eq(fo_iter(f, n, FoTerm::var(xvar)), FoTerm::var(xvar))};
    for (long long j = 1; j < n; ++j)
        conj.push_back(fo_ne(fo_iter(f, j, FoTerm::var(xvar)), FoTerm::var(xvar)));
    return fo_and(std::move(conj));
}

FoPtr render_bij_alpha(long long n, long long k) {
    // k elements on n-cycles, pairwise on distinct cycles
    FoPtr body = nullptr;
    for (long long i = k; i >= 1; --i) {
        std::string xi = "x" + std::to_string(i);
        std::vector<FoPtr> conj{exact_period("S", xi, n)};
        for (long long l = 1; l < i; ++l) {
            std::string xl = "x" + std::to_string(l);
            for (long long j = 0; j < n; ++j)
                conj.push_back(fo_ne(fo_iter("S", j, FoTerm::var(xl)), FoTerm::var(xi)));
        }
        if (body) conj.push_back(body);
        body = fo_exists(xi, fo_and(std::move(conj)));
    }
    return body;
}

FoPtr render_sz(const Invariant& inv) {
    using K = Invariant::Kind;
    const long long p = inv.p, n = inv.n, k = inv.k;
    long long pn = 1, pn1;
    for (long long i = 0; i < n; ++i) pn *= p;
    pn1 = pn * p;
    auto yv = [](long long i) { return "y" + std::to_string(i); };
    if (inv.kind == K::SzAlpha) {
        // k distinct elements of p^n G, written as p^n y_i
        FoPtr body = nullptr;
        std::vector<FoPtr> conj;
        for (long long i = k; i >= 1; --i) {
            conj.clear();
            for (long long l = 1; l < i; ++l)
                conj.push_back(fo_ne(fo_scale(pn, FoTerm::var(yv(i))), fo_scale(pn, FoTerm::var(yv(l)))));
            if (body) conj.push_back(body);
            if (conj.empty()) conj.push_back(fo_eq(FoTerm::var(yv(i)), FoTerm::var(yv(i))));
            body = fo_exists(yv(i), fo_and(conj));
        }
        return body;
    }
    if (k == 1) {
        switch (inv.kind) {
            case K::SzBeta:
                return fo_exists("y", fo_forall("z", fo_ne(fo_scale(pn1, FoTerm::var("z")),
                                                           fo_scale(pn, FoTerm::var("y")))));
            case K::SzGamma:
                return fo_exists("y", fo_and({fo_eq(fo_scale(pn1, FoTerm::var("y")), FoTerm::named("0")),
                                              fo_ne(fo_scale(pn, FoTerm::var("y")), FoTerm::named("0"))}));
            case K::SzDelta:
                return fo_exists(
                    "y", fo_and({fo_eq(fo_scale(pn1, FoTerm::var("y")), FoTerm::named("0")),
                                 fo_ne(fo_scale(pn, FoTerm::var("y")), FoTerm::named("0")),
                                 fo_forall("z", fo_ne(fo_scale(pn1, FoTerm::var("z")),
                                                      fo_scale(pn, FoTerm::var("y"))))}));
            default: break;
        }
    }
    if (k == 2) {
        // two witnesses p^n y1, p^n y2, F_p-independent modulo the relevant subgroup
        auto combo = [&](long long c1, long long c2) {
            return FoTerm::app("+", {fo_scale(c1 * pn, FoTerm::var("y1")),
                                     fo_scale(c2 * pn, FoTerm::var("y2"))});
        };
        std::vector<FoPtr> conj;
        if (inv.kind == K::SzGamma || inv.kind == K::SzDelta) {
            conj.push_back(fo_eq(fo_scale(pn1, FoTerm::var("y1")), FoTerm::named("0")));
            conj.push_back(fo_eq(fo_scale(pn1, FoTerm::var("y2")), FoTerm::named("0")));
        }
        for (long long c1 = 0; c1 < p; ++c1)
            for (long long c2 = 0; c2 < p; ++c2) {
                if (c1 == 0 && c2 == 0) continue;
                if (inv.kind == K::SzGamma)
                    conj.push_back(fo_ne(combo(c1, c2), FoTerm::named("0")));
                else
                    conj.push_back(fo_forall("z", fo_ne(fo_scale(pn1, FoTerm::var("z")), combo(c1, c2))));
            }
        return fo_exists("y1", fo_exists("y2", fo_and(std::move(conj))));
    }
    throw Error("FO rendering for szmielew invariants implemented for k <= 2");
}

}  // namespace

FoPtr render_invariant_fo(const Invariant& inv, Family family) {
    using K = Invariant::Kind;
    switch (inv.kind) {
        case K::BijAlpha:
            return render_bij_alpha(inv.n, inv.k);
        case K::BijBeta: {
            std::vector<FoPtr> conj;
            for (long long j = 1; j <= inv.n; ++j)
                conj.push_back(fo_ne(fo_iter("S", j, FoTerm::var("x")), FoTerm::var("x")));
            if (conj.empty()) conj.push_back(fo_eq(FoTerm::var("x"), FoTerm::var("x")));
            return fo_exists("x", fo_and(std::move(conj)));
        }
        case K::UnaryPsiA:
            return fo_exists(
                "x", fo_and({no_preimage("f", FoTerm::var("x"), "z"),
                             fo_forall("w", fo_or({fo_eq(FoTerm::var("w"), FoTerm::var("x")),
                                                   fo_not(no_preimage("f", FoTerm::var("w"), "z2"))}))}));
        case K::UnaryPsiC:
            return fo_exists(
                "x",
                fo_and({two_preimages("f", FoTerm::var("x"), "z1", "z2"),
                        fo_forall("w", fo_or({fo_eq(FoTerm::var("w"), FoTerm::var("x")),
                                              fo_not(two_preimages("f", FoTerm::var("w"), "z3", "z4"))}))}));
        case K::UnaryPsi:
            return fo_forall(
                "x", fo_not(fo_exists(
                         "z1", fo_and({fo_eq(FoTerm::app("f", {FoTerm::var("z1")}), FoTerm::var("x")),
                                       fo_exists(
                                           "z2",
                                           fo_and({fo_ne(FoTerm::var("z2"), FoTerm::var("z1")),
                                                   fo_eq(FoTerm::app("f", {FoTerm::var("z2")}), FoTerm::var("x")),
                                                   fo_exists(
                                                       "z3",
                                                       fo_and({fo_ne(FoTerm::var("z3"), FoTerm::var("z1")),
                                                               fo_ne(FoTerm::var("z3"), FoTerm::var("z2")),
                                                               fo_eq(FoTerm::app("f", {FoTerm::var("z3")}),
                                                                     FoTerm::var("x"))}))}))}))));
        case K::UnaryAlphaN:
            return fo_not(fo_exists("x", exact_period("f", "x", inv.n)));
        case K::UnaryBetaN:
            return fo_not(fo_exists(
                "x", fo_and({no_preimage("f", FoTerm::var("x"), "z"),
                             two_preimages("f", fo_iter("f", inv.n, FoTerm::var("x")), "z1", "z2")})));
        case K::NotInjective: {
            std::string f = family == Family::SingleUnary ? "f" : "S";
            return fo_exists(
                "x", fo_exists("y", fo_and({fo_ne(FoTerm::var("x"), FoTerm::var("y")),
                                            fo_eq(FoTerm::app(f, {FoTerm::var("x")}),
                                                  FoTerm::app(f, {FoTerm::var("y")}))})));
        }
        case K::SzAlpha:
        case K::SzBeta:
        case K::SzGamma:
        case K::SzDelta:
            return render_sz(inv);
        case K::OneCycle: {
            // a single element, fixed by the function
            std::string f = family == Family::SingleUnary ? "f" : "S";
            return fo_forall("x", fo_and({fo_eq(FoTerm::app(f, {FoTerm::var("x")}), FoTerm::var("x")),
                                          fo_forall("y", fo_eq(FoTerm::var("y"), FoTerm::var("x")))}));
        }
        case K::TermEq:
        case K::TermNeq: {
            Signature sig = family_signature(family);
            FoPtr eq = fo_eq(from_term(parse_term(inv.u_text, sig), sig),
                             from_term(parse_term(inv.v_text, sig), sig));
            return inv.kind == K::TermEq ? eq : fo_not(eq);
        }
    }
    throw Error("no FO rendering for " + inv.name());
}

}  // namespace limdens
