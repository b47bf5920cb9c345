#include "limdens/variety.hpp"

#include <algorithm>
#include <cstdlib>

#include "json.hpp"

namespace limdens {

namespace {

using Matrix = std::vector<std::vector<Integer>>;

void swap_cols(Matrix& a, int i, int j) {
    for (auto& row : a) std::swap(row[static_cast<size_t>(i)], row[static_cast<size_t>(j)]);
}

// col[j] += q * col[i]
void add_col(Matrix& a, int j, int i, const Integer& q) {
    for (auto& row : a) row[static_cast<size_t>(j)] += q * row[static_cast<size_t>(i)];
}

void negate_col(Matrix& a, int j) {
    for (auto& row : a) row[static_cast<size_t>(j)] = -row[static_cast<size_t>(j)];
}

}  // namespace

std::vector<Integer> SmithSolver::transform(const std::vector<long long>& w) const {
    std::vector<Integer> y(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
        Integer acc = 0;
        for (int i = 0; i < n; ++i) acc += Integer(w[static_cast<size_t>(i)]) * V[static_cast<size_t>(i)][static_cast<size_t>(j)];
        y[static_cast<size_t>(j)] = acc;
    }
    return y;
}

bool SmithSolver::contains(const std::vector<long long>& w) const {
    const int r = rank();
    Integer acc;
    for (int j = 0; j < n; ++j) {
        acc = 0;
        for (int i = 0; i < n; ++i)
            acc += Integer(w[static_cast<size_t>(i)]) * V[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (j < r) {
            if (acc % diag[static_cast<size_t>(j)] != 0) return false;
        } else {
            if (acc != 0) return false;
        }
    }
    return true;
}

std::vector<Integer> SmithSolver::torsion() const {
    std::vector<Integer> out;
    for (const Integer& d : diag)
        if (d > 1) out.push_back(d);
    return out;
}

SmithSolver smith_solve(const std::vector<std::vector<long long>>& rows, int n) {
    const int k = static_cast<int>(rows.size());
    Matrix a(static_cast<size_t>(std::max(k, 1)), std::vector<Integer>(static_cast<size_t>(n), 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    Matrix v(static_cast<size_t>(n), std::vector<Integer>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    const int kk = static_cast<int>(a.size());

    auto row_of = [&](int i) -> std::vector<Integer>& { return a[static_cast<size_t>(i)]; };

    int t = 0;
    const int lim = std::min(kk, n);
    while (t < lim) {
        // Find a pivot in the trailing submatrix.
        int pi = -1, pj = -1;
        for (int i = t; i < kk && pi < 0; ++i)
            for (int j = t; j < n; ++j)
                if (row_of(i)[static_cast<size_t>(j)] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        std::swap(a[static_cast<size_t>(pi)], a[static_cast<size_t>(t)]);
        if (pj != t) {
            swap_cols(a, pj, t);
            swap_cols(v, pj, t);
        }

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // Clear column t with row operations, keeping remainders small.
            for (int i = t + 1; i < kk; ++i) {
                while (row_of(i)[static_cast<size_t>(t)] != 0) {
                    Integer q = row_of(i)[static_cast<size_t>(t)] / row_of(t)[static_cast<size_t>(t)];
                    if (q != 0)
                        for (int j = t; j < n; ++j)
                            row_of(i)[static_cast<size_t>(j)] -= q * row_of(t)[static_cast<size_t>(j)];
                    if (row_of(i)[static_cast<size_t>(t)] != 0) std::swap(a[static_cast<size_t>(i)], a[static_cast<size_t>(t)]);
                }
            }
            // Clear row t with column operations.
            for (int j = t + 1; j < n; ++j) {
                while (row_of(t)[static_cast<size_t>(j)] != 0) {
                    Integer q = row_of(t)[static_cast<size_t>(j)] / row_of(t)[static_cast<size_t>(t)];
                    if (q != 0) {
                        add_col(a, j, t, -q);
                        add_col(v, j, t, -q);
                    }
                    if (row_of(t)[static_cast<size_t>(j)] != 0) {
                        swap_cols(a, j, t);
                        swap_cols(v, j, t);
                        dirty = true;  // column ops may have refilled column t
                    }
                }
            }
            for (int i = t + 1; i < kk && !dirty; ++i)
                if (row_of(i)[static_cast<size_t>(t)] != 0) dirty = true;
        }

        // Divisibility fix-up: the pivot must divide the rest of the block.
        bool restart = false;
        for (int i = t + 1; i < kk && !restart; ++i)
            for (int j = t + 1; j < n && !restart; ++j)
                if (row_of(i)[static_cast<size_t>(j)] % row_of(t)[static_cast<size_t>(t)] != 0) {
                    add_col(a, t, j, 1);
                    add_col(v, t, j, 1);
                    restart = true;
                }
        if (restart) continue;
        if (row_of(t)[static_cast<size_t>(t)] < 0) {
            negate_col(a, t);
            negate_col(v, t);
        }
        ++t;
    }

    SmithSolver s;
    s.n = n;
    s.V = v;
    for (int i = 0; i < t; ++i) s.diag.push_back(a[static_cast<size_t>(i)][static_cast<size_t>(i)]);
    return s;
}

std::vector<long long> abelianize(const Term& t, int n_symbols) {
    std::vector<long long> v(static_cast<size_t>(n_symbols), 0);
    for (int s : t.syms) ++v[static_cast<size_t>(s)];
    return v;
}

std::vector<long long> abelianize_word(const std::vector<int>& word, int n_symbols) {
    std::vector<long long> v(static_cast<size_t>(n_symbols), 0);
    for (int s : word) ++v[static_cast<size_t>(s)];
    return v;
}

void VarietySpec::validate() const {
    signature.validate();
    for (const auto& r : relations)
        if (static_cast<int>(r.size()) != signature.n_symbols())
            throw Error("relation vector has wrong dimension");
    SmithSolver lat = smith_solve(relations, signature.n_symbols());
    for (const auto& [sym, word_text] : declared_inverses) {
        int i = signature.symbol_index(sym);
        if (i < 0) throw Error("declared inverse for unknown symbol " + sym);
        std::vector<int> word = parse_word(word_text, signature);
        std::vector<long long> v = abelianize_word(word, signature.n_symbols());
        ++v[static_cast<size_t>(i)];
        if (!lat.contains(v))
            throw Error("declared inverse of " + sym + " is not certified by the relations");
    }
}

VarietySpec VarietySpec::basic_bijective() {
    VarietySpec s;
    s.family = Family::BasicBijective;
    s.signature = Signature::bijective();
    s.relations = {{1, 1}};
    s.declared_inverses = {{"S", "S^-1"}, {"S^-1", "S"}};
    return s;
}

VarietySpec VarietySpec::inverse_pair(const std::string& f, const std::string& g) {
    VarietySpec s;
    s.family = Family::CommutativeGenBij;
    s.signature = Signature{{f, g}, {}, 1};
    s.relations = {{1, 1}};
    s.declared_inverses = {{f, g}, {g, f}};
    return s;
}

VarietySpec VarietySpec::single_torsion(long long k) {
    VarietySpec s;
    s.family = Family::CommutativeGenBij;
    s.signature = Signature{{"f"}, {}, 1};
    s.relations = {{k}};
    return s;
}

VarietySpec VarietySpec::s3c() {
    VarietySpec s;
    s.family = Family::ConstantBijectiveS3c;
    s.signature = Signature::s3c();
    s.relations = {{1, 1}};
    s.declared_inverses = {{"S", "S^-1"}, {"S^-1", "S"}};
    return s;
}

std::string VarietySpec::to_json_string() const {
    nlohmann::ordered_json j;
    j["family"] = family_name(family);
    j["symbols"] = signature.function_symbols;
    j["constants"] = signature.constants;
    j["generators"] = signature.generator_count;
    j["relations"] = relations;
    nlohmann::ordered_json inv = nlohmann::ordered_json::object();
    for (const auto& [k, v] : declared_inverses) inv[k] = v;
    j["inverses"] = inv;
    return j.dump(2) + "\n";
}

VarietySpec VarietySpec::from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    VarietySpec s;
    auto fam = family_from_name(j.at("family").get<std::string>());
    if (!fam) throw Error("unknown family in variety spec");
    s.family = *fam;
    s.signature.function_symbols = j.at("symbols").get<std::vector<std::string>>();
    if (j.contains("constants")) s.signature.constants = j.at("constants").get<std::vector<std::string>>();
    s.signature.generator_count = j.value("generators", 1);
    s.relations = j.at("relations").get<std::vector<std::vector<long long>>>();
    if (j.contains("inverses"))
        s.declared_inverses = j.at("inverses").get<std::map<std::string, std::string>>();
    s.validate();
    return s;
}

long long GaifmanGroup::pi1_of_vec(const std::vector<long long>& v) const {
    if (rank < 1) throw Error("projection undefined: G(V) is finite");
    long long acc = 0;
    for (int i = 0; i < n; ++i) acc += v[static_cast<size_t>(i)] * pi1[static_cast<size_t>(i)];
    return acc;
}

long long GaifmanGroup::pi1_of_term(const Term& t) const { return pi1_of_vec(abelianize(t, n)); }

long long GaifmanGroup::pi1_of_word(const std::vector<int>& w) const {
    return pi1_of_vec(abelianize_word(w, n));
}

SmithSolver GaifmanGroup::augmented(const std::vector<long long>& extra) const {
    std::vector<std::vector<long long>> rows = relations;
    rows.push_back(extra);
    return smith_solve(rows, n);
}

GaifmanGroup gaifman_group(const VarietySpec& spec) {
    spec.validate();
    GaifmanGroup g;
    g.n = spec.signature.n_symbols();
    g.relations = spec.relations;
    g.lattice = smith_solve(spec.relations, g.n);
    g.rank = g.lattice.free_rank();
    g.torsion = g.lattice.torsion();
    if (g.rank >= 1) {
        // Pi_1 reads the first free coordinate of x*V.
        int col = g.lattice.rank();
        g.pi1.resize(static_cast<size_t>(g.n));
        for (int i = 0; i < g.n; ++i) {
            const Integer& e = g.lattice.V[static_cast<size_t>(i)][static_cast<size_t>(col)];
            g.pi1[static_cast<size_t>(i)] = e.convert_to<long long>();
        }
        // Fix the sign so the first symbol with nonzero projection is positive.
        for (long long p : g.pi1) {
            if (p == 0) continue;
            if (p < 0)
                for (auto& q : g.pi1) q = -q;
            break;
        }
    }
    return g;
}

long long projection_pi1(const GaifmanGroup& g, const Term& t) { return g.pi1_of_term(t); }

namespace {

bool search_inverse(const SmithSolver& lat, std::vector<long long>& counts, int sym, int pos,
                    int remaining, std::vector<int>& out) {
    const int n = lat.n;
    if (pos == n) {
        if (remaining != 0) return false;
        std::vector<long long> v = counts;
        ++v[static_cast<size_t>(sym)];
        if (!lat.contains(v)) return false;
        out.clear();
        for (int i = 0; i < n; ++i)
            for (long long c = 0; c < counts[static_cast<size_t>(i)]; ++c) out.push_back(i);
        return true;
    }
    for (int c = 0; c <= remaining; ++c) {
        counts[static_cast<size_t>(pos)] = c;
        if (search_inverse(lat, counts, sym, pos + 1, remaining - c, out)) return true;
    }
    counts[static_cast<size_t>(pos)] = 0;
    return false;
}

}  // namespace

std::optional<std::vector<int>> inverse_word(const VarietySpec& spec, int symbol, int search_bound) {
    const int n = spec.signature.n_symbols();
    if (symbol < 0 || symbol >= n) throw Error("symbol index out of range");
    SmithSolver lat = smith_solve(spec.relations, n);
    auto it = spec.declared_inverses.find(spec.signature.function_symbols[static_cast<size_t>(symbol)]);
    if (it != spec.declared_inverses.end()) {
        std::vector<int> word = parse_word(it->second, spec.signature);
        std::vector<long long> v = abelianize_word(word, n);
        ++v[static_cast<size_t>(symbol)];
        if (!lat.contains(v)) return std::nullopt;
        return word;
    }
    std::vector<long long> counts(static_cast<size_t>(n), 0);
    std::vector<int> out;
    for (int len = 0; len <= search_bound; ++len)
        if (search_inverse(lat, counts, symbol, 0, len, out)) return out;
    return std::nullopt;
}

E0Bound e0_bound(const GaifmanGroup& g) {
    if (g.rank < 1) throw Error("e0 undefined: G(V) is finite");
    long long e0 = 0;
    for (long long p : g.pi1) e0 = std::max(e0, std::llabs(p));
    return E0Bound{e0, e0 + 4};
}

}  // namespace limdens
