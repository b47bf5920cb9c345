#include "limdens/structure.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "json.hpp"

namespace limdens {

long long cycle_gcd(long long a, long long b) { return std::gcd(std::llabs(a), std::llabs(b)); }

namespace {

long long pos_mod(long long x, long long n) {
    long long r = x % n;
    return r < 0 ? r + n : r;
}

StructureDescriptor make(Family fam, auto v) {
    StructureDescriptor d;
    d.family = fam;
    d.value = std::move(v);
    return d;
}

}  // namespace

// --- descriptor basics -------------------------------------------------------

std::string StructureDescriptor::variant_name() const {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, ZChain>) return "ZChain";
            else if constexpr (std::is_same_v<T, Cycle>) return "Cycle";
            else if constexpr (std::is_same_v<T, OmegaChain>) return "OmegaChain";
            else if constexpr (std::is_same_v<T, RhoShape>) return "RhoShape";
            else if constexpr (std::is_same_v<T, CyclicGroup>) return "CyclicGroup";
            else if constexpr (std::is_same_v<T, IntegersGroup>) return "IntegersGroup";
            else if constexpr (std::is_same_v<T, LatticeQuotient>) return "LatticeQuotient";
            else if constexpr (std::is_same_v<T, DisjointUnion>) return "DisjointUnion";
            else return "ConstantAugmented";
        },
        value);
}

std::map<int, std::optional<Integer>> LatticeQuotientData::component_sizes() const {
    auto solver_size = [](const SmithSolver& s) -> std::optional<Integer> {
        if (s.free_rank() > 0) return std::nullopt;
        Integer prod = 1;
        for (const Integer& d : s.diag) prod *= d;
        return prod;
    };
    std::optional<Integer> free_size = solver_size(group.lattice);
    std::map<int, std::optional<Integer>> out;
    for (int k = 0; k < generators; ++k) {
        if (merged() && k == std::max(gi, gj)) continue;  // shares min(gi,gj)'s component
        if (!merged() && k == gi)
            out[k] = solver_size(coset);
        else
            out[k] = free_size;
    }
    return out;
}

std::optional<Integer> StructureDescriptor::size() const {
    return std::visit(
        [&](const auto& v) -> std::optional<Integer> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Cycle>) return Integer(v.size);
            else if constexpr (std::is_same_v<T, RhoShape>) return Integer(v.chain + v.cycle);
            else if constexpr (std::is_same_v<T, CyclicGroup>) return Integer(v.order);
            else if constexpr (std::is_same_v<T, LatticeQuotient>) {
                Integer total = 0;
                for (const auto& [k, sz] : v.data->component_sizes()) {
                    (void)k;
                    if (!sz) return std::nullopt;
                    total += *sz;
                }
                return total;
            } else if constexpr (std::is_same_v<T, DisjointUnion>) {
                Integer total = 0;
                for (const auto& p : v.parts) {
                    auto sz = p.size();
                    if (!sz) return std::nullopt;
                    total += *sz;
                }
                return total;
            } else if constexpr (std::is_same_v<T, ConstantAugmented>) {
                if (v.merged) return Integer(3);
                auto sa = v.part_a->size();
                auto sc = v.part_c->size();
                if (!sa || !sc) return std::nullopt;
                return *sa + *sc;
            } else {
                return std::nullopt;  // ZChain, OmegaChain, IntegersGroup
            }
        },
        value);
}

bool StructureDescriptor::is_finite() const { return size().has_value(); }

namespace {

nlohmann::ordered_json descriptor_json(const StructureDescriptor& d) {
    nlohmann::ordered_json j;
    j["variant"] = d.variant_name();
    j["family"] = family_name(d.family);
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Cycle>) j["size"] = v.size;
            else if constexpr (std::is_same_v<T, RhoShape>) {
                j["chain"] = v.chain;
                j["cycle"] = v.cycle;
            } else if constexpr (std::is_same_v<T, CyclicGroup>) j["order"] = v.order;
            else if constexpr (std::is_same_v<T, LatticeQuotient>) {
                j["generators"] = v.data->generators;
                j["gi"] = v.data->gi;
                j["gj"] = v.data->gj;
                if (v.data->merged())
                    j["offset"] = v.data->offset;
                else
                    j["tstar"] = v.data->tstar;
                nlohmann::ordered_json grp;
                grp["rank"] = v.data->group.rank;
                std::vector<std::string> tor;
                for (const Integer& t : v.data->group.torsion) tor.push_back(t.str());
                grp["torsion"] = tor;
                j["group"] = grp;
                nlohmann::ordered_json comps = nlohmann::ordered_json::object();
                for (const auto& [k, sz] : v.data->component_sizes())
                    comps[std::to_string(k)] = sz ? nlohmann::ordered_json(sz->str())
                                                  : nlohmann::ordered_json("infinite");
                j["component_sizes"] = comps;
            } else if constexpr (std::is_same_v<T, DisjointUnion>) {
                nlohmann::ordered_json parts = nlohmann::ordered_json::array();
                for (const auto& p : v.parts) parts.push_back(descriptor_json(p));
                j["parts"] = parts;
            } else if constexpr (std::is_same_v<T, ConstantAugmented>) {
                j["a_part"] = descriptor_json(*v.part_a);
                j["c_part"] = descriptor_json(*v.part_c);
                j["merged"] = v.merged;
                if (v.merged) j["a_offset"] = v.a_offset;
            }
        },
        d.value);
    return j;
}

}  // namespace

std::string StructureDescriptor::to_json_string() const { return descriptor_json(*this).dump(2) + "\n"; }

// --- builders ----------------------------------------------------------------

StructureDescriptor build_bijective(const Identity& id, const Signature& sig) {
    long long m = x_statistic(id.lhs, sig) - x_statistic(id.rhs, sig);
    if (m == 0) return make(Family::BasicBijective, ZChain{});
    return make(Family::BasicBijective, Cycle{std::llabs(m)});
}

StructureDescriptor build_unary(const Identity& id) {
    if (id.lhs.base != id.rhs.base) throw Error("build_unary expects a one-generator identity");
    long long r = id.lhs.length(), rp = id.rhs.length();
    if (r == rp) return make(Family::SingleUnary, OmegaChain{});
    long long lo = std::min(r, rp), hi = std::max(r, rp);
    if (lo == 0) return make(Family::SingleUnary, Cycle{hi});
    return make(Family::SingleUnary, RhoShape{lo, hi - lo});
}

StructureDescriptor build_abelian(const Relator& r) {
    long long x = r.x_statistic();
    if (x == 0) return make(Family::AbelianGroups, IntegersGroup{});
    return make(Family::AbelianGroups, CyclicGroup{std::llabs(x)});
}

StructureDescriptor build_two_identity_bijective(long long m1, long long m2) {
    long long g = cycle_gcd(m1, m2);
    if (g == 0) return make(Family::TwoIdBijective, ZChain{});
    return make(Family::TwoIdBijective, Cycle{g});
}

StructureDescriptor build_two_identity_bijective(const Identity& a, const Identity& b,
                                                 const Signature& sig) {
    long long m1 = x_statistic(a.lhs, sig) - x_statistic(a.rhs, sig);
    long long m2 = x_statistic(b.lhs, sig) - x_statistic(b.rhs, sig);
    return build_two_identity_bijective(m1, m2);
}

bool coset_equal(const Term& u, const Term& v, const SmithSolver& coset_lattice) {
    const int n = coset_lattice.n;
    std::vector<long long> d = abelianize(v, n);
    std::vector<long long> du = abelianize(u, n);
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] -= du[static_cast<size_t>(i)];
    return coset_lattice.contains(d);
}

bool coset_equal(const Term& u, const Term& v, const Term& tstar, const GaifmanGroup& g) {
    return coset_equal(u, v, g.augmented(abelianize(tstar, g.n)));
}

StructureDescriptor build_genbij(const Presentation& p, const VarietySpec& spec) {
    if (p.identities.size() != 1) throw Error("build_genbij expects exactly one identity");
    for (int i = 0; i < spec.signature.n_symbols(); ++i)
        if (!inverse_word(spec, i))
            throw Error("spec is not verifiably generalized bijective: no inverse word for " +
                        spec.signature.function_symbols[static_cast<size_t>(i)]);
    const Identity& id = p.identities.front();
    if (id.lhs.base.is_constant || id.rhs.base.is_constant)
        throw Error("build_genbij expects generator-based identities");

    auto data = std::make_shared<LatticeQuotientData>();
    data->spec = spec;
    data->group = gaifman_group(spec);
    data->generators = p.generator_count;
    data->gi = id.lhs.base.index;
    data->gj = id.rhs.base.index;
    const int n = data->group.n;
    std::vector<long long> v1 = abelianize(id.lhs, n), v2 = abelianize(id.rhs, n);
    if (data->gi == data->gj) {
        data->tstar.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            data->tstar[static_cast<size_t>(i)] = v2[static_cast<size_t>(i)] - v1[static_cast<size_t>(i)];
        data->coset = data->group.augmented(data->tstar);
    } else {
        data->offset.resize(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            data->offset[static_cast<size_t>(i)] = v1[static_cast<size_t>(i)] - v2[static_cast<size_t>(i)];
    }
    return make(spec.family, LatticeQuotient{std::move(data)});
}

StructureDescriptor build_constant_example(const Identity& id) {
    Signature sig = Signature::s3c();
    long long xl = x_statistic(id.lhs, sig), xr = x_statistic(id.rhs, sig);
    bool lc = id.lhs.base.is_constant, rc = id.rhs.base.is_constant;
    ConstantAugmented ca;
    if (!lc && !rc) {  // S_1: t(a) = t'(a)
        long long k = std::llabs(xl - xr);
        ca.part_a = std::make_shared<StructureDescriptor>(
            k == 0 ? make(Family::BasicBijective, ZChain{}) : make(Family::BasicBijective, Cycle{k}));
        ca.part_c = std::make_shared<StructureDescriptor>(make(Family::BasicBijective, Cycle{3}));
    } else if (lc && rc) {  // S_2: t(c) = t'(c)
        long long g = cycle_gcd(3, xl - xr);
        ca.part_a = std::make_shared<StructureDescriptor>(make(Family::BasicBijective, ZChain{}));
        ca.part_c = std::make_shared<StructureDescriptor>(make(Family::BasicBijective, Cycle{g}));
    } else {  // S_3: the components of a and c are identified
        ca.merged = true;
        ca.a_offset = pos_mod(lc ? xl - xr : xr - xl, 3);
        ca.part_a = std::make_shared<StructureDescriptor>(make(Family::BasicBijective, Cycle{3}));
        ca.part_c = std::make_shared<StructureDescriptor>(make(Family::BasicBijective, Cycle{3}));
    }
    return make(Family::ConstantBijectiveS3c, std::move(ca));
}

// --- word problem ------------------------------------------------------------

bool LatticeQuotientData::term_equal(const Term& u, int base_u, const Term& v, int base_v) const {
    const int n = group.n;
    std::vector<long long> d = abelianize(v, n), du = abelianize(u, n);
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] -= du[static_cast<size_t>(i)];
    if (base_u == base_v) {
        if (!merged() && base_u == gi) return coset.contains(d);
        return group.lattice.contains(d);
    }
    if (merged()) {
        // u(a_gi) = v(a_gj)  <=>  vec(u) - vec(v) - offset in L.
        if (base_u == gi && base_v == gj) {
            std::vector<long long> w(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i)
                w[static_cast<size_t>(i)] = -d[static_cast<size_t>(i)] - offset[static_cast<size_t>(i)];
            return group.lattice.contains(w);
        }
        if (base_u == gj && base_v == gi) return term_equal(v, base_v, u, base_u);
    }
    return false;
}

namespace {

long long bij_x(const Term& t) {
    long long x = 0;
    for (int s : t.syms) x += (s == 0) ? 1 : -1;
    return x;
}

bool unary_reaches(const RhoShape& r, long long p, long long q) {
    // f^p(a) = f^q(a) in a chain of r.chain elements feeding an r.cycle-cycle.
    if (p == q) return true;
    if (p < r.chain || q < r.chain) return false;
    return pos_mod(p - q, r.cycle) == 0;
}

}  // namespace

bool term_equal(const StructureDescriptor& desc, const Term& u, const Term& v) {
    return std::visit(
        [&](const auto& d) -> bool {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ZChain>) {
                if (u.base != v.base) return false;
                return bij_x(u) == bij_x(v);
            } else if constexpr (std::is_same_v<T, Cycle>) {
                if (u.base != v.base) return false;
                if (desc.family == Family::SingleUnary)
                    return pos_mod(u.length() - v.length(), d.size) == 0;
                return pos_mod(bij_x(u) - bij_x(v), d.size) == 0;
            } else if constexpr (std::is_same_v<T, OmegaChain>) {
                return u.base == v.base && u.length() == v.length();
            } else if constexpr (std::is_same_v<T, RhoShape>) {
                return u.base == v.base && unary_reaches(d, u.length(), v.length());
            } else if constexpr (std::is_same_v<T, LatticeQuotient>) {
                if (u.base.is_constant || v.base.is_constant)
                    throw Error("generator-based terms expected");
                return d.data->term_equal(u, u.base.index, v, v.base.index);
            } else if constexpr (std::is_same_v<T, ConstantAugmented>) {
                long long xu = bij_x(u), xv = bij_x(v);
                if (d.merged) {
                    long long pu = pos_mod(xu + (u.base.is_constant ? 0 : d.a_offset), 3);
                    long long pv = pos_mod(xv + (v.base.is_constant ? 0 : d.a_offset), 3);
                    return pu == pv;
                }
                if (u.base.is_constant != v.base.is_constant) return false;
                const StructureDescriptor& part = u.base.is_constant ? *d.part_c : *d.part_a;
                return term_equal(part, Term{u.syms, TermBase{}}, Term{v.syms, TermBase{}});
            } else {
                throw Error("term_equal unsupported on " + desc.variant_name());
            }
        },
        desc.value);
}

// --- materialization ----------------------------------------------------------

int FiniteStructure::unary_index(const std::string& name) const {
    for (size_t i = 0; i < unary_names.size(); ++i)
        if (unary_names[i] == name) return static_cast<int>(i);
    return -1;
}

int FiniteStructure::binary_index(const std::string& name) const {
    for (size_t i = 0; i < binary_names.size(); ++i)
        if (binary_names[i] == name) return static_cast<int>(i);
    return -1;
}

std::string FiniteStructure::to_dot() const {
    std::string out = "digraph structure {\n";
    for (int x = 0; x < size; ++x) {
        std::string label = std::to_string(x);
        for (const auto& [name, e] : named)
            if (e == x) label += " [" + name + "]";
        out += "  n" + std::to_string(x) + " [label=\"" + label + "\"];\n";
    }
    for (size_t f = 0; f < unary_names.size(); ++f)
        for (int x = 0; x < size; ++x)
            out += "  n" + std::to_string(x) + " -> n" + std::to_string(unary[f][static_cast<size_t>(x)]) +
                   " [label=\"" + unary_names[f] + "\"];\n";
    out += "}\n";
    return out;
}

namespace {

FiniteStructure bijective_cycle(long long m, long long budget) {
    if (m > budget) throw BudgetExceeded("cycle exceeds element budget");
    FiniteStructure fs;
    fs.size = static_cast<int>(m);
    fs.unary_names = {"S", "S^-1"};
    fs.unary.assign(2, std::vector<int>(static_cast<size_t>(m)));
    for (long long x = 0; x < m; ++x) {
        fs.unary[0][static_cast<size_t>(x)] = static_cast<int>((x + 1) % m);
        fs.unary[1][static_cast<size_t>(x)] = static_cast<int>(pos_mod(x - 1, m));
    }
    fs.named["a"] = 0;
    return fs;
}

FiniteStructure unary_cycle(long long m, long long budget) {
    if (m > budget) throw BudgetExceeded("cycle exceeds element budget");
    FiniteStructure fs;
    fs.size = static_cast<int>(m);
    fs.unary_names = {"f"};
    fs.unary.assign(1, std::vector<int>(static_cast<size_t>(m)));
    for (long long x = 0; x < m; ++x) fs.unary[0][static_cast<size_t>(x)] = static_cast<int>((x + 1) % m);
    fs.named["a"] = 0;
    return fs;
}

FiniteStructure rho_shape(const RhoShape& r, long long budget) {
    long long total = r.chain + r.cycle;
    if (total > budget) throw BudgetExceeded("rho shape exceeds element budget");
    FiniteStructure fs;
    fs.size = static_cast<int>(total);
    fs.unary_names = {"f"};
    fs.unary.assign(1, std::vector<int>(static_cast<size_t>(total)));
    for (long long x = 0; x + 1 < total; ++x) fs.unary[0][static_cast<size_t>(x)] = static_cast<int>(x + 1);
    fs.unary[0][static_cast<size_t>(total - 1)] = static_cast<int>(r.chain);
    fs.named["a"] = 0;
    return fs;
}

FiniteStructure cyclic_group(long long m, long long budget) {
    if (m > budget || m * m > 16000000) throw BudgetExceeded("group table exceeds element budget");
    FiniteStructure fs;
    fs.size = static_cast<int>(m);
    fs.binary_names = {"+"};
    fs.binary.assign(1, std::vector<int>(static_cast<size_t>(m * m)));
    for (long long x = 0; x < m; ++x)
        for (long long y = 0; y < m; ++y)
            fs.binary[0][static_cast<size_t>(x * m + y)] = static_cast<int>((x + y) % m);
    fs.unary_names = {"-"};
    fs.unary.assign(1, std::vector<int>(static_cast<size_t>(m)));
    for (long long x = 0; x < m; ++x) fs.unary[0][static_cast<size_t>(x)] = static_cast<int>(pos_mod(-x, m));
    fs.named["0"] = 0;
    fs.named["a"] = m == 1 ? 0 : 1;
    return fs;
}

FiniteStructure merge_union(std::vector<FiniteStructure> parts) {
    FiniteStructure fs;
    if (parts.empty()) throw Error("empty union");
    fs.unary_names = parts[0].unary_names;
    fs.binary_names = parts[0].binary_names;
    if (!fs.binary_names.empty()) throw Error("cannot union group carriers");
    fs.unary.assign(fs.unary_names.size(), {});
    int base = 0;
    for (size_t p = 0; p < parts.size(); ++p) {
        FiniteStructure& part = parts[p];
        if (part.unary_names != fs.unary_names) throw Error("mismatched signatures in union");
        for (size_t f = 0; f < fs.unary_names.size(); ++f)
            for (int x = 0; x < part.size; ++x) fs.unary[f].push_back(part.unary[f][static_cast<size_t>(x)] + base);
        for (const auto& [name, e] : part.named) {
            std::string key = name;
            if (fs.named.count(key)) key += "@" + std::to_string(p);
            fs.named[key] = e + base;
        }
        base += part.size;
    }
    fs.size = base;
    return fs;
}

FiniteStructure lattice_quotient_structure(const LatticeQuotientData& d, long long budget) {
    struct Component {
        const SmithSolver* solver;
        std::vector<long long> radix;     // invariant factors as machine ints
        long long size = 1;
        int offset = 0;                   // first element index in the carrier
        std::vector<int> generators;      // generator indices living here
    };
    const int n = d.group.n;
    auto build_comp = [&](const SmithSolver& s) {
        if (s.free_rank() > 0) throw Error("cannot materialize an infinite component");
        Component c;
        c.solver = &s;
        for (const Integer& di : s.diag) {
            long long dv = di.convert_to<long long>();
            c.radix.push_back(dv);
            c.size *= dv;
            if (c.size > budget) throw BudgetExceeded("quotient exceeds element budget");
        }
        return c;
    };

    std::vector<Component> comps;
    for (int k = 0; k < d.generators; ++k) {
        if (d.merged() && k == std::max(d.gi, d.gj)) {
            for (auto& c : comps)
                if (!c.generators.empty() && c.generators[0] == std::min(d.gi, d.gj)) c.generators.push_back(k);
            continue;
        }
        Component c = build_comp(!d.merged() && k == d.gi ? d.coset : d.group.lattice);
        c.generators = {k};
        comps.push_back(std::move(c));
    }
    long long total = 0;
    for (auto& c : comps) {
        c.offset = static_cast<int>(total);
        total += c.size;
        if (total > budget) throw BudgetExceeded("structure exceeds element budget");
    }

    auto coords_to_index = [](const Component& c, const std::vector<long long>& y) {
        long long idx = 0;
        for (size_t i = 0; i < c.radix.size(); ++i) idx = idx * c.radix[i] + y[i];
        return idx;
    };
    auto index_to_coords = [](const Component& c, long long idx) {
        std::vector<long long> y(c.radix.size());
        for (size_t i = c.radix.size(); i-- > 0;) {
            y[i] = idx % c.radix[i];
            idx /= c.radix[i];
        }
        return y;
    };
    auto reduce_vec = [&](const Component& c, const std::vector<long long>& v) {
        std::vector<Integer> t = c.solver->transform(v);
        std::vector<long long> y(c.radix.size());
        for (size_t i = 0; i < c.radix.size(); ++i) {
            Integer r = t[i] % c.radix[i];
            if (r < 0) r += c.radix[i];
            y[i] = r.convert_to<long long>();
        }
        return y;
    };

    FiniteStructure fs;
    fs.size = static_cast<int>(total);
    fs.unary_names = d.spec.signature.function_symbols;
    fs.unary.assign(fs.unary_names.size(), std::vector<int>(static_cast<size_t>(total)));
    for (const Component& c : comps) {
        for (int s = 0; s < n; ++s) {
            std::vector<long long> e(static_cast<size_t>(n), 0);
            e[static_cast<size_t>(s)] = 1;
            std::vector<long long> step = reduce_vec(c, e);
            for (long long idx = 0; idx < c.size; ++idx) {
                std::vector<long long> y = index_to_coords(c, idx);
                for (size_t i = 0; i < y.size(); ++i) y[i] = (y[i] + step[i]) % c.radix[i];
                fs.unary[static_cast<size_t>(s)][static_cast<size_t>(c.offset + idx)] =
                    static_cast<int>(c.offset + coords_to_index(c, y));
            }
        }
        for (int g : c.generators) {
            std::string name = d.generators == 1 ? "a" : "a" + std::to_string(g + 1);
            std::vector<long long> v(static_cast<size_t>(n), 0);
            if (d.merged() && g == std::max(d.gi, d.gj)) {
                // a_gj sits at the class of vec(t1) - vec(t2) in a_gi's component.
                int sign = d.gj > d.gi ? 1 : -1;
                for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = sign * d.offset[static_cast<size_t>(i)];
            }
            fs.named[name] = static_cast<int>(c.offset + coords_to_index(c, reduce_vec(c, v)));
        }
    }
    return fs;
}

}  // namespace

FiniteStructure materialize_finite(const StructureDescriptor& desc, long long element_budget) {
    return std::visit(
        [&](const auto& d) -> FiniteStructure {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, Cycle>) {
                if (desc.family == Family::SingleUnary) return unary_cycle(d.size, element_budget);
                return bijective_cycle(d.size, element_budget);
            } else if constexpr (std::is_same_v<T, RhoShape>) {
                return rho_shape(d, element_budget);
            } else if constexpr (std::is_same_v<T, CyclicGroup>) {
                return cyclic_group(d.order, element_budget);
            } else if constexpr (std::is_same_v<T, LatticeQuotient>) {
                return lattice_quotient_structure(*d.data, element_budget);
            } else if constexpr (std::is_same_v<T, DisjointUnion>) {
                std::vector<FiniteStructure> parts;
                for (const auto& p : d.parts) parts.push_back(materialize_finite(p, element_budget));
                return merge_union(std::move(parts));
            } else if constexpr (std::is_same_v<T, ConstantAugmented>) {
                if (d.merged) {
                    FiniteStructure fs = bijective_cycle(3, element_budget);
                    fs.named.clear();
                    fs.named["c"] = 0;
                    fs.named["a"] = static_cast<int>(d.a_offset);
                    return fs;
                }
                FiniteStructure fa = materialize_finite(*d.part_a, element_budget);
                FiniteStructure fc = materialize_finite(*d.part_c, element_budget);
                fa.named.clear();
                fa.named["a"] = 0;
                fc.named.clear();
                fc.named["c"] = 0;
                return merge_union({std::move(fa), std::move(fc)});
            } else {
                throw Error("cannot materialize infinite structure " + desc.variant_name());
            }
        },
        desc.value);
}

}  // namespace limdens
