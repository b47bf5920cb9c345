#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "limdens/structure.hpp"

using namespace limdens;

namespace {

const Signature kBij = Signature::bijective();
const Signature kUni = Signature::single_unary();

StructureDescriptor bij(const std::string& text) {
    return build_bijective(parse_identity(text, kBij), kBij);
}

StructureDescriptor uni(const std::string& text) {
    return build_unary(parse_identity(text, kUni));
}

// Independent oracle for the two-identity classifier: union-find on a window
// of Z under x ~ x+m, x ~ x+m', smallest positive period of the middle point.
long long brute_two_identity_cycle(long long m1, long long m2) {
    m1 = std::llabs(m1);
    m2 = std::llabs(m2);
    long long w = 4 * (m1 * m2 + m1 + m2) + 40;
    std::vector<int> parent(static_cast<size_t>(w));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); };
    for (long long x = 0; x < w; ++x) {
        if (m1 > 0 && x + m1 < w) unite(static_cast<int>(x), static_cast<int>(x + m1));
        if (m2 > 0 && x + m2 < w) unite(static_cast<int>(x), static_cast<int>(x + m2));
    }
    long long mid = w / 2;
    for (long long j = 1; j <= m1 + m2; ++j)
        if (find(static_cast<int>(mid)) == find(static_cast<int>(mid + j))) return j;
    return 0;  // no identification: the chain stays infinite
}

}  // namespace

TEST_CASE("bijective classification by X") {
    CHECK(bij("S^2(a) = a").variant_name() == "Cycle");
    CHECK(std::get<Cycle>(bij("S^2(a) = a").value).size == 2);
    CHECK(bij("S(S^-1(a)) = a").variant_name() == "ZChain");
    CHECK(bij("a = a").variant_name() == "ZChain");
    CHECK(std::get<Cycle>(bij("S^-1^3(a) = a").value).size == 3);
    CHECK(std::get<Cycle>(bij("S^2(a) = S^-1(a)").value).size == 3);  // two-sided normalization
}

TEST_CASE("single unary classification") {
    StructureDescriptor rho = uni("f^3(a) = f^7(a)");
    REQUIRE(rho.variant_name() == "RhoShape");
    CHECK(std::get<RhoShape>(rho.value).chain == 3);
    CHECK(std::get<RhoShape>(rho.value).cycle == 4);
    CHECK(uni("f^5(a) = f^5(a)").variant_name() == "OmegaChain");
    CHECK(std::get<Cycle>(uni("a = f^5(a)").value).size == 5);
}

TEST_CASE("abelian classification") {
    CHECK(std::get<CyclicGroup>(build_abelian(parse_relator("a a a")).value).order == 3);
    CHECK(build_abelian(parse_relator("a a^-1")).variant_name() == "IntegersGroup");
    CHECK(build_abelian(parse_relator("0")).variant_name() == "IntegersGroup");
}

TEST_CASE("two-identity classification with the gcd convention") {
    CHECK(std::get<Cycle>(build_two_identity_bijective(2, 3).value).size == 1);
    CHECK(std::get<Cycle>(build_two_identity_bijective(4, 6).value).size == 2);
    CHECK(std::get<Cycle>(build_two_identity_bijective(0, 5).value).size == 5);
    CHECK(build_two_identity_bijective(0, 0).variant_name() == "ZChain");
    Identity a = parse_identity("S^2(a) = a", kBij), b = parse_identity("S^-1^3(a) = a", kBij);
    CHECK(std::get<Cycle>(build_two_identity_bijective(a, b, kBij).value).size == 1);
}

TEST_CASE("two-identity classifier against the union-find oracle (m, m' <= 30)") {
    for (long long m1 = 0; m1 <= 30; ++m1)
        for (long long m2 = 0; m2 <= 30; ++m2) {
            StructureDescriptor d = build_two_identity_bijective(m1, m2);
            long long brute = brute_two_identity_cycle(m1, m2);
            if (brute == 0) CHECK(d.variant_name() == "ZChain");
            else CHECK(std::get<Cycle>(d.value).size == brute);
        }
}

TEST_CASE("coset_equal examples") {
    GaifmanGroup g = gaifman_group(VarietySpec::basic_bijective());
    Term t5 = parse_term("S^5(a)", kBij);
    CHECK(coset_equal(parse_term("S^7(a)", kBij), parse_term("S^2(a)", kBij), t5, g));
    CHECK(!coset_equal(parse_term("S^3(a)", kBij), parse_term("S(a)", kBij), t5, g));
    CHECK(coset_equal(parse_term("S^3(a)", kBij), parse_term("S^3(a)", kBij), t5, g));
}

TEST_CASE("coset-based quotient matches the X classification up to length 10") {
    VarietySpec spec = VarietySpec::basic_bijective();
    for (int m = 0; m <= 10; ++m)
        enumerate_identities(kBij, Family::BasicBijective, m, [&](const Identity& id) {
            Presentation p;
            p.generator_count = 1;
            p.identities = {id};
            StructureDescriptor q = build_genbij(p, spec);
            StructureDescriptor direct = build_bijective(id, kBij);
            auto qs = q.size();
            if (direct.variant_name() == "ZChain") {
                CHECK(!qs.has_value());
            } else {
                REQUIRE(qs.has_value());
                CHECK(*qs == std::get<Cycle>(direct.value).size);
            }
        });
}

TEST_CASE("genbij with two generators merged by a cross identity") {
    VarietySpec spec = VarietySpec::basic_bijective();
    spec.signature.generator_count = 2;
    Presentation p;
    p.generator_count = 2;
    p.identities = {parse_identity("S^2(a1) = S(a2)", spec.signature)};
    StructureDescriptor d = build_genbij(p, spec);
    const auto& lq = std::get<LatticeQuotient>(d.value);
    CHECK(lq.data->merged());
    CHECK(!d.is_finite());
    CHECK(lq.data->component_sizes().size() == 1);  // the two Z-chains collapse into one
    // a2 = S(a1), so u(a1) = v(a2) iff X(u) = X(v) + 1
    Term u = parse_term("S^3(a1)", spec.signature), v = parse_term("S^2(a2)", spec.signature);
    CHECK(term_equal(d, u, v));
    CHECK(!term_equal(d, parse_term("S^3(a1)", spec.signature), parse_term("S^3(a2)", spec.signature)));
    CHECK(term_equal(d, parse_term("a2", spec.signature), parse_term("S(a1)", spec.signature)));
}

TEST_CASE("genbij quotient for {f,g | f+g=0} and f(f(a)) = a") {
    VarietySpec spec = VarietySpec::inverse_pair();
    Presentation p;
    p.generator_count = 1;
    p.identities = {parse_identity("f(f(a)) = a", spec.signature)};
    StructureDescriptor d = build_genbij(p, spec);
    auto sz = d.size();
    REQUIRE(sz.has_value());
    CHECK(*sz == 2);
    FiniteStructure fs = materialize_finite(d);
    CHECK(fs.size == 2);
    int f = fs.unary_index("f"), g = fs.unary_index("g");
    for (int x = 0; x < 2; ++x) {
        CHECK(fs.unary[static_cast<size_t>(f)][static_cast<size_t>(x)] == 1 - x);
        CHECK(fs.unary[static_cast<size_t>(g)][static_cast<size_t>(x)] == 1 - x);
    }
}

TEST_CASE("uncertified specs are rejected") {
    VarietySpec free2;
    free2.family = Family::CommutativeGenBij;
    free2.signature = Signature{{"f1", "f2"}, {}, 1};
    Presentation p;
    p.generator_count = 1;
    p.identities = {parse_identity("f1(a) = f2(a)", free2.signature)};
    CHECK_THROWS_AS(build_genbij(p, free2), Error);
}

TEST_CASE("materialize cycles, rho shapes, groups") {
    FiniteStructure c3 = materialize_finite(StructureDescriptor{Family::BasicBijective, Cycle{3}});
    CHECK(c3.size == 3);
    CHECK(c3.unary[0] == std::vector<int>{1, 2, 0});
    CHECK(c3.unary[1] == std::vector<int>{2, 0, 1});
    CHECK(c3.named.at("a") == 0);

    FiniteStructure rho = materialize_finite(StructureDescriptor{Family::SingleUnary, RhoShape{3, 4}});
    CHECK(rho.size == 7);
    CHECK(rho.unary[0] == std::vector<int>{1, 2, 3, 4, 5, 6, 3});

    FiniteStructure z4 = materialize_finite(StructureDescriptor{Family::AbelianGroups, CyclicGroup{4}});
    CHECK(z4.size == 4);
    CHECK(z4.named.at("a") == 1);
    CHECK(z4.binary[0][static_cast<size_t>(2 * 4 + 3)] == 1);  // 2 + 3 = 1 mod 4
    CHECK(z4.unary[0][3] == 1);                                 // -3 = 1 mod 4
}

TEST_CASE("cycle materialization satisfies S^m = id and S^j != id for 0 < j < m") {
    for (long long m = 1; m <= 20; ++m) {
        FiniteStructure fs = materialize_finite(StructureDescriptor{Family::BasicBijective, Cycle{m}});
        for (int x = 0; x < fs.size; ++x) {
            int y = x;
            for (long long j = 1; j <= m; ++j) {
                y = fs.unary[0][static_cast<size_t>(y)];
                if (j < m) CHECK(y != x);
            }
            CHECK(y == x);
        }
    }
}

TEST_CASE("materialization budget") {
    CHECK_THROWS_AS(materialize_finite(StructureDescriptor{Family::BasicBijective, Cycle{2000000}}),
                    BudgetExceeded);
    CHECK_THROWS_AS(materialize_finite(StructureDescriptor{Family::BasicBijective, ZChain{}}), Error);
}

TEST_CASE("constant example classification") {
    Signature sig = Signature::s3c();
    StructureDescriptor s1 = build_constant_example(parse_identity("S^2(a) = a", sig));
    const auto& ca1 = std::get<ConstantAugmented>(s1.value);
    CHECK(std::get<Cycle>(ca1.part_a->value).size == 2);
    CHECK(std::get<Cycle>(ca1.part_c->value).size == 3);
    CHECK(!ca1.merged);

    StructureDescriptor s2 = build_constant_example(parse_identity("S^4(c) = c", sig));
    const auto& ca2 = std::get<ConstantAugmented>(s2.value);
    CHECK(ca2.part_a->variant_name() == "ZChain");
    CHECK(std::get<Cycle>(ca2.part_c->value).size == 1);

    StructureDescriptor s3 = build_constant_example(parse_identity("S(a) = c", sig));
    const auto& ca3 = std::get<ConstantAugmented>(s3.value);
    CHECK(ca3.merged);
    CHECK(ca3.a_offset == 2);  // a = S^-1(c) = S^2(c)
    FiniteStructure fs = materialize_finite(s3);
    CHECK(fs.size == 3);
    CHECK(fs.unary[0][static_cast<size_t>(fs.named.at("a"))] == fs.named.at("c"));
}

TEST_CASE("word problem oracles are congruences on random samples") {
    std::mt19937_64 rng(11);
    std::vector<StructureDescriptor> descs = {
        StructureDescriptor{Family::BasicBijective, Cycle{6}},
        StructureDescriptor{Family::BasicBijective, ZChain{}},
        StructureDescriptor{Family::SingleUnary, RhoShape{2, 3}},
    };
    VarietySpec spec = VarietySpec::basic_bijective();
    Presentation p;
    p.generator_count = 1;
    p.identities = {parse_identity("S^4(a) = a", kBij)};
    descs.push_back(build_genbij(p, spec));
    for (const StructureDescriptor& d : descs) {
        int nsym = d.family == Family::SingleUnary ? 1 : 2;
        for (int trial = 0; trial < 300; ++trial) {
            Term u, v;
            for (int i = static_cast<int>(rng() % 9); i > 0; --i) u.syms.push_back(static_cast<int>(rng() % static_cast<uint64_t>(nsym)));
            for (int i = static_cast<int>(rng() % 9); i > 0; --i) v.syms.push_back(static_cast<int>(rng() % static_cast<uint64_t>(nsym)));
            if (!term_equal(d, u, v)) continue;
            int s = static_cast<int>(rng() % static_cast<uint64_t>(nsym));
            Term fu = u, fv = v;
            fu.syms.insert(fu.syms.begin(), s);
            fv.syms.insert(fv.syms.begin(), s);
            CHECK(term_equal(d, fu, fv));
        }
    }
}

TEST_CASE("descriptor json and dot export") {
    StructureDescriptor d{Family::SingleUnary, RhoShape{3, 4}};
    std::string j = d.to_json_string();
    CHECK(j.find("\"variant\": \"RhoShape\"") != std::string::npos);
    CHECK(j.find("\"chain\": 3") != std::string::npos);
    std::string dot = materialize_finite(d).to_dot();
    CHECK(dot.find("n0 -> n1") != std::string::npos);
    CHECK(dot.find("label=\"f\"") != std::string::npos);
}
