#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "limdens/structure.hpp"
#include "limdens/variety.hpp"

using namespace limdens;

TEST_CASE("gaifman group of the basic bijective variety is Z") {
    GaifmanGroup g = gaifman_group(VarietySpec::basic_bijective());
    CHECK(g.rank == 1);
    CHECK(g.torsion.empty());
    CHECK(g.pi1 == std::vector<long long>{1, -1});
}

TEST_CASE("gaifman group of {f,g} with f+g=0 is Z") {
    GaifmanGroup g = gaifman_group(VarietySpec::inverse_pair());
    CHECK(g.rank == 1);
    CHECK(g.pi1 == std::vector<long long>{1, -1});
}

TEST_CASE("empty relation lattice gives the free abelian group") {
    VarietySpec spec;
    spec.family = Family::CommutativeGenBij;
    spec.signature = Signature{{"f1", "f2"}, {}, 1};
    GaifmanGroup g = gaifman_group(spec);
    CHECK(g.rank == 2);
    CHECK(g.torsion.empty());
}

TEST_CASE("torsion quotient {f | 3f = 0}") {
    GaifmanGroup g = gaifman_group(VarietySpec::single_torsion(3));
    CHECK(g.rank == 0);
    REQUIRE(g.torsion.size() == 1);
    CHECK(g.torsion[0] == 3);
    CHECK_THROWS_AS(e0_bound(g), Error);
    Term t;
    CHECK_THROWS_AS(projection_pi1(g, t), Error);
}

TEST_CASE("projection examples") {
    Signature sig = Signature::bijective();
    GaifmanGroup g = gaifman_group(VarietySpec::basic_bijective());
    CHECK(projection_pi1(g, parse_term("S(S(S^-1(a)))", sig)) == 1);
    CHECK(projection_pi1(g, parse_term("a", sig)) == 0);

    GaifmanGroup h = gaifman_group(VarietySpec::inverse_pair());
    Signature fg{{"f", "g"}, {}, 1};
    CHECK(projection_pi1(h, parse_term("f(f(g(a)))", fg)) == 1);
}

TEST_CASE("projection is additive on concatenation") {
    GaifmanGroup g = gaifman_group(VarietySpec::basic_bijective());
    Signature sig = Signature::bijective();
    for (int m = 0; m <= 4; ++m)
        enumerate_identities(sig, Family::BasicBijective, m, [&](const Identity& u) {
            for (int m2 = 0; m2 <= 4; ++m2)
                enumerate_identities(sig, Family::BasicBijective, m2, [&](const Identity& v) {
                    Term uv;
                    uv.syms = u.lhs.syms;
                    uv.syms.insert(uv.syms.end(), v.lhs.syms.begin(), v.lhs.syms.end());
                    CHECK(g.pi1_of_term(uv) == g.pi1_of_term(u.lhs) + g.pi1_of_term(v.lhs));
                });
        });
}

TEST_CASE("|Pi1(t)| <= e0 len(t)") {
    GaifmanGroup g = gaifman_group(VarietySpec::inverse_pair());
    E0Bound e0 = e0_bound(g);
    Signature fg{{"f", "g"}, {}, 1};
    for (int m = 0; m <= 10; ++m)
        enumerate_identities(fg, Family::CommutativeGenBij, m, [&](const Identity& id) {
            CHECK(std::abs(g.pi1_of_term(id.lhs)) <= e0.e0 * id.lhs.length());
        });
}

TEST_CASE("e0 larger than 1 from a skewed lattice") {
    VarietySpec spec;
    spec.family = Family::CommutativeGenBij;
    spec.signature = Signature{{"f", "g", "h"}, {}, 1};
    spec.relations = {{1, 2, 0}, {0, 0, 1}};
    GaifmanGroup g = gaifman_group(spec);
    REQUIRE(g.rank == 1);
    E0Bound e0 = e0_bound(g);
    CHECK(e0.e0 == 2);
    CHECK(e0.e0_slack == 6);
    CHECK(g.pi1[0] == 2);  // sign-normalized
}

TEST_CASE("inverse words") {
    VarietySpec bij = VarietySpec::basic_bijective();
    auto w = inverse_word(bij, 0);
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<int>{1});

    VarietySpec fg = VarietySpec::inverse_pair();
    w = inverse_word(fg, 0);
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<int>{1});

    VarietySpec tor = VarietySpec::single_torsion(3);
    w = inverse_word(tor, 0);
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<int>{0, 0});

    VarietySpec free2;
    free2.family = Family::CommutativeGenBij;
    free2.signature = Signature{{"f1", "f2"}, {}, 1};
    CHECK(!inverse_word(free2, 0, 12).has_value());
}

TEST_CASE("certified inverse words hold on materialized quotients up to size 50") {
    VarietySpec bij = VarietySpec::basic_bijective();
    auto w = inverse_word(bij, 0);
    REQUIRE(w.has_value());
    Signature sig = Signature::bijective();
    for (long long m = 1; m <= 50; ++m) {
        Presentation p;
        p.generator_count = 1;
        p.identities = {parse_identity("S^" + std::to_string(m) + "(a) = a", sig)};
        FiniteStructure fs = materialize_finite(build_genbij(p, bij));
        int fi = fs.unary_index("S");
        int ui = fs.unary_index("S^-1");
        for (int x = 0; x < fs.size; ++x) {
            CHECK(fs.unary[static_cast<size_t>(fi)][static_cast<size_t>(fs.unary[static_cast<size_t>(ui)][static_cast<size_t>(x)])] == x);
            CHECK(fs.unary[static_cast<size_t>(ui)][static_cast<size_t>(fs.unary[static_cast<size_t>(fi)][static_cast<size_t>(x)])] == x);
        }
    }
}

TEST_CASE("invariant factors stable under row operations") {
    auto factors = [](std::vector<std::vector<long long>> rows) {
        SmithSolver s = smith_solve(rows, 2);
        return s.torsion();
    };
    auto a = factors({{2, 0}, {0, 2}});
    auto b = factors({{2, 2}, {0, 2}});
    auto c = factors({{2, 2}, {2, 0}});
    auto d = factors({{4, 2}, {2, 2}});  // row ops of the above
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a == d);
    REQUIRE(a.size() == 2);
    CHECK(a[0] == 2);
    CHECK(a[1] == 2);
}

TEST_CASE("smith membership agrees with brute force on small lattices") {
    std::vector<std::vector<long long>> rows = {{2, 1}, {0, 3}};
    SmithSolver s = smith_solve(rows, 2);
    for (long long x = -6; x <= 6; ++x)
        for (long long y = -6; y <= 6; ++y) {
            bool brute = false;
            for (long long a = -8; a <= 8 && !brute; ++a)
                for (long long b = -8; b <= 8 && !brute; ++b)
                    if (a * 2 == x && a * 1 + b * 3 == y) brute = true;
            CHECK(s.contains({x, y}) == brute);
        }
}

TEST_CASE("variety spec json round trip is canonical") {
    VarietySpec spec = VarietySpec::inverse_pair();
    std::string text = spec.to_json_string();
    VarietySpec again = VarietySpec::from_json_string(text);
    CHECK(again.to_json_string() == text);
    CHECK(again.relations == spec.relations);
    CHECK(again.signature.function_symbols == spec.signature.function_symbols);
}

TEST_CASE("declared inverse certificates are validated") {
    VarietySpec bad;
    bad.family = Family::CommutativeGenBij;
    bad.signature = Signature{{"f", "g"}, {}, 1};
    bad.relations = {{1, 2}};
    bad.declared_inverses = {{"f", "g"}};  // (1,0)+(0,1) = (1,1) not in <(1,2)>
    CHECK_THROWS_AS(bad.validate(), Error);
}
