#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "limdens/term.hpp"

using namespace limdens;

TEST_CASE("parse S^3(a) = a") {
    Signature sig = Signature::bijective();
    Identity id = parse_identity("S^3(a) = a", sig);
    CHECK(id.lhs.syms == std::vector<int>{0, 0, 0});
    CHECK(id.rhs.syms.empty());
    CHECK(id.length() == 3);
}

TEST_CASE("parse unary powers and total length") {
    Signature sig = Signature::single_unary();
    Identity id = parse_identity("f^3(a) = f^7(a)", sig);
    CHECK(id.lhs.length() == 3);
    CHECK(id.rhs.length() == 7);
    CHECK(id.length() == 10);
}

TEST_CASE("parse nested multi-symbol terms with generator indices") {
    Signature sig{{"f1", "f2"}, {}, 2};
    Identity id = parse_identity("f1(f2(a2)) = a1", sig);
    CHECK(id.lhs.syms == std::vector<int>{0, 1});
    CHECK(id.lhs.base == TermBase{false, 1});
    CHECK(id.rhs.length() == 0);
    CHECK(id.rhs.base == TermBase{false, 0});
}

TEST_CASE("parse inverse symbol and negative exponents") {
    Signature sig = Signature::bijective();
    Term t = parse_term("S^-1(S(a))", sig);
    CHECK(t.syms == std::vector<int>{1, 0});
    Term u = parse_term("S^-2(a)", sig);
    CHECK(u.syms == std::vector<int>{1, 1});
}

TEST_CASE("parse errors carry positions") {
    Signature sig = Signature::bijective();
    CHECK_THROWS_AS(parse_identity("S^3(a)", sig), ParseError);       // no '='
    CHECK_THROWS_AS(parse_identity("Q(a) = a", sig), ParseError);     // unknown symbol
    CHECK_THROWS_AS(parse_identity("S(a) = a2", sig), ParseError);    // generator out of range
    CHECK_THROWS_AS(parse_term("S(a) junk", sig), ParseError);        // trailing input
}

TEST_CASE("x statistic") {
    Signature sig = Signature::bijective();
    CHECK(x_statistic(parse_term("S(S(S^-1(a)))", sig), sig) == 1);
    CHECK(x_statistic(parse_term("a", sig), sig) == 0);
    CHECK(parse_relator("a a a a^-1").x_statistic() == 2);
    CHECK(parse_relator("a a a a^-1").length() == 4);
    CHECK(parse_relator("3a - 1a").x_statistic() == 2);
    CHECK(parse_relator("3a - 1a").length() == 4);
    CHECK(parse_relator("0").length() == 0);
    Signature uni = Signature::single_unary();
    CHECK_THROWS_AS(x_statistic(parse_term("f(a)", uni), uni), Error);
}

TEST_CASE("enumeration counts match the closed forms for every mode") {
    struct Case {
        Signature sig;
        Family fam;
    };
    std::vector<Case> cases = {
        {Signature::bijective(), Family::BasicBijective},
        {Signature::single_unary(), Family::SingleUnary},
        {Signature::multi_unary(2), Family::MultiUnaryFree},
        {Signature::multi_unary(3), Family::MultiUnaryFree},
        {Signature{{"f"}, {}, 3}, Family::SingleUnary},
        {Signature{{"f1", "f2"}, {}, 2}, Family::MultiUnaryFree},
        {Signature::s3c(), Family::ConstantBijectiveS3c},
    };
    for (const Case& c : cases) {
        for (int m = 0; m <= 9; ++m) {
            Integer cnt = 0;
            enumerate_identities(c.sig, c.fam, m, [&](const Identity&) { ++cnt; });
            CHECK(cnt == identity_count_exact(c.sig, c.fam, m));
        }
    }
    for (int m = 0; m <= 12; ++m) {
        Integer cnt = 0;
        enumerate_relators(m, [&](const Relator&) { ++cnt; });
        CHECK(cnt == ipow(2, static_cast<unsigned long>(m)));
    }
}

TEST_CASE("specific enumeration examples") {
    Signature sig = Signature::bijective();
    // length 2, left-only: SS, SS^-1, S^-1S, S^-1S^-1
    std::vector<Identity> ids = list_identities(sig, Family::BasicBijective, 2);
    REQUIRE(ids.size() == 4);
    CHECK(print_identity(ids[0], sig) == "S^2(a) = a");
    CHECK(print_identity(ids[3], sig) == "S^-1^2(a) = a");
    // unary length m has m+1 identities
    std::vector<Identity> uids = list_identities(Signature::single_unary(), Family::SingleUnary, 5);
    CHECK(uids.size() == 6);
}

TEST_CASE("parity of X equals parity of length") {
    Signature sig = Signature::bijective();
    for (int m = 0; m <= 9; ++m)
        enumerate_identities(sig, Family::BasicBijective, m, [&](const Identity& id) {
            long long x = x_statistic(id.lhs, sig);
            CHECK(((x % 2 + 2) % 2) == (m % 2));
        });
}

TEST_CASE("print then parse is the identity up to length 8") {
    struct Case {
        Signature sig;
        Family fam;
        int max_len;
    };
    std::vector<Case> cases = {
        {Signature::bijective(), Family::BasicBijective, 8},
        {Signature::single_unary(), Family::SingleUnary, 8},
        {Signature::multi_unary(2), Family::MultiUnaryFree, 6},
        {Signature::s3c(), Family::ConstantBijectiveS3c, 5},
    };
    for (const Case& c : cases)
        for (int m = 0; m <= c.max_len; ++m)
            enumerate_identities(c.sig, c.fam, m, [&](const Identity& id) {
                CHECK(parse_identity(print_identity(id, c.sig), c.sig) == id);
            });
    for (int m = 0; m <= 8; ++m)
        enumerate_relators(m, [&](const Relator& r) { CHECK(parse_relator(print_relator(r)) == r); });
}

TEST_CASE("cumulative count closed forms") {
    CHECK(identity_count_upto(Signature::bijective(), Family::BasicBijective, 3) == 15);
    CHECK(identity_count_upto(Signature::single_unary(), Family::SingleUnary, 2) == 6);
    CHECK(identity_count_upto(Signature::multi_unary(2), Family::MultiUnaryFree, 2) == 17);
    CHECK(identity_count_upto(Signature::bijective(), Family::AbelianGroups, 3) == 15);
}
