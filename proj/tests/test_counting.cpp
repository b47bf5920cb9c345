#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "limdens/counting.hpp"
#include "limdens/structure.hpp"

using namespace limdens;

TEST_CASE("total presentation counts") {
    CHECK(total_presentations(Signature::bijective(), Family::BasicBijective, 3, 1,
                              CountingMode::UnorderedDistinct) == 15);
    CHECK(total_presentations(Signature::single_unary(), Family::SingleUnary, 2, 1,
                              CountingMode::UnorderedDistinct) == 6);
    CHECK(total_presentations(Signature::multi_unary(2), Family::MultiUnaryFree, 2, 1,
                              CountingMode::UnorderedDistinct) == 17);
    // k = 2 counting modes over N(1) = 3 identities
    CHECK(total_presentations(Signature::bijective(), Family::BasicBijective, 1, 2,
                              CountingMode::UnorderedDistinct) == 3);
    CHECK(total_presentations(Signature::bijective(), Family::BasicBijective, 1, 2,
                              CountingMode::OrderedWithRep) == 9);
    CHECK(total_presentations(Signature::bijective(), Family::BasicBijective, 1, 2,
                              CountingMode::OrderedDistinct) == 6);
}

TEST_CASE("alpha counts") {
    CHECK(alpha_count(1, 1) == 2);
    CHECK(alpha_count(2, 4) == 10);
    CHECK(alpha_count(3, 2) == 0);
    // against enumeration: identities with |X| = n of length <= s
    Signature sig = Signature::bijective();
    for (long long n = 1; n <= 4; ++n)
        for (long long s = 0; s <= 10; ++s) {
            Integer brute = 0;
            for (int m = 0; m <= s; ++m)
                enumerate_identities(sig, Family::BasicBijective, m, [&](const Identity& id) {
                    if (std::llabs(x_statistic(id.lhs, sig)) == n) ++brute;
                });
            CHECK(alpha_count(n, s) == brute);
        }
}

TEST_CASE("X value distributions form the Pascal triangle") {
    ValueDistribution m2 = x_value_distribution_exact(2);
    CHECK(m2.at(2) == 1);
    CHECK(m2.at(0) == 2);
    CHECK(m2.at(-2) == 1);
    ValueDistribution m3 = x_value_distribution_exact(3);
    CHECK(m3.at(3) == 1);
    CHECK(m3.at(1) == 3);
    ValueDistribution upto2 = x_value_distribution_upto(2);
    CHECK(upto2.total == 7);
    CHECK(upto2.at(0) == 3);
    CHECK(upto2.at(1) == 1);
    CHECK(upto2.at(-2) == 1);
}

TEST_CASE("value distribution symmetry, parity support, unimodality") {
    for (long long m = 0; m <= 30; ++m) {
        ValueDistribution d = x_value_distribution_exact(m);
        Integer prev = -1;
        for (long long v = m % 2; v <= m; v += 2) {
            CHECK(d.at(v) == d.at(-v));
            if (prev >= 0) CHECK(d.at(v) <= prev);  // nonincreasing in |v|
            prev = d.at(v);
            if (v > 0) CHECK(d.at(v - 1) == 0);  // parity support only
        }
    }
}

TEST_CASE("residue distributions against enumeration") {
    Signature sig = Signature::bijective();
    for (long long N : {2LL, 3LL, 5LL}) {
        for (long long s = 0; s <= 10; ++s) {
            ResidueDistribution d = x_residue_distribution(N, s);
            std::vector<Integer> brute(static_cast<size_t>(N), 0);
            for (int m = 0; m <= s; ++m)
                enumerate_identities(sig, Family::BasicBijective, m, [&](const Identity& id) {
                    long long r = x_statistic(id.lhs, sig) % N;
                    if (r < 0) r += N;
                    ++brute[static_cast<size_t>(r)];
                });
            CHECK(d.counts == brute);
        }
    }
}

TEST_CASE("residue closed form for the modulus 2") {
    for (long long sp = 0; sp <= 12; ++sp) {
        ResidueDistribution d = x_residue_distribution(2, 2 * sp);
        CHECK(d.counts[0] == (ipow(4, static_cast<unsigned long>(sp + 1)) - 1) / 3);
        CHECK(d.total == ipow(2, static_cast<unsigned long>(2 * sp + 1)) - 1);
    }
    ResidueDistribution deg = x_residue_distribution(1, 20);
    CHECK(deg.counts[0] == deg.total);
    CHECK(deg.total == ipow(2, 21) - 1);
    ResidueDistribution z = x_residue_distribution(3, 0);
    CHECK(z.counts[0] == 1);
    CHECK(z.counts[1] == 0);
}

TEST_CASE("coprime pair counts") {
    CHECK(coprime_pair_count(1) == 8);   // 8 of the 9 ordered pairs
    // GCD(0, 1) = 1: the pair (a = a, S(a) = a) is a 1-cycle
    Signature sig = Signature::bijective();
    Identity empty = parse_identity("a = a", sig), s1 = parse_identity("S(a) = a", sig);
    CHECK(std::get<Cycle>(build_two_identity_bijective(empty, s1, sig).value).size == 1);
    // s = 2: the 9 both-zero pairs are among the failures
    ValueDistribution d2 = x_value_distribution_upto(2);
    CHECK(d2.at(0) * d2.at(0) == 9);
    CHECK(d2.total * d2.total == 49);
}

TEST_CASE("coprime counts against brute-force pair enumeration") {
    Signature sig = Signature::bijective();
    for (long long s = 0; s <= 9; ++s) {
        std::vector<long long> xs;
        for (int m = 0; m <= s; ++m)
            enumerate_identities(sig, Family::BasicBijective, m,
                                 [&](const Identity& id) { xs.push_back(x_statistic(id.lhs, sig)); });
        Integer brute = 0;
        for (long long x1 : xs)
            for (long long x2 : xs)
                if (cycle_gcd(x1, x2) == 1) ++brute;
        CHECK(coprime_pair_count(s) == brute);
    }
}

TEST_CASE("mobius route and sweep agree with the pair aggregation") {
    CoprimeSweep sweep;
    for (long long s = 0; s <= 40; ++s) {
        Integer direct = coprime_pair_count(s);
        CHECK(coprime_pair_count_mobius(s) == direct);
        CHECK(sweep.ordered_at(s) == direct);
    }
}

TEST_CASE("primorial threshold") {
    CHECK(primorial_threshold(10) == 2);
    CHECK(primorial_threshold(500) == 3);
    CHECK(!primorial_threshold(7).has_value());
    CHECK(primorial_threshold(8) == 2);
    // 2*3*5 = 30 <= ln(s) needs s >= e^30
    CHECK(primorial_threshold(1000000) == 3);
}

TEST_CASE("pi1 difference distribution") {
    GaifmanGroup g = gaifman_group(VarietySpec::basic_bijective());
    ValueDistribution d1 = pi1_difference_distribution(g, 1);
    CHECK(d1.at(1) == 2);
    CHECK(d1.at(-1) == 2);
    CHECK(d1.total == 4);
    ValueDistribution d0 = pi1_difference_distribution(g, 0);
    CHECK(d0.at(0) == 1);
    CHECK(d0.total == 1);
    // one-generator identities of length s: every split gives the same +-1 row,
    // so the distribution is (s+1) times the binomial row
    for (long long s = 1; s <= 12; ++s) {
        ValueDistribution d = pi1_difference_distribution(g, s);
        ValueDistribution row = x_value_distribution_exact(s);
        for (const auto& [v, c] : d.counts) CHECK(c == Integer(s + 1) * row.at(v));
    }
    // mass at any fixed value shrinks with s
    auto max_share = [&](long long s) {
        ValueDistribution d = pi1_difference_distribution(g, s);
        Rational best = 0;
        for (const auto& [v, c] : d.counts) best = std::max(best, Rational(c, d.total));
        return best;
    };
    Rational a = max_share(20), b = max_share(60), c = max_share(120);
    CHECK(a > b);
    CHECK(b > c);
    CHECK(c < Rational(8, 100));
    // the {f,g | f+g=0} projection gives the same picture
    GaifmanGroup h = gaifman_group(VarietySpec::inverse_pair());
    ValueDistribution e = pi1_difference_distribution(h, 1);
    CHECK(e.at(1) == 2);
    CHECK(e.at(-1) == 2);
    // cumulative variant totals the whole identity count
    ValueDistribution cum = pi1_difference_distribution(g, 2, true);
    CHECK(cum.total == 17);
}

TEST_CASE("ordered and unordered mode counts for large s") {
    // P** = k! P exactly, and (N^k - k! C(N,k)) / N^k vanishes
    Integer n = identity_count_upto(Signature::bijective(), Family::BasicBijective, 2000);
    for (long long k : {2LL, 3LL}) {
        Integer p = total_presentations(Signature::bijective(), Family::BasicBijective, 2000, k,
                                        CountingMode::UnorderedDistinct);
        Integer pss = total_presentations(Signature::bijective(), Family::BasicBijective, 2000, k,
                                          CountingMode::OrderedDistinct);
        Integer ps = total_presentations(Signature::bijective(), Family::BasicBijective, 2000, k,
                                         CountingMode::OrderedWithRep);
        Integer fact = k == 2 ? 2 : 6;
        CHECK(pss == fact * p);
        CHECK(ps >= pss);
        CHECK(Rational(ps - pss, ps) < Rational(1, ipow(10, 100)));
    }
}
