#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "limdens/counting.hpp"
#include "limdens/walk.hpp"

using namespace limdens;

TEST_CASE("zero steps is the point mass at the identity") {
    WalkSpec spec = WalkSpec::parse(7, "0:1/2,1:1/4,-1:1/4");
    WalkDistribution d = k_step_distribution(spec, 0);
    CHECK(d.mass[0] == 1);
    CHECK(d.tv_distance_to_uniform() == Rational(6, 7));
}

TEST_CASE("one step of the +-2 walk on Z_3") {
    WalkSpec spec = WalkSpec::parse(3, "2:1/4,-2:1/4,0:1/2");
    WalkDistribution d = k_step_distribution(spec, 1);
    CHECK(d.mass[0] == Rational(1, 2));
    CHECK(d.mass[1] == Rational(1, 4));
    CHECK(d.mass[2] == Rational(1, 4));
    CHECK(d.tv_distance_to_uniform() == Rational(1, 6));
}

TEST_CASE("periodic walk on Z_2 returns to the identity") {
    WalkSpec spec = WalkSpec::parse(2, "1:1");
    WalkDistribution d = k_step_distribution(spec, 2);
    CHECK(d.mass[0] == 1);
    CHECK(d.mass[1] == 0);
}

TEST_CASE("tv distance basics") {
    WalkSpec u4 = WalkSpec::parse(4, "0:1/4,1:1/4,2:1/4,3:1/4");
    CHECK(k_step_distribution(u4, 1).tv_distance_to_uniform() == 0);
    WalkSpec pm = WalkSpec::parse(4, "0:1");
    CHECK(k_step_distribution(pm, 5).tv_distance_to_uniform() == Rational(3, 4));
}

TEST_CASE("mass stays exactly 1 after every convolution") {
    WalkSpec spec = WalkSpec::parse(9, "0:1/3,1:1/3,-1:1/6,4:1/6");
    WalkDistribution d = k_step_distribution(spec, 40);
    CHECK(d.total() == 1);
}

TEST_CASE("support validation") {
    WalkSpec bad;
    bad.modulus = 3;
    bad.support = {{0, Rational(1, 2)}};
    CHECK_THROWS_AS(bad.validate(), Error);
    CHECK_THROWS_AS(WalkSpec::parse(3, "0:1/2,1:1/3"), Error);
    WalkSpec even = WalkSpec::parse(6, "0:1/2,2:1/4,-2:1/4");
    CHECK(!even.generates());  // gcd(2, 6) = 2
    WalkSpec odd = WalkSpec::parse(5, "0:1/2,2:1/4,-2:1/4");
    CHECK(odd.generates());
}

TEST_CASE("decay rate estimation") {
    WalkSpec spec = WalkSpec::parse(5, "0:1/2,1:1/4,-1:1/4");
    CHECK(k_step_distribution(spec, 200).tv_distance_to_uniform() <
          Rational(1, Integer("1000000000")));
    DecayEstimate est = decay_rate_estimate(spec, 60);
    CHECK(est.rate < 0);
    CHECK(est.k_used >= 2);
    // negative decay rate across a grid of generating aperiodic specs;
    // on Z_2 the lazy walk is exactly uniform after one step
    for (long long n = 3; n <= 12; ++n) {
        WalkSpec lazy;
        lazy.modulus = n;
        lazy.support[0] += Rational(1, 2);
        lazy.support[1 % n] += Rational(1, 4);
        lazy.support[(n - 1) % n] += Rational(1, 4);
        CHECK(decay_rate_estimate(lazy, 40).rate < 0);
    }
    CHECK_THROWS_AS(decay_rate_estimate(WalkSpec::parse(2, "0:1/2,1:1/2"), 20), Error);
    CHECK_THROWS_AS(decay_rate_estimate(WalkSpec::parse(2, "1:1"), 20), Error);   // periodic
    CHECK_THROWS_AS(decay_rate_estimate(WalkSpec::parse(1, "0:1"), 20), Error);   // exact zero
}

TEST_CASE("renormalized long runs stay close to a probability vector") {
    WalkSpec spec = WalkSpec::parse(5, "0:1/2,1:1/4,-1:1/4");
    WalkDistribution d = k_step_distribution(spec, 1200, 1000, 128);
    Rational err = rational_abs(d.total() - 1);
    CHECK(err < Rational(Integer(1), Integer(1) << 100));
    CHECK(d.tv_distance_to_uniform() < Rational(1, Integer("100000000000000000000")));
}

TEST_CASE("walk distribution matches the residue DP at even lengths") {
    // identities of even length 2k, broken into k two-letter pieces, walk on
    // Z_n with support {2: 1/4, -2: 1/4, 0: 1/2}
    for (long long n : {3LL, 5LL, 7LL}) {
        WalkSpec spec = WalkSpec::parse(n, "2:1/4,-2:1/4,0:1/2");
        for (long long k = 0; k <= 20; ++k) {
            WalkDistribution walk = k_step_distribution(spec, k);
            ResidueDistribution dp = x_residue_distribution_exact(n, 2 * k);
            for (long long g = 0; g < n; ++g)
                CHECK(walk.mass[static_cast<size_t>(g)] ==
                      Rational(dp.counts[static_cast<size_t>(g)], dp.total));
        }
    }
}
