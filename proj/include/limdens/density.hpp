#pragma once

#include "limdens/counting.hpp"
#include "limdens/fo.hpp"

namespace limdens {

enum class Strategy { Enumerate, Aggregate, ClosedForm };

std::string strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(const std::string& name);

struct DensityPoint {
    long long s = 0;
    Integer count;
    Integer total;

    Rational density() const { return total == 0 ? Rational(0) : Rational(count, total); }
};

struct DensitySeries {
    std::string family_label;
    std::string sentence_label;
    std::string strategy_label;
    long long k = 1;
    CountingMode mode = CountingMode::UnorderedDistinct;
    std::vector<DensityPoint> points;

    std::string to_csv() const;  // s,total,count,density_num,density_den,density_float
};

// P_s(phi)/P_s for every s <= s_max. The enumerate strategy classifies every
// presentation and evaluates the invariant on the descriptor; the aggregate
// strategy works from exact-count distributions. Both are exact.
DensitySeries density_series(Family family, const Invariant& inv, long long s_max,
                             Strategy strategy, long long k = 1,
                             CountingMode mode = CountingMode::UnorderedDistinct);

struct SubsequenceReport {
    Rational even_value, odd_value;   // last point per parity
    bool even_stabilized = false;     // last `window` points within tol of the last
    bool odd_stabilized = false;
    bool oscillation = false;         // parity values differ by more than tol
    Rational tolerance;
    int window = 10;

    std::string to_json_string() const;
};

SubsequenceReport even_odd_limits(const DensitySeries& series, const Rational& tol,
                                  int window = 10);

struct CoprimeDensityResult {
    DensitySeries series;
    SubsequenceReport report;
    double even_reference = 0;  // 5/9 * prod_{3<=p}(1 - 1/p^2)
    double odd_reference = 0;   // 8/9 * prod_{3<=p}(1 - 1/p^2)
};

// Density of the 1-cycle sentence for two-identity bijective presentations,
// on a sampling grid (all s <= 60, then parity pairs at roughly geometric
// steps, always including s_max - 1 and s_max).
CoprimeDensityResult coprime_density(long long s_max,
                                     CountingMode mode = CountingMode::OrderedWithRep);

// prod over odd primes p <= limit of (1 - 1/p^2), as a double.
double odd_prime_square_product(long long limit = 1000000);

// Exact densities of the identity classes A (length >= 2r+1 witnesses making
// f fix the constant) and B (the class keeping the structure free), with
// limits 1/n^{2r+1} and 1/n^{2r}.
std::pair<DensitySeries, DensitySeries> constants_like_density(long long n, long long r,
                                                               long long s_max);

struct ConstantExampleReport {
    DensitySeries s1, s2, s3;  // class shares, limits 1/4, 1/4, 1/2
    DensitySeries c_fixed;     // density of c = S(c), limit 1/6
};

ConstantExampleReport constant_example_densities(long long s_max);

// Density series for the non-injectivity-style sentence phi in the free
// n-symbol unary variety with m generators and k identities, by the identity
// class counts of the corresponding proofs (exact for n = 1, k = 1).
DensitySeries multi_unary_phi_density(long long n, long long m, long long k, long long s_max);

}  // namespace limdens
