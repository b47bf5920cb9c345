#pragma once

#include <map>
#include <optional>

#include "limdens/variety.hpp"

namespace limdens {

enum class CountingMode { UnorderedDistinct, OrderedWithRep, OrderedDistinct };

std::string counting_mode_name(CountingMode m);
std::optional<CountingMode> counting_mode_from_name(const std::string& name);

// Number of k-identity presentations with identities of length at most s:
// C(N,k), N^k, or k! C(N,k) over N = identity_count_upto.
Integer total_presentations(const Signature& sig, Family family, long long s, long long k,
                            CountingMode mode);

// P_s(alpha(n,1)) for basic bijective one-generator presentations:
// sum over n+2k <= s of 2*C(n+2k, k).
Integer alpha_count(long long n, long long s);

// Counts of the X statistic over a +/- alphabet.
struct ValueDistribution {
    std::map<long long, Integer> counts;
    Integer total = 0;

    Integer at(long long v) const;
};

ValueDistribution x_value_distribution_exact(long long m);  // one binomial row
ValueDistribution x_value_distribution_upto(long long s);   // rows 0..s summed

struct ResidueDistribution {
    long long modulus = 1;
    std::vector<Integer> counts;
    Integer total = 0;
};

// Residues of X modulo N over words of length exactly m / at most s, by
// dynamic programming over the length (append one +/- letter per step).
ResidueDistribution x_residue_distribution_exact(long long N, long long m);
ResidueDistribution x_residue_distribution(long long N, long long s);

// Ordered pairs (with repetition) of identities of length <= s whose X values
// are coprime in the GCD(0,x) = x sense, i.e. yield a 1-cycle. Aggregates the
// O(s^2) value pairs of two cumulative distributions.
Integer coprime_pair_count(long long s);
// Same number through the Mobius identity over common divisors; an
// independent algebraic route used as a cross-check and for sweeps.
Integer coprime_pair_count_mobius(long long s);

// Incremental coprime counts for a whole range of s.
class CoprimeSweep {
  public:
    // Extends the internal tables to the given s and returns the ordered
    // coprime pair count at that s (monotone calls only).
    Integer ordered_at(long long s);
    // Identities of length <= current s with |X| = 1 (diagonal 1-cycle pairs).
    const Integer& abs_one() const { return abs_one_; }

  private:
    long long cur_ = -1;
    std::vector<Integer> row_ = {};        // counts by |X| at the current length
    std::vector<Integer> cum_;             // cumulative counts by |X|
    Integer zero_ = 0;                     // cumulative count of X = 0
    Integer abs_one_ = 0;
    std::vector<std::optional<int>> mobius_;
};

// Greatest prime p with 2*3*...*p <= ln(s); empty for s with ln(s) < 2.
std::optional<long long> primorial_threshold(long long s);

// Exact distribution of Pi_1(t) - Pi_1(t') over two-sided identities, either
// at exact length s or cumulatively over lengths <= s. Each lhs-length split
// contributes n^s strings.
ValueDistribution pi1_difference_distribution(const GaifmanGroup& g, long long s,
                                              bool cumulative = false);

long long mobius(long long n);

}  // namespace limdens
