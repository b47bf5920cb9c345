#pragma once

#include <map>

#include "limdens/bigint.hpp"

namespace limdens {

// Random walk on Z_n driven by a finitely supported step measure.
struct WalkSpec {
    long long modulus = 1;
    std::map<long long, Rational> support;  // residue -> probability

    void validate() const;  // probabilities sum to 1, entries reduced mod n
    bool generates() const;       // support generates Z_n
    bool aperiodic() const;       // identity element carries mass
    static WalkSpec parse(long long n, const std::string& support_text);  // "0:1/2,1:1/4,-1:1/4"
};

struct WalkDistribution {
    long long modulus = 1;
    std::vector<Rational> mass;

    Rational total() const;
    Rational tv_distance_to_uniform() const;   // (1/2) sum |mu(g) - 1/n|
    Rational max_deviation_from_uniform() const;
};

// mu^(k) by exact convolution; k = 0 is the point mass at 0. For k beyond the
// renorm threshold the rationals are rounded to `bits` binary digits after
// each step (round-to-nearest), keeping magnitudes trustworthy.
WalkDistribution k_step_distribution(const WalkSpec& spec, long long k,
                                     long long renorm_threshold = 1000, int bits = 256);

// Round to the nearest multiple of 2^-bits; the renormalization applied to
// long walk runs.
Rational round_rational_bits(const Rational& q, int bits);

struct DecayEstimate {
    double rate = 0;       // least-squares slope of log max-deviation vs k
    double residual = 0;   // RMS residual of the fit
    long long k_used = 0;  // points entering the fit
};

// Fits the exponential decay of max_g |mu^(k)(g) - 1/n| over the tail of
// k <= k_max; errors when the walk is periodic or hits exact uniformity.
DecayEstimate decay_rate_estimate(const WalkSpec& spec, long long k_max);

}  // namespace limdens
