#include "limdens/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "limdens/term.hpp"

namespace limdens {

namespace {

long long pos_mod(long long x, long long n) {
    long long r = x % n;
    return r < 0 ? r + n : r;
}

}  // namespace

void WalkSpec::validate() const {
    if (modulus < 1) throw Error("walk modulus must be >= 1");
    Rational sum = 0;
    for (const auto& [g, p] : support) {
        if (g < 0 || g >= modulus) throw Error("support element out of range");
        if (p < 0) throw Error("negative probability");
        sum += p;
    }
    if (sum != 1) throw Error("support probabilities must sum to 1");
}

bool WalkSpec::generates() const {
    long long g = modulus;
    for (const auto& [e, p] : support)
        if (p > 0) g = std::gcd(g, e);
    // the subgroup generated by the support is <gcd>; it is all of Z_n iff
    // gcd(e_1, ..., e_k, n) = 1
    return g == 1 || modulus == 1;
}

bool WalkSpec::aperiodic() const {
    auto it = support.find(0);
    return it != support.end() && it->second > 0;
}

WalkSpec WalkSpec::parse(long long n, const std::string& support_text) {
    WalkSpec spec;
    spec.modulus = n;
    size_t pos = 0;
    while (pos < support_text.size()) {
        size_t comma = support_text.find(',', pos);
        std::string item = support_text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                               : comma - pos);
        size_t colon = item.find(':');
        if (colon == std::string::npos) throw Error("support item needs the form g:p/q");
        long long g = std::stoll(item.substr(0, colon));
        std::string frac = item.substr(colon + 1);
        size_t slash = frac.find('/');
        Rational p = slash == std::string::npos
                         ? Rational(Integer(frac))
                         : Rational(Integer(frac.substr(0, slash)), Integer(frac.substr(slash + 1)));
        spec.support[pos_mod(g, n)] += p;
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    spec.validate();
    return spec;
}

Rational WalkDistribution::total() const {
    Rational s = 0;
    for (const Rational& p : mass) s += p;
    return s;
}

Rational WalkDistribution::tv_distance_to_uniform() const {
    Rational u(1, modulus), acc = 0;
    for (const Rational& p : mass) acc += rational_abs(p - u);
    return acc / 2;
}

Rational WalkDistribution::max_deviation_from_uniform() const {
    Rational u(1, modulus), best = 0;
    for (const Rational& p : mass) best = std::max(best, rational_abs(p - u));
    return best;
}

Rational round_rational_bits(const Rational& q, int bits) {
    Integer scale = Integer(1) << bits;
    Integer num = boost::multiprecision::numerator(q) * scale;
    const Integer& den = boost::multiprecision::denominator(q);
    Integer scaled = (2 * num + den) / (2 * den);  // round to nearest
    return Rational(scaled, scale);
}

WalkDistribution k_step_distribution(const WalkSpec& spec, long long k, long long renorm_threshold,
                                     int bits) {
    spec.validate();
    if (k < 0) throw Error("k must be nonnegative");
    const long long n = spec.modulus;
    WalkDistribution d;
    d.modulus = n;
    d.mass.assign(static_cast<size_t>(n), Rational(0));
    d.mass[0] = 1;
    bool renorm = k > renorm_threshold;
    for (long long step = 0; step < k; ++step) {
        std::vector<Rational> next(static_cast<size_t>(n), Rational(0));
        for (long long g = 0; g < n; ++g) {
            if (d.mass[static_cast<size_t>(g)] == 0) continue;
            for (const auto& [e, p] : spec.support)
                next[static_cast<size_t>(pos_mod(g + e, n))] += d.mass[static_cast<size_t>(g)] * p;
        }
        if (renorm)
            for (Rational& q : next) q = round_rational_bits(q, bits);
        d.mass = std::move(next);
    }
    return d;
}

DecayEstimate decay_rate_estimate(const WalkSpec& spec, long long k_max) {
    spec.validate();
    if (!spec.generates()) throw Error("support does not generate Z_n");
    if (!spec.aperiodic()) throw Error("periodic walk: identity not in the support");
    std::vector<double> xs, ys;
    WalkDistribution d;
    d.modulus = spec.modulus;
    d.mass.assign(static_cast<size_t>(spec.modulus), Rational(0));
    d.mass[0] = 1;
    for (long long k = 1; k <= k_max; ++k) {
        std::vector<Rational> next(static_cast<size_t>(spec.modulus), Rational(0));
        for (long long g = 0; g < spec.modulus; ++g) {
            if (d.mass[static_cast<size_t>(g)] == 0) continue;
            for (const auto& [e, p] : spec.support)
                next[static_cast<size_t>(pos_mod(g + e, spec.modulus))] +=
                    d.mass[static_cast<size_t>(g)] * p;
        }
        d.mass = std::move(next);
        if (k >= (k_max + 1) / 2) {
            Rational dev = d.max_deviation_from_uniform();
            if (dev == 0) throw Error("deviation hit exact zero; nothing to fit");
            xs.push_back(static_cast<double>(k));
            ys.push_back(std::log(to_double(dev)));
        }
    }
    if (xs.size() < 2) throw Error("not enough points for a decay fit");
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    DecayEstimate est;
    est.rate = sxy / sxx;
    est.k_used = static_cast<long long>(xs.size());
    double ss = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        double pred = my + est.rate * (xs[i] - mx);
        ss += (ys[i] - pred) * (ys[i] - pred);
    }
    est.residual = std::sqrt(ss / static_cast<double>(xs.size()));
    return est;
}

}  // namespace limdens
