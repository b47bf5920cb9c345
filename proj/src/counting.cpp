#include "limdens/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace limdens {

std::string counting_mode_name(CountingMode m) {
    switch (m) {
        case CountingMode::UnorderedDistinct: return "unordered-distinct";
        case CountingMode::OrderedWithRep: return "ordered-with-rep";
        case CountingMode::OrderedDistinct: return "ordered-distinct";
    }
    return "?";
}

std::optional<CountingMode> counting_mode_from_name(const std::string& name) {
    if (name == "unordered-distinct" || name == "unordered") return CountingMode::UnorderedDistinct;
    if (name == "ordered-with-rep" || name == "ordered") return CountingMode::OrderedWithRep;
    if (name == "ordered-distinct") return CountingMode::OrderedDistinct;
    return std::nullopt;
}

namespace {

Integer binomial_integer(const Integer& n, long long k) {
    if (k < 0 || n < 0) return 0;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - (k - i);
        r /= i;
    }
    return r;
}

Integer factorial(long long k) {
    Integer r = 1;
    for (long long i = 2; i <= k; ++i) r *= i;
    return r;
}

}  // namespace

Integer total_presentations(const Signature& sig, Family family, long long s, long long k,
                            CountingMode mode) {
    if (s < 0 || k < 1) throw Error("total_presentations needs s >= 0 and k >= 1");
    Integer n = identity_count_upto(sig, family, s);
    switch (mode) {
        case CountingMode::UnorderedDistinct: return binomial_integer(n, k);
        case CountingMode::OrderedWithRep: return ipow(n, static_cast<unsigned long>(k));
        case CountingMode::OrderedDistinct: return factorial(k) * binomial_integer(n, k);
    }
    return 0;
}

Integer alpha_count(long long n, long long s) {
    if (n < 1) throw Error("alpha_count needs n >= 1");
    Integer sum = 0;
    for (long long k = 0; n + 2 * k <= s; ++k) sum += 2 * binomial(n + 2 * k, k);
    return sum;
}

Integer ValueDistribution::at(long long v) const {
    auto it = counts.find(v);
    return it == counts.end() ? Integer(0) : it->second;
}

ValueDistribution x_value_distribution_exact(long long m) {
    ValueDistribution d;
    Integer c = 1;
    for (long long j = 0; j <= m; ++j) {
        d.counts[2 * j - m] = c;
        d.total += c;
        c = c * (m - j) / (j + 1);
    }
    return d;
}

ValueDistribution x_value_distribution_upto(long long s) {
    ValueDistribution d;
    if (s < 0) return d;
    std::vector<Integer> row{1};  // pascal row C(m, j)
    for (long long m = 0; m <= s; ++m) {
        for (long long j = 0; j <= m; ++j) {
            d.counts[2 * j - m] += row[static_cast<size_t>(j)];
            d.total += row[static_cast<size_t>(j)];
        }
        std::vector<Integer> next(static_cast<size_t>(m + 2), 1);
        for (long long j = 1; j <= m; ++j)
            next[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)] + row[static_cast<size_t>(j)];
        row = std::move(next);
    }
    return d;
}

ResidueDistribution x_residue_distribution_exact(long long N, long long m) {
    if (N < 1) throw Error("modulus must be positive");
    std::vector<Integer> cur(static_cast<size_t>(N), 0);
    cur[0] = 1;
    for (long long step = 0; step < m; ++step) {
        std::vector<Integer> next(static_cast<size_t>(N), 0);
        for (long long r = 0; r < N; ++r) {
            if (cur[static_cast<size_t>(r)] == 0) continue;
            next[static_cast<size_t>((r + 1) % N)] += cur[static_cast<size_t>(r)];
            next[static_cast<size_t>((r - 1 + N) % N)] += cur[static_cast<size_t>(r)];
        }
        cur = std::move(next);
    }
    ResidueDistribution d;
    d.modulus = N;
    d.counts = std::move(cur);
    for (const Integer& c : d.counts) d.total += c;
    return d;
}

ResidueDistribution x_residue_distribution(long long N, long long s) {
    if (N < 1) throw Error("modulus must be positive");
    ResidueDistribution d;
    d.modulus = N;
    d.counts.assign(static_cast<size_t>(N), 0);
    std::vector<Integer> cur(static_cast<size_t>(N), 0);
    cur[0] = 1;
    for (long long m = 0; m <= s; ++m) {
        if (m > 0) {
            std::vector<Integer> next(static_cast<size_t>(N), 0);
            for (long long r = 0; r < N; ++r) {
                if (cur[static_cast<size_t>(r)] == 0) continue;
                next[static_cast<size_t>((r + 1) % N)] += cur[static_cast<size_t>(r)];
                next[static_cast<size_t>((r - 1 + N) % N)] += cur[static_cast<size_t>(r)];
            }
            cur = std::move(next);
        }
        for (long long r = 0; r < N; ++r) d.counts[static_cast<size_t>(r)] += cur[static_cast<size_t>(r)];
    }
    for (const Integer& c : d.counts) d.total += c;
    return d;
}

long long mobius(long long n) {
    if (n < 1) throw Error("mobius needs n >= 1");
    long long result = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

namespace {

// Cumulative counts grouped by |X|: returns (count of X = 0, counts of |X| = d).
std::pair<Integer, std::vector<Integer>> abs_value_counts(long long s) {
    ValueDistribution d = x_value_distribution_upto(s);
    Integer zero = d.at(0);
    std::vector<Integer> abs(static_cast<size_t>(std::max<long long>(s, 1)) + 1, 0);
    for (const auto& [v, c] : d.counts)
        if (v != 0) abs[static_cast<size_t>(std::llabs(v))] += c;
    return {zero, abs};
}

}  // namespace

Integer coprime_pair_count(long long s) {
    auto [zero, abs] = abs_value_counts(s);
    Integer sum = 0;
    for (long long d1 = 1; d1 <= s; ++d1) {
        if (abs[static_cast<size_t>(d1)] == 0) continue;
        for (long long d2 = 1; d2 <= s; ++d2) {
            if (std::gcd(d1, d2) != 1) continue;
            if (abs[static_cast<size_t>(d2)] == 0) continue;
            sum += abs[static_cast<size_t>(d1)] * abs[static_cast<size_t>(d2)];
        }
    }
    if (s >= 1) sum += 2 * zero * abs[1];
    return sum;
}

Integer coprime_pair_count_mobius(long long s) {
    auto [zero, abs] = abs_value_counts(s);
    Integer sum = 0;
    for (long long d = 1; d <= s; ++d) {
        long long mu = mobius(d);
        if (mu == 0) continue;
        Integer a = 0;
        for (long long e = d; e <= s; e += d) a += abs[static_cast<size_t>(e)];
        sum += mu * a * a;
    }
    if (s >= 1) sum += 2 * zero * abs[1];
    return sum;
}

Integer CoprimeSweep::ordered_at(long long s) {
    if (s < cur_) throw Error("CoprimeSweep requires nondecreasing s");
    if (cum_.size() < static_cast<size_t>(s) + 1) cum_.resize(static_cast<size_t>(s) + 1, 0);
    while (cur_ < s) {
        ++cur_;
        if (cur_ == 0) {
            row_.assign(1, 1);  // the empty word, X = 0
        } else {
            // folded +/- walk: row_[v] counts words with X = v >= 0
            std::vector<Integer> next(static_cast<size_t>(cur_) + 1, 0);
            next[0] = row_.size() > 1 ? Integer(2 * row_[1]) : Integer(0);
            for (long long v = 1; v <= cur_; ++v) {
                Integer acc = v - 1 < static_cast<long long>(row_.size()) ? row_[static_cast<size_t>(v - 1)] : Integer(0);
                if (v + 1 < static_cast<long long>(row_.size())) acc += row_[static_cast<size_t>(v + 1)];
                next[static_cast<size_t>(v)] = acc;
            }
            row_ = std::move(next);
        }
        zero_ += row_[0];
        for (long long v = 1; v < static_cast<long long>(row_.size()); ++v)
            cum_[static_cast<size_t>(v)] += 2 * row_[static_cast<size_t>(v)];
        if (row_.size() > 1) abs_one_ = cum_[1];
    }
    if (mobius_.size() < static_cast<size_t>(s) + 1) mobius_.resize(static_cast<size_t>(s) + 1);
    Integer sum = 0;
    for (long long d = 1; d <= s; ++d) {
        if (!mobius_[static_cast<size_t>(d)]) mobius_[static_cast<size_t>(d)] = static_cast<int>(mobius(d));
        int mu = *mobius_[static_cast<size_t>(d)];
        if (mu == 0) continue;
        Integer a = 0;
        for (long long e = d; e <= s; e += d) a += cum_[static_cast<size_t>(e)];
        sum += mu * a * a;
    }
    if (s >= 1) sum += 2 * zero_ * cum_[1];
    return sum;
}

std::optional<long long> primorial_threshold(long long s) {
    if (s < 1) throw Error("primorial_threshold needs s >= 1");
    double bound = std::log(static_cast<double>(s));
    if (bound < 2.0) return std::nullopt;
    long long best = 0;
    double primorial = 1.0;
    for (long long p = 2; ; ++p) {
        bool prime = p >= 2;
        for (long long q = 2; q * q <= p; ++q)
            if (p % q == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        primorial *= static_cast<double>(p);
        if (primorial > bound) break;
        best = p;
    }
    return best == 0 ? std::nullopt : std::optional<long long>(best);
}

namespace {

struct OffsetVec {
    long long lo = 0;
    std::vector<Integer> c;

    Integer at(long long v) const {
        long long i = v - lo;
        if (i < 0 || i >= static_cast<long long>(c.size())) return 0;
        return c[static_cast<size_t>(i)];
    }
};

OffsetVec convolve_step(const OffsetVec& f, const std::vector<long long>& proj) {
    long long pmin = *std::min_element(proj.begin(), proj.end());
    long long pmax = *std::max_element(proj.begin(), proj.end());
    OffsetVec g;
    g.lo = f.lo + pmin;
    g.c.assign(f.c.size() + static_cast<size_t>(pmax - pmin), 0);
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        for (long long p : proj) g.c[i + static_cast<size_t>(p - pmin)] += f.c[i];
    }
    return g;
}

}  // namespace

ValueDistribution pi1_difference_distribution(const GaifmanGroup& g, long long s, bool cumulative) {
    if (!g.infinite()) throw Error("pi1 difference distribution needs rank >= 1");
    if (s < 0) throw Error("length must be nonnegative");
    std::vector<long long> proj = g.pi1;
    // f[j] = projection distribution of a j-letter word.
    std::vector<OffsetVec> f(static_cast<size_t>(s) + 1);
    f[0].lo = 0;
    f[0].c = {1};
    for (long long j = 1; j <= s; ++j) f[static_cast<size_t>(j)] = convolve_step(f[static_cast<size_t>(j - 1)], proj);

    ValueDistribution out;
    auto add_length = [&](long long len) {
        for (long long l = 0; l <= len; ++l) {
            const OffsetVec& a = f[static_cast<size_t>(l)];
            const OffsetVec& b = f[static_cast<size_t>(len - l)];
            for (size_t i = 0; i < a.c.size(); ++i) {
                if (a.c[i] == 0) continue;
                for (size_t jj = 0; jj < b.c.size(); ++jj) {
                    if (b.c[jj] == 0) continue;
                    // value = Pi1(t) - Pi1(t')
                    long long v = (a.lo + static_cast<long long>(i)) - (b.lo + static_cast<long long>(jj));
                    Integer prod = a.c[i] * b.c[jj];
                    out.counts[v] += prod;
                    out.total += prod;
                }
            }
        }
    };
    if (cumulative)
        for (long long len = 0; len <= s; ++len) add_length(len);
    else
        add_length(s);
    return out;
}

}  // namespace limdens
