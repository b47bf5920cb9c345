#include "limdens/density.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "limdens/structure.hpp"

namespace limdens {

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Enumerate: return "enumerate";
        case Strategy::Aggregate: return "aggregate";
        case Strategy::ClosedForm: return "closed-form";
    }
    return "?";
}

std::optional<Strategy> strategy_from_name(const std::string& name) {
    if (name == "enumerate") return Strategy::Enumerate;
    if (name == "aggregate") return Strategy::Aggregate;
    if (name == "closed-form" || name == "closed") return Strategy::ClosedForm;
    return std::nullopt;
}

std::string DensitySeries::to_csv() const {
    std::string out = "s,total,count,density_num,density_den,density_float\n";
    for (const DensityPoint& p : points) {
        Rational d = p.density();
        out += std::to_string(p.s) + "," + p.total.str() + "," + p.count.str() + "," +
               boost::multiprecision::numerator(d).str() + "," +
               boost::multiprecision::denominator(d).str() + "," + decimal_string(d) + "\n";
    }
    return out;
}

namespace {

DensityPoint point(long long s, Integer count, Integer total) {
    return DensityPoint{s, std::move(count), std::move(total)};
}

// --- enumerate strategy -------------------------------------------------------

Integer enumerate_count_at_length(Family family, const Invariant& inv, int length) {
    Integer cnt = 0;
    Signature sig;
    switch (family) {
        case Family::BasicBijective: {
            sig = Signature::bijective();
            enumerate_identities(sig, family, length, [&](const Identity& id) {
                if (eval_invariant(build_bijective(id, sig), inv)) ++cnt;
            });
            return cnt;
        }
        case Family::SingleUnary: {
            sig = Signature::single_unary();
            enumerate_identities(sig, family, length, [&](const Identity& id) {
                if (eval_invariant(build_unary(id), inv)) ++cnt;
            });
            return cnt;
        }
        case Family::AbelianGroups: {
            enumerate_relators(length, [&](const Relator& r) {
                if (eval_invariant(build_abelian(r), inv)) ++cnt;
            });
            return cnt;
        }
        case Family::ConstantBijectiveS3c: {
            sig = Signature::s3c();
            enumerate_identities(sig, family, length, [&](const Identity& id) {
                if (eval_invariant(build_constant_example(id), inv)) ++cnt;
            });
            return cnt;
        }
        default:
            throw Error("enumerate strategy unsupported for family " + family_name(family));
    }
}

DensitySeries enumerate_two_id(const Invariant& inv, long long s_max, CountingMode mode) {
    if (inv.kind != Invariant::Kind::OneCycle)
        throw Error("two-identity enumeration supports the OneCycle sentence");
    Signature sig = Signature::bijective();
    DensitySeries out;
    out.k = 2;
    out.mode = mode;
    std::vector<long long> xs;  // X value of every identity of length <= s
    std::vector<DensityPoint>& pts = out.points;
    for (long long s = 0; s <= s_max; ++s) {
        enumerate_identities(sig, Family::BasicBijective, static_cast<int>(s),
                             [&](const Identity& id) { xs.push_back(x_statistic(id.lhs, sig)); });
        Integer ordered = 0, diag = 0;
        for (long long x1 : xs)
            for (long long x2 : xs)
                if (cycle_gcd(x1, x2) == 1) ++ordered;
        for (long long x : xs)
            if (std::llabs(x) == 1) ++diag;
        Integer count, total;
        Integer n = Integer(xs.size());
        switch (mode) {
            case CountingMode::OrderedWithRep:
                count = ordered;
                total = n * n;
                break;
            case CountingMode::OrderedDistinct:
                count = ordered - diag;
                total = n * (n - 1);
                break;
            case CountingMode::UnorderedDistinct:
                count = (ordered - diag) / 2;
                total = n * (n - 1) / 2;
                break;
        }
        pts.push_back(point(s, count, total));
    }
    return out;
}

// --- aggregate strategy -------------------------------------------------------

// Incremental accumulator for P_s(alpha(n,1)) = sum 2 C(n+2k, k).
struct AlphaAccum {
    long long n;
    long long k = 0;
    Integer binom = 1;  // C(n + 2k, k)
    Integer cum = 0;

    explicit AlphaAccum(long long n_) : n(n_) {}
    void advance_to(long long s) {
        while (n + 2 * k <= s) {
            cum += 2 * binom;
            ++k;
            binom = binom * (n + 2 * k) * (n + 2 * k - 1) / (k * (n + k));
        }
    }
};

DensitySeries aggregate_bijective(const Invariant& inv, long long s_max) {
    using K = Invariant::Kind;
    Signature sig = Signature::bijective();
    DensitySeries out;
    std::vector<AlphaAccum> accums;
    long long term_d = 0;
    bool term_mode = false;
    if (inv.kind == K::BijAlpha && inv.k == 1) accums.emplace_back(inv.n);
    else if (inv.kind == K::OneCycle) accums.emplace_back(1);
    else if (inv.kind == K::BijBeta)
        for (long long m = 1; m <= inv.n; ++m) accums.emplace_back(m);
    else if (inv.kind == K::TermEq || inv.kind == K::TermNeq) {
        term_mode = true;
        term_d = x_statistic(parse_term(inv.u_text, sig), sig) -
                 x_statistic(parse_term(inv.v_text, sig), sig);
    } else if (!(inv.kind == K::BijAlpha && inv.k >= 2) && inv.kind != K::NotInjective) {
        throw Error("aggregate strategy unsupported for " + inv.name() + " on bijective");
    }

    // For TermEq with X(u) != X(v): count identities whose cycle size divides
    // the difference, one |X| = d accumulator per divisor.
    std::vector<AlphaAccum> divisor_accums;
    if (term_mode && term_d != 0)
        for (long long d = 1; d <= std::llabs(term_d); ++d)
            if (term_d % d == 0) divisor_accums.emplace_back(d);

    Integer total = 0;
    for (long long s = 0; s <= s_max; ++s) {
        total += ipow(2, static_cast<unsigned long>(s));
        Integer count = 0;
        if (term_mode) {
            if (term_d == 0) {
                count = total;
            } else {
                for (AlphaAccum& a : divisor_accums) {
                    a.advance_to(s);
                    count += a.cum;
                }
            }
            if (inv.kind == K::TermNeq) count = total - count;
        } else if (inv.kind == K::BijBeta) {
            Integer cycles_le_n = 0;
            for (AlphaAccum& a : accums) {
                a.advance_to(s);
                cycles_le_n += a.cum;
            }
            count = total - cycles_le_n;
        } else if (!accums.empty()) {
            accums[0].advance_to(s);
            count = accums[0].cum;
        }
        out.points.push_back(point(s, count, total));
    }
    return out;
}

DensitySeries aggregate_unary(const Invariant& inv, long long s_max) {
    DensitySeries out;
    Integer total = 0, cum = 0;
    for (long long s = 0; s <= s_max; ++s) {
        total += s + 1;
        for (long long r = 0; r <= s; ++r) {
            long long rp = s - r;
            StructureDescriptor d;
            if (r == rp) d = StructureDescriptor{Family::SingleUnary, OmegaChain{}};
            else if (std::min(r, rp) == 0)
                d = StructureDescriptor{Family::SingleUnary, Cycle{std::max(r, rp)}};
            else
                d = StructureDescriptor{Family::SingleUnary,
                                        RhoShape{std::min(r, rp), std::llabs(r - rp)}};
            if (eval_invariant(d, inv)) ++cum;
        }
        out.points.push_back(point(s, cum, total));
    }
    return out;
}

DensitySeries aggregate_abelian(const Invariant& inv, long long s_max) {
    switch (inv.kind) {
        case Invariant::Kind::SzAlpha:
        case Invariant::Kind::SzBeta:
        case Invariant::Kind::SzGamma:
        case Invariant::Kind::SzDelta:
            break;
        default:
            throw Error("aggregate strategy on abelian supports szmielew invariants");
    }
    DensitySeries out;
    // folded +/- walk by |X|, cumulated over lengths
    std::vector<Integer> row{1}, cum_abs(static_cast<size_t>(s_max) + 2, 0);
    Integer zero_cum = 0, total = 0;
    // truth per group order (m = 0 encodes Z)
    std::vector<char> truth(static_cast<size_t>(s_max) + 2, 0);
    truth[0] = szmielew_eval(std::nullopt, inv) ? 1 : 0;
    for (long long m = 1; m <= s_max; ++m) truth[static_cast<size_t>(m)] = szmielew_eval(m, inv) ? 1 : 0;
    for (long long s = 0; s <= s_max; ++s) {
        if (s > 0) {
            std::vector<Integer> next(static_cast<size_t>(s) + 1, 0);
            next[0] = row.size() > 1 ? Integer(2 * row[1]) : Integer(0);
            for (long long v = 1; v <= s; ++v) {
                Integer acc = v - 1 < static_cast<long long>(row.size()) ? row[static_cast<size_t>(v - 1)] : Integer(0);
                if (v + 1 < static_cast<long long>(row.size())) acc += row[static_cast<size_t>(v + 1)];
                next[static_cast<size_t>(v)] = std::move(acc);
            }
            row = std::move(next);
        }
        zero_cum += row[0];
        for (long long v = 1; v < static_cast<long long>(row.size()); ++v)
            cum_abs[static_cast<size_t>(v)] += 2 * row[static_cast<size_t>(v)];
        total += ipow(2, static_cast<unsigned long>(s));
        Integer count = truth[0] ? zero_cum : Integer(0);
        for (long long v = 1; v <= s; ++v)
            if (truth[static_cast<size_t>(v)]) count += cum_abs[static_cast<size_t>(v)];
        out.points.push_back(point(s, count, total));
    }
    return out;
}

DensitySeries aggregate_two_id(long long s_max, CountingMode mode) {
    DensitySeries out;
    out.k = 2;
    out.mode = mode;
    CoprimeSweep sweep;
    for (long long s = 0; s <= s_max; ++s) {
        Integer ordered = sweep.ordered_at(s);
        Integer diag = sweep.abs_one();
        Integer n = ipow(2, static_cast<unsigned long>(s + 1)) - 1;
        Integer count, total;
        switch (mode) {
            case CountingMode::OrderedWithRep:
                count = ordered;
                total = n * n;
                break;
            case CountingMode::OrderedDistinct:
                count = ordered - diag;
                total = n * (n - 1);
                break;
            case CountingMode::UnorderedDistinct:
                count = (ordered - diag) / 2;
                total = n * (n - 1) / 2;
                break;
        }
        out.points.push_back(point(s, count, total));
    }
    return out;
}

}  // namespace

DensitySeries density_series(Family family, const Invariant& inv, long long s_max,
                             Strategy strategy, long long k, CountingMode mode) {
    if (family == Family::TwoIdBijective && k == 1) k = 2;
    if (family != Family::TwoIdBijective && k != 1)
        throw Error("k >= 2 presentations are supported for the two-identity bijective family");
    DensitySeries out;
    if (family == Family::TwoIdBijective) {
        if (k != 2) throw Error("two-identity family needs k = 2");
        out = strategy == Strategy::Enumerate ? enumerate_two_id(inv, s_max, mode)
                                              : aggregate_two_id(s_max, mode);
    } else if (strategy == Strategy::Enumerate) {
        Integer total = 0, cum = 0;
        for (long long s = 0; s <= s_max; ++s) {
            cum += enumerate_count_at_length(family, inv, static_cast<int>(s));
            Signature fam_sig;  // totals use the closed forms, checked elsewhere
            switch (family) {
                case Family::BasicBijective: fam_sig = Signature::bijective(); break;
                case Family::SingleUnary: fam_sig = Signature::single_unary(); break;
                case Family::AbelianGroups: fam_sig = Signature::bijective(); break;
                case Family::ConstantBijectiveS3c: fam_sig = Signature::s3c(); break;
                default: throw Error("unsupported family");
            }
            total = identity_count_upto(fam_sig, family, s);
            out.points.push_back(point(s, cum, total));
        }
    } else if (strategy == Strategy::Aggregate) {
        switch (family) {
            case Family::BasicBijective: out = aggregate_bijective(inv, s_max); break;
            case Family::SingleUnary: out = aggregate_unary(inv, s_max); break;
            case Family::AbelianGroups: out = aggregate_abelian(inv, s_max); break;
            default:
                throw Error("aggregate strategy unsupported for family " + family_name(family));
        }
    } else {
        throw Error("closed-form series come from the dedicated operations");
    }
    out.family_label = family_name(family);
    out.sentence_label = inv.name();
    out.strategy_label = strategy_name(strategy);
    out.k = family == Family::TwoIdBijective ? 2 : 1;
    out.mode = mode;
    return out;
}

SubsequenceReport even_odd_limits(const DensitySeries& series, const Rational& tol, int window) {
    std::vector<Rational> even, odd;
    for (const DensityPoint& p : series.points) (p.s % 2 == 0 ? even : odd).push_back(p.density());
    if (static_cast<int>(even.size()) < window || static_cast<int>(odd.size()) < window)
        throw Error("even_odd_limits needs at least " + std::to_string(window) +
                    " points per parity");
    auto stabilized = [&](const std::vector<Rational>& v) {
        const Rational& last = v.back();
        for (size_t i = v.size() - static_cast<size_t>(window); i < v.size(); ++i)
            if (rational_abs(v[i] - last) > tol) return false;
        return true;
    };
    SubsequenceReport r;
    r.even_value = even.back();
    r.odd_value = odd.back();
    r.even_stabilized = stabilized(even);
    r.odd_stabilized = stabilized(odd);
    r.oscillation = rational_abs(r.even_value - r.odd_value) > tol;
    r.tolerance = tol;
    r.window = window;
    return r;
}

std::string SubsequenceReport::to_json_string() const {
    nlohmann::ordered_json j;
    j["even_value"] = decimal_string(even_value);
    j["odd_value"] = decimal_string(odd_value);
    j["even_value_exact"] = {boost::multiprecision::numerator(even_value).str(),
                             boost::multiprecision::denominator(even_value).str()};
    j["odd_value_exact"] = {boost::multiprecision::numerator(odd_value).str(),
                            boost::multiprecision::denominator(odd_value).str()};
    j["even_stabilized"] = even_stabilized;
    j["odd_stabilized"] = odd_stabilized;
    j["oscillation"] = oscillation;
    j["tolerance"] = decimal_string(tolerance);
    j["window"] = window;
    return j.dump(2) + "\n";
}

double odd_prime_square_product(long long limit) {
    std::vector<char> sieve(static_cast<size_t>(limit) + 1, 1);
    double prod = 1.0;
    for (long long p = 2; p <= limit; ++p) {
        if (!sieve[static_cast<size_t>(p)]) continue;
        for (long long q = p * p; q <= limit; q += p) sieve[static_cast<size_t>(q)] = 0;
        if (p >= 3) prod *= 1.0 - 1.0 / (static_cast<double>(p) * static_cast<double>(p));
    }
    return prod;
}

CoprimeDensityResult coprime_density(long long s_max, CountingMode mode) {
    if (s_max < 2) throw Error("coprime_density needs s_max >= 2");
    std::vector<long long> grid;
    for (long long s = 0; s <= std::min<long long>(60, s_max); ++s) grid.push_back(s);
    long long g = 70;
    while (g + 1 < s_max - 1) {
        grid.push_back(g);
        grid.push_back(g + 1);
        g += std::max<long long>(2, g / 4);
        if (g % 2) ++g;
    }
    if (s_max - 1 > grid.back()) grid.push_back(s_max - 1);
    if (s_max > grid.back()) grid.push_back(s_max);

    CoprimeDensityResult res;
    res.series.family_label = family_name(Family::TwoIdBijective);
    res.series.sentence_label = "OneCycle";
    res.series.strategy_label = "aggregate";
    res.series.k = 2;
    res.series.mode = mode;
    CoprimeSweep sweep;
    for (long long s : grid) {
        Integer ordered = sweep.ordered_at(s);
        Integer diag = sweep.abs_one();
        Integer n = ipow(2, static_cast<unsigned long>(s + 1)) - 1;
        Integer count, total;
        switch (mode) {
            case CountingMode::OrderedWithRep: count = ordered; total = n * n; break;
            case CountingMode::OrderedDistinct: count = ordered - diag; total = n * (n - 1); break;
            case CountingMode::UnorderedDistinct:
                count = (ordered - diag) / 2;
                total = n * (n - 1) / 2;
                break;
        }
        res.series.points.push_back(point(s, count, total));
    }
    double prod = odd_prime_square_product();
    res.even_reference = 5.0 / 9.0 * prod;
    res.odd_reference = 8.0 / 9.0 * prod;
    res.report = even_odd_limits(res.series, Rational(1, 10));
    return res;
}

namespace {

// T_n(s) = sum_{m<=s} (m+1) n^m as a running table; T_n(s<0) = 0.
struct WeightedGeom {
    long long n;
    std::vector<Integer> vals{Integer(1)};  // vals[s] = T_n(s)
    Integer npow = 1;

    explicit WeightedGeom(long long n_) : n(n_) {}
    const Integer& at(long long s) {
        static const Integer zero = 0;
        if (s < 0) return zero;
        while (static_cast<long long>(vals.size()) <= s) {
            long long m = static_cast<long long>(vals.size());
            npow *= n;
            vals.push_back(vals.back() + Integer(m + 1) * npow);
        }
        return vals[static_cast<size_t>(s)];
    }
};

}  // namespace

std::pair<DensitySeries, DensitySeries> constants_like_density(long long n, long long r,
                                                               long long s_max) {
    if (n < 2) throw Error("constants-like densities need n >= 2 symbols");
    if (r < 1) throw Error("the constant term needs length r >= 1");
    WeightedGeom t(n);
    DensitySeries a, b;
    a.family_label = b.family_label = "constants-like n=" + std::to_string(n) + " r=" + std::to_string(r);
    a.sentence_label = "class-A";
    b.sentence_label = "class-B";
    a.strategy_label = b.strategy_label = "closed-form";
    for (long long s = 0; s <= s_max; ++s) {
        Integer total = t.at(s);
        a.points.push_back(point(s, t.at(s - 2 * r - 1), total));
        b.points.push_back(point(s, t.at(s - 2 * r), total));
    }
    return {std::move(a), std::move(b)};
}

ConstantExampleReport constant_example_densities(long long s_max) {
    ConstantExampleReport rep;
    for (DensitySeries* s : {&rep.s1, &rep.s2, &rep.s3, &rep.c_fixed}) {
        s->family_label = family_name(Family::ConstantBijectiveS3c);
        s->strategy_label = "aggregate";
    }
    rep.s1.sentence_label = "class-S1";
    rep.s2.sentence_label = "class-S2";
    rep.s3.sentence_label = "class-S3";
    rep.c_fixed.sentence_label = "TermEq u=c v=S(c)";

    std::vector<Integer> row{1, 0, 0};  // +/- walk mod 3
    Integer t2 = 0;                     // T_2(s)
    Integer pw = 1;               // 2^s
    Integer c_cnt = 0;
    for (long long s = 0; s <= s_max; ++s) {
        if (s > 0) {
            pw *= 2;
            std::vector<Integer> next(3);
            for (int rr = 0; rr < 3; ++rr)
                next[static_cast<size_t>(rr)] =
                    row[static_cast<size_t>((rr + 1) % 3)] + row[static_cast<size_t>((rr + 2) % 3)];
            row = std::move(next);
        }
        t2 += Integer(s + 1) * pw;
        // identities in S_2 whose X difference is not divisible by 3 give the
        // 1-cycle on c, i.e. c = S(c)
        c_cnt += Integer(s + 1) * (pw - row[0]);
        Integer total = 4 * t2;
        rep.s1.points.push_back(point(s, t2, total));
        rep.s2.points.push_back(point(s, t2, total));
        rep.s3.points.push_back(point(s, 2 * t2, total));
        rep.c_fixed.points.push_back(point(s, c_cnt, total));
    }
    return rep;
}

DensitySeries multi_unary_phi_density(long long n, long long m, long long k, long long s_max) {
    if (n < 1 || m < 1 || k < 1) throw Error("multi_unary_phi_density needs n, m, k >= 1");
    DensitySeries out;
    out.family_label = family_name(Family::MultiUnaryFree) + " n=" + std::to_string(n) +
                       " m=" + std::to_string(m);
    out.sentence_label = "Phi";
    out.k = k;
    out.strategy_label = n == 1 && k == 1 ? "aggregate" : "closed-form";

    auto binom_big = [](const Integer& nn, long long kk) {
        Integer r = 1;
        for (long long i = 1; i <= kk; ++i) {
            r *= nn - (kk - i);
            r /= i;
        }
        return r;
    };

    Integer total_ids = 0, good = 0, false_cum = 0;
    Integer npow = 1;
    for (long long s = 0; s <= s_max; ++s) {
        if (s > 0) npow *= n;
        total_ids += Integer(m) * m * (s + 1) * npow;
        if (n == 1) {
            long long u = s == 0 ? 1 : (s == 1 ? 2 : (s % 2 == 0 ? 3 : 2));
            false_cum += Integer(m) * u + Integer(m) * (m - 1) * (s == 0 ? 1 : 2);
            // identities with p, q nonzero and distinct
            if (s >= 2) good += Integer(m) * m * (s - 1 - (s % 2 == 0 ? 1 : 0));
        } else {
            // both sides of length >= 1
            if (s >= 2) good += Integer(m) * m * npow * (s - 1);
        }
        Integer count, total;
        if (k == 1) {
            total = total_ids;
            if (n == 1)
                count = total_ids - false_cum;  // exact classification
            else
                count = good;  // class C from the proof, a lower-bound series
        } else {
            total = binom_big(total_ids, k);
            count = binom_big(good, k);
        }
        out.points.push_back(point(s, count, total));
    }
    return out;
}

}  // namespace limdens
