#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace limdens {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

inline Integer ipow(Integer base, unsigned long e) {
    Integer r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Integer binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

// Rounded decimal rendering, for CSV output. Exact values stay in num/den columns.
inline std::string decimal_string(const Rational& q, int digits = 12) {
    bool neg = q < 0;
    Rational a = neg ? Rational(-q) : q;
    Integer scale = ipow(10, static_cast<unsigned long>(digits));
    Integer scaled = (boost::multiprecision::numerator(a) * scale * 2 +
                      boost::multiprecision::denominator(a)) /
                     (boost::multiprecision::denominator(a) * 2);
    Integer whole = scaled / scale;
    Integer frac = scaled % scale;
    std::string fs = frac.str();
    fs.insert(fs.begin(), static_cast<size_t>(digits) - fs.size(), '0');
    while (fs.size() > 1 && fs.back() == '0') fs.pop_back();
    std::string out = (neg && scaled != 0 ? "-" : "") + whole.str();
    if (!(fs.size() == 1 && fs[0] == '0')) out += "." + fs;
    return out;
}

}  // namespace limdens
