#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace teich {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat make_rat(long long p, long long q = 1) { return Rat(Int(p), Int(q)); }

inline std::string to_string(const Int& v) { return v.str(); }

// Rationals cross the CLI/JSON boundary as "p/q" strings.
inline std::string to_string(const Rat& v) {
    Int n = numerator(v), d = denominator(v);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw Error("parse_rat: zero denominator in '" + s + "'");
        return Rat(n, d);
    } catch (const std::exception&) {
        throw Error("parse_rat: bad rational '" + s + "'");
    }
}

inline double to_double(const Rat& v) { return v.template convert_to<double>(); }

inline Rat pow_rat(const Rat& base, long long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    long long n = e > 0 ? e : -e;
    Rat acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline std::optional<Int> isqrt_exact(const Int& v) {
    if (v < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(v);
    if (r * r == v) return r;
    return std::nullopt;
}

// sqrt of a perfect-square rational, if it is one
inline std::optional<Rat> sqrt_exact(const Rat& v) {
    auto n = isqrt_exact(numerator(v));
    auto d = isqrt_exact(denominator(v));
    if (n && d) return Rat(*n, *d);
    return std::nullopt;
}

}  // namespace teich
