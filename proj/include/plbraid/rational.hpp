#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace plb {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

inline int sgn(const Rat& q) { return q.sign(); }
inline int sgn(const Int& n) { return n.sign(); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        return Rat(p, q);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational: " + s);
    }
}

// Canonical "p/q" (or "p" when integral), reduced form.
inline std::string rat_str(const Rat& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) s += "/" + rat_den(q).str();
    return s;
}

inline Int int_isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    if (n == 0) return 0;
    return sqrt(n); // floor square root from boost::multiprecision
}

// Largest exactly representable value when q is a perfect square of a
// rational; otherwise a positive rational lower bound of sqrt(q).
inline Rat rat_sqrt_lower(const Rat& q) {
    if (q < 0) throw std::domain_error("sqrt of negative");
    if (q == 0) return 0;
    Int p = rat_num(q), d = rat_den(q);
    Int sp = int_isqrt(p), sd = int_isqrt(d);
    if (sp * sp == p && sd * sd == d) return Rat(sp, sd);
    // floor(sqrt(p*d))/d <= sqrt(p/d)
    return Rat(int_isqrt(p * d), d);
}

inline bool rat_is_square(const Rat& q) {
    if (q < 0) return false;
    Int sp = int_isqrt(rat_num(q)), sd = int_isqrt(rat_den(q));
    return sp * sp == rat_num(q) && sd * sd == rat_den(q);
}

} // namespace plb
