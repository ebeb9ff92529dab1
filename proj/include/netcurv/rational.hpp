#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace netcurv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parse "p/q" or a plain decimal ("0.5", "1", ".25") into an exact rational.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rational(num, den);
    }
    bool neg = false;
    std::string body = text;
    if (body[0] == '+' || body[0] == '-') {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    auto dot = body.find('.');
    std::string intpart = dot == std::string::npos ? body : body.substr(0, dot);
    std::string fracpart = dot == std::string::npos ? "" : body.substr(dot + 1);
    if (intpart.empty() && fracpart.empty())
        throw std::invalid_argument("malformed rational literal: " + text);
    for (char c : intpart + fracpart)
        if (c < '0' || c > '9')
            throw std::invalid_argument("malformed rational literal: " + text);
    BigInt num = intpart.empty() ? BigInt(0) : BigInt(intpart);
    BigInt den = 1;
    for (char c : fracpart) {
        num = num * 10 + (c - '0');
        den *= 10;
    }
    Rational r(num, den);
    return neg ? -r : r;
}

/// Fixed-point decimal with exactly `digits` fractional digits, round half
/// away from zero. Integer arithmetic only, so the string is platform-stable.
inline std::string format_fixed(const Rational& r, int digits = 9) {
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    BigInt num = rat_num(r), den = rat_den(r);
    bool neg = num < 0;
    if (neg) num = -num;
    BigInt scaled = num * scale;
    BigInt q = scaled / den, rem = scaled % den;
    if (rem * 2 >= den) ++q;
    BigInt ip = q / scale, fp = q % scale;
    std::string frac = fp.str();
    frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
    std::string out = ip.str() + "." + frac;
    if (neg && q != 0) out = "-" + out;
    return out;
}

}  // namespace netcurv
