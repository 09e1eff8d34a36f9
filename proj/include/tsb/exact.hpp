#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "tsb/errors.hpp"

namespace tsb {

// All probability and polynomial arithmetic is exact. Floating point is never
// used to decide anything; it only appears in human-readable approximations.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline int sign_of(const BigInt& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }

// Canonical "num/den" rendering (lowest terms, den omitted when 1).
inline std::string to_fraction_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

// Fixed-point decimal approximation, rounded half away from zero. Used only
// for display next to an exact value or an explicit tolerance.
inline std::string to_decimal_string(const Rational& r, unsigned digits = 12) {
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    BigInt num = numerator(r) * scale * 2;
    BigInt den = denominator(r);
    BigInt half = num >= 0 ? BigInt(num + den) : BigInt(num - den);
    BigInt scaled = half / (2 * den);
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    BigInt ipart = scaled / scale;
    BigInt fpart = scaled % scale;
    std::string out = neg ? "-" : "";
    out += ipart.str();
    if (digits > 0) {
        std::string frac = fpart.str();
        frac.insert(frac.begin(), digits - frac.size(), '0');
        out += '.';
        out += frac;
    }
    return out;
}

// Parses "num", "-num" or "num/den" with den > 0 after sign normalisation.
// Decimal notation is rejected on purpose: 0.3 is not representable exactly
// in binary and silently approximating probabilities defeats the point of an
// exact tool, so the error message tells the caller to write 3/10 instead.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&](const std::string& why) -> Rational {
        throw ParseError("invalid rational '" + std::string(text) + "': " + why);
    };
    if (text.empty()) return fail("empty string");
    if (text.find('.') != std::string_view::npos ||
        text.find('e') != std::string_view::npos ||
        text.find('E') != std::string_view::npos)
        return fail("decimal notation not accepted; write an exact fraction such as 3/10");

    auto parse_int = [&](std::string_view part, bool allow_sign) -> BigInt {
        std::size_t i = 0;
        bool neg = false;
        if (allow_sign && i < part.size() && (part[i] == '+' || part[i] == '-')) {
            neg = part[i] == '-';
            ++i;
        }
        if (i == part.size()) fail("missing digits");
        BigInt v = 0;
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i])))
                fail(std::string("unexpected character '") + part[i] + "'");
            v = v * 10 + (part[i] - '0');
        }
        return neg ? BigInt(-v) : v;
    };

    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text, true));
    if (text.find('/', slash + 1) != std::string_view::npos) return fail("more than one '/'");
    BigInt num = parse_int(text.substr(0, slash), true);
    BigInt den = parse_int(text.substr(slash + 1), false);
    if (den == 0) return fail("zero denominator");
    return Rational(num, den);
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline Rational pow_rational(const Rational& base, unsigned exp) {
    Rational result = 1;
    Rational b = base;
    while (exp > 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1u;
    }
    return result;
}

} // namespace tsb
