#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsb/exact.hpp"

namespace tsb {

// Dense univariate polynomial with arbitrary-precision integer coefficients,
// stored in ascending degree order with no trailing zeros (the zero polynomial
// has an empty coefficient vector and degree -1).
//
// Everything downstream (square-free parts, Sturm chains, root isolation)
// stays inside Z[x]: divisions are pseudo-divisions with controlled integer
// multipliers, so no rounding ever happens.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<BigInt> ascending_coeffs)
        : coeffs_(std::move(ascending_coeffs)) {
        trim();
    }

    static IntPolynomial zero() { return IntPolynomial(); }

    static IntPolynomial constant(BigInt c) { return IntPolynomial({std::move(c)}); }

    // c * x^k
    static IntPolynomial monomial(BigInt c, std::size_t k) {
        std::vector<BigInt> v(k + 1, BigInt(0));
        v[k] = std::move(c);
        return IntPolynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of the zero polynomial is -1 by convention.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    const BigInt& leading() const { return coeffs_.back(); }

    BigInt coefficient(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
        return !(a == b);
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator-(const IntPolynomial& a) {
        std::vector<BigInt> out = a.coeffs_;
        for (auto& c : out) c = -c;
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const BigInt& s) {
        if (s == 0) return zero();
        std::vector<BigInt> out = a.coeffs_;
        for (auto& c : out) c *= s;
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& a) { return a * s; }

    IntPolynomial derivative() const {
        if (coeffs_.size() <= 1) return zero();
        std::vector<BigInt> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * BigInt(i);
        return IntPolynomial(std::move(out));
    }

    Rational evaluate(const Rational& x) const {
        Rational acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + Rational(coeffs_[i]);
        return acc;
    }

    // Sign of p(a/b) without constructing the rational value: evaluates the
    // homogenised form sum c_i * a^i * b^(d-i), which has the same sign when
    // b > 0. Keeps Sturm sign queries in pure integer arithmetic.
    int sign_at(const Rational& x) const {
        if (is_zero()) return 0;
        const BigInt a = numerator(x);
        const BigInt b = denominator(x); // > 0 by cpp_rational invariant
        BigInt acc = coeffs_.back();
        BigInt bpow = 1;
        for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
            bpow *= b;
            acc = acc * a + coeffs_[i] * bpow;
        }
        return acc.sign();
    }

    // Positive gcd of all coefficients (0 for the zero polynomial).
    BigInt content() const {
        BigInt g = 0;
        for (const auto& c : coeffs_) {
            g = boost::multiprecision::gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    // Content-free version of this polynomial, leading coefficient kept
    // positive. Canonical representative of the proportionality class.
    IntPolynomial primitive() const {
        if (is_zero()) return zero();
        BigInt g = content();
        if (leading() < 0) g = -g;
        std::vector<BigInt> out = coeffs_;
        for (auto& c : out) c /= g;
        return IntPolynomial(std::move(out));
    }

    // Content-free version with the original sign kept. Scaling by a negative
    // factor is not allowed where signs carry information (Sturm chains).
    IntPolynomial primitive_signed() const {
        if (is_zero()) return zero();
        BigInt g = content();
        std::vector<BigInt> out = coeffs_;
        for (auto& c : out) c /= g;
        return IntPolynomial(std::move(out));
    }

    // Two integer polynomials are proportional iff they agree up to a nonzero
    // rational scalar, i.e. they have the same primitive part up to sign.
    bool is_proportional_to(const IntPolynomial& other) const {
        if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
        return primitive() == other.primitive();
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const BigInt& c = coeffs_[i];
            if (c == 0) continue;
            if (!out.empty()) out += c > 0 ? " + " : " - ";
            else if (c < 0) out += "-";
            BigInt mag = abs(c);
            bool show_coeff = mag != 1 || i == 0;
            if (show_coeff) out += mag.str();
            if (i > 0) {
                if (show_coeff) out += "*";
                out += "x";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

namespace detail {

// Pseudo-remainder of a by b with the dividend pre-multiplied by lc(b)^e where
// e = (deg a - deg b + 1) rounded up to an even number. The even exponent
// makes the multiplier strictly positive, so the remainder keeps the sign of
// the true rational remainder -- required when the caller feeds Sturm chains.
inline IntPolynomial signed_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() < b.degree()) return a;
    unsigned e = static_cast<unsigned>(a.degree() - b.degree() + 1);
    if (e % 2 == 1) ++e;
    BigInt mult = 1;
    for (unsigned i = 0; i < e; ++i) mult *= b.leading();

    std::vector<BigInt> rem = a.coefficients();
    for (auto& c : rem) c *= mult;
    const auto& div = b.coefficients();
    const int db = b.degree();
    for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
        if (rem[static_cast<std::size_t>(k)] == 0) continue;
        // Exact by construction: mult carries enough powers of lc(b).
        BigInt q = rem[static_cast<std::size_t>(k)] / div[static_cast<std::size_t>(db)];
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= q * div[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return IntPolynomial(std::move(rem));
}

} // namespace detail

// Polynomial gcd over Q[x], returned as the primitive integer representative
// with positive leading coefficient. Uses a primitive pseudo-remainder
// sequence, which keeps intermediate coefficients small enough for our sizes.
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    a = a.primitive();
    b = b.primitive();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = detail::signed_pseudo_remainder(a, b).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a.primitive();
}

// Exact division in Q[x]; returns the quotient if the remainder is zero and
// the quotient has integer coefficients, otherwise nullopt. Both conditions
// hold automatically for the divisibility facts this library relies on
// (square-free parts, deflation by rational roots) because the divisors are
// primitive.
inline std::optional<IntPolynomial> try_divide_exact(const IntPolynomial& num,
                                                     const IntPolynomial& den) {
    if (den.is_zero()) return std::nullopt;
    if (num.is_zero()) return IntPolynomial::zero();
    if (num.degree() < den.degree()) return std::nullopt;

    std::vector<Rational> rem(num.coefficients().size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = Rational(num.coefficients()[i]);
    const int dq = num.degree() - den.degree();
    const int dd = den.degree();
    std::vector<Rational> quot(static_cast<std::size_t>(dq) + 1);
    const Rational lead(den.leading());
    for (int k = dq; k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * Rational(den.coefficients()[static_cast<std::size_t>(j)]);
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    std::vector<BigInt> out(quot.size());
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (denominator(quot[i]) != 1) return std::nullopt;
        out[i] = numerator(quot[i]);
    }
    return IntPolynomial(std::move(out));
}

// Expansion of sum_k w_k x^k (1-x)^(n-k) for a weight list of length n+1
// into standard monomial coefficients, exactly.
inline IntPolynomial poly_from_vector(const std::vector<std::int64_t>& weights) {
    if (weights.empty())
        throw ValidationError("weight list must have length n+1 >= 1");
    const std::size_t n = weights.size() - 1;
    const IntPolynomial one_minus_x({BigInt(1), BigInt(-1)});
    std::vector<IntPolynomial> pw(n + 1);
    pw[0] = IntPolynomial::constant(1);
    for (std::size_t j = 1; j <= n; ++j) pw[j] = pw[j - 1] * one_minus_x;
    IntPolynomial acc = IntPolynomial::zero();
    for (std::size_t k = 0; k <= n; ++k) {
        if (weights[k] == 0) continue;
        acc = acc + IntPolynomial::monomial(BigInt(weights[k]), k) * pw[n - k];
    }
    return acc;
}

// Square-free part p / gcd(p, p'), primitive with positive leading
// coefficient. Shares exactly the roots of p, each with multiplicity one.
inline IntPolynomial square_free_part(const IntPolynomial& p) {
    if (p.is_zero()) return IntPolynomial::zero();
    if (p.degree() == 0) return IntPolynomial::constant(1);
    IntPolynomial g = poly_gcd(p, p.derivative());
    auto q = try_divide_exact(p.primitive(), g);
    // Divisibility is guaranteed; primitive/primitive keeps coefficients integral.
    return q->primitive();
}

} // namespace tsb
