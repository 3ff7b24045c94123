#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/errors.hpp"

namespace cherednik {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The coefficient field Q(zeta_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
/// Instances are interned and immutable; compare by pointer.
class Field {
public:
    static const Field* rationals();            // m = 1
    static const Field* cyclotomic(unsigned m); // interned per m

    unsigned order() const { return m_; }       // cyclotomic order m
    unsigned degree() const { return degree_; } // phi(m)

    // Monic minimal polynomial Phi_m, coefficients of 1, x, ..., x^phi(m).
    const std::vector<Integer>& minpoly() const { return minpoly_; }

    // zeta^k in the power basis, for k in [degree, 2*degree - 2].
    const std::vector<Rational>& power(unsigned k) const;

private:
    explicit Field(unsigned m);

    unsigned m_;
    unsigned degree_;
    std::vector<Integer> minpoly_;
    std::vector<std::vector<Rational>> high_powers_;
};

/// Exact element of Q(zeta_m). Immutable value type.
class Scalar {
public:
    Scalar() : field_(Field::rationals()), coeffs_(1, Rational(0)) {}
    Scalar(long n) : field_(Field::rationals()), coeffs_(1, Rational(n)) {}
    Scalar(const Rational& q) : field_(Field::rationals()), coeffs_(1, q) {}
    Scalar(const Field* f, std::vector<Rational> coeffs);

    static Scalar zeta(const Field* f);
    static Scalar from_rational(const Field* f, const Rational& q);

    const Field* field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational_value() const;

    Scalar operator-() const;
    Scalar inverse() const; // throws Error on zero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    std::string str() const;

private:
    // Embeds both operands into a common field (Q embeds everywhere).
    static const Field* common(const Scalar& a, const Scalar& b);
    Scalar promoted(const Field* f) const;

    const Field* field_;
    std::vector<Rational> coeffs_; // length field_->degree()
};

/// Valuation certificates: exact integer or +infinity (only for zero).
struct ValOrInf {
    bool infinite = false;
    long v = 0;

    static ValOrInf inf() { return ValOrInf{true, 0}; }
    static ValOrInf of(long v) { return ValOrInf{false, v}; }

    friend bool operator==(const ValOrInf&, const ValOrInf&) = default;
    ValOrInf operator+(const ValOrInf& o) const {
        if (infinite || o.infinite) return inf();
        return of(v + o.v);
    }
    bool operator>=(const ValOrInf& o) const {
        if (infinite) return true;
        if (o.infinite) return false;
        return v >= o.v;
    }
    bool operator<(const ValOrInf& o) const { return !(*this >= o); }
    std::string str() const { return infinite ? "inf" : std::to_string(v); }
};

ValOrInf min(const ValOrInf& a, const ValOrInf& b);

/// p-adic side of a run: prime p with p = 1 (mod m) and working precision N.
struct PadicSpec {
    const Field* field = Field::rationals();
    Integer p = 5;
    unsigned precision = 8; // N

    void validate() const; // checks p prime, p = 1 mod m, N >= 1
};

/// Truncated p-adic integer: residue mod p^N.
struct TruncatedPadic {
    Integer residue;
    Integer modulus; // p^N
    unsigned precision;
};

/// Root r of Phi_m with Phi_m(r) = 0 mod p^N, r congruent to the smallest
/// positive root of Phi_m mod p. Deterministic.
TruncatedPadic hensel_lift_root(const PadicSpec& spec);

/// v_p(a) under the embedding zeta -> hensel_lift_root. Throws
/// PrecisionExhausted when a != 0 but its image vanishes mod p^N.
ValOrInf valuation(const Scalar& a, const PadicSpec& spec);

// Exact p-adic valuation of a nonzero integer.
long integer_valuation(Integer n, const Integer& p);

bool is_prime(const Integer& n);

} // namespace cherednik
