#pragma once

#include <optional>

#include "lfd/mpoly.hpp"

namespace lfd {

class SymbolTable;

/// Scalar of the ground field: an exact fraction of multivariate
/// polynomials over the rationals.  The generators are free parameters
/// (a, b, t, ...) together with formal exponential symbols; the symbols
/// are indexed by power products of parameters, so that
/// exp(u) * exp(v) == exp(u + v) holds by construction whenever u and v
/// are integer-coefficient polynomials in the parameters.
///
/// Canonical form (equality is structural):
///   * denominator is integer-primitive with positive leading coefficient,
///   * gcd(primitive part of numerator, denominator) == 1,
///   * zero is 0/1.
class Coeff {
public:
    Coeff() : den_(MPoly::constant(1)) {}
    Coeff(long v) : num_(MPoly::constant(v)), den_(MPoly::constant(1)) {}
    Coeff(const Rat& v)
        : num_(MPoly::constant(v)), den_(MPoly::constant(1)) {}

    static Coeff from_gen(GenId g, int exp = 1);
    static Coeff from_poly(MPoly p);
    /// Builds n/d in canonical form; throws ZeroDenominator if d == 0.
    static Coeff fraction(MPoly n, MPoly d);

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_rational() const {
        return num_.is_constant() && den_.is_constant();
    }
    Rat to_rational() const;

    Coeff operator-() const;
    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    /// Throws ZeroDenominator when dividing by zero.
    Coeff operator/(const Coeff& o) const;
    Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
    Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
    Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
    Coeff& operator/=(const Coeff& o) { return *this = *this / o; }

    Coeff inverse() const;
    Coeff pow(int e) const;

    bool operator==(const Coeff& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Coeff& o) const { return !(*this == o); }

private:
    MPoly num_;
    MPoly den_; // integer-primitive, positive leading coefficient

    static Coeff make(MPoly n, MPoly d);
};

/// Replaces every occurrence of generator g (parameter or exponential
/// symbol, treated as an opaque generator) by the given value.
Coeff subst_gen(const Coeff& c, GenId g, const Coeff& value);

/// Applies every resonance assignment recorded in the table, i.e.
/// specializes the affected exponential symbols to their assigned values.
/// Throws ZeroAfterSubstitution if a denominator collapses.
Coeff resonate(const Coeff& c, const SymbolTable& table);

/// exp(lambda) as an element of the field.  Defined when lambda is a
/// polynomial in the parameters with integer coefficients; the result is a
/// product of integer powers of exponential symbols (exp of the zero
/// polynomial is 1).  Throws UnsupportedExponent otherwise.
Coeff exponential_of(const Coeff& lambda, SymbolTable& table);
std::optional<Coeff> try_exponential(const Coeff& lambda, SymbolTable& table);

/// d/dp, treating every other parameter as a constant and differentiating
/// through exponential symbols: d/dp exp(m) = (dm/dp) * exp(m).
Coeff derivative_param(const Coeff& c, GenId param, const SymbolTable& table);

/// Substitutes value for the parameter, including inside the exponents of
/// exponential symbols (exp(p*r) becomes exp(value*r), which must again be
/// representable).  May register new exponential symbols in the table.
Coeff subst_param(const Coeff& c, GenId param, const Coeff& value,
                  SymbolTable& table);

/// Exact square root when c is a perfect square in the field.
std::optional<Coeff> coeff_sqrt(const Coeff& c);

} // namespace lfd
