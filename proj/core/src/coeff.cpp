#include "lfd/coeff.hpp"

#include "lfd/errors.hpp"
#include "lfd/symtab.hpp"

namespace lfd {

// ---------------------------------------------------------------------------
// Canonicalization and arithmetic
// ---------------------------------------------------------------------------

Coeff Coeff::make(MPoly n, MPoly d) {
    if (d.is_zero())
        throw ZeroDenominator("denominator is zero");
    Coeff c;
    if (n.is_zero()) {
        c.num_ = MPoly();
        c.den_ = MPoly::constant(1);
        return c;
    }
    // Normalize the denominator to its primitive part, moving its content
    // into the numerator.
    const Rat dc = rational_content(d);
    d = d.scaled(1 / dc);
    n = n.scaled(1 / dc);
    if (!d.is_one()) {
        const MPoly np = primitive_part(n);
        const MPoly g = mpoly_gcd(np, d);
        if (!g.is_constant() || g.constant_value() != 1) {
            n = divide_exact(n, g);
            d = divide_exact(d, g);
        }
    }
    c.num_ = std::move(n);
    c.den_ = std::move(d);
    return c;
}

Coeff Coeff::from_gen(GenId g, int exp) {
    Coeff c;
    if (exp >= 0) {
        c.num_ = MPoly::generator(g, exp);
    } else {
        c.num_ = MPoly::constant(1);
        c.den_ = MPoly::generator(g, -exp);
    }
    return c;
}

Coeff Coeff::from_poly(MPoly p) {
    Coeff c;
    c.num_ = std::move(p);
    return c;
}

Coeff Coeff::fraction(MPoly n, MPoly d) {
    return make(std::move(n), std::move(d));
}

Rat Coeff::to_rational() const {
    if (!is_rational())
        throw std::logic_error("Coeff::to_rational: not a rational constant");
    return num_.constant_value() / den_.constant_value();
}

Coeff Coeff::operator-() const {
    Coeff c = *this;
    c.num_ = -c.num_;
    return c;
}

Coeff Coeff::operator+(const Coeff& o) const {
    if (den_.is_one() && o.den_.is_one())
        return from_poly(num_ + o.num_);
    return make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Coeff Coeff::operator-(const Coeff& o) const {
    if (den_.is_one() && o.den_.is_one())
        return from_poly(num_ - o.num_);
    return make(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Coeff Coeff::operator*(const Coeff& o) const {
    if (is_zero() || o.is_zero())
        return Coeff();
    if (den_.is_one() && o.den_.is_one())
        return from_poly(num_ * o.num_);
    return make(num_ * o.num_, den_ * o.den_);
}

Coeff Coeff::operator/(const Coeff& o) const {
    if (o.is_zero())
        throw ZeroDenominator("division by zero");
    return make(num_ * o.den_, den_ * o.num_);
}

Coeff Coeff::inverse() const {
    if (is_zero())
        throw ZeroDenominator("inverse of zero");
    return make(den_, num_);
}

Coeff Coeff::pow(int e) const {
    if (e < 0)
        return inverse().pow(-e);
    Coeff r(1), base = *this;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Generic generator substitution
// ---------------------------------------------------------------------------

namespace {

Coeff subst_gen_poly(const MPoly& p, GenId g, const Coeff& value) {
    Coeff acc;
    for (const auto& [m, c] : p.terms()) {
        const int e = m.exponent(g);
        Monomial rest =
            e > 0 ? Monomial::gen(g, e).quotient_of(m) : m;
        Coeff term = Coeff::from_poly(MPoly::term(rest, c));
        if (e > 0)
            term = term * value.pow(e);
        acc += term;
    }
    return acc;
}

} // namespace

Coeff subst_gen(const Coeff& c, GenId g, const Coeff& value) {
    const Coeff n = subst_gen_poly(c.num(), g, value);
    const Coeff d = subst_gen_poly(c.den(), g, value);
    if (d.is_zero())
        throw ZeroAfterSubstitution(
            "denominator vanished under substitution");
    return n / d;
}

// ---------------------------------------------------------------------------
// Resonances
// ---------------------------------------------------------------------------

Coeff resonate(const Coeff& c, const SymbolTable& table) {
    Coeff r = c;
    for (const auto& [g, value] : table.resonances()) {
        if (!r.num().contains_gen(g) && !r.den().contains_gen(g))
            continue;
        r = subst_gen(r, g, value);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Formal exponentials
// ---------------------------------------------------------------------------

Coeff exponential_of(const Coeff& lambda, SymbolTable& table) {
    if (!lambda.is_polynomial())
        throw UnsupportedExponent(
            "exp of a non-polynomial scalar is not representable");
    Coeff result(1);
    for (const auto& [m, c] : lambda.num().terms()) {
        if (c.get_den() != 1)
            throw UnsupportedExponent(
                "exp requires integer coefficients in the exponent");
        for (const auto& [g, e] : m.factors())
            if (!table.is_param(g))
                throw UnsupportedExponent(
                    "exp of an expression containing exponential symbols");
        if (!c.get_num().fits_sint_p())
            throw UnsupportedExponent("exponent coefficient too large");
        const long k = c.get_num().get_si();
        const GenId sym = table.exp_symbol(m);
        result = result * Coeff::from_gen(sym).pow(static_cast<int>(k));
    }
    return result;
}

std::optional<Coeff> try_exponential(const Coeff& lambda,
                                     SymbolTable& table) {
    try {
        return exponential_of(lambda, table);
    } catch (const UnsupportedExponent&) {
        return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// Parameter calculus
// ---------------------------------------------------------------------------

namespace {

Coeff derivative_param_poly(const MPoly& p, GenId param,
                            const SymbolTable& table) {
    MPoly out;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [g, e] : m.factors()) {
            if (g == param) {
                // d/dp p^e * rest = e p^(e-1) * rest
                Monomial dm = Monomial::gen(g, e - 1).times(
                    Monomial::gen(g, e).quotient_of(m));
                out.add_term(dm, c * e);
            } else if (table.is_exp(g)) {
                const Monomial& idx = table.info(g).index;
                const int k = idx.exponent(param);
                if (k == 0)
                    continue;
                // d/dp E^e = e * (d idx/dp) * E^e, and d idx/dp is the
                // power product idx/p times k.
                Monomial didx =
                    Monomial::gen(param, 1).quotient_of(idx);
                out.add_term(m.times(didx), c * e * k);
            }
        }
    }
    return Coeff::from_poly(out);
}

} // namespace

Coeff derivative_param(const Coeff& c, GenId param,
                       const SymbolTable& table) {
    const Coeff dn = derivative_param_poly(c.num(), param, table);
    if (c.is_polynomial())
        return dn;
    const Coeff dd = derivative_param_poly(c.den(), param, table);
    const Coeff n = Coeff::from_poly(c.num());
    const Coeff d = Coeff::from_poly(c.den());
    return (dn * d - n * dd) / (d * d);
}

Coeff subst_param(const Coeff& c, GenId param, const Coeff& value,
                  SymbolTable& table) {
    auto subst_poly = [&](const MPoly& p) {
        Coeff acc;
        for (const auto& [m, co] : p.terms()) {
            Coeff term(co);
            for (const auto& [g, e] : m.factors()) {
                if (g == param) {
                    term = term * value.pow(e);
                } else if (table.is_exp(g) &&
                           table.info(g).index.contains(param)) {
                    const Monomial& idx = table.info(g).index;
                    const int k = idx.exponent(param);
                    const Monomial rest =
                        Monomial::gen(param, k).quotient_of(idx);
                    // exp(idx)^e -> exp(value^k * rest)^e
                    const Coeff new_exponent =
                        value.pow(k) *
                        Coeff::from_poly(MPoly::term(rest, Rat(1)));
                    term = term * exponential_of(new_exponent, table).pow(e);
                } else {
                    term = term * Coeff::from_gen(g, e);
                }
            }
            acc += term;
        }
        return acc;
    };
    const Coeff n = subst_poly(c.num());
    const Coeff d = subst_poly(c.den());
    if (d.is_zero())
        throw ZeroAfterSubstitution(
            "denominator vanished under substitution");
    return n / d;
}

// ---------------------------------------------------------------------------
// Square roots
// ---------------------------------------------------------------------------

std::optional<Coeff> coeff_sqrt(const Coeff& c) {
    auto rn = mpoly_sqrt(c.num());
    if (!rn)
        return std::nullopt;
    if (c.is_polynomial())
        return Coeff::from_poly(*rn);
    auto rd = mpoly_sqrt(c.den());
    if (!rd)
        return std::nullopt;
    return Coeff::fraction(*rn, *rd);
}

} // namespace lfd
