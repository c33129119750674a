#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lfd/coeff.hpp"

namespace lfd {

/// Exponent pair of a term c * X^i * Y^j.
struct Exp2 {
    int i = 0;
    int j = 0;

    int degree() const { return i + j; }
    bool operator==(const Exp2& o) const { return i == o.i && j == o.j; }
};

/// Graded order with X ahead of Y, arranged so map iteration starts at the
/// leading term: X^2 > X*Y > Y^2 > X > Y > 1.
struct Exp2Descending {
    bool operator()(const Exp2& a, const Exp2& b) const {
        if (a.degree() != b.degree())
            return a.degree() > b.degree();
        return a.i > b.i;
    }
};

/// Polynomial in the plane coordinates X and Y over the scalar field.
/// Invariant: no stored coefficient is zero.
class Poly2 {
public:
    using TermMap = std::map<Exp2, Coeff, Exp2Descending>;

    Poly2() = default;

    static Poly2 constant(Coeff c);
    static Poly2 constant(long c) { return constant(Coeff(c)); }
    static Poly2 X() { return monomial(1, 0, Coeff(1)); }
    static Poly2 Y() { return monomial(0, 1, Coeff(1)); }
    static Poly2 monomial(int i, int j, Coeff c);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Coeff constant_value() const;

    int degree() const { return t_.empty() ? -1 : t_.begin()->first.degree(); }
    int degree_x() const;
    int degree_y() const;
    bool depends_on_x() const { return degree_x() > 0; }
    bool depends_on_y() const { return degree_y() > 0; }

    const TermMap& terms() const { return t_; }
    std::size_t term_count() const { return t_.size(); }
    Coeff coeff_of(int i, int j) const;
    const std::pair<const Exp2, Coeff>& leading() const { return *t_.begin(); }

    Poly2 operator-() const;
    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    Poly2 scaled(const Coeff& c) const;
    Poly2 pow(int e) const;

    /// Simultaneous substitution X -> vx, Y -> vy.
    Poly2 substitute(const Poly2& vx, const Poly2& vy) const;

    Poly2 dx() const; ///< partial derivative in X
    Poly2 dy() const; ///< partial derivative in Y

    void add_term(int i, int j, const Coeff& c);

    bool operator==(const Poly2& o) const { return t_ == o.t_; }
    bool operator!=(const Poly2& o) const { return !(*this == o); }

private:
    TermMap t_;
};

/// Applies a scalar-field map (e.g. resonate or a parameter substitution)
/// to every coefficient, dropping terms that become zero.
template <typename F>
Poly2 map_coeffs(const Poly2& p, F&& f) {
    Poly2 out;
    for (const auto& [e, c] : p.terms())
        out.add_term(e.i, e.j, f(c));
    return out;
}

} // namespace lfd
