#include "doctest.h"

#include <vector>

#include "lfd/coeff.hpp"
#include "lfd/poly2.hpp"
#include "lfd/symtab.hpp"

using namespace lfd;

namespace {

const Poly2 X = Poly2::X();
const Poly2 Y = Poly2::Y();

} // namespace

TEST_SUITE("poly2") {

TEST_CASE("arithmetic and canonical term storage") {
    const Poly2 p = X * X + Y.scaled(Coeff(2)) - Poly2::constant(3);
    CHECK(p.degree() == 2);
    CHECK(p.degree_x() == 2);
    CHECK(p.degree_y() == 1);
    CHECK(p.term_count() == 3);
    CHECK(p.coeff_of(2, 0) == Coeff(1));
    CHECK(p.coeff_of(0, 1) == Coeff(2));
    CHECK(p.coeff_of(0, 0) == Coeff(-3));
    CHECK(p.coeff_of(1, 1) == Coeff(0));

    // Cancellation drops terms entirely.
    const Poly2 q = p - X * X;
    CHECK(q.term_count() == 2);
    CHECK(q.degree() == 1);
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);

    // Leading term follows the graded order with X ahead of Y.
    const Poly2 r = X * Y + Y * Y.scaled(Coeff(5)) + X;
    CHECK(r.leading().first == Exp2{1, 1});
    CHECK((X + Y).leading().first == Exp2{1, 0});

    // Product degrees are additive over an integral domain.
    const Poly2 a = X * X * Y - Y + Poly2::constant(1);
    const Poly2 b = X * Y * Y + X;
    CHECK((a * b).degree() == a.degree() + b.degree());
    CHECK((a * b) == (b * a));
    CHECK(((a + b) * r) == (a * r + b * r));
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(0) == Poly2::constant(1));
}

TEST_CASE("substitution") {
    // (X^2 + Y) with X -> X, Y -> Y + X^2 gives 2X^2 + Y.
    const Poly2 p = X * X + Y;
    CHECK(p.substitute(X, Y + X * X) ==
          X * X.scaled(Coeff(2)) + Y);

    // Constants are untouched; identity substitution is the identity.
    CHECK(Poly2::constant(7).substitute(Y, X) == Poly2::constant(7));
    const Poly2 big = X * X * Y - Y.scaled(Coeff(3)) + Poly2::constant(2);
    CHECK(big.substitute(X, Y) == big);

    // Swap of the coordinates.
    CHECK(p.substitute(Y, X) == Y * Y + X);

    // Substitution is a ring homomorphism.
    const Poly2 u = X + Y * Y;
    const Poly2 v = X * Y - Poly2::constant(1);
    const Poly2 sx = X + Poly2::constant(1);
    const Poly2 sy = Y - X * X;
    CHECK((u + v).substitute(sx, sy) ==
          u.substitute(sx, sy) + v.substitute(sx, sy));
    CHECK((u * v).substitute(sx, sy) ==
          u.substitute(sx, sy) * v.substitute(sx, sy));

    // Composition of substitutions is associative in the functional sense:
    // substituting a pair, then another, equals substituting the composite.
    const Poly2 tx = Y, ty = X + Y * Y;
    CHECK(u.substitute(sx, sy).substitute(tx, ty) ==
          u.substitute(sx.substitute(tx, ty), sy.substitute(tx, ty)));
}

TEST_CASE("partial derivatives") {
    const Poly2 p = X * X * Y + Y * Y.scaled(Coeff(3)) + X - Poly2::constant(5);
    CHECK(p.dx() == X * Y.scaled(Coeff(2)) + Poly2::constant(1));
    CHECK(p.dy() == X * X + Y.scaled(Coeff(6)));
    CHECK(Poly2::constant(4).dx().is_zero());
    CHECK(Poly2().dy().is_zero());

    // Leibniz rule for both partials.
    const Poly2 u = X * Y + Poly2::constant(2);
    const Poly2 v = Y * Y - X;
    CHECK((u * v).dx() == u.dx() * v + u * v.dx());
    CHECK((u * v).dy() == u.dy() * v + u * v.dy());
    // Mixed partials commute.
    CHECK(p.dx().dy() == p.dy().dx());
}

TEST_CASE("scalar coefficients from the ground field") {
    SymbolTable t;
    const Coeff a = Coeff::from_gen(t.add_param("a"));
    const Coeff e = Coeff::from_gen(t.exp_symbol(Monomial::gen(0)));

    const Poly2 p = X.scaled(a) + Y.scaled(e) + Poly2::constant(1);
    CHECK(p.coeff_of(1, 0) == a);
    CHECK(p.coeff_of(0, 1) == e);
    CHECK(p.scaled(e.inverse()).coeff_of(0, 1) == Coeff(1));

    // map_coeffs applies a scalar map and drops collapsed terms.
    t.set_resonance(t.find_exp(Monomial::gen(0)).value(), Coeff(1));
    const Poly2 q = X.scaled(e - Coeff(1)) + Y;
    const Poly2 r = map_coeffs(q, [&](const Coeff& c) {
        return resonate(c, t);
    });
    CHECK(r == Y);
    CHECK(r.term_count() == 1);
}

TEST_CASE("degree accessors on edge cases") {
    CHECK(Poly2().degree() == -1);
    CHECK(Poly2::constant(3).degree() == 0);
    CHECK(Poly2::constant(3).degree_x() == 0);
    CHECK(X.degree_x() == 1);
    CHECK(X.degree_y() == 0);
    CHECK_FALSE(X.depends_on_y());
    CHECK((X * Y).depends_on_x());
    CHECK((X * Y).depends_on_y());
    CHECK(Poly2::constant(0).is_zero());
    CHECK(Poly2::constant(3).constant_value() == Coeff(3));
    CHECK(Poly2::monomial(2, 3, Coeff(5)).degree() == 5);
    // monomial with zero coefficient is the zero polynomial
    CHECK(Poly2::monomial(2, 3, Coeff(0)).is_zero());
}

} // TEST_SUITE
