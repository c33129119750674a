#include "doctest.h"

#include <vector>

#include "lfd/errors.hpp"
#include "lfd/linalg.hpp"
#include "lfd/symtab.hpp"
#include "lfd/upoly.hpp"

using namespace lfd;

namespace {

UPoly up(std::vector<long> coeffs) {
    std::vector<Coeff> c;
    c.reserve(coeffs.size());
    for (long v : coeffs)
        c.emplace_back(v);
    return UPoly(std::move(c));
}

Matrix mat2(long a, long b, long c, long d) {
    Matrix m(2, 2);
    m.at(0, 0) = Coeff(a);
    m.at(0, 1) = Coeff(b);
    m.at(1, 0) = Coeff(c);
    m.at(1, 1) = Coeff(d);
    return m;
}

} // namespace

TEST_SUITE("upoly-linalg") {

TEST_CASE("univariate arithmetic and division") {
    const UPoly p = up({-1, 0, 1});      // T^2 - 1
    const UPoly q = up({1, 1});          // T + 1
    CHECK(p.degree() == 2);
    CHECK(q.degree() == 1);
    CHECK(UPoly::zero().degree() == -1);
    CHECK(UPoly::constant(Coeff(5)).degree() == 0);
    CHECK(UPoly::variable() == up({0, 1}));
    CHECK(UPoly::monomial(3, Coeff(2)) == up({0, 0, 0, 2}));

    CHECK(p + q == up({0, 1, 1}));
    CHECK(p - p == UPoly::zero());
    CHECK(p * q == up({-1, -1, 1, 1}));
    CHECK(q * q == up({1, 2, 1}));

    // (T^2 - 1) = (T + 1)(T - 1) + 0
    auto [quo, rem] = p.divmod(q);
    CHECK(quo == up({-1, 1}));
    CHECK(rem.is_zero());
    // T^2 = (T + 1)(T - 1) + 1
    auto [q2, r2] = up({0, 0, 1}).divmod(q);
    CHECK(q2 == up({-1, 1}));
    CHECK(r2 == up({1}));
    CHECK(up({0, 0, 1}) % q == up({1}));
    CHECK(up({0, 0, 1}) / q == up({-1, 1}));

    CHECK(p.derivative() == up({0, 2}));
    CHECK(up({3}).derivative().is_zero());
    CHECK(up({-2, 0, 4}).monic() ==
          UPoly({Coeff(Rat(-1, 2)), Coeff(0), Coeff(1)}));
    CHECK(p.eval(Coeff(3)) == Coeff(8));
    CHECK(p.eval(Coeff(-1)) == Coeff(0));
    // Leading-coefficient invariant: trailing zeros are trimmed.
    CHECK(UPoly({Coeff(1), Coeff(0)}).degree() == 0);
}

TEST_CASE("gcd, lcm, extended gcd") {
    const UPoly a = up({-1, 0, 1});      // (T-1)(T+1)
    const UPoly b = up({1, 2, 1});       // (T+1)^2
    CHECK(upoly_gcd(a, b) == up({1, 1}));
    CHECK(upoly_gcd(a, UPoly::zero()) == a.monic());
    CHECK(upoly_gcd(UPoly::zero(), b) == b.monic());

    // lcm * gcd == a * b up to a scalar; here both are monic.
    const UPoly l = upoly_lcm(a, b);
    CHECK(l == up({-1, -1, 1, 1}));      // (T-1)(T+1)^2
    CHECK(l % a == UPoly::zero());
    CHECK(l % b == UPoly::zero());

    const ExtGcd e = upoly_ext_gcd(a, b);
    CHECK(e.g == up({1, 1}));
    CHECK(e.u * a + e.v * b == e.g);

    // Coprime case: the Bezout identity yields 1.
    const ExtGcd e2 = upoly_ext_gcd(up({-1, 1}), up({1, 1}));
    CHECK(e2.g.is_one());
    CHECK(e2.u * up({-1, 1}) + e2.v * up({1, 1}) == e2.g);
}

TEST_CASE("squarefree structure") {
    const UPoly p = up({1, 2, 1});       // (T+1)^2
    CHECK_FALSE(is_squarefree(p));
    CHECK(squarefree_part(p) == up({1, 1}));
    CHECK(is_squarefree(up({-1, 0, 1})));
    CHECK(squarefree_part(up({-1, 0, 1})) == up({-1, 0, 1}));
    // T^3: radical is T.
    CHECK(squarefree_part(up({0, 0, 0, 1})) == up({0, 1}));
    CHECK(is_power_of_variable(up({0, 0, 0, 1})));
    CHECK(is_power_of_variable(up({0, 5})));
    CHECK_FALSE(is_power_of_variable(up({1, 1})));
    CHECK_FALSE(is_power_of_variable(up({1})));
    CHECK_FALSE(is_power_of_variable(UPoly::zero()));
}

TEST_CASE("matrix arithmetic, determinant, inverse") {
    const Matrix m = mat2(1, 2, 3, 4);
    CHECK(m.det() == Coeff(-2));
    CHECK(m.trace() == Coeff(5));

    const Matrix mi = m.inverse();
    CHECK(m * mi == Matrix::identity(2));
    CHECK(mi * m == Matrix::identity(2));
    CHECK(mi.at(0, 0) == Coeff(-2));
    CHECK(mi.at(0, 1) == Coeff(1));

    CHECK_THROWS_AS(mat2(1, 2, 2, 4).inverse(), SingularMatrix);
    CHECK(mat2(1, 2, 2, 4).det() == Coeff(0));

    const std::vector<Coeff> v = {Coeff(1), Coeff(-1)};
    const std::vector<Coeff> mv = m.apply(v);
    CHECK(mv == std::vector<Coeff>{Coeff(-1), Coeff(-1)});

    CHECK((m + m) == m.scaled(Coeff(2)));
    CHECK((m - m).is_zero());

    // Symbolic entries stay exact.
    SymbolTable t;
    const Coeff a = Coeff::from_gen(t.add_param("a"));
    Matrix s(2, 2);
    s.at(0, 0) = a;
    s.at(1, 1) = a;
    s.at(0, 1) = Coeff(1);
    CHECK(s.det() == a * a);
    CHECK(s.inverse().at(0, 1) == -(a * a).inverse());
}

TEST_CASE("polynomial evaluation at a matrix") {
    const Matrix m = mat2(0, 1, 0, 0);   // nilpotent Jordan block
    // T^2 kills it; T does not.
    CHECK(eval_at_matrix(up({0, 0, 1}), m).is_zero());
    CHECK_FALSE(eval_at_matrix(up({0, 1}), m).is_zero());
    // p(M) for p = T^2 - 5T - 2 at M = [[1,2],[3,4]] is zero
    // (its characteristic polynomial).
    CHECK(eval_at_matrix(up({-2, -5, 1}), mat2(1, 2, 3, 4)).is_zero());
    // Constant polynomial gives c * I.
    CHECK(eval_at_matrix(up({7}), m) == Matrix::identity(2).scaled(Coeff(7)));
    CHECK(eval_at_matrix(UPoly::zero(), m).is_zero());
}

TEST_CASE("minimal polynomial of a vector") {
    // Companion matrix of T^2 - 5T - 2, cyclic vector e_0.
    Matrix c(2, 2);
    c.at(0, 1) = Coeff(2);
    c.at(1, 0) = Coeff(1);
    c.at(1, 1) = Coeff(5);
    CHECK(min_poly_of_vector(c, 0) == up({-2, -5, 1}));

    // Identity: every vector is annihilated by T - 1.
    CHECK(min_poly_of_vector(Matrix::identity(2), 0) == up({-1, 1}));
    CHECK(min_poly_of_vector(Matrix::identity(2), 1) == up({-1, 1}));

    // Diagonal with distinct entries: e_0 sees only its own eigenvalue.
    const Matrix d = mat2(2, 0, 0, 3);
    CHECK(min_poly_of_vector(d, 0) == up({-2, 1}));
    CHECK(min_poly_of_vector(d, 1) == up({-3, 1}));

    // The minimal polynomial annihilates the vector.
    const Matrix m = mat2(1, 1, 0, 1);
    const UPoly mp = min_poly_of_vector(m, 1);
    CHECK(mp == up({1, -2, 1})); // (T-1)^2 for the Jordan block
    std::vector<Coeff> e1 = {Coeff(0), Coeff(1)};
    const Matrix pm = eval_at_matrix(mp, m);
    CHECK(pm.apply(e1) == std::vector<Coeff>{Coeff(0), Coeff(0)});
}

TEST_CASE("span builder over plane polynomials") {
    const Poly2 X = Poly2::X();
    const Poly2 Y = Poly2::Y();

    SpanBuilder sb;
    CHECK(sb.dimension() == 0);
    CHECK_FALSE(sb.insert(X).has_value());          // new member
    CHECK_FALSE(sb.insert(Y + X).has_value());      // new member
    CHECK(sb.dimension() == 2);

    // X + 2(Y + X) = 3X + 2Y lies in the span with those coordinates.
    const auto coords = sb.insert(X.scaled(Coeff(3)) + Y.scaled(Coeff(2)));
    REQUIRE(coords.has_value());
    CHECK(*coords == std::vector<Coeff>{Coeff(1), Coeff(2)});
    CHECK(sb.dimension() == 2);

    CHECK(sb.contains(Y));
    const auto cy = sb.coords(Y);
    REQUIRE(cy.has_value());
    CHECK(*cy == std::vector<Coeff>{Coeff(-1), Coeff(1)});

    CHECK_FALSE(sb.contains(X * X));
    CHECK_FALSE(sb.coords(X * Y).has_value());
    CHECK(sb.basis().size() == 2);
    CHECK(sb.basis()[0] == X);

    // The zero polynomial is in every span with zero coordinates.
    const auto cz = sb.coords(Poly2());
    REQUIRE(cz.has_value());
    CHECK(*cz == std::vector<Coeff>{Coeff(0), Coeff(0)});
}

} // TEST_SUITE
