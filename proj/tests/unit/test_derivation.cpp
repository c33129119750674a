#include "doctest.h"

#include <utility>
#include <vector>

#include "lfd/derivation.hpp"
#include "lfd/errors.hpp"
#include "lfd/symtab.hpp"

using namespace lfd;

namespace {

const Poly2 X = Poly2::X();
const Poly2 Y = Poly2::Y();

UPoly up(std::vector<Coeff> c) { return UPoly(std::move(c)); }

Derivation linear_derivation(const Coeff& a, const Coeff& b, const Coeff& c,
                             const Coeff& d) {
    return {Poly2::monomial(1, 0, a) + Poly2::monomial(0, 1, b),
            Poly2::monomial(1, 0, c) + Poly2::monomial(0, 1, d)};
}

/// Evaluates sum_k p_k D^k(g) — the annihilation check for min polys.
Poly2 eval_poly_at_derivation(const UPoly& p, const Derivation& d,
                              const Poly2& g) {
    Poly2 acc;
    Poly2 iterate = g;
    for (int k = 0; k <= p.degree(); ++k) {
        acc += iterate.scaled(p.coeff(k));
        iterate = apply(d, iterate);
    }
    return acc;
}

} // namespace

TEST_SUITE("derivation") {

TEST_CASE("application to polynomials") {
    // f(X) d/dY sends Y to f(X).
    const Derivation d1{Poly2(), X * X};
    CHECK(apply(d1, Y) == X * X);
    CHECK(apply(d1, X).is_zero());

    // aX d/dX + (2aY + X^2) d/dY sends X to aX.
    SymbolTable t;
    const Coeff a = Coeff::from_gen(t.add_param("a"));
    const Derivation d2{X.scaled(a),
                        Y.scaled(Coeff(2) * a) + X * X};
    CHECK(apply(d2, X) == X.scaled(a));
    CHECK(apply(d2, Y) == Y.scaled(Coeff(2) * a) + X * X);

    // Derivations kill constants.
    CHECK(apply(d2, Poly2::constant(1)).is_zero());
    CHECK(apply(d1, Poly2::constant(-7)).is_zero());

    // Leibniz rule on products.
    const std::vector<Poly2> polys = {
        X * Y + Poly2::constant(2), Y * Y - X, X * X * Y,
        X + Y.scaled(a)};
    for (const Poly2& f : polys)
        for (const Poly2& g : polys) {
            CHECK(apply(d2, f * g) ==
                  f * apply(d2, g) + g * apply(d2, f));
            CHECK(apply(d1, f + g) == apply(d1, f) + apply(d1, g));
        }
}

TEST_CASE("Lie bracket") {
    const Derivation dy{Poly2(), Poly2::constant(1)};  // d/dY
    const Derivation xdx{X, Poly2()};                  // X d/dX
    CHECK(bracket(dy, xdx).is_zero());

    const Derivation xdy{Poly2(), X};                  // X d/dY
    const Derivation ydx{Y, Poly2()};                  // Y d/dX
    CHECK(bracket(xdy, ydx) == Derivation{X, -Y});     // X d/dX - Y d/dY

    // Antisymmetry, [D, D] = 0, and Jacobi on a fixed triple.
    const std::vector<Derivation> ds = {
        dy, xdx, xdy, ydx,
        {X * X, Y}, {X + Y, X * Y}, {Y * Y, X - Y}};
    for (const Derivation& p : ds) {
        CHECK(bracket(p, p).is_zero());
        for (const Derivation& q : ds) {
            CHECK(bracket(p, q) == Derivation{} - bracket(q, p));
            for (const Derivation& r : ds) {
                const Derivation jac =
                    bracket(p, bracket(q, r)) +
                    bracket(q, bracket(r, p)) +
                    bracket(r, bracket(p, q));
                CHECK(jac.is_zero());
            }
        }
    }

    // The bracket is computed on generators.
    const Derivation b = bracket(xdy, ydx);
    CHECK(b.px == apply(xdy, apply(ydx, X)) - apply(ydx, apply(xdy, X)));
    CHECK(b.py == apply(xdy, apply(ydx, Y)) - apply(ydx, apply(xdy, Y)));
}

TEST_CASE("orbit iteration and cyclic minimal polynomials") {
    // Eigenvector orbit: X d/dX on X.
    const IterSpan s1 = iter_span({X, Poly2()}, X, 16);
    CHECK(s1.basis == std::vector<Poly2>{X});
    CHECK(s1.min_poly == up({Coeff(-1), Coeff(1)}));  // T - 1
    CHECK(s1.companion.rows() == 1);
    CHECK(s1.companion.at(0, 0) == Coeff(1));
    CHECK(s1.generator == X);

    // d/dX + bY d/dY on Y: eigenvalue b.
    SymbolTable t;
    const Coeff b = Coeff::from_gen(t.add_param("b"));
    const Derivation d2{Poly2::constant(1), Y.scaled(b)};
    const IterSpan s2 = iter_span(d2, Y, 16);
    CHECK(s2.basis == std::vector<Poly2>{Y});
    CHECK(s2.min_poly == up({-b, Coeff(1)}));         // T - b

    // Same derivation on X: X, 1 span; D(1) = 0 gives min poly T^2.
    const IterSpan s3 = iter_span(d2, X, 16);
    CHECK(s3.basis.size() == 2);
    CHECK(s3.min_poly == up({Coeff(0), Coeff(0), Coeff(1)}));

    // X^2 d/dX never stabilizes: iterate degrees strictly increase.
    try {
        iter_span({X * X, Poly2()}, X, 10);
        FAIL("expected NotStabilizedWithinCap");
    } catch (const NotStabilizedWithinCap& e) {
        REQUIRE(e.degree_trace.size() >= 2);
        for (std::size_t k = 1; k < e.degree_trace.size(); ++k)
            CHECK(e.degree_trace[k] > e.degree_trace[k - 1]);
    }

    // dim(basis) == deg(min_poly) on every cyclic subspace.
    for (const IterSpan& s : {s1, s2, s3})
        CHECK(static_cast<int>(s.basis.size()) == s.min_poly.degree());
}

TEST_CASE("local-finiteness classification") {
    // X d/dY: locally nilpotent with min poly T^2.
    const LFReport r1 = classify_lf({Poly2(), X}, 64);
    CHECK(r1.is_lf);
    CHECK(r1.min_poly == up({Coeff(0), Coeff(0), Coeff(1)}));
    CHECK(r1.is_lnd);
    CHECK_FALSE(r1.is_semisimple);
    CHECK(r1.cap_used == 2);

    // aX d/dX + aY d/dY: semisimple, not locally nilpotent.
    SymbolTable t;
    const Coeff a = Coeff::from_gen(t.add_param("a"));
    const LFReport r2 = classify_lf({X.scaled(a), Y.scaled(a)}, 64);
    CHECK(r2.is_lf);
    CHECK(r2.is_semisimple);
    CHECK_FALSE(r2.is_lnd);
    CHECK(r2.min_poly == up({-a, Coeff(1)}));         // T - a

    // X^2 d/dX: not locally finite; the report carries the degree trace.
    const LFReport r3 = classify_lf({X * X, Poly2()}, 12);
    CHECK_FALSE(r3.is_lf);
    CHECK(r3.cap_used == 12);
    CHECK(r3.degree_trace.size() >= 2);

    // The zero derivation: min poly T, simultaneously lnd and semisimple.
    const LFReport r0 = classify_lf({Poly2(), Poly2()}, 64);
    CHECK(r0.is_lf);
    CHECK(r0.min_poly == up({Coeff(0), Coeff(1)}));
    CHECK(r0.is_lnd);
    CHECK(r0.is_semisimple);

    // min_poly annihilates the derivation on both generators.
    const std::vector<Derivation> lf = {
        {Poly2(), X},
        {X.scaled(a), Y.scaled(a)},
        {Poly2::constant(1), Y.scaled(a)},
        linear_derivation(Coeff(1), Coeff(2), Coeff(3), Coeff(4)),
        {Y, X},                                       // swap: T^2 - 1
        {X.scaled(a), Y.scaled(Coeff(2) * a) + X * X}};
    for (const Derivation& d : lf) {
        const LFReport r = classify_lf(d, 64);
        REQUIRE(r.is_lf);
        CHECK(eval_poly_at_derivation(r.min_poly, d, X).is_zero());
        CHECK(eval_poly_at_derivation(r.min_poly, d, Y).is_zero());
    }
    CHECK(classify_lf({Y, X}, 64).min_poly ==
          up({Coeff(-1), Coeff(0), Coeff(1)}));
}

TEST_CASE("semisimple/nilpotent splitting") {
    SymbolTable t;
    const Coeff a = Coeff::from_gen(t.add_param("a"));
    const Coeff b = Coeff::from_gen(t.add_param("b"));

    SUBCASE("translation-scale form splits into scale + translation") {
        const Derivation d{Poly2::constant(1), Y.scaled(b)};
        const auto [ds, dn] = jordan(d, 64);
        CHECK(ds == Derivation{Poly2(), Y.scaled(b)});
        CHECK(dn == Derivation{Poly2::constant(1), Poly2()});
    }
    SUBCASE("scale-plus-bump form, m = 2 and m = 3") {
        for (int m = 2; m <= 3; ++m) {
            const Derivation d{
                X.scaled(a),
                Y.scaled(a * Coeff(m)) + X.pow(m)};
            const auto [ds, dn] = jordan(d, 64);
            CHECK(ds == Derivation{X.scaled(a), Y.scaled(a * Coeff(m))});
            CHECK(dn == Derivation{Poly2(), X.pow(m)});
        }
    }
    SUBCASE("locally nilpotent inputs are purely nilpotent") {
        const Derivation d{Poly2(), X * X * X - Poly2::constant(1)};
        const auto [ds, dn] = jordan(d, 64);
        CHECK(ds.is_zero());
        CHECK(dn == d);
    }
    SUBCASE("postconditions and idempotence") {
        const std::vector<Derivation> samples = {
            {Poly2::constant(1), Y.scaled(b)},
            {X.scaled(a), Y.scaled(Coeff(2) * a) + X * X},
            linear_derivation(Coeff(1), Coeff(1), Coeff(0), Coeff(1)),
            linear_derivation(Coeff(1), Coeff(2), Coeff(3), Coeff(4)),
            {Y, X}};
        for (const Derivation& d : samples) {
            const auto [ds, dn] = jordan(d, 64);
            CHECK(ds + dn == d);
            CHECK(bracket(ds, dn).is_zero());
            CHECK(classify_lf(dn, 64).is_lnd);
            CHECK(classify_lf(ds, 64).is_semisimple);

            const auto [ss, sn] = jordan(ds, 64);
            CHECK(ss == ds);
            CHECK(sn.is_zero());
            const auto [ns, nn] = jordan(dn, 64);
            CHECK(ns.is_zero());
            CHECK(nn == dn);
        }
    }
    SUBCASE("2x2 closed form for linear derivations") {
        struct Case { long p, q, r, s; };
        const std::vector<Case> cases = {
            {1, 2, 3, 4},   // distinct eigenvalues, irrational
            {0, 1, 2, 0},   // distinct eigenvalues, irrational
            {3, 0, 0, 5},   // distinct eigenvalues, rational
            {1, 1, 0, 1},   // double eigenvalue, non-diagonal
            {2, 1, -1, 0},  // double eigenvalue 1, non-diagonal
            {4, 0, 0, 4},   // double eigenvalue, already diagonal
        };
        for (const Case& c : cases) {
            const Derivation d = linear_derivation(
                Coeff(c.p), Coeff(c.q), Coeff(c.r), Coeff(c.s));
            const auto [ds, dn] = jordan(d, 64);
            const Coeff tr = Coeff(c.p + c.s);
            const Coeff det = Coeff(c.p * c.s - c.q * c.r);
            const Coeff disc = tr * tr - Coeff(4) * det;
            if (!disc.is_zero()) {
                CHECK(dn.is_zero());
                CHECK(ds == d);
            } else {
                const Coeff h = tr / Coeff(2);
                CHECK(ds == Derivation{X.scaled(h), Y.scaled(h)});
                CHECK(dn == d - ds);
            }
        }
    }
}

TEST_CASE("syntactic recognition of canonical shapes") {
    SymbolTable t;
    const Coeff a = Coeff::from_gen(t.add_param("a"));

    // f(X) d/dY.
    const NormalForm n1 =
        recognize_normal_form({Poly2(), X.pow(3) - Poly2::constant(1)});
    CHECK(n1.tag == NormalForm::Tag::Triangular);
    CHECK(n1.f == X.pow(3) - Poly2::constant(1));
    // The zero derivation matches with f = 0.
    CHECK(recognize_normal_form({Poly2(), Poly2()}).tag ==
          NormalForm::Tag::Triangular);

    // d/dX + bY d/dY, including b = 0.
    const NormalForm n2 =
        recognize_normal_form({Poly2::constant(1), Y.scaled(a)});
    CHECK(n2.tag == NormalForm::Tag::TranslationScale);
    CHECK(n2.b == a);
    const NormalForm n2z =
        recognize_normal_form({Poly2::constant(1), Poly2()});
    CHECK(n2z.tag == NormalForm::Tag::TranslationScale);
    CHECK(n2z.b == Coeff(0));

    // aX d/dX + (amY + X^m) d/dY with m >= 2.
    const NormalForm n3 = recognize_normal_form(
        {X.scaled(a), Y.scaled(Coeff(2) * a) + X * X});
    CHECK(n3.tag == NormalForm::Tag::ResonantScale);
    CHECK(n3.a == a);
    CHECK(n3.m == 2);

    // The m = 1 shape is linear and is reported as such.
    const NormalForm n3l =
        recognize_normal_form({X.scaled(a), Y.scaled(a) + X});
    CHECK(n3l.tag == NormalForm::Tag::Linear);
    CHECK(n3l.mat.at(0, 0) == a);
    CHECK(n3l.mat.at(1, 0) == Coeff(1));
    CHECK(n3l.mat.at(1, 1) == a);

    // General linear, rows = component coefficients.
    const NormalForm n4 = recognize_normal_form(
        linear_derivation(Coeff(1), Coeff(2), Coeff(3), Coeff(4)));
    CHECK(n4.tag == NormalForm::Tag::Linear);
    CHECK(n4.mat.at(0, 0) == Coeff(1));
    CHECK(n4.mat.at(0, 1) == Coeff(2));
    CHECK(n4.mat.at(1, 0) == Coeff(3));
    CHECK(n4.mat.at(1, 1) == Coeff(4));

    // Shapes outside the four templates.
    CHECK(recognize_normal_form({X * Y, Poly2()}).tag ==
          NormalForm::Tag::Unrecognized);
    CHECK(recognize_normal_form({X * X, Poly2()}).tag ==
          NormalForm::Tag::Unrecognized);
    CHECK(recognize_normal_form(
              {Poly2::constant(1), Y * Y}).tag ==
          NormalForm::Tag::Unrecognized);
}

} // TEST_SUITE
