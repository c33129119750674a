#include "doctest.h"

#include <optional>
#include <utility>
#include <vector>

#include "lfd/automorphism.hpp"
#include "lfd/derivation.hpp"
#include "lfd/errors.hpp"
#include "lfd/expmap.hpp"
#include "lfd/symtab.hpp"

using namespace lfd;

namespace {

const Poly2 X = Poly2::X();
const Poly2 Y = Poly2::Y();

Matrix mat2(const Coeff& a, const Coeff& b, const Coeff& c, const Coeff& d) {
    Matrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

Derivation linear_derivation(const Matrix& m) {
    return {Poly2::monomial(1, 0, m.at(0, 0)) + Poly2::monomial(0, 1, m.at(0, 1)),
            Poly2::monomial(1, 0, m.at(1, 0)) + Poly2::monomial(0, 1, m.at(1, 1))};
}

PolyMap subst_t(const PolyMap& m, GenId t, const Coeff& value,
                SymbolTable& table) {
    auto f = [&](const Coeff& c) { return subst_param(c, t, value, table); };
    return {map_coeffs(m.f, f), map_coeffs(m.g, f)};
}

/// Coefficient of t^1 in each component, as a pair of polynomials.
PolyMap t_jet(const PolyMap& m, GenId t, SymbolTable& table) {
    auto f = [&](const Coeff& c) {
        return subst_param(derivative_param(c, t, table), t, Coeff(0), table);
    };
    return {map_coeffs(m.f, f), map_coeffs(m.g, f)};
}

} // namespace

TEST_SUITE("expmap") {

TEST_CASE("exponential of a locally nilpotent derivation") {
    // f(X) d/dY exponentiates to the shear (X, Y + f(X)).
    const Poly2 f = X.pow(3) - Poly2::constant(1);
    CHECK(exp_lnd({Poly2(), f}, 64) == PolyMap{X, Y + f});
    CHECK(exp_lnd({Poly2(), Poly2::constant(1)}, 64) ==
          PolyMap{X, Y + Poly2::constant(1)});
    CHECK(exp_lnd({Poly2(), Poly2()}, 64) == identity_map());
    CHECK(exp_lnd({Y, Poly2()}, 64) == PolyMap{X + Y, Y});

    // Series with a genuine 1/j! term: D(X) = Y, D(Y) = 1.
    const Derivation tri{Y, Poly2::constant(1)};
    CHECK(exp_lnd(tri, 64) ==
          PolyMap{X + Y + Poly2::constant(Coeff(Rat(1, 2))),
                  Y + Poly2::constant(1)});

    // exp(D) and exp(-D) compose to the identity, in both orders.
    const std::vector<Derivation> lnds = {
        {Poly2(), f}, {Y, Poly2()}, tri, {Y * Y, Poly2::constant(2)}};
    for (const Derivation& d : lnds) {
        const PolyMap e = exp_lnd(d, 64);
        const PolyMap einv = exp_lnd(Derivation{} - d, 64);
        CHECK(is_identity(compose(e, einv)));
        CHECK(is_identity(compose(einv, e)));
        // exp(D) commutes with D.
        CHECK(commutes_with_derivation(e, d));
    }

    // Ring-homomorphism property on products.
    const PolyMap e = exp_lnd(tri, 64);
    const std::vector<Poly2> ps = {X * Y, X + Y * Y, X * X - Y};
    for (const Poly2& p : ps)
        for (const Poly2& q : ps)
            CHECK(apply(e, p * q) == apply(e, p) * apply(e, q));

    // Non-nilpotent inputs are rejected.
    CHECK_THROWS_AS(exp_lnd({X, Poly2()}, 64), NotLocallyNilpotent);
    CHECK_THROWS_AS(exp_lnd({X * X, Poly2()}, 16), NotLocallyNilpotent);
}

TEST_CASE("exponential of a linear derivation") {
    SymbolTable t;
    const Coeff l = Coeff::from_gen(t.add_param("lambda"));
    const Coeff el = exponential_of(l, t);

    // Jordan block: exp sends (X, Y) to (E_l(X+Y), E_l Y).
    const PolyMap jb = exp_linear(mat2(l, Coeff(1), Coeff(0), l), t);
    CHECK(jb == PolyMap{(X + Y).scaled(el), Y.scaled(el)});

    // Diagonal: componentwise eigenvalue exponentials.
    const Coeff m1 = Coeff::from_gen(t.add_param("mu"));
    const PolyMap dg = exp_linear(mat2(l, Coeff(0), Coeff(0), m1), t);
    CHECK(dg == PolyMap{X.scaled(el), Y.scaled(exponential_of(m1, t))});

    // Zero matrix: identity.
    CHECK(exp_linear(Matrix(2, 2), t) == identity_map());

    // Rational distinct eigenvalues through the Lagrange projectors:
    // M = [[1,2],[3,2]] has eigenvalues 4 and -1.
    const Matrix m = mat2(Coeff(1), Coeff(2), Coeff(3), Coeff(2));
    const PolyMap auto_pair = exp_linear(m, t);
    const PolyMap explicit_pair =
        exp_linear(m, t, std::make_pair(Coeff(4), Coeff(-1)));
    CHECK(auto_pair == explicit_pair);
    const Coeff e4 = exponential_of(Coeff(4), t);
    const Coeff em1 = exponential_of(Coeff(-1), t);
    // P1 = (M + I)/5, P2 = (4I - M)/5.
    CHECK(auto_pair.f == X.scaled((e4 * Coeff(2) + em1 * Coeff(3)) / Coeff(5)) +
                             Y.scaled((e4 * Coeff(2) - em1 * Coeff(2)) / Coeff(5)));

    // A wrong explicit pair contradicts trace/determinant.
    CHECK_THROWS_AS(
        exp_linear(m, t, std::make_pair(Coeff(3), Coeff(-1))),
        ConstraintViolated);

    // Irrational eigenvalues are out of field.
    CHECK_THROWS_AS(exp_linear(mat2(Coeff(0), Coeff(1), Coeff(2), Coeff(0)), t),
                    EigenvaluesNotInField);

    // Non-integer rational eigenvalues are not representable exponentials.
    CHECK_THROWS_AS(
        exp_linear(mat2(Coeff(Rat(1, 2)), Coeff(0), Coeff(0), Coeff(0)), t),
        UnsupportedExponent);
}

TEST_CASE("exponential of a semisimple derivation") {
    SymbolTable t;
    const Coeff a = Coeff::from_gen(t.add_param("a"));
    const Coeff ea = exponential_of(a, t);

    // Coordinate-diagonal shape.
    const Derivation diag{X.scaled(a), Y.scaled(Coeff(2) * a)};
    CHECK(exp_semisimple(diag, t) ==
          PolyMap{X.scaled(ea), Y.scaled(ea.pow(2))});

    // Linear homogeneous shapes are delegated to the matrix exponential.
    const Derivation swap{Y, X};  // eigenvalues 1 and -1
    const PolyMap es = exp_semisimple(swap, t);
    const Coeff e1 = exponential_of(Coeff(1), t);
    const Coeff eneg = e1.inverse();
    CHECK(es.f == X.scaled((e1 + eneg) / Coeff(2)) +
                      Y.scaled((e1 - eneg) / Coeff(2)));

    // Anything non-diagonal and non-linear is unsupported, even when
    // abstractly semisimple (a conjugated diagonal derivation).  The
    // weights (1, 3) avoid the (1, 2) resonance, so the conjugation by
    // (X, Y + X^2) genuinely moves the derivation off diagonal shape.
    const Derivation diag13{X.scaled(a), Y.scaled(Coeff(3) * a)};
    const AutWord w = word({elem_y_letter(X * X)});
    const Derivation hidden = conjugate(w, diag13);
    CHECK(hidden.py != Y.scaled(Coeff(3) * a));
    CHECK(classify_lf(hidden, 64).is_semisimple);
    CHECK_THROWS_AS(exp_semisimple(hidden, t), UnsupportedShape);
    CHECK_THROWS_AS(exp_semisimple({Poly2::constant(1), Y.scaled(a)}, t),
                    UnsupportedShape);
}

TEST_CASE("exponential of a locally finite derivation") {
    SymbolTable t;
    const Coeff a = Coeff::from_gen(t.add_param("a"));
    const Coeff b = Coeff::from_gen(t.add_param("b"));
    const Coeff eb = exponential_of(b, t);
    const Coeff ea = exponential_of(a, t);

    // Translation-scale: (X+1, E_b Y).
    const Derivation dts{Poly2::constant(1), Y.scaled(b)};
    CHECK(exp_lfd(dts, 64, t) ==
          PolyMap{X + Poly2::constant(1), Y.scaled(eb)});

    // Scale-plus-bump, m = 2 and m = 3: (E_a X, E_a^m Y + E_a^m X^m).
    for (int m = 2; m <= 3; ++m) {
        const Derivation d{X.scaled(a),
                           Y.scaled(a * Coeff(m)) + X.pow(m)};
        CHECK(exp_lfd(d, 64, t) ==
              PolyMap{X.scaled(ea),
                      Y.scaled(ea.pow(m)) + X.pow(m).scaled(ea.pow(m))});
    }

    // Agreement with the special-purpose exponentials.
    const Derivation lnd{Poly2(), X * X};
    CHECK(exp_lfd(lnd, 64, t) == exp_lnd(lnd, 64));
    const Matrix mm = mat2(Coeff(1), Coeff(1), Coeff(0), Coeff(1));
    CHECK(exp_lfd(linear_derivation(mm), 64, t) == exp_linear(mm, t));

    // exp of zero is the identity.
    CHECK(exp_lfd({Poly2(), Poly2()}, 64, t) == identity_map());

    // A resonance E_l = 1 collapses exp(lX d/dX) to the identity.
    SymbolTable t2;
    const GenId gl = t2.add_param("lambda");
    const Coeff l = Coeff::from_gen(gl);
    t2.set_resonance(t2.exp_symbol(Monomial::gen(gl)), Coeff(1));
    CHECK(exp_lfd({X.scaled(l), Poly2()}, 64, t2) == identity_map());

    // Conjugation identity on fixed words.  The exponential requires the
    // semisimple part to stay diagonal or linear, so the word conjugating
    // dts is diagonal; the nilpotent derivation tolerates a general word.
    const Matrix md = mat2(Coeff(2), Coeff(0), Coeff(0), Coeff(3));
    const AutWord wd = word({affine_letter(md, Coeff(0), Coeff(0))});
    const PolyMap lhs = compose(flatten(wd),
                                compose(exp_lfd(dts, 64, t),
                                        flatten(invert(wd))));
    CHECK(lhs == exp_lfd(conjugate(wd, dts), 64, t));

    const AutWord we = word({elem_x_letter(Y * Y)});
    const PolyMap lhe = compose(flatten(we),
                                compose(exp_lfd(lnd, 64, t),
                                        flatten(invert(we))));
    CHECK(lhe == exp_lfd(conjugate(we, lnd), 64, t));
}

TEST_CASE("one-parameter flows") {
    SymbolTable t;
    const GenId gt = t.add_param("t");
    const GenId gs = t.add_param("s");
    const Coeff ct = Coeff::from_gen(gt);
    const Coeff b = Coeff::from_gen(t.add_param("b"));
    const Coeff a = Coeff::from_gen(t.add_param("a"));

    // LND flow: (X, Y + t f(X)).
    const Poly2 f = X.pow(3);
    const Derivation dtri{Poly2(), f};
    CHECK(flow(dtri, gt, 64, t) == PolyMap{X, Y + f.scaled(ct)});

    // Translation-scale flow: (X + t, E[b*t] Y).
    const Derivation dts{Poly2::constant(1), Y.scaled(b)};
    const PolyMap fts = flow(dts, gt, 64, t);
    const Coeff ebt = exponential_of(b * ct, t);
    CHECK(fts == PolyMap{X + Poly2::monomial(0, 0, ct), Y.scaled(ebt)});

    // Scale-plus-bump flow: (E[a*t] X, E[a*t]^2 (Y + t X^2)).
    const Derivation dsb{X.scaled(a), Y.scaled(Coeff(2) * a) + X * X};
    const Coeff eat = exponential_of(a * ct, t);
    CHECK(flow(dsb, gt, 64, t) ==
          PolyMap{X.scaled(eat),
                  Y.scaled(eat.pow(2)) + (X * X).scaled(eat.pow(2) * ct)});

    // Flow at t = 0 is the identity; the t^1 jet recovers the derivation.
    const std::vector<Derivation> ds = {
        dtri, dts, dsb,
        linear_derivation(mat2(Coeff(1), Coeff(1), Coeff(0), Coeff(1))),
        linear_derivation(mat2(Coeff(1), Coeff(0), Coeff(0), Coeff(2)))};
    for (const Derivation& d : ds) {
        const PolyMap ft = flow(d, gt, 64, t);
        CHECK(is_identity(subst_t(ft, gt, Coeff(0), t)));
        const PolyMap jet = t_jet(ft, gt, t);
        CHECK(jet.f == d.px);
        CHECK(jet.g == d.py);
        // Nontriviality: nonzero derivations have nonidentity flows.
        CHECK(is_identity(ft) == d.is_zero());

        // Group law: substituting t -> t+s factors through composition.
        const PolyMap fs = flow(d, gs, 64, t);
        const Coeff cs = Coeff::from_gen(gs);
        const PolyMap fts2 = subst_t(ft, gt, ct + cs, t);
        CHECK(fts2 == compose(ft, fs));
        CHECK(fts2 == compose(fs, ft));
    }
}

TEST_CASE("spectra and exponential injectivity") {
    SymbolTable t;
    const GenId ga = t.add_param("a");
    const Coeff a = Coeff::from_gen(ga);

    // Weights are read off coordinate-diagonal derivations.
    const Spectrum s = spectrum_of({X.scaled(a), Y.scaled(Coeff(2) * a)});
    REQUIRE(s.generator_weights.has_value());
    CHECK(s.generator_weights->first == a);
    CHECK(s.generator_weights->second == Coeff(2) * a);
    CHECK(s.eigenvalues.size() == 2);
    CHECK(s.monoid_closure_flag);
    CHECK(spectrum_of({Poly2(), Poly2()}).generator_weights->first ==
          Coeff(0));
    CHECK_THROWS_AS(spectrum_of({Poly2(), X}), UnsupportedSpectrum);
    CHECK_THROWS_AS(spectrum_of({X + Y, Y.scaled(a)}), UnsupportedSpectrum);

    // Unpinned symbolic weights: exponentials are free, injective.
    CHECK(spectrum_injective(s, t));

    // Empty spectrum: trivially injective.
    CHECK(spectrum_injective(Spectrum{}, t));

    // Weights (a, 0) with E_a pinned to 1: 0 and a collide.
    SUBCASE("resonance at 1 breaks injectivity") {
        t.set_resonance(t.exp_symbol(Monomial::gen(ga)), Coeff(1));
        const Spectrum sl = spectrum_of({X.scaled(a), Poly2()});
        CHECK_FALSE(spectrum_injective(sl, t));
        CHECK_FALSE(spectrum_injective(s, t));
    }
    SUBCASE("resonance at -1 breaks injectivity via the parity relation") {
        t.set_resonance(t.exp_symbol(Monomial::gen(ga)), Coeff(-1));
        const Spectrum sl = spectrum_of({X.scaled(a), Poly2()});
        CHECK_FALSE(spectrum_injective(sl, t));
    }
    SUBCASE("resonance at 2 keeps injectivity") {
        t.set_resonance(t.exp_symbol(Monomial::gen(ga)), Coeff(2));
        const Spectrum sl = spectrum_of({X.scaled(a), Poly2()});
        CHECK(spectrum_injective(sl, t));
    }
    SUBCASE("integer weights fail once E[1] is pinned to 1") {
        const Spectrum si =
            spectrum_of({X.scaled(Coeff(1)), Y.scaled(Coeff(2))});
        CHECK(spectrum_injective(si, t));
        t.set_resonance(t.exp_symbol(Monomial::one()), Coeff(1));
        CHECK_FALSE(spectrum_injective(si, t));
    }

    // Non-decomposable weights are rejected.
    const Spectrum bad = spectrum_of({X.scaled(a / Coeff(2)), Poly2()});
    CHECK_THROWS_AS(spectrum_injective(bad, t), UnsupportedSpectrum);
}

} // TEST_SUITE
