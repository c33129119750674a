#include "lfd/verify.hpp"

#include <chrono>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "lfd/derivation.hpp"
#include "lfd/errors.hpp"
#include "lfd/expmap.hpp"
#include "lfd/isotropy.hpp"
#include "lfd/printing.hpp"
#include "lfd/symtab.hpp"

namespace lfd {

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

Rat sample_rat(Rng& rng, bool nonzero) {
    long num = rng.range(-9, 9);
    while (nonzero && num == 0)
        num = rng.range(-9, 9);
    const long den = rng.range(1, 9);
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Coeff sample_scalar(Rng& rng, bool nonzero) {
    return Coeff(sample_rat(rng, nonzero));
}

Poly2 sample_poly(Rng& rng, bool in_x, int maxdeg, bool nonzero) {
    if (!nonzero && rng.range(0, 7) == 0)
        return Poly2();
    const int d = static_cast<int>(rng.range(0, maxdeg));
    Poly2 p;
    for (int k = 0; k < d; ++k)
        if (rng.range(0, 1) == 1)
            p.add_term(in_x ? k : 0, in_x ? 0 : k, sample_scalar(rng, true));
    p.add_term(in_x ? d : 0, in_x ? 0 : d, sample_scalar(rng, true));
    return p;
}

namespace {

Matrix sample_invertible(Rng& rng) {
    Matrix a(2, 2);
    do {
        a.at(0, 0) = sample_scalar(rng, false);
        a.at(0, 1) = sample_scalar(rng, false);
        a.at(1, 0) = sample_scalar(rng, false);
        a.at(1, 1) = sample_scalar(rng, false);
    } while (a.det().is_zero());
    return a;
}

AutWord sample_word_sized(Rng& rng, int max_len, int shift_deg) {
    const int len = static_cast<int>(rng.range(1, max_len));
    std::vector<Letter> letters;
    for (int i = 0; i < len; ++i) {
        const long kind = rng.range(0, 3);
        if (kind <= 1) {
            const Matrix a = sample_invertible(rng);
            letters.push_back(affine_letter(a, sample_scalar(rng, false),
                                            sample_scalar(rng, false)));
        } else if (kind == 2) {
            letters.push_back(
                elem_x_letter(sample_poly(rng, false, shift_deg, false)));
        } else {
            letters.push_back(
                elem_y_letter(sample_poly(rng, true, shift_deg, false)));
        }
    }
    return word(std::move(letters));
}

} // namespace

AutWord sample_word(Rng& rng) { return sample_word_sized(rng, 4, 4); }

// ---------------------------------------------------------------------------
// Suite harness
// ---------------------------------------------------------------------------

namespace {

struct Checker {
    SuiteReport& rep;
    int sample = 0;

    void fail(const std::string& inputs, const std::string& expected,
              const std::string& got) {
        rep.failures.push_back(
            {"sample " + std::to_string(sample) + ": " + inputs, expected,
             got});
    }
    void check(bool ok, const std::string& inputs,
               const std::string& expected) {
        if (!ok)
            fail(inputs, expected, "violated");
    }
    void check_eq_map(const PolyMap& got, const PolyMap& want,
                      const std::string& inputs, const SymbolTable& t) {
        if (!(got == want))
            fail(inputs, to_string(want, t), to_string(got, t));
    }
};

// Admissible scalar triple for the triangular family of f(X) d/dY, chosen
// from the derived symmetry rules, plus a random polynomial slot.
FamilyInstance triangular_instance(Rng& rng, const SymmetryConstraint& sc) {
    FamilyInstance inst;
    Coeff alpha, beta, gamma;
    if (sc.degree == 0) {
        alpha = sample_scalar(rng, true);
        beta = sample_scalar(rng, false);
        gamma = Coeff(1);
    } else {
        if (sc.exponent == 0)
            alpha = sample_scalar(rng, true);
        else if (sc.exponent % 2 == 0)
            alpha = Coeff(rng.range(0, 1) == 1 ? 1 : -1);
        else
            alpha = Coeff(1);
        beta = sc.center * (Coeff(1) - alpha);
        gamma = alpha.pow(sc.degree);
    }
    inst.scalars = {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}};
    inst.polys = {{"p", sample_poly(rng, true, 4, false)}};
    return inst;
}

// Soundness + sharpness probe at the derivation level: a family member
// built from inst must commute; a random word must commute iff it lands in
// the family.
void probe_family(Checker& ch, Rng& rng, const SymbolTable& table,
                  const Derivation& d, const FamilyInstance& inst) {
    const std::string dstr = "D = " + to_string(d, table);
    try {
        const PolyMap m = iso_family(d, inst);
        ch.check(commutes_with_derivation(m, d),
                 dstr + ", member " + to_string(m, table),
                 "family member commutes with D");
    } catch (const Error& e) {
        ch.fail(dstr, "family instantiation succeeds",
                std::string("threw: ") + e.what());
        return;
    }
    const AutWord w = sample_word(rng);
    const PolyMap m = flatten(w);
    const bool member = in_iso_family(d, m);
    const bool comm = commutes_with_derivation(m, d);
    ch.check(member == comm, dstr + ", word " + to_string(w, table),
             member ? "family member commutes"
                    : "non-member fails to commute");
}

// Same probe against exp(D); sharpness is skipped for resonant shapes
// (the families are then sound but deliberately not exhaustive).
void probe_family_exp(Checker& ch, Rng& rng, SymbolTable& table,
                      const Derivation& d, const FamilyInstance& inst,
                      int cap, bool sharp) {
    const std::string dstr = "D = " + to_string(d, table);
    const PolyMap psi = exp_lfd(d, cap, table);
    try {
        const PolyMap m = iso_family_exp(d, inst, table, cap);
        ch.check(commutes_with_automorphism(m, psi),
                 dstr + ", member " + to_string(m, table),
                 "family member commutes with exp(D)");
    } catch (const Error& e) {
        ch.fail(dstr, "exp-family instantiation succeeds",
                std::string("threw: ") + e.what());
        return;
    }
    if (!sharp)
        return;
    const AutWord w = sample_word(rng);
    const PolyMap m = flatten(w);
    const bool member = in_iso_family_exp(d, m, table);
    const bool comm = commutes_with_automorphism(m, psi);
    ch.check(member == comm, dstr + ", word " + to_string(w, table),
             member ? "family member commutes with exp(D)"
                    : "non-member fails to commute with exp(D)");
}

Derivation diag_derivation(const Coeff& w1, const Coeff& w2) {
    return {Poly2::X().scaled(w1), Poly2::Y().scaled(w2)};
}

// t¹ coefficient of a flow component: differentiate in the parameter,
// then set it to zero.
Poly2 t_jet(const Poly2& p, GenId t, SymbolTable& table) {
    return map_coeffs(p, [&](const Coeff& c) {
        return subst_param(derivative_param(c, t, table), t, Coeff(0),
                           table);
    });
}

Poly2 at_zero(const Poly2& p, GenId t, SymbolTable& table) {
    return map_coeffs(
        p, [&](const Coeff& c) { return subst_param(c, t, Coeff(0), table); });
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

void suite_thm_3_2(Checker& ch, Rng& rng, int samples, int /*cap*/) {
    for (ch.sample = 0; ch.sample < samples; ++ch.sample) {
        SymbolTable table;
        const Poly2 f = sample_poly(rng, true, 4, true);
        const Derivation d{Poly2(), f};
        const SymmetryConstraint sc = affine_symmetries(f);
        probe_family(ch, rng, table, d, triangular_instance(rng, sc));
    }
    ch.rep.samples = samples;
}

void suite_thm_3_3(Checker& ch, Rng& rng, int samples, int /*cap*/) {
    for (ch.sample = 0; ch.sample < samples; ++ch.sample) {
        SymbolTable table;
        const Coeff b = Coeff::from_gen(table.add_param("b"));
        const Derivation d{Poly2::constant(1), Poly2::Y().scaled(b)};
        FamilyInstance inst;
        inst.scalars = {{"beta", sample_scalar(rng, false)},
                        {"gamma", sample_scalar(rng, true)}};
        probe_family(ch, rng, table, d, inst);
    }
    ch.rep.samples = samples;
}

void suite_thm_3_4(Checker& ch, Rng& rng, int samples, int /*cap*/) {
    for (ch.sample = 0; ch.sample < samples; ++ch.sample) {
        SymbolTable table;
        const GenId ga = table.add_param("a");
        const Coeff a = Coeff::from_gen(ga);
        const int m = 2 + ch.sample % 3;
        Derivation d{Poly2::X().scaled(a), Poly2()};
        d.py = Poly2::Y().scaled(a * Coeff(m)) + Poly2::monomial(m, 0, Coeff(1));
        const std::string dstr = "D = " + to_string(d, table);

        // Rational instantiation of the scale/bump family.
        FamilyInstance inst;
        inst.scalars = {{"c", sample_scalar(rng, true)},
                        {"beta", sample_scalar(rng, false)}};
        probe_family(ch, rng, table, d, inst);

        // Fully symbolic instantiation: free c and beta.
        FamilyInstance sym;
        sym.scalars = {{"c", Coeff::from_gen(table.add_param("c"))},
                       {"beta", Coeff::from_gen(table.add_param("beta"))}};
        try {
            const PolyMap mm = iso_family(d, sym);
            ch.check(commutes_with_derivation(mm, d),
                     dstr + ", symbolic member " + to_string(mm, table),
                     "symbolic family member commutes");
        } catch (const Error& e) {
            ch.fail(dstr, "symbolic instantiation succeeds",
                    std::string("threw: ") + e.what());
        }

        // The competing shape (alpha^m X, alpha Y + beta X^m) with an
        // independent scale must NOT commute.
        const Coeff al = Coeff::from_gen(table.add_param("alpha"));
        const Coeff be = Coeff::from_gen(table.add_param("beta2"));
        PolyMap other;
        other.f = Poly2::X().scaled(al.pow(m));
        other.g = Poly2::Y().scaled(al) + Poly2::monomial(m, 0, be);
        ch.check(!commutes_with_derivation(other, d),
                 dstr + ", competing shape " + to_string(other, table),
                 "independent-scale shape fails to commute");
    }
    ch.rep.samples = samples;
}

void suite_thm_3_6(Checker& ch, Rng& rng, int samples, int /*cap*/) {
    for (ch.sample = 0; ch.sample < samples; ++ch.sample) {
        SymbolTable table;
        const Coeff a = Coeff::from_gen(table.add_param("a"));
        const Derivation d = diag_derivation(a, a);
        const Matrix m = sample_invertible(rng);
        FamilyInstance inst;
        inst.scalars = {{"a11", m.at(0, 0)},
                        {"a12", m.at(0, 1)},
                        {"a21", m.at(1, 0)},
                        {"a22", m.at(1, 1)}};
        probe_family(ch, rng, table, d, inst);
    }
    ch.rep.samples = samples;
}

void suite_thm_3_7(Checker& ch, Rng& rng, int samples, int /*cap*/) {
    for (ch.sample = 0; ch.sample < samples; ++ch.sample) {
        SymbolTable table;
        const Coeff a = Coeff::from_gen(table.add_param("a"));
        const Coeff b = Coeff::from_gen(table.add_param("b"));
        const Derivation d = diag_derivation(a, b);
        FamilyInstance inst;
        inst.scalars = {{"alpha", sample_scalar(rng, true)},
                        {"beta", sample_scalar(rng, true)}};
        probe_family(ch, rng, table, d, inst);
    }
    ch.rep.samples = samples;
}

void suite_thm_3_8(Checker& ch, Rng& rng, int samples, int /*cap*/) {
    for (ch.sample = 0; ch.sample < samples; ++ch.sample) {
        SymbolTable table;
        const Coeff a = Coeff::from_gen(table.add_param("a"));
        const Derivation d{Poly2::X().scaled(a) + Poly2::Y(),
                           Poly2::Y().scaled(a)};
        FamilyInstance inst;
        inst.scalars = {{"alpha", sample_scalar(rng, true)},
                        {"beta", sample_scalar(rng, false)}};
        probe_family(ch, rng, table, d, inst);
    }
    ch.rep.samples = samples;
}

void suite_prop_nontrivial(Checker& ch, Rng& rng, int samples, int cap) {
    for (ch.sample = 0; ch.sample < samples; ++ch.sample) {
        SymbolTable table;
        const Coeff a = Coeff::from_gen(table.add_param("a"));
        const Coeff b = Coeff::from_gen(table.add_param("b"));
        const GenId t = table.add_param("t");

        Derivation d;
        switch (ch.sample % 6) {
        case 0:
            d = {Poly2(), sample_poly(rng, true, 4, true)};
            break;
        case 1:
            d = {Poly2::constant(1), Poly2::Y().scaled(b)};
            break;
        case 2: {
            const int m = 2 + (ch.sample / 6) % 3;
            d = {Poly2::X().scaled(a),
                 Poly2::Y().scaled(a * Coeff(m)) +
                     Poly2::monomial(m, 0, Coeff(1))};
            break;
        }
        case 3:
            d = diag_derivation(a, b);
            break;
        case 4:
            d = diag_derivation(a, a);
            break;
        case 5:
            d = {Poly2::X().scaled(a) + Poly2::Y(), Poly2::Y().scaled(a)};
            break;
        }
        const std::string dstr = "D = " + to_string(d, table);
        const PolyMap ft = flow(d, t, cap, table);
        const PolyMap at0{at_zero(ft.f, t, table), at_zero(ft.g, t, table)};
        ch.check(is_identity(at0), dstr, "flow at t = 0 is the identity");
        const Poly2 jf = t_jet(ft.f, t, table);
        const Poly2 jg = t_jet(ft.g, t, table);
        ch.check(jf == d.px && jg == d.py, dstr,
                 "t-jet of the flow equals (D(X), D(Y))");
        ch.check(!(jf.is_zero() && jg.is_zero()), dstr,
                 "flow differs from the identity to first order");
    }
    ch.rep.samples = samples;
}

void suite_lemma_comm_exp(Checker& ch, Rng& rng, int samples, int cap) {
    SymbolTable table;
    for (ch.sample = 0; ch.sample < samples; ++ch.sample) {
        const Poly2 f = sample_poly(rng, true, 4, true);
        const Derivation d{Poly2(), f};
        const std::string dstr = "D = " + to_string(d, table);

        // Commuting direction: g(X)·D commutes, so its exponential lies in
        // the symmetry group of D.
        const Poly2 g = sample_poly(rng, true, 4, true);
        const Derivation e{Poly2(), g * f};
        ch.check(bracket(e, d).is_zero(),
                 dstr + ", E = " + to_string(e, table), "[E, D] == 0");
        ch.check(commutes_with_derivation(exp_lnd(e, cap), d),
                 dstr + ", E = " + to_string(e, table),
                 "exp(E) commutes with D");

        // Non-commuting direction: a shift derivation in the opposite
        // coordinate has nonzero bracket and its exponential must fail.
        Poly2 q = sample_poly(rng, false, 4, true);
        while (q.degree() < 1)
            q = sample_poly(rng, false, 4, true);
        const Derivation e2{q, Poly2()};
        ch.check(!bracket(e2, d).is_zero(),
                 dstr + ", E = " + to_string(e2, table), "[E, D] != 0");
        ch.check(!commutes_with_derivation(exp_lnd(e2, cap), d),
                 dstr + ", E = " + to_string(e2, table),
                 "exp(E) does not commute with D");
    }
    ch.rep.samples = samples;
}

void suite_prop_lnd_equality(Checker& ch, Rng& rng, int samples, int cap) {
    SymbolTable table;
    for (ch.sample = 0; ch.sample < samples; ++ch.sample) {
        const Poly2 f = sample_poly(rng, true, 4, true);
        const Derivation d{Poly2(), f};
        const PolyMap psi = exp_lnd(d, cap);
        const std::string dstr = "D = " + to_string(d, table);

        const AutWord w = sample_word_sized(rng, 4, 2);
        const PolyMap m = flatten(w);
        const bool in_d = commutes_with_derivation(m, d);
        const bool in_exp = commutes_with_automorphism(m, psi);
        ch.check(in_d == in_exp, dstr + ", word " + to_string(w, table),
                 "membership agrees between D and exp(D)");

        // Positive control: a family member lies in both groups.
        const PolyMap fm =
            iso_family(d, triangular_instance(rng, affine_symmetries(f)));
        ch.check(commutes_with_automorphism(fm, psi),
                 dstr + ", member " + to_string(fm, table),
                 "family member commutes with exp(D)");
    }
    ch.rep.samples = samples;
}

void suite_prop_criterion(Checker& ch, Rng& rng, int samples, int cap) {
    ch.sample = 0;
    {
        // Weights (a, m·a) with nothing pinned: always injective.
        SymbolTable table;
        const Coeff a = Coeff::from_gen(table.add_param("a"));
        for (int m = 1; m <= 4; ++m) {
            const Derivation d = diag_derivation(a, a * Coeff(m));
            ch.check(spectrum_injective(spectrum_of(d), table),
                     "weights (a, " + std::to_string(m) + "a), no resonance",
                     "exp injective on the weight monoid");
        }
    }
    {
        // E[lambda] pinned to 1: exp collapses, and the exponential of
        // lambda·X d/dX degenerates to the identity.
        SymbolTable table;
        const GenId gl = table.add_param("lambda");
        const Coeff lam = Coeff::from_gen(gl);
        table.set_resonance(table.exp_symbol(Monomial::gen(gl)), Coeff(1));
        const Derivation d = diag_derivation(lam, Coeff(0));
        ch.check(!spectrum_injective(spectrum_of(d), table),
                 "weights (lambda, 0) with E[lambda] = 1",
                 "exp not injective");
        ch.check(is_identity(exp_lfd(d, cap, table)),
                 "D = lambda*X dX with E[lambda] = 1",
                 "exp(D) == identity");
        ch.check(is_identity(exp_lfd(Derivation{}, cap, table)),
                 "zero derivation", "exp(0) == identity");
    }
    ch.check(spectrum_injective(Spectrum{}, SymbolTable{}),
             "empty spectrum", "vacuously injective");

    // Random integer weights: free before pinning E[1], collapsing after.
    for (ch.sample = 0; ch.sample < samples; ++ch.sample) {
        SymbolTable table;
        long u = rng.range(-9, 9);
        while (u == 0)
            u = rng.range(-9, 9);
        long v = rng.range(-9, 9);
        while (v == 0)
            v = rng.range(-9, 9);
        const Derivation d = diag_derivation(Coeff(u), Coeff(v));
        const Spectrum s = spectrum_of(d);
        const std::string in =
            "weights (" + std::to_string(u) + ", " + std::to_string(v) + ")";
        ch.check(spectrum_injective(s, table), in + ", no resonance",
                 "exp injective");
        table.set_resonance(table.exp_symbol(Monomial::one()), Coeff(1));
        ch.check(!spectrum_injective(s, table), in + ", E[1] = 1",
                 "exp not injective");
    }
    ch.rep.samples = samples;
}

void suite_example_semisimple(Checker& ch, Rng& /*rng*/, int /*samples*/,
                              int cap) {
    ch.sample = 0;
    SymbolTable table;
    const GenId gl = table.add_param("lambda");
    const Coeff lam = Coeff::from_gen(gl);
    table.set_resonance(table.exp_symbol(Monomial::gen(gl)), Coeff(1));
    const Derivation d = diag_derivation(lam, Coeff(0));
    const PolyMap psi = exp_lfd(d, cap, table);
    ch.check(is_identity(psi), "D = lambda*X dX, E[lambda] = 1",
             "exp(D) == identity");
    const PolyMap swap{Poly2::Y(), Poly2::X()};
    ch.check(commutes_with_automorphism(swap, psi),
             "(Y, X) against exp(D) == id",
             "swap commutes with the exponential");
    ch.check(!commutes_with_derivation(swap, d), "(Y, X) against D",
             "swap does not commute with D");
    ch.check(!spectrum_injective(spectrum_of(d), table),
             "weights (lambda, 0) with E[lambda] = 1", "exp not injective");
    ch.rep.samples = 1;
}

void suite_cor_ker_subgroup(Checker& ch, Rng& rng, int samples, int cap) {
    SymbolTable table;
    for (ch.sample = 0; ch.sample < samples; ++ch.sample) {
        const Poly2 f = sample_poly(rng, true, 4, true);
        const Derivation d{Poly2(), f};
        const Poly2 g1 = sample_poly(rng, true, 4, false);
        const Poly2 g2 = sample_poly(rng, true, 4, false);
        const PolyMap e1 = exp_lnd({Poly2(), g1 * f}, cap);
        const PolyMap e2 = exp_lnd({Poly2(), g2 * f}, cap);
        const std::string in = "f = " + to_string(f, table) +
                               ", g1 = " + to_string(g1, table) +
                               ", g2 = " + to_string(g2, table);
        ch.check(commutes_with_derivation(e1, d), in,
                 "exp(g1·D) lies in the symmetry group of D");
        ch.check_eq_map(compose(e1, e2), exp_lnd({Poly2(), (g1 + g2) * f}, cap),
                        in + " (product = exp of the sum)", table);
        ch.check_eq_map(compose(e1, e2), compose(e2, e1),
                        in + " (the subgroup is abelian)", table);
        ch.check(is_identity(compose(
                     e1, exp_lnd({Poly2(), (g1 * f).scaled(Coeff(-1))}, cap))),
                 in, "exp(g1·D) · exp(-g1·D) == identity");
    }
    ch.rep.samples = samples;
}

void suite_thm_isotropy_lfa(Checker& ch, Rng& rng, int samples, int cap) {
    for (ch.sample = 0; ch.sample < samples; ++ch.sample) {
        switch (ch.sample % 7) {
        case 0: {
            SymbolTable table;
            const Poly2 f = sample_poly(rng, true, 4, true);
            const Derivation d{Poly2(), f};
            probe_family_exp(ch, rng, table, d,
                             triangular_instance(rng, affine_symmetries(f)),
                             cap, true);
            break;
        }
        case 1: {
            // Translation-scale, non-resonant: no translation slot in Y,
            // and requesting one must raise the resonance error.
            SymbolTable table;
            const Coeff b = Coeff::from_gen(table.add_param("b"));
            const Derivation d{Poly2::constant(1), Poly2::Y().scaled(b)};
            FamilyInstance inst;
            inst.scalars = {{"alpha", sample_scalar(rng, false)},
                            {"gamma", sample_scalar(rng, true)}};
            probe_family_exp(ch, rng, table, d, inst, cap, true);
            FamilyInstance bad = inst;
            bad.scalars["delta"] = Coeff(1);
            try {
                iso_family_exp(d, bad, table, cap);
                ch.fail("delta slot without E[b] = 1",
                        "ResonanceMismatch is thrown", "no exception");
            } catch (const ResonanceMismatch&) {
            }
            break;
        }
        case 2: {
            // Translation-scale, resonant E[b] = 1: the Y translation
            // opens up (soundness only; the family is not claimed
            // exhaustive in the resonant case).
            SymbolTable table;
            const GenId gb = table.add_param("b");
            const Coeff b = Coeff::from_gen(gb);
            table.set_resonance(table.exp_symbol(Monomial::gen(gb)),
                                Coeff(1));
            const Derivation d{Poly2::constant(1), Poly2::Y().scaled(b)};
            FamilyInstance inst;
            inst.scalars = {{"alpha", sample_scalar(rng, false)},
                            {"gamma", sample_scalar(rng, true)},
                            {"delta", sample_scalar(rng, true)}};
            probe_family_exp(ch, rng, table, d, inst, cap, false);
            break;
        }
        case 3: {
            SymbolTable table;
            const Coeff a = Coeff::from_gen(table.add_param("a"));
            const int m = 2 + (ch.sample / 7) % 3;
            const Derivation d{Poly2::X().scaled(a),
                               Poly2::Y().scaled(a * Coeff(m)) +
                                   Poly2::monomial(m, 0, Coeff(1))};
            FamilyInstance inst;
            inst.scalars = {{"c", sample_scalar(rng, true)},
                            {"beta", sample_scalar(rng, false)}};
            probe_family_exp(ch, rng, table, d, inst, cap, true);
            break;
        }
        case 4: {
            SymbolTable table;
            const Coeff a = Coeff::from_gen(table.add_param("a"));
            const Coeff b = Coeff::from_gen(table.add_param("b"));
            const Derivation d = diag_derivation(a, b);
            FamilyInstance inst;
            inst.scalars = {{"alpha", sample_scalar(rng, true)},
                            {"beta", sample_scalar(rng, true)}};
            probe_family_exp(ch, rng, table, d, inst, cap, true);
            break;
        }
        case 5: {
            SymbolTable table;
            const Coeff a = Coeff::from_gen(table.add_param("a"));
            const Derivation d = diag_derivation(a, a);
            const Matrix m = sample_invertible(rng);
            FamilyInstance inst;
            inst.scalars = {{"a11", m.at(0, 0)},
                            {"a12", m.at(0, 1)},
                            {"a21", m.at(1, 0)},
                            {"a22", m.at(1, 1)}};
            probe_family_exp(ch, rng, table, d, inst, cap, true);
            break;
        }
        case 6: {
            // Jordan block: the second component reuses the X scale.  An
            // independent scale there breaks commutation.
            SymbolTable table;
            const Coeff a = Coeff::from_gen(table.add_param("a"));
            const Derivation d{Poly2::X().scaled(a) + Poly2::Y(),
                               Poly2::Y().scaled(a)};
            FamilyInstance inst;
            inst.scalars = {{"alpha", sample_scalar(rng, true)},
                            {"beta", sample_scalar(rng, false)}};
            probe_family_exp(ch, rng, table, d, inst, cap, true);
            const PolyMap psi = exp_lfd(d, cap, table);
            const PolyMap right{Poly2::X().scaled(Coeff(2)) +
                                    Poly2::Y().scaled(Coeff(3)),
                                Poly2::Y().scaled(Coeff(2))};
            const PolyMap wrong{Poly2::X().scaled(Coeff(2)) +
                                    Poly2::Y().scaled(Coeff(3)),
                                Poly2::Y().scaled(Coeff(5))};
            ch.check(commutes_with_automorphism(right, psi),
                     "(2X + 3Y, 2Y) against exp of the Jordan derivation",
                     "tied scales commute");
            ch.check(!commutes_with_automorphism(wrong, psi),
                     "(2X + 3Y, 5Y) against exp of the Jordan derivation",
                     "independent scales fail to commute");
            break;
        }
        }
    }
    ch.rep.samples = samples;
}

void suite_remark_resonance(Checker& ch, Rng& rng, int samples, int cap) {
    ch.sample = 0;
    {
        // Weights (1, 2): the monomial X² is eligible in the Y component
        // and (X, Y + X²) commutes although the diagonal family misses it.
        const Derivation d = diag_derivation(Coeff(1), Coeff(2));
        PolyMap m{Poly2::X(), Poly2::Y() + Poly2::monomial(2, 0, Coeff(1))};
        ch.check(commutes_with_derivation(m, d),
                 "(X, Y + X^2) against weights (1, 2)", "commutes");
        const DiagResonances dr = diag_resonances(Rat(1), Rat(2));
        const std::vector<std::pair<long, long>> want_x = {{1, 0}};
        const std::vector<std::pair<long, long>> want_y = {{0, 1}, {2, 0}};
        ch.check(dr.x_monomials.finite && dr.x_monomials.points == want_x,
                 "weight equation m + 2n = 1", "solution set {(1,0)}");
        ch.check(dr.y_monomials.finite && dr.y_monomials.points == want_y,
                 "weight equation m + 2n = 2", "solution set {(0,1),(2,0)}");
        ch.check(!dr.trivial(), "weights (1, 2)",
                 "resonant enlargement detected");
    }
    {
        const DiagResonances dr = diag_resonances(Rat(2), Rat(3));
        ch.check(dr.trivial(), "weights (2, 3)", "no enlargement");
    }
    {
        const DiagResonances dr = diag_resonances(Rat(1), Rat(-1));
        ch.check(!dr.x_monomials.finite &&
                     dr.x_monomials.points ==
                         std::vector<std::pair<long, long>>{{1, 0}} &&
                     dr.x_monomials.direction ==
                         std::make_pair(1L, 1L),
                 "weight equation m - n = 1",
                 "ray (1,0) + k(1,1)");
    }
    for (ch.sample = 0; ch.sample < samples; ++ch.sample) {
        const int k = 2 + ch.sample % 3;
        const Derivation d = diag_derivation(Coeff(1), Coeff(k));
        const Coeff gamma = sample_scalar(rng, true);
        const PolyMap m{Poly2::X(), Poly2::Y() + Poly2::monomial(k, 0, gamma)};
        const PolyMap off{Poly2::X(),
                          Poly2::Y() + Poly2::monomial(k + 1, 0, gamma)};
        const std::string in = "weights (1, " + std::to_string(k) + ")";
        ch.check(commutes_with_derivation(m, d), in,
                 "(X, Y + c·X^k) commutes");
        ch.check(!commutes_with_derivation(off, d), in,
                 "(X, Y + c·X^(k+1)) does not commute");
        const DiagResonances dr = diag_resonances(Rat(1), Rat(k));
        bool has_bump = false;
        for (const auto& pt : dr.y_monomials.points)
            has_bump = has_bump || pt == std::make_pair(long(k), 0L);
        ch.check(dr.y_monomials.finite && has_bump, in,
                 "(k, 0) eligible in the Y component");
        SymbolTable table;
        const PolyMap psi = exp_lfd(d, cap, table);
        ch.check(commutes_with_automorphism(m, psi), in,
                 "(X, Y + c·X^k) commutes with exp(D)");
    }
    ch.rep.samples = samples;
}

void suite_eq_conj_exp(Checker& ch, Rng& rng, int samples, int cap) {
    for (ch.sample = 0; ch.sample < samples; ++ch.sample) {
        {
            // Locally nilpotent representative with a general word.  The
            // flattened degree is kept small: composition degrees multiply,
            // so an unbounded word makes the exact-arithmetic cost of the
            // two sides explode without strengthening the property.
            SymbolTable table;
            const Poly2 f = sample_poly(rng, true, 4, true);
            const Derivation d{Poly2(), f};
            AutWord w = sample_word_sized(rng, 3, 2);
            for (PolyMap m = flatten(w);
                 m.f.degree() > 3 || m.g.degree() > 3; m = flatten(w))
                w = sample_word_sized(rng, 3, 2);
            const PolyMap psi = exp_lfd(d, cap, table);
            const PolyMap lhs =
                compose(flatten(w), compose(psi, flatten(invert(w))));
            const PolyMap rhs = exp_lfd(conjugate(w, d), cap, table);
            ch.check_eq_map(rhs, lhs,
                            "D = " + to_string(d, table) + ", word " +
                                to_string(w, table),
                            table);
            ch.check(is_identity(compose(
                         psi, exp_lfd(scaled(d, Coeff(-1)), cap, table))),
                     "D = " + to_string(d, table),
                     "exp(D) · exp(-D) == identity");
        }
        {
            // Linear representative with integer spectrum, conjugated by a
            // linear word.
            SymbolTable table;
            const long l1 = rng.range(-4, 4);
            long l2 = rng.range(-4, 4);
            while (l2 == l1)
                l2 = rng.range(-4, 4);
            const Matrix p = sample_invertible(rng);
            Matrix diag(2, 2);
            diag.at(0, 0) = Coeff(l1);
            diag.at(1, 1) = Coeff(l2);
            const Matrix m = p * diag * p.inverse();
            const Derivation d{
                Poly2::X().scaled(m.at(0, 0)) + Poly2::Y().scaled(m.at(0, 1)),
                Poly2::X().scaled(m.at(1, 0)) + Poly2::Y().scaled(m.at(1, 1))};
            const AutWord w =
                word({affine_letter(sample_invertible(rng), Coeff(0),
                                    Coeff(0))});
            const PolyMap lhs = compose(
                flatten(w), compose(exp_lfd(d, cap, table),
                                    flatten(invert(w))));
            const PolyMap rhs = exp_lfd(conjugate(w, d), cap, table);
            ch.check_eq_map(rhs, lhs,
                            "linear D = " + to_string(d, table) + ", word " +
                                to_string(w, table),
                            table);
        }
    }
    ch.rep.samples = samples;
}

// ---------------------------------------------------------------------------
// Registry and reports
// ---------------------------------------------------------------------------

using SuiteFn = void (*)(Checker&, Rng&, int, int);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"thm-3.2", suite_thm_3_2},
        {"thm-3.3", suite_thm_3_3},
        {"thm-3.4", suite_thm_3_4},
        {"thm-3.6", suite_thm_3_6},
        {"thm-3.7", suite_thm_3_7},
        {"thm-3.8", suite_thm_3_8},
        {"prop-nontrivial", suite_prop_nontrivial},
        {"lemma-comm-exp", suite_lemma_comm_exp},
        {"prop-lnd-equality", suite_prop_lnd_equality},
        {"prop-criterion", suite_prop_criterion},
        {"example-semisimple", suite_example_semisimple},
        {"cor-ker-subgroup", suite_cor_ker_subgroup},
        {"thm-isotropy-lfa", suite_thm_isotropy_lfa},
        {"remark-resonance", suite_remark_resonance},
        {"eq-conj-exp", suite_eq_conj_exp},
    };
    return reg;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry())
            n.push_back(name);
        return n;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed,
                      int samples, int cap) {
    for (const auto& [sname, fn] : registry()) {
        if (sname != name)
            continue;
        SuiteReport rep;
        rep.suite = name;
        rep.seed = seed;
        const auto start = std::chrono::steady_clock::now();
        Rng rng(seed);
        Checker ch{rep, 0};
        fn(ch, rng, samples, cap);
        rep.ms = static_cast<long>(
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count());
        return rep;
    }
    std::string msg = "unknown suite '" + name + "'; known:";
    for (const auto& n : suite_names())
        msg += " " + n;
    throw UnknownSuite(msg + ", all");
}

std::vector<SuiteReport> run_all_suites(std::uint64_t seed, int samples,
                                        int cap) {
    std::vector<SuiteReport> out;
    for (const auto& name : suite_names())
        out.push_back(run_suite(name, seed, samples, cap));
    return out;
}

std::string report_json(const SuiteReport& r, bool include_timing) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["samples"] = r.samples;
    j["failures"] = nlohmann::ordered_json::array();
    for (const Failure& f : r.failures)
        j["failures"].push_back({{"inputs", f.inputs},
                                 {"expected", f.expected},
                                 {"got", f.got}});
    if (include_timing)
        j["ms"] = r.ms;
    return j.dump(2);
}

std::string report_text(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL")
       << " (seed=" << r.seed << ", samples=" << r.samples
       << ", failures=" << r.failures.size() << ", " << r.ms << " ms)\n";
    for (const Failure& f : r.failures) {
        os << "  inputs:   " << f.inputs << "\n";
        os << "  expected: " << f.expected << "\n";
        os << "  got:      " << f.got << "\n";
    }
    return os.str();
}

} // namespace lfd
