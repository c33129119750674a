#include "lfd/isotropy.hpp"

#include <algorithm>
#include <numeric>

#include "lfd/errors.hpp"
#include "lfd/expmap.hpp"

namespace lfd {

// ---------------------------------------------------------------------------
// Affine symmetries of a univariate polynomial
// ---------------------------------------------------------------------------

bool SymmetryConstraint::satisfied_by(const Coeff& alpha, const Coeff& beta,
                                      const Coeff& gamma) const {
    if (alpha.is_zero())
        return false;
    if (degree == 0)
        return gamma == Coeff(1);
    if (beta != center * (Coeff(1) - alpha))
        return false;
    if (gamma != alpha.pow(degree))
        return false;
    if (exponent != 0 && alpha.pow(exponent) != Coeff(1))
        return false;
    return true;
}

SymmetryConstraint affine_symmetries(const Poly2& f) {
    if (f.is_zero())
        throw ZeroPolynomial("affine symmetries are defined for nonzero "
                             "polynomials only");
    if (f.degree_y() > 0)
        throw ConstraintViolated("affine symmetries expect a polynomial in "
                                 "the first coordinate only");
    SymmetryConstraint sc;
    sc.degree = f.degree_x();
    if (sc.degree == 0)
        return sc;  // constant: gamma = 1, alpha and beta free

    const Coeff lead = f.coeff_of(sc.degree, 0);
    const Coeff sub = f.coeff_of(sc.degree - 1, 0);
    sc.center = -(sub / (Coeff(sc.degree) * lead));

    // Center the polynomial and read the support gaps.
    const Poly2 centered =
        f.substitute(Poly2::X() + Poly2::constant(sc.center), Poly2::Y());
    int g = 0;
    for (const auto& [e, c] : centered.terms())
        if (e.i < sc.degree)
            g = std::gcd(g, sc.degree - e.i);
    sc.exponent = g;
    return sc;
}

// ---------------------------------------------------------------------------
// Family classification
// ---------------------------------------------------------------------------

namespace {

/// Integer k >= 2 with b == k*a, if any.
std::optional<int> integer_ratio(const Coeff& a, const Coeff& b) {
    if (a.is_zero())
        return std::nullopt;
    const Coeff ratio = b / a;
    if (!ratio.is_rational())
        return std::nullopt;
    const Rat r = ratio.to_rational();
    if (r.get_den() != 1 || r < 2)
        return std::nullopt;
    return static_cast<int>(r.get_num().get_si());
}

struct DiagWeights {
    Coeff a, b;
};

std::optional<DiagWeights> diagonal_of(const Matrix& m) {
    if (!m.at(0, 1).is_zero() || !m.at(1, 0).is_zero())
        return std::nullopt;
    return DiagWeights{m.at(0, 0), m.at(1, 1)};
}

} // namespace

FamilyForm family_form_of(const Derivation& d) {
    const NormalForm nf = recognize_normal_form(d);
    switch (nf.tag) {
    case NormalForm::Tag::Triangular:
        if (nf.f.is_zero())
            throw ZeroPolynomial(
                "the zero derivation commutes with everything; no "
                "parametrized family applies");
        return FamilyForm::TriangularGeneral;
    case NormalForm::Tag::TranslationScale:
        return nf.b.is_zero() ? FamilyForm::PureTranslation
                              : FamilyForm::TranslationScale;
    case NormalForm::Tag::ResonantScale:
        return FamilyForm::ResonantScale;
    case NormalForm::Tag::Linear: {
        if (auto dw = diagonal_of(nf.mat)) {
            if (dw->a.is_zero() || dw->b.is_zero())
                throw UnsupportedShape(
                    "diagonal families expect nonzero weights");
            if (dw->a == dw->b)
                return FamilyForm::LinearScalar;
            if (integer_ratio(dw->a, dw->b))
                return FamilyForm::LinearDiagonalResonant;
            return FamilyForm::LinearDiagonal;
        }
        if (nf.mat.at(0, 1) == Coeff(1) && nf.mat.at(1, 0).is_zero() &&
            nf.mat.at(0, 0) == nf.mat.at(1, 1) && !nf.mat.at(0, 0).is_zero())
            return FamilyForm::LinearJordan;
        throw UnsupportedShape(
            "linear derivation is not in a canonical shape; conjugate to "
            "scalar, diagonal or Jordan form first");
    }
    case NormalForm::Tag::Unrecognized:
    default:
        throw UnsupportedShape(
            "derivation is not in a recognized canonical shape; conjugate "
            "to one first");
    }
}

// ---------------------------------------------------------------------------
// Instances: slot plumbing
// ---------------------------------------------------------------------------

namespace {

Coeff req_scalar(const FamilyInstance& in, const std::string& name,
                 bool nonzero) {
    auto it = in.scalars.find(name);
    if (it == in.scalars.end())
        throw ConstraintViolated("missing scalar slot '" + name + "'");
    if (nonzero && it->second.is_zero())
        throw ZeroParameter("slot '" + name + "' must be nonzero");
    return it->second;
}

Coeff opt_scalar(const FamilyInstance& in, const std::string& name) {
    auto it = in.scalars.find(name);
    return it == in.scalars.end() ? Coeff(0) : it->second;
}

Poly2 opt_poly(const FamilyInstance& in, const std::string& name,
               bool in_x_only) {
    auto it = in.polys.find(name);
    if (it == in.polys.end())
        return Poly2();
    if (in_x_only ? it->second.depends_on_y() : it->second.depends_on_x())
        throw ConstraintViolated("polynomial slot '" + name +
                                 "' depends on the wrong coordinate");
    return it->second;
}

void reject_unknown(const FamilyInstance& in,
                    std::initializer_list<const char*> scalars,
                    std::initializer_list<const char*> polys) {
    for (const auto& [k, v] : in.scalars)
        if (std::find_if(scalars.begin(), scalars.end(), [&](const char* s) {
                return k == s;
            }) == scalars.end())
            throw ConstraintViolated("unknown scalar slot '" + k + "'");
    for (const auto& [k, v] : in.polys)
        if (std::find_if(polys.begin(), polys.end(), [&](const char* s) {
                return k == s;
            }) == polys.end())
            throw ConstraintViolated("unknown polynomial slot '" + k + "'");
}

/// p == s*V + c for coordinate V, with no occurrence of the other
/// coordinate; returns (s, c).
std::optional<std::pair<Coeff, Coeff>> affine_in(const Poly2& p, bool in_x) {
    Coeff s, c;
    for (const auto& [e, v] : p.terms()) {
        if (e.i == 0 && e.j == 0)
            c = v;
        else if (in_x && e.i == 1 && e.j == 0)
            s = v;
        else if (!in_x && e.i == 0 && e.j == 1)
            s = v;
        else
            return std::nullopt;
    }
    return std::make_pair(s, c);
}

/// p == c * X (or zero); returns c.
std::optional<Coeff> scale_of_x(const Poly2& p) {
    if (p.is_zero())
        return Coeff(0);
    if (p.term_count() != 1)
        return std::nullopt;
    const auto& [e, v] = p.leading();
    if (e.i == 1 && e.j == 0)
        return v;
    return std::nullopt;
}

bool is_linear_homogeneous(const PolyMap& m) {
    for (const Poly2* p : {&m.f, &m.g})
        for (const auto& [e, v] : p->terms())
            if (e.degree() != 1)
                return false;
    return true;
}

int resonant_k(const Derivation& d) {
    const NormalForm nf = recognize_normal_form(d);
    return *integer_ratio(nf.mat.at(0, 0), nf.mat.at(1, 1));
}

PolyMap checked(const Derivation& d, PolyMap m) {
    if (!commutes_with_derivation(m, d))
        throw ConstraintViolated(
            "instance fails the commutation checker for this derivation");
    return m;
}

/// Value of exp(b) under current resonances, when representable.
std::optional<Coeff> exp_value(const Coeff& b, SymbolTable& table) {
    auto e = try_exponential(b, table);
    if (!e)
        return std::nullopt;
    return resonate(*e, table);
}

bool translation_branch_resonant(const Derivation& d, SymbolTable& table) {
    const NormalForm nf = recognize_normal_form(d);
    const auto v = exp_value(nf.b, table);
    return v && *v == Coeff(1);
}

} // namespace

// ---------------------------------------------------------------------------
// Derivation-level families
// ---------------------------------------------------------------------------

PolyMap iso_family(const Derivation& d, const FamilyInstance& inst) {
    const FamilyForm form = family_form_of(d);
    const NormalForm nf = recognize_normal_form(d);
    switch (form) {
    case FamilyForm::TriangularGeneral: {
        reject_unknown(inst, {"alpha", "beta", "gamma"}, {"p"});
        const Coeff alpha = req_scalar(inst, "alpha", true);
        const Coeff beta = opt_scalar(inst, "beta");
        const Coeff gamma = req_scalar(inst, "gamma", true);
        const Poly2 p = opt_poly(inst, "p", true);
        const SymmetryConstraint sc = affine_symmetries(nf.f);
        if (!sc.satisfied_by(alpha, beta, gamma))
            throw ConstraintViolated(
                "(alpha, beta, gamma) does not satisfy the affine symmetry "
                "rules of the coefficient polynomial");
        return checked(d, {Poly2::X().scaled(alpha) + Poly2::constant(beta),
                           Poly2::Y().scaled(gamma) + p});
    }
    case FamilyForm::TranslationScale: {
        reject_unknown(inst, {"beta", "gamma"}, {});
        const Coeff beta = opt_scalar(inst, "beta");
        const Coeff gamma = req_scalar(inst, "gamma", true);
        return checked(d, {Poly2::X() + Poly2::constant(beta),
                           Poly2::Y().scaled(gamma)});
    }
    case FamilyForm::PureTranslation: {
        reject_unknown(inst, {"alpha", "beta"}, {"r"});
        const Coeff alpha = req_scalar(inst, "alpha", true);
        const Coeff beta = opt_scalar(inst, "beta");
        const Poly2 r = opt_poly(inst, "r", false);
        return checked(d, {Poly2::X() + r,
                           Poly2::Y().scaled(alpha) + Poly2::constant(beta)});
    }
    case FamilyForm::ResonantScale: {
        reject_unknown(inst, {"c", "beta"}, {});
        const Coeff c = req_scalar(inst, "c", true);
        const Coeff beta = opt_scalar(inst, "beta");
        return checked(d, {Poly2::X().scaled(c),
                           Poly2::Y().scaled(c.pow(nf.m)) +
                               Poly2::monomial(nf.m, 0, Coeff(1)).scaled(beta)});
    }
    case FamilyForm::LinearScalar: {
        reject_unknown(inst, {"a11", "a12", "a21", "a22"}, {});
        const Coeff a11 = req_scalar(inst, "a11", false);
        const Coeff a12 = req_scalar(inst, "a12", false);
        const Coeff a21 = req_scalar(inst, "a21", false);
        const Coeff a22 = req_scalar(inst, "a22", false);
        if ((a11 * a22 - a12 * a21).is_zero())
            throw ConstraintViolated("linear instance must be invertible");
        return checked(d, {Poly2::X().scaled(a11) + Poly2::Y().scaled(a12),
                           Poly2::X().scaled(a21) + Poly2::Y().scaled(a22)});
    }
    case FamilyForm::LinearDiagonal: {
        reject_unknown(inst, {"alpha", "beta"}, {});
        const Coeff alpha = req_scalar(inst, "alpha", true);
        const Coeff beta = req_scalar(inst, "beta", true);
        return checked(d, {Poly2::X().scaled(alpha), Poly2::Y().scaled(beta)});
    }
    case FamilyForm::LinearDiagonalResonant: {
        reject_unknown(inst, {"alpha", "delta", "gamma"}, {});
        const Coeff alpha = req_scalar(inst, "alpha", true);
        const Coeff delta = req_scalar(inst, "delta", true);
        const Coeff gamma = opt_scalar(inst, "gamma");
        const int k = resonant_k(d);
        return checked(d, {Poly2::X().scaled(alpha),
                           Poly2::Y().scaled(delta) +
                               Poly2::monomial(k, 0, Coeff(1)).scaled(gamma)});
    }
    case FamilyForm::LinearJordan: {
        reject_unknown(inst, {"alpha", "beta"}, {});
        const Coeff alpha = req_scalar(inst, "alpha", true);
        const Coeff beta = opt_scalar(inst, "beta");
        return checked(d, {Poly2::X().scaled(alpha) + Poly2::Y().scaled(beta),
                           Poly2::Y().scaled(alpha)});
    }
    }
    throw UnsupportedShape("unreachable family form");
}

bool in_iso_family(const Derivation& d, const PolyMap& m) {
    const FamilyForm form = family_form_of(d);
    const NormalForm nf = recognize_normal_form(d);
    switch (form) {
    case FamilyForm::TriangularGeneral: {
        const auto fx = affine_in(m.f, true);
        if (!fx || fx->first.is_zero())
            return false;
        const Coeff gamma = m.g.coeff_of(0, 1);
        const Poly2 p = m.g - Poly2::Y().scaled(gamma);
        if (p.depends_on_y())
            return false;
        return affine_symmetries(nf.f).satisfied_by(fx->first, fx->second,
                                                    gamma);
    }
    case FamilyForm::TranslationScale: {
        const auto fx = affine_in(m.f, true);
        if (!fx || fx->first != Coeff(1))
            return false;
        const auto gy = affine_in(m.g, false);
        return gy && !gy->first.is_zero() && gy->second.is_zero();
    }
    case FamilyForm::PureTranslation: {
        const Poly2 r = m.f - Poly2::X();
        if (r.depends_on_x())
            return false;
        const auto gy = affine_in(m.g, false);
        return gy && !gy->first.is_zero();
    }
    case FamilyForm::ResonantScale: {
        const auto c = scale_of_x(m.f);
        if (!c || c->is_zero())
            return false;
        Poly2 rest = m.g - Poly2::Y().scaled(c->pow(nf.m));
        if (rest.is_zero())
            return true;
        if (rest.term_count() != 1)
            return false;
        const auto& [e, v] = rest.leading();
        return e.i == nf.m && e.j == 0;
    }
    case FamilyForm::LinearScalar: {
        if (!is_linear_homogeneous(m))
            return false;
        const Coeff det = m.f.coeff_of(1, 0) * m.g.coeff_of(0, 1) -
                          m.f.coeff_of(0, 1) * m.g.coeff_of(1, 0);
        return !det.is_zero();
    }
    case FamilyForm::LinearDiagonal: {
        const auto a = scale_of_x(m.f);
        if (!a || a->is_zero())
            return false;
        const auto gy = affine_in(m.g, false);
        return gy && !gy->first.is_zero() && gy->second.is_zero() &&
               m.g.term_count() == 1;
    }
    case FamilyForm::LinearDiagonalResonant: {
        const auto a = scale_of_x(m.f);
        if (!a || a->is_zero())
            return false;
        const int k = resonant_k(d);
        const Coeff delta = m.g.coeff_of(0, 1);
        if (delta.is_zero())
            return false;
        const Poly2 rest = m.g - Poly2::Y().scaled(delta);
        if (rest.is_zero())
            return true;
        if (rest.term_count() != 1)
            return false;
        const auto& [e, v] = rest.leading();
        return e.i == k && e.j == 0;
    }
    case FamilyForm::LinearJordan: {
        if (!is_linear_homogeneous(m))
            return false;
        const Coeff alpha = m.f.coeff_of(1, 0);
        if (alpha.is_zero())
            return false;
        return m.g == Poly2::Y().scaled(alpha);
    }
    }
    return false;
}

FamilySpec family_spec(const Derivation& d) {
    using D = SlotSpec::Domain;
    FamilySpec spec;
    spec.form = family_form_of(d);
    switch (spec.form) {
    case FamilyForm::TriangularGeneral:
        spec.slots = {{"alpha", D::NonzeroScalar},
                      {"beta", D::Scalar},
                      {"gamma", D::NonzeroScalar},
                      {"p", D::PolyInX}};
        spec.constraint = affine_symmetries(recognize_normal_form(d).f);
        break;
    case FamilyForm::TranslationScale:
        spec.slots = {{"beta", D::Scalar}, {"gamma", D::NonzeroScalar}};
        break;
    case FamilyForm::PureTranslation:
        spec.slots = {{"alpha", D::NonzeroScalar},
                      {"beta", D::Scalar},
                      {"r", D::PolyInY}};
        break;
    case FamilyForm::ResonantScale:
        spec.slots = {{"c", D::NonzeroScalar}, {"beta", D::Scalar}};
        break;
    case FamilyForm::LinearScalar:
        spec.slots = {{"a11", D::Scalar},
                      {"a12", D::Scalar},
                      {"a21", D::Scalar},
                      {"a22", D::Scalar}};
        break;
    case FamilyForm::LinearDiagonal:
        spec.slots = {{"alpha", D::NonzeroScalar}, {"beta", D::NonzeroScalar}};
        break;
    case FamilyForm::LinearDiagonalResonant:
        spec.slots = {{"alpha", D::NonzeroScalar},
                      {"delta", D::NonzeroScalar},
                      {"gamma", D::Scalar}};
        break;
    case FamilyForm::LinearJordan:
        spec.slots = {{"alpha", D::NonzeroScalar}, {"beta", D::Scalar}};
        break;
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Exp-level families
// ---------------------------------------------------------------------------

PolyMap iso_family_exp(const Derivation& d, const FamilyInstance& inst,
                       SymbolTable& table, int cap) {
    const FamilyForm form = family_form_of(d);
    auto finish = [&](PolyMap m) {
        const PolyMap psi = exp_lfd(d, cap, table);
        if (!commutes_with_automorphism(m, psi))
            throw ConstraintViolated(
                "instance fails the commutation checker for the exponential "
                "automorphism");
        return m;
    };
    if (form == FamilyForm::TranslationScale) {
        const bool resonant = translation_branch_resonant(d, table);
        reject_unknown(inst, {"alpha", "gamma", "delta"}, {});
        const Coeff alpha = opt_scalar(inst, "alpha");
        const Coeff gamma = req_scalar(inst, "gamma", true);
        const Coeff delta = opt_scalar(inst, "delta");
        if (!delta.is_zero() && !resonant)
            throw ResonanceMismatch(
                "the translation slot in the second component requires the "
                "exp(b) = 1 resonance to be declared");
        return finish({Poly2::X() + Poly2::constant(alpha),
                       Poly2::Y().scaled(gamma) + Poly2::constant(delta)});
    }
    // The remaining families coincide with the derivation-level ones
    // (the triangular case by the equality of the two symmetry groups,
    // the rest by direct computation).
    return finish(iso_family(d, inst));
}

bool in_iso_family_exp(const Derivation& d, const PolyMap& m,
                       SymbolTable& table) {
    const FamilyForm form = family_form_of(d);
    if (form == FamilyForm::TranslationScale) {
        const auto fx = affine_in(m.f, true);
        if (!fx || fx->first != Coeff(1))
            return false;
        const auto gy = affine_in(m.g, false);
        if (!gy || gy->first.is_zero())
            return false;
        if (gy->second.is_zero())
            return true;
        return translation_branch_resonant(d, table);
    }
    return in_iso_family(d, m);
}

FamilySpec family_spec_exp(const Derivation& d, SymbolTable& table) {
    using D = SlotSpec::Domain;
    FamilySpec spec = family_spec(d);
    if (spec.form == FamilyForm::TranslationScale) {
        spec.slots = {{"alpha", D::Scalar}, {"gamma", D::NonzeroScalar}};
        if (translation_branch_resonant(d, table))
            spec.slots.push_back({"delta", D::Scalar});
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Diagonal resonance analysis
// ---------------------------------------------------------------------------

namespace {

long to_long(const Int& z) {
    if (!z.fits_slong_p())
        throw Error("weight equation solution out of range");
    return z.get_si();
}

WeightSolutions solve_weight(const Rat& a, const Rat& b, const Rat& target) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), target.get_den().get_mpz_t());
    Int A = a.get_num() * (l / a.get_den());
    Int B = b.get_num() * (l / b.get_den());
    Int C = target.get_num() * (l / target.get_den());

    WeightSolutions out;
    if (A < 0 && B < 0) {
        A = -A;
        B = -B;
        C = -C;
    }
    if (A > 0 && B > 0) {
        // Finite: exhaustive scan of the bounded m-range.
        if (C >= 0)
            for (Int m = 0; m * A <= C; ++m) {
                const Int rem = C - m * A;
                if (rem % B == 0)
                    out.points.emplace_back(to_long(m), to_long(rem / B));
            }
        return out;
    }
    // Opposite signs: a full line of integer solutions when the gcd
    // divides the target, restricted to the nonnegative quadrant.
    Int g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), A.get_mpz_t(),
               B.get_mpz_t());
    if (C % g != 0)
        return out;  // finite and empty
    const Int scale = C / g;
    Int m0 = u * scale, n0 = v * scale;
    // Direction with both components positive.
    Int dm = (A > 0) ? Int(-B / g) : Int(B / g);
    Int dn = (A > 0) ? Int(A / g) : Int(-A / g);
    // Smallest k with m0 + k*dm >= 0 and n0 + k*dn >= 0.
    Int k1, k2;
    mpz_cdiv_q(k1.get_mpz_t(), Int(-m0).get_mpz_t(), dm.get_mpz_t());
    mpz_cdiv_q(k2.get_mpz_t(), Int(-n0).get_mpz_t(), dn.get_mpz_t());
    const Int k = std::max(k1, k2);
    out.finite = false;
    out.points.emplace_back(to_long(m0 + k * dm), to_long(n0 + k * dn));
    out.direction = {to_long(dm), to_long(dn)};
    return out;
}

} // namespace

bool DiagResonances::trivial() const {
    return x_monomials.finite && y_monomials.finite &&
           x_monomials.points == std::vector<std::pair<long, long>>{{1, 0}} &&
           y_monomials.points == std::vector<std::pair<long, long>>{{0, 1}};
}

DiagResonances diag_resonances(const Rat& a, const Rat& b) {
    if (a == 0 || b == 0)
        throw ZeroParameter("diagonal weights must be nonzero");
    return {solve_weight(a, b, a), solve_weight(a, b, b)};
}

} // namespace lfd
