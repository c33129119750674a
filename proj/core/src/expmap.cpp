#include "lfd/expmap.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

#include "lfd/coeff.hpp"
#include "lfd/errors.hpp"

namespace lfd {

namespace {

PolyMap resonate_map(const PolyMap& m, const SymbolTable& table) {
    return {map_coeffs(m.f, [&](const Coeff& c) { return resonate(c, table); }),
            map_coeffs(m.g, [&](const Coeff& c) { return resonate(c, table); })};
}

Poly2 exp_series(const Derivation& d, const Poly2& g, int cap) {
    Poly2 acc;
    Poly2 iterate = g;   // Dʲ(g)
    Coeff inv_fact(1);   // 1/j!
    for (int j = 0; !iterate.is_zero(); ++j) {
        if (j > cap)
            throw NotLocallyNilpotent(
                "exponential series did not terminate within " +
                std::to_string(cap) + " steps; derivation is not locally "
                "nilpotent (or raise the cap)");
        acc += iterate.scaled(inv_fact);
        iterate = apply(d, iterate);
        inv_fact = inv_fact / Coeff(j + 1);
    }
    return acc;
}

PolyMap map_of_matrix(const Matrix& n) {
    Poly2 f = Poly2::X().scaled(n.at(0, 0)) + Poly2::Y().scaled(n.at(0, 1));
    Poly2 g = Poly2::X().scaled(n.at(1, 0)) + Poly2::Y().scaled(n.at(1, 1));
    return {f, g};
}

/// Weight of a coordinate image w·V for V one of the coordinates;
/// nullopt when the image is not a scalar multiple of V.
std::optional<Coeff> diagonal_weight(const Poly2& image, bool of_x) {
    if (image.is_zero())
        return Coeff(0);
    if (image.term_count() != 1)
        return std::nullopt;
    const auto& [e, c] = image.leading();
    if (of_x ? (e.i == 1 && e.j == 0) : (e.i == 0 && e.j == 1))
        return c;
    return std::nullopt;
}

} // namespace

PolyMap exp_lnd(const Derivation& d, int cap) {
    return {exp_series(d, Poly2::X(), cap), exp_series(d, Poly2::Y(), cap)};
}

PolyMap exp_linear(const Matrix& m, SymbolTable& table,
                   const std::optional<std::pair<Coeff, Coeff>>& eigenvalues) {
    if (m.rows() != 2 || m.cols() != 2)
        throw Error("exp_linear expects a 2x2 matrix");
    const Coeff tr = m.trace();
    const Coeff dt = m.det();

    Coeff l1, l2;
    if (eigenvalues) {
        l1 = eigenvalues->first;
        l2 = eigenvalues->second;
        if (l1 + l2 != tr || l1 * l2 != dt)
            throw ConstraintViolated(
                "supplied eigenvalues do not match trace and determinant");
    } else {
        const Coeff disc = tr * tr - Coeff(4) * dt;
        if (disc.is_zero()) {
            l1 = l2 = tr / Coeff(2);
        } else {
            auto root = coeff_sqrt(disc);
            if (!root)
                throw EigenvaluesNotInField(
                    "characteristic discriminant is not a square in the "
                    "scalar field; supply the eigenvalues explicitly");
            l1 = (tr + *root) / Coeff(2);
            l2 = (tr - *root) / Coeff(2);
        }
    }

    const Matrix id = Matrix::identity(2);
    Matrix result(2, 2);
    if (l1 == l2) {
        // exp = E_l · (I + (M - l·I));  (M - l·I) is nilpotent here.
        const Coeff el = exponential_of(l1, table);
        result = (id + (m - id.scaled(l1))).scaled(el);
    } else {
        // Lagrange idempotents P_i = (M - l_j·I)/(l_i - l_j).
        const Coeff e1 = exponential_of(l1, table);
        const Coeff e2 = exponential_of(l2, table);
        const Coeff gap = l1 - l2;
        const Matrix p1 = (m - id.scaled(l2)).scaled(gap.inverse());
        const Matrix p2 = (m - id.scaled(l1)).scaled((-gap).inverse());
        result = p1.scaled(e1) + p2.scaled(e2);
    }
    return resonate_map(map_of_matrix(result), table);
}

PolyMap exp_semisimple(const Derivation& d, SymbolTable& table) {
    const auto wx = diagonal_weight(d.px, true);
    const auto wy = diagonal_weight(d.py, false);
    if (wx && wy) {
        const Coeff ex = exponential_of(*wx, table);
        const Coeff ey = exponential_of(*wy, table);
        return resonate_map({Poly2::X().scaled(ex), Poly2::Y().scaled(ey)},
                            table);
    }
    const NormalForm nf = recognize_normal_form(d);
    if (nf.tag == NormalForm::Tag::Linear)
        return exp_linear(nf.mat, table);
    throw UnsupportedShape(
        "exponential of a semisimple part is supported only when it is "
        "diagonal on the coordinates or linear; conjugate to such a shape "
        "first");
}

PolyMap exp_lfd(const Derivation& d, int cap, SymbolTable& table) {
    const auto [ds, dn] = jordan(d, cap);
    const PolyMap mn = exp_lnd(dn, cap);
    const PolyMap ms = ds.is_zero() ? identity_map() : exp_semisimple(ds, table);
    const PolyMap nil_after_semi = compose(ms, mn);
    const PolyMap semi_after_nil = compose(mn, ms);
    if (nil_after_semi != semi_after_nil)
        throw Error("internal: exponentials of commuting parts failed to "
                    "commute");
    return resonate_map(nil_after_semi, table);
}

PolyMap flow(const Derivation& d, GenId t, int cap, SymbolTable& table) {
    return exp_lfd(scaled(d, Coeff::from_gen(t)), cap, table);
}

Spectrum spectrum_of(const Derivation& d) {
    const auto wx = diagonal_weight(d.px, true);
    const auto wy = diagonal_weight(d.py, false);
    if (!wx || !wy)
        throw UnsupportedSpectrum(
            "spectrum is read off coordinate-diagonal derivations only");
    Spectrum s;
    s.eigenvalues.push_back(*wx);
    if (*wy != *wx)
        s.eigenvalues.push_back(*wy);
    s.generator_weights = {*wx, *wy};
    s.monoid_closure_flag = true;
    return s;
}

namespace {

// --- integer lattice machinery (rank <= 2) ---------------------------------

using Vec2 = std::array<Int, 2>;

Int dot(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

/// Refines a lattice basis by the kernel condition dot(z, c) == 0.
std::vector<Vec2> kernel_refine(const std::vector<Vec2>& gens, const Vec2& c) {
    if (gens.empty())
        return gens;
    if (gens.size() == 1) {
        if (dot(gens[0], c) == 0)
            return gens;
        return {};
    }
    const Int v1 = dot(gens[0], c);
    const Int v2 = dot(gens[1], c);
    if (v1 == 0 && v2 == 0)
        return gens;
    if (v1 == 0)
        return {gens[0]};
    if (v2 == 0)
        return {gens[1]};
    Int g;
    mpz_gcd(g.get_mpz_t(), v1.get_mpz_t(), v2.get_mpz_t());
    const Int a = v2 / g, b = v1 / g;
    return {Vec2{a * gens[0][0] - b * gens[1][0],
                 a * gens[0][1] - b * gens[1][1]}};
}

/// Refines by the parity condition bits·z ≡ 0 (mod 2).
std::vector<Vec2> parity_refine(const std::vector<Vec2>& gens,
                                const std::array<int, 2>& bits) {
    auto par = [&](const Vec2& z) {
        Int s = z[0] * bits[0] + z[1] * bits[1];
        return mpz_odd_p(s.get_mpz_t()) != 0;
    };
    if (gens.empty())
        return gens;
    if (gens.size() == 1) {
        if (!par(gens[0]))
            return gens;
        return {Vec2{gens[0][0] * 2, gens[0][1] * 2}};
    }
    const bool p1 = par(gens[0]), p2 = par(gens[1]);
    if (!p1 && !p2)
        return gens;
    if (p1 && !p2)
        return {Vec2{gens[0][0] * 2, gens[0][1] * 2}, gens[1]};
    if (!p1 && p2)
        return {gens[0], Vec2{gens[1][0] * 2, gens[1][1] * 2}};
    return {Vec2{gens[0][0] + gens[1][0], gens[0][1] + gens[1][1]},
            Vec2{gens[0][0] * 2, gens[0][1] * 2}};
}

// --- coprime ("gcd-free") bases for exact multiplicative relations ---------

std::vector<MPoly> coprime_basis_poly(std::vector<MPoly> in) {
    std::vector<MPoly> basis;
    for (auto& p : in)
        if (!p.is_constant())
            basis.push_back(primitive_part(p));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
                MPoly g = mpoly_gcd(basis[i], basis[j]);
                if (g.is_constant())
                    continue;
                MPoly qi = divide_exact(basis[i], g);
                MPoly qj = divide_exact(basis[j], g);
                std::vector<MPoly> next;
                for (std::size_t k = 0; k < basis.size(); ++k)
                    if (k != i && k != j)
                        next.push_back(basis[k]);
                for (MPoly* q : {&qi, &qj, &g})
                    if (!q->is_constant())
                        next.push_back(primitive_part(*q));
                basis = std::move(next);
                changed = true;
            }
        }
    }
    return basis;
}

/// Multiplicity of b in p by repeated exact division; p must end constant
/// when all basis elements are divided out (guaranteed by construction,
/// guarded anyway).
int multiplicity_poly(MPoly p, const MPoly& b) {
    int e = 0;
    MPoly q;
    while (try_divide(p, b, q)) {
        p = q;
        ++e;
    }
    return e;
}

std::vector<Int> coprime_basis_int(std::vector<Int> in) {
    std::vector<Int> basis;
    for (auto& z : in)
        if (z > 1)
            basis.push_back(z);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
                Int g;
                mpz_gcd(g.get_mpz_t(), basis[i].get_mpz_t(),
                        basis[j].get_mpz_t());
                if (g == 1)
                    continue;
                Int qi = basis[i] / g;
                Int qj = basis[j] / g;
                std::vector<Int> next;
                for (std::size_t k = 0; k < basis.size(); ++k)
                    if (k != i && k != j)
                        next.push_back(basis[k]);
                for (const Int& q : {qi, qj, g})
                    if (q > 1)
                        next.push_back(q);
                basis = std::move(next);
                changed = true;
            }
        }
    }
    return basis;
}

int multiplicity_int(Int z, const Int& b) {
    int e = 0;
    while (z % b == 0) {
        z /= b;
        ++e;
    }
    return e;
}

/// Factorization data of a nonzero value free of exponential symbols:
/// sign, positive rational magnitude, and the primitive polynomial parts
/// of numerator and denominator.
struct ValueParts {
    int sign_bit = 0;  // 1 if negative
    Int mag_num = 1, mag_den = 1;
    MPoly poly_num, poly_den;
};

ValueParts split_value(const Coeff& v) {
    ValueParts parts;
    const Rat content = rational_content(v.num());
    Rat mag = content;
    if (mag < 0) {
        parts.sign_bit = 1;
        mag = -mag;
    }
    parts.mag_num = mag.get_num();
    parts.mag_den = mag.get_den();
    parts.poly_num = primitive_part(v.num());
    parts.poly_den = v.den();  // canonical: primitive, positive leading
    return parts;
}

/// Lattice of (s, t) with v1^s · v2^t == 1, for nonzero values free of
/// exponential symbols.  Exactness rests on unique factorization: the
/// values are rewritten over a coprime basis of their polynomial and
/// integer parts, where a product is 1 iff every exponent vanishes and
/// the signs cancel.
std::vector<Vec2> multiplicative_relations(const Coeff& v1, const Coeff& v2) {
    std::vector<Vec2> k = {Vec2{1, 0}, Vec2{0, 1}};
    const ValueParts a = split_value(v1);
    const ValueParts b = split_value(v2);

    const auto pbasis =
        coprime_basis_poly({a.poly_num, a.poly_den, b.poly_num, b.poly_den});
    for (const MPoly& h : pbasis) {
        const Int e1 = multiplicity_poly(a.poly_num, h) -
                       multiplicity_poly(a.poly_den, h);
        const Int e2 = multiplicity_poly(b.poly_num, h) -
                       multiplicity_poly(b.poly_den, h);
        k = kernel_refine(k, Vec2{e1, e2});
    }
    const auto zbasis =
        coprime_basis_int({a.mag_num, a.mag_den, b.mag_num, b.mag_den});
    for (const Int& z : zbasis) {
        const Int f1 = multiplicity_int(a.mag_num, z) -
                       multiplicity_int(a.mag_den, z);
        const Int f2 = multiplicity_int(b.mag_num, z) -
                       multiplicity_int(b.mag_den, z);
        k = kernel_refine(k, Vec2{f1, f2});
    }
    return parity_refine(k, {a.sign_bit, b.sign_bit});
}

/// Integer exponents of a weight over parameter power products.
std::map<Monomial, Int, MonoDescending> decompose_weight(
    const Coeff& w, const SymbolTable& table) {
    if (!w.is_polynomial())
        throw UnsupportedSpectrum(
            "weights must be polynomials in the parameters");
    std::map<Monomial, Int, MonoDescending> out;
    for (const auto& [mono, c] : w.num().terms()) {
        if (c.get_den() != 1)
            throw UnsupportedSpectrum(
                "weights must have integer coefficients");
        for (const auto& [g, e] : mono.factors()) {
            (void)e;
            if (!table.is_param(g))
                throw UnsupportedSpectrum(
                    "weights must be built from parameters only");
        }
        out[mono] = Int(c.get_num());
    }
    return out;
}

} // namespace

bool spectrum_injective(const Spectrum& s, const SymbolTable& table) {
    if (!s.generator_weights) {
        if (s.eigenvalues.empty())
            return true;
        throw UnsupportedSpectrum(
            "injectivity is decided for generator-weight spectra only");
    }
    const auto d1 = decompose_weight(s.generator_weights->first, table);
    const auto d2 = decompose_weight(s.generator_weights->second, table);

    // Exponent columns per power product, split by resonance status.
    struct Column {
        Vec2 c;
        Coeff value;  // resonated value, when pinned
        bool pinned = false;
    };
    std::map<Monomial, Column, MonoDescending> cols;
    for (const auto& [m, e] : d1)
        cols[m].c[0] = e;
    for (const auto& [m, e] : d2)
        cols[m].c[1] = e;
    for (auto& [m, col] : cols) {
        if (auto g = table.find_exp(m)) {
            auto it = table.resonances().find(*g);
            if (it != table.resonances().end()) {
                col.pinned = true;
                col.value = it->second;
            }
        }
    }

    // Differences z with exp(z·w) potentially 1: the unpinned symbols are
    // free transcendentals, so z must kill their exponents.
    std::vector<Vec2> lat = {Vec2{1, 0}, Vec2{0, 1}};
    for (const auto& [m, col] : cols)
        if (!col.pinned)
            lat = kernel_refine(lat, col.c);

    // z·w == 0 as a field element iff every pinned exponent also vanishes.
    auto vanishes = [&](const Vec2& z) {
        for (const auto& [m, col] : cols)
            if (col.pinned && dot(z, col.c) != 0)
                return false;
        return true;
    };
    // Product of the pinned values raised to z's exponents.
    auto pinned_product = [&](const Vec2& z) {
        Coeff w(1);
        for (const auto& [m, col] : cols) {
            if (!col.pinned)
                continue;
            const Int e = dot(z, col.c);
            if (e == 0)
                continue;
            if (!e.fits_sint_p())
                throw UnsupportedSpectrum("weight exponent out of range");
            w *= col.value.pow(static_cast<int>(e.get_si()));
        }
        return w;
    };

    if (lat.empty())
        return true;
    if (lat.size() == 1) {
        if (vanishes(lat[0]))
            return true;
        const Coeff w = pinned_product(lat[0]);
        return !(w == Coeff(1) || w == Coeff(-1));
    }
    // Full-rank difference lattice: collisions correspond to
    // multiplicative relations between the two products.
    const Coeff w1 = pinned_product(lat[0]);
    const Coeff w2 = pinned_product(lat[1]);
    if (w1.is_zero() || w2.is_zero())
        throw UnsupportedSpectrum("resonance values must be nonzero");
    for (const Vec2& rel : multiplicative_relations(w1, w2)) {
        const Vec2 z = {rel[0] * lat[0][0] + rel[1] * lat[1][0],
                        rel[0] * lat[0][1] + rel[1] * lat[1][1]};
        if (!vanishes(z))
            return false;
    }
    return true;
}

} // namespace lfd
