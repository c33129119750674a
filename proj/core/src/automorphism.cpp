#include "lfd/automorphism.hpp"

#include "lfd/errors.hpp"

namespace lfd {

PolyMap identity_map() { return {Poly2::X(), Poly2::Y()}; }

bool is_identity(const PolyMap& m) {
    return m.f == Poly2::X() && m.g == Poly2::Y();
}

Poly2 apply(const PolyMap& m, const Poly2& p) {
    return p.substitute(m.f, m.g);
}

PolyMap compose(const PolyMap& m1, const PolyMap& m2) {
    return {apply(m2, m1.f), apply(m2, m1.g)};
}

Poly2 jacobian_det(const PolyMap& m) {
    return m.f.dx() * m.g.dy() - m.f.dy() * m.g.dx();
}

// ---------------------------------------------------------------------------
// Letters
// ---------------------------------------------------------------------------

Letter affine_letter(const Matrix& a, const Coeff& v0, const Coeff& v1) {
    if (a.rows() != 2 || a.cols() != 2)
        throw Error("affine letter needs a 2x2 matrix");
    if (a.det().is_zero())
        throw SingularAffine("affine letter has singular linear part");
    return AffineLetter{a, {v0, v1}};
}

Letter elem_x_letter(const Poly2& shift_in_y) {
    if (shift_in_y.depends_on_x())
        throw ConstraintViolated("elementary X-shift must not involve X");
    return ElemXLetter{shift_in_y};
}

Letter elem_y_letter(const Poly2& shift_in_x) {
    if (shift_in_x.depends_on_y())
        throw ConstraintViolated("elementary Y-shift must not involve Y");
    return ElemYLetter{shift_in_x};
}

AutWord word(std::vector<Letter> letters) { return AutWord{std::move(letters)}; }

AutWord concat(const AutWord& w1, const AutWord& w2) {
    AutWord w = w1;
    w.letters.insert(w.letters.end(), w2.letters.begin(), w2.letters.end());
    return w;
}

PolyMap letter_map(const Letter& l) {
    if (const auto* a = std::get_if<AffineLetter>(&l)) {
        Poly2 f = Poly2::monomial(1, 0, a->a.at(0, 0)) +
                  Poly2::monomial(0, 1, a->a.at(0, 1)) +
                  Poly2::constant(a->v[0]);
        Poly2 g = Poly2::monomial(1, 0, a->a.at(1, 0)) +
                  Poly2::monomial(0, 1, a->a.at(1, 1)) +
                  Poly2::constant(a->v[1]);
        return {f, g};
    }
    if (const auto* ex = std::get_if<ElemXLetter>(&l))
        return {Poly2::X() + ex->shift, Poly2::Y()};
    const auto& ey = std::get<ElemYLetter>(l);
    return {Poly2::X(), Poly2::Y() + ey.shift};
}

Letter invert_letter(const Letter& l) {
    if (const auto* a = std::get_if<AffineLetter>(&l)) {
        const Matrix inv = a->a.inverse(); // throws SingularMatrix if degenerate
        const std::vector<Coeff> w = inv.apply(a->v);
        return AffineLetter{inv, {-w[0], -w[1]}};
    }
    if (const auto* ex = std::get_if<ElemXLetter>(&l))
        return ElemXLetter{-ex->shift};
    const auto& ey = std::get<ElemYLetter>(l);
    return ElemYLetter{-ey.shift};
}

PolyMap flatten(const AutWord& w) {
    PolyMap acc = identity_map();
    // Leftmost applied last as point maps: fold from the right.
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        acc = compose(letter_map(*it), acc);
    return acc;
}

AutWord invert(const AutWord& w) {
    AutWord out;
    out.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out.letters.push_back(invert_letter(*it));
    return out;
}

Derivation conjugate(const AutWord& w, const Derivation& d) {
    const PolyMap fwd = flatten(w);
    const PolyMap bwd = flatten(invert(w));
    return {apply(bwd, apply(d, fwd.f)), apply(bwd, apply(d, fwd.g))};
}

bool commutes_with_derivation(const PolyMap& m, const Derivation& d) {
    return apply(m, d.px) == apply(d, m.f) &&
           apply(m, d.py) == apply(d, m.g);
}

bool commutes_with_automorphism(const PolyMap& m, const PolyMap& psi) {
    return compose(m, psi) == compose(psi, m);
}

} // namespace lfd
