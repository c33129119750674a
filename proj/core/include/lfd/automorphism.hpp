#pragma once

#include <variant>
#include <vector>

#include "lfd/derivation.hpp"
#include "lfd/linalg.hpp"
#include "lfd/poly2.hpp"

namespace lfd {

/// Polynomial endomorphism of the plane given by coordinate images
/// X -> f, Y -> g.  Used both for general endomorphisms and as the
/// flattened form of an automorphism word.
struct PolyMap {
    Poly2 f, g;

    bool operator==(const PolyMap& o) const { return f == o.f && g == o.g; }
    bool operator!=(const PolyMap& o) const { return !(*this == o); }
};

PolyMap identity_map();
bool is_identity(const PolyMap& m);

/// The ring substitution attached to m: p evaluated at (m.f, m.g).
Poly2 apply(const PolyMap& m, const Poly2& p);

/// Composition as point transformations: m2 first, then m1.  In ring
/// terms the components of m1 receive m2's images:
/// compose(m1, m2).f == substitute(m1.f, m2.f, m2.g).
PolyMap compose(const PolyMap& m1, const PolyMap& m2);

/// Jacobian determinant df/dX * dg/dY - df/dY * dg/dX.  A nonzero
/// constant is necessary for invertibility but is never treated as
/// sufficient; only words are ever inverted.
Poly2 jacobian_det(const PolyMap& m);

// ---------------------------------------------------------------------------
// Automorphisms as words in invertible generators
// ---------------------------------------------------------------------------

/// (X, Y) -> (A·(X,Y) + v), with A invertible (checked at construction).
struct AffineLetter {
    Matrix a;              // 2x2; row i gives the i-th component
    std::vector<Coeff> v;  // translation, size 2
};

/// (X + p(Y), Y) with p free of X.
struct ElemXLetter {
    Poly2 shift;
};

/// (X, Y + q(X)) with q free of Y.
struct ElemYLetter {
    Poly2 shift;
};

using Letter = std::variant<AffineLetter, ElemXLetter, ElemYLetter>;

/// Automorphism represented as a word of generator letters; always
/// invertible letterwise, so inverses are exact by construction.
struct AutWord {
    std::vector<Letter> letters;
};

/// Letter constructors with validation.
Letter affine_letter(const Matrix& a, const Coeff& v0, const Coeff& v1);
Letter elem_x_letter(const Poly2& shift_in_y);
Letter elem_y_letter(const Poly2& shift_in_x);
AutWord word(std::vector<Letter> letters);
AutWord concat(const AutWord& w1, const AutWord& w2);

PolyMap letter_map(const Letter& l);
Letter invert_letter(const Letter& l);

/// Composition of the letters as point transformations, the leftmost
/// letter applied last.
PolyMap flatten(const AutWord& w);

/// Reversed word of letterwise inverses: flatten(invert(w)) undoes
/// flatten(w) exactly.
AutWord invert(const AutWord& w);

/// Transport of a derivation along the point transformation flatten(w):
/// with s the substitution attached to flatten(w), the result E satisfies
/// E = s⁻¹ ∘ D ∘ s on ring elements, i.e. E(X) and E(Y) are D applied to
/// the components of flatten(w), pulled back through the inverse word.
/// This is a left action: conjugate(w1·w2, D) = conjugate(w1,
/// conjugate(w2, D)).
Derivation conjugate(const AutWord& w, const Derivation& d);

/// Membership test for the symmetry group of a derivation: true iff the
/// substitution attached to m commutes with D, checked on the generators
/// (sufficient, because both composites obey the same twisted Leibniz
/// rule and agree on generators).  m is trusted to be an automorphism;
/// the test itself is meaningful for any endomorphism.
bool commutes_with_derivation(const PolyMap& m, const Derivation& d);

/// True iff compose(m, psi) == compose(psi, m).
bool commutes_with_automorphism(const PolyMap& m, const PolyMap& psi);

} // namespace lfd
