#pragma once

#include <utility>
#include <vector>

#include "lfd/linalg.hpp"
#include "lfd/poly2.hpp"
#include "lfd/upoly.hpp"

namespace lfd {

/// Derivation of the plane polynomial ring: D = px d/dX + py d/dY,
/// determined by the images of the two coordinates.
struct Derivation {
    Poly2 px, py;

    bool is_zero() const { return px.is_zero() && py.is_zero(); }
    bool operator==(const Derivation& o) const {
        return px == o.px && py == o.py;
    }
    bool operator!=(const Derivation& o) const { return !(*this == o); }
};

inline Derivation operator+(const Derivation& a, const Derivation& b) {
    return {a.px + b.px, a.py + b.py};
}
inline Derivation operator-(const Derivation& a, const Derivation& b) {
    return {a.px - b.px, a.py - b.py};
}
inline Derivation scaled(const Derivation& d, const Coeff& c) {
    return {d.px.scaled(c), d.py.scaled(c)};
}

/// D(p) = px * dp/dX + py * dp/dY.
Poly2 apply(const Derivation& d, const Poly2& p);

/// Lie bracket [a, b] = a∘b − b∘a, itself a derivation; computed on the
/// generators.
Derivation bracket(const Derivation& a, const Derivation& b);

/// Cyclic invariant subspace generated by the iterates g, D(g), D²(g), …
struct IterSpan {
    Poly2 generator;
    std::vector<Poly2> basis;  ///< the independent iterates, in order
    Matrix companion;          ///< matrix of D on the span (column j = coords of D(basis[j]))
    UPoly min_poly;            ///< monic minimal polynomial of D on the span
};

/// Iterates until linear dependence, or throws NotStabilizedWithinCap
/// (carrying the degree trace of the iterates) after `cap` basis vectors.
IterSpan iter_span(const Derivation& d, const Poly2& g, int cap);

/// Classification report for local finiteness on the coordinate orbits.
struct LFReport {
    bool is_lf = false;        ///< false = did not stabilize within cap
    UPoly min_poly;            ///< lcm of the X- and Y-orbit minimal polynomials (when is_lf)
    bool is_lnd = false;       ///< min_poly == T^k
    bool is_semisimple = false;///< min_poly squarefree
    int cap_used = 0;          ///< largest orbit dimension encountered
    std::vector<int> degree_trace; ///< degree growth of the offending orbit (when not lf)
};

/// Runs iter_span on X and on Y.  Local finiteness on the generators
/// extends to the whole ring by the Leibniz rule, and a derivation is
/// determined by its generator images, so the verdict is sound.
LFReport classify_lf(const Derivation& d, int cap);

/// Semisimple + nilpotent splitting D = Ds + Dn with [Ds, Dn] = 0:
/// assembles the matrix of D on the joint span of the X- and Y-orbits,
/// extracts the semisimple part by a Newton iteration on the squarefree
/// part of the minimal polynomial (stays inside the rational field, no
/// eigenvalues needed), and reads the parts back as derivations.
/// Postconditions (sum, commutation, nilpotency, semisimplicity) are
/// re-checked before returning.
std::pair<Derivation, Derivation> jordan(const Derivation& d, int cap);

/// Canonical shapes recognized purely syntactically.
struct NormalForm {
    enum class Tag {
        Triangular,       ///< (0, f(X)): f(X) d/dY
        TranslationScale, ///< (1, b·Y): d/dX + bY d/dY
        ResonantScale,    ///< (a·X, a·m·Y + X^m), m >= 2
        Linear,           ///< (aX+bY, cX+dY), matrix rows = component coefficients
        Unrecognized
    };

    Tag tag = Tag::Unrecognized;
    Poly2 f;       // Triangular payload
    Coeff b;       // TranslationScale payload (may be zero: plain d/dX)
    Coeff a;       // ResonantScale payload
    int m = 0;     // ResonantScale payload
    Matrix mat;    // Linear payload (2x2)
};

/// Purely syntactic match against the canonical shapes; the scale/bump
/// shape with m = 1 is linear and reported as Linear.  Unrecognized means
/// "not literally in canonical form", not "not locally finite".
NormalForm recognize_normal_form(const Derivation& d);

} // namespace lfd
