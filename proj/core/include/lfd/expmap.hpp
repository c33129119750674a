#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lfd/automorphism.hpp"
#include "lfd/derivation.hpp"
#include "lfd/linalg.hpp"
#include "lfd/symtab.hpp"

namespace lfd {

/// exp(D) for a locally nilpotent D: components are the finite sums
/// Σ Dʲ(X)/j! and Σ Dʲ(Y)/j!.  The result is the substitution form of a
/// ring homomorphism, and compose(exp_lnd(D), exp_lnd(-D)) == identity.
/// Throws NotLocallyNilpotent if a series fails to terminate within cap
/// steps.
PolyMap exp_lnd(const Derivation& d, int cap);

/// exp of the linear map with matrix m (rows = component coefficient
/// vectors).  For distinct eigenvalues l1 != l2 the Lagrange-projector
/// form E_{l1}·P1 + E_{l2}·P2 is used; for a double eigenvalue,
/// E_l·(I + (m - l·I)).  Eigenvalues must lie in the scalar field: the
/// discriminant must be a recognizable square, or the pair can be
/// supplied explicitly (it is then checked against trace/determinant).
/// Declared resonances are applied to the result.
/// Throws EigenvaluesNotInField, ConstraintViolated (bad explicit pair),
/// or UnsupportedExponent (eigenvalue exp not representable).
PolyMap exp_linear(const Matrix& m, SymbolTable& table,
                   const std::optional<std::pair<Coeff, Coeff>>&
                       eigenvalues = std::nullopt);

/// exp of a semisimple derivation that is diagonal on the coordinates
/// (w1·X d/dX + w2·Y d/dY, giving (E_{w1}X, E_{w2}Y)) or linear
/// homogeneous (delegated to exp_linear).  Anything else throws
/// UnsupportedShape with guidance to conjugate to such a shape first.
PolyMap exp_semisimple(const Derivation& d, SymbolTable& table);

/// exp of a locally finite derivation through the splitting D = Ds + Dn:
/// computes jordan(d), exponentiates the parts, and returns their
/// composite (the nilpotent exponential applied after the semisimple
/// one).  Because the parts commute, both composition orders agree; this
/// is asserted before returning.
PolyMap exp_lfd(const Derivation& d, int cap, SymbolTable& table);

/// Formal one-parameter flow: exp_lfd(t·D) for a parameter symbol t.
/// Substituting t = 0 yields the identity, and the t¹ jet of the
/// components is (D(X), D(Y)).
PolyMap flow(const Derivation& d, GenId t, int cap, SymbolTable& table);

/// Eigenvalue data of a semisimple derivation diagonal on the
/// coordinates.
struct Spectrum {
    std::vector<Coeff> eigenvalues;  ///< distinct values among the weights
    /// (weight of X, weight of Y) when built from a diagonal derivation.
    std::optional<std::pair<Coeff, Coeff>> generator_weights;
    /// Whether every eigenvalue met downstream is an ℕ-combination of the
    /// generator weights (true for the diagonal shapes built here).
    bool monoid_closure_flag = false;
};

/// Reads the weights off a coordinate-diagonal derivation; throws
/// UnsupportedSpectrum for any other shape.
Spectrum spectrum_of(const Derivation& d);

/// Decides whether exp is injective on the additive monoid of
/// ℕ-combinations of the generator weights, under the resonances
/// currently declared in the table.  With no resonances the exponentials
/// of independent combinations are free transcendentals and the answer is
/// true; a resonance pinning some E-symbol can create collisions
/// (e.g. E_l = 1 makes exp(l·n) collide for all n).  Exact procedure:
/// integer-lattice reduction of the weight exponents plus multiplicative
/// relation analysis of the pinned values.
/// Throws UnsupportedSpectrum when the weights are not integer
/// combinations of parameter power products.
bool spectrum_injective(const Spectrum& s, const SymbolTable& table);

} // namespace lfd
