#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lfd/automorphism.hpp"
#include "lfd/derivation.hpp"
#include "lfd/symtab.hpp"

namespace lfd {

/// Solution rules for the affine symmetry equation f(aX+b) = g·f(X) of a
/// nonzero univariate f: writing d for the degree and c for the centering
/// shift, every solution has b = c(1-a), g = a^d, and a constrained by
/// a^m = 1 (m = 0 meaning a is free).  For constant f the rules collapse
/// to g = 1 with a, b free.
struct SymmetryConstraint {
    int degree = 0;
    Coeff center;
    int exponent = 0;  ///< m in a^m = 1; 0 = unconstrained

    /// Whether (alpha, beta, gamma) solves the symmetry equation
    /// (alpha must be nonzero: the substitution has to be invertible).
    bool satisfied_by(const Coeff& alpha, const Coeff& beta,
                      const Coeff& gamma) const;
};

/// Derives the SymmetryConstraint of f by centering and support-gcd
/// analysis; the rules are complete: every solution of the symmetry
/// equation is an instance.  Requires f nonzero and free of Y.
/// Throws ZeroPolynomial, ConstraintViolated (Y-dependence).
SymmetryConstraint affine_symmetries(const Poly2& f);

/// The canonical derivation shapes whose symmetry groups have a closed
/// parametrized description.
enum class FamilyForm {
    TriangularGeneral,      ///< f(X) d/dY           -> (aX+b, cY+p(X)) under the constraint
    TranslationScale,       ///< d/dX + bY d/dY, b!=0 -> (X+b', cY)
    PureTranslation,        ///< d/dX                -> (X+r(Y), aY+b)
    ResonantScale,          ///< aX d/dX + (amY+X^m) d/dY -> (cX, c^mY+bX^m)
    LinearScalar,           ///< aX d/dX + aY d/dY   -> any invertible linear map
    LinearDiagonal,         ///< aX d/dX + bY d/dY, a!=b -> (aX, bY)
    LinearDiagonalResonant, ///< weights (a, ka), integer k>=2 -> (aX, dY+cX^k)
    LinearJordan            ///< (aX+Y) d/dX + aY d/dY -> (aX+bY, aY)
};

/// Values for the free slots of a family.
struct FamilyInstance {
    std::map<std::string, Coeff> scalars;
    std::map<std::string, Poly2> polys;
};

/// Slot inventory of a family, for self-description and the CLI.
struct SlotSpec {
    enum class Domain { Scalar, NonzeroScalar, PolyInX, PolyInY };
    std::string name;
    Domain domain;
};

struct FamilySpec {
    FamilyForm form;
    std::vector<SlotSpec> slots;
    /// Present for the triangular family: the admissibility rules the
    /// scalar triple must satisfy.
    std::optional<SymmetryConstraint> constraint;
};

/// Classifies d into the family shape it supports; throws
/// UnsupportedShape (with guidance to conjugate first) otherwise, and
/// ZeroPolynomial for the zero derivation.
FamilyForm family_form_of(const Derivation& d);

/// Free-slot inventory of the symmetry family of d.
FamilySpec family_spec(const Derivation& d);

/// Builds the symmetry-group member of d selected by the instance,
/// enforcing every family constraint, and re-checks the commutation
/// postcondition before returning.
/// Throws ConstraintViolated, ZeroParameter, UnsupportedShape.
PolyMap iso_family(const Derivation& d, const FamilyInstance& inst);

/// Syntactic membership in the parametrized family of d (evaluates the
/// constraint for the triangular form).
bool in_iso_family(const Derivation& d, const PolyMap& m);

/// Builds a member of the symmetry group of exp(d) selected by the
/// instance.  Families follow the derivation-level ones except where the
/// exponential coarsens the group: the translation-scale shape gains a
/// translation slot in its Y component exactly when E[b] is pinned to 1,
/// and requesting that slot in any other resonance state throws
/// ResonanceMismatch.  The commutation postcondition against
/// exp_lfd(d) is re-checked before returning.
PolyMap iso_family_exp(const Derivation& d, const FamilyInstance& inst,
                       SymbolTable& table, int cap);

/// Syntactic membership in the exp-level family (resonance-branch aware).
bool in_iso_family_exp(const Derivation& d, const PolyMap& m,
                       SymbolTable& table);

/// Free-slot inventory of the exp-level family under the current
/// resonance state.
FamilySpec family_spec_exp(const Derivation& d, SymbolTable& table);

/// Solutions (m, n) over nonnegative integers of one weight equation
/// m·a + n·b = target.
struct WeightSolutions {
    bool finite = true;
    /// All solutions when finite; the base point of the ray otherwise.
    std::vector<std::pair<long, long>> points;
    /// Present when infinite: solutions are points[0] + k·direction for
    /// every integer k >= 0.
    std::optional<std::pair<long, long>> direction;
};

/// Monomial eligibility data for maps commuting with the diagonal
/// derivation with weights (a, b): x_monomials lists the exponent pairs
/// (m, n) with m·a + n·b = a (allowed in the X component), y_monomials
/// those with m·a + n·b = b.
struct DiagResonances {
    WeightSolutions x_monomials;
    WeightSolutions y_monomials;

    /// True when only the forced pairs (1,0) / (0,1) are eligible, i.e.
    /// the diagonal family (aX, bY) admits no polynomial enlargement.
    bool trivial() const;
};

/// Exact solution sets of the two weight equations for nonzero rational
/// weights; throws ZeroParameter when a weight is zero.
DiagResonances diag_resonances(const Rat& a, const Rat& b);

} // namespace lfd
