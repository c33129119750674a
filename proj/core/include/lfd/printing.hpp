#pragma once

#include <string>

#include "lfd/automorphism.hpp"
#include "lfd/derivation.hpp"
#include "lfd/linalg.hpp"
#include "lfd/symtab.hpp"

namespace lfd {

/// Canonical text forms.  Terms are emitted in the descending monomial
/// order of the underlying containers, signs are hoisted into the
/// joining +/-, unit coefficients are elided, and compound scalar
/// coefficients are parenthesized, e.g. "2*X^2 + Y", "(X^3 - 1) dY",
/// "[X + 1, E[b]*Y]".  Every form is re-readable by the session parser
/// (parse of print is the identity on bound values).
std::string to_string(const Rat& r);
std::string to_string(const MPoly& p, const SymbolTable& t);
std::string to_string(const Coeff& c, const SymbolTable& t);
std::string to_string(const Poly2& p, const SymbolTable& t);
std::string to_string(const UPoly& p, const SymbolTable& t,
                      const std::string& var = "T");
std::string to_string(const Derivation& d, const SymbolTable& t);
std::string to_string(const PolyMap& m, const SymbolTable& t);
std::string to_string(const Matrix& m, const SymbolTable& t);
std::string to_string(const Letter& l, const SymbolTable& t);
std::string to_string(const AutWord& w, const SymbolTable& t);

} // namespace lfd
