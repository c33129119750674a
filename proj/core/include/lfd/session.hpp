#pragma once

#include <map>
#include <string>
#include <variant>

#include "lfd/automorphism.hpp"
#include "lfd/derivation.hpp"
#include "lfd/symtab.hpp"

namespace lfd {

/// A value bound by a `let` statement.
using Binding = std::variant<Poly2, Derivation, PolyMap, AutWord>;

/// Parsed session: declared scalars plus named bindings.
///
/// Statement grammar (whitespace-insensitive, `#` comments to end of
/// line, every statement `;`-terminated):
///
///   param <id> [, <id>]* ;
///   exp E[<power-product>] ;
///   resonate E[<power-product>] = <scalar-expr> ;
///   let <name> = <poly>
///             | <poly> dX [ (+|-) <poly> dY ]
///             | <poly> dY
///             | [ <poly> , <poly> ]
///             | <letter> [* <letter>]*          ;
///
///   letter  := affine(<s>, <s>, <s>, <s>; <s>, <s>)
///            | elemX(<poly in Y>) | elemY(<poly in X>)
///   expr    := term ((+|-) term)*
///   term    := factor ((*|/) factor)*        (division by scalars only)
///   factor  := (-)* atom [^ <nonneg int>]
///   atom    := <integer> | <param> | <poly binding> | X | Y
///            | E[<power-product>] | ( expr )
///
/// Error positions are reported 1-based as line:column.
struct Session {
    SymbolTable table;
    std::map<std::string, Binding> bindings;

    const Binding& require_binding(const std::string& name) const;
    const Derivation& require_derivation(const std::string& name) const;
    const Poly2& require_poly(const std::string& name) const;
    const PolyMap& require_map(const std::string& name) const;
    const AutWord& require_word(const std::string& name) const;
};

/// Parses a full session source.  Throws SyntaxError (with position),
/// UnknownSymbol, DuplicateName, and semantic errors from value
/// construction (e.g. SingularAffine).
Session parse_session(const std::string& text);

/// Parses further statements into an existing session.
void parse_into(Session& s, const std::string& text);

/// Expression-only entry points (must consume the whole text).
Poly2 parse_poly(Session& s, const std::string& text);
Derivation parse_derivation(Session& s, const std::string& text);
Coeff parse_scalar(Session& s, const std::string& text);

/// Canonical text of a bound value.
std::string to_string(const Binding& b, const SymbolTable& t);

} // namespace lfd
