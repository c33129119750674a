#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lfd/coeff.hpp"
#include "lfd/mpoly.hpp"

namespace lfd {

/// Registry of scalar generators.  There are two kinds:
///   * parameters: free transcendentals declared by name (a, b, t, ...),
///   * exponential symbols: one generator per power product of parameters,
///     standing for exp(that power product).  E.g. exp(3*a*t - 2) is the
///     field element E[a*t]^3 * E[1]^(-2).
///
/// A resonance assignment pins an exponential symbol to a concrete value
/// of the field (e.g. E[b] = 1); `resonate` applies these on demand.
class SymbolTable {
public:
    enum class Kind { Param, Exp };

    struct GenInfo {
        Kind kind;
        std::string name;  // display name; for Exp this is "E[...]"
        Monomial index;    // for Exp: the exponent power product
    };

    SymbolTable() = default;

    /// Declares a named parameter; throws DuplicateName on reuse.
    GenId add_param(const std::string& name);

    /// Id of the exponential symbol with the given exponent power product
    /// (over parameters only), registering it if new.  The empty product
    /// is allowed and stands for exp(1) = e.
    GenId exp_symbol(const Monomial& index);

    std::optional<GenId> find(const std::string& name) const;
    /// Lookup that throws UnknownSymbol with the name in the message.
    GenId require(const std::string& name) const;
    /// Id of an already-registered exponential symbol, if any.
    std::optional<GenId> find_exp(const Monomial& index) const;

    std::size_t size() const { return gens_.size(); }
    const GenInfo& info(GenId g) const;
    bool is_param(GenId g) const { return info(g).kind == Kind::Param; }
    bool is_exp(GenId g) const { return info(g).kind == Kind::Exp; }
    const std::string& name(GenId g) const { return info(g).name; }

    /// Pins an exponential symbol to a value.  The value must be nonzero
    /// and free of exponential symbols; re-pinning to a different value
    /// throws ResonanceMismatch.
    void set_resonance(GenId exp_gen, const Coeff& value);
    const std::map<GenId, Coeff>& resonances() const { return resonances_; }

    /// All declared parameter ids, in declaration order.
    std::vector<GenId> params() const;

private:
    std::vector<GenInfo> gens_;
    std::map<std::string, GenId> by_name_;
    std::map<Monomial, GenId, MonoDescending> exp_by_index_;
    std::map<GenId, Coeff> resonances_;

    std::string exp_display_name(const Monomial& index) const;
};

} // namespace lfd
