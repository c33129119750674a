#include "lfd/symtab.hpp"

#include "lfd/errors.hpp"

namespace lfd {

GenId SymbolTable::add_param(const std::string& name) {
    if (name.empty())
        throw Error("parameter name must be nonempty");
    if (by_name_.count(name))
        throw DuplicateName("parameter '" + name + "' already declared");
    const GenId id = static_cast<GenId>(gens_.size());
    gens_.push_back({Kind::Param, name, Monomial::one()});
    by_name_[name] = id;
    return id;
}

std::string SymbolTable::exp_display_name(const Monomial& index) const {
    std::string body;
    if (index.is_one()) {
        body = "1";
    } else {
        bool first = true;
        for (const auto& [g, e] : index.factors()) {
            if (!first)
                body += "*";
            first = false;
            body += name(g);
            if (e != 1)
                body += "^" + std::to_string(e);
        }
    }
    return "E[" + body + "]";
}

GenId SymbolTable::exp_symbol(const Monomial& index) {
    auto it = exp_by_index_.find(index);
    if (it != exp_by_index_.end())
        return it->second;
    for (const auto& [g, e] : index.factors())
        if (!is_param(g))
            throw UnsupportedExponent(
                "exponential symbols must be indexed by parameter "
                "power products");
    const GenId id = static_cast<GenId>(gens_.size());
    gens_.push_back({Kind::Exp, exp_display_name(index), index});
    exp_by_index_[index] = id;
    return id;
}

std::optional<GenId> SymbolTable::find_exp(const Monomial& index) const {
    auto it = exp_by_index_.find(index);
    if (it == exp_by_index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<GenId> SymbolTable::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

GenId SymbolTable::require(const std::string& name) const {
    auto id = find(name);
    if (!id)
        throw UnknownSymbol("unknown symbol '" + name + "'");
    return *id;
}

const SymbolTable::GenInfo& SymbolTable::info(GenId g) const {
    if (g >= gens_.size())
        throw std::logic_error("SymbolTable::info: bad generator id");
    return gens_[g];
}

void SymbolTable::set_resonance(GenId exp_gen, const Coeff& value) {
    if (!is_exp(exp_gen))
        throw ResonanceMismatch("resonance target must be an exponential "
                                "symbol");
    if (value.is_zero())
        throw ResonanceMismatch("an exponential symbol cannot be zero");
    for (const MPoly* part : {&value.num(), &value.den()})
        for (GenId g : part->gens())
            if (is_exp(g))
                throw ResonanceMismatch(
                    "resonance values must be free of exponential symbols");
    auto it = resonances_.find(exp_gen);
    if (it != resonances_.end()) {
        if (!(it->second == value))
            throw ResonanceMismatch("conflicting resonance for " +
                                    name(exp_gen));
        return;
    }
    resonances_[exp_gen] = value;
}

std::vector<GenId> SymbolTable::params() const {
    std::vector<GenId> out;
    for (GenId g = 0; g < gens_.size(); ++g)
        if (gens_[g].kind == Kind::Param)
            out.push_back(g);
    return out;
}

} // namespace lfd
