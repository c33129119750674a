#include "lfd/printing.hpp"

#include <sstream>

namespace lfd {

namespace {

std::string monomial_str(const Monomial& m, const SymbolTable& t) {
    std::string out;
    bool first = true;
    for (const auto& [g, e] : m.factors()) {
        if (!first)
            out += "*";
        first = false;
        out += t.name(g);
        if (e != 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

/// One displayable term: sign split off, body without the sign.
struct TermText {
    bool negative = false;
    std::string body;
};

std::string join_terms(const std::vector<TermText>& terms) {
    if (terms.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0)
            out += terms[i].negative ? "-" : "";
        else
            out += terms[i].negative ? " - " : " + ";
        out += terms[i].body;
    }
    return out;
}

TermText mpoly_term(const Monomial& m, const Rat& c, const SymbolTable& t) {
    TermText out;
    Rat mag = c;
    if (mag < 0) {
        out.negative = true;
        mag = -mag;
    }
    const std::string vars = monomial_str(m, t);
    if (vars.empty())
        out.body = to_string(mag);
    else if (mag == 1)
        out.body = vars;
    else
        out.body = to_string(mag) + "*" + vars;
    return out;
}

/// Rendering of a scalar used as the coefficient of a variable part:
/// sign split off when the scalar is a single signed product, compound
/// scalars parenthesized whole.
TermText coeff_factor(const Coeff& c, const SymbolTable& t, bool has_vars) {
    TermText out;
    if (c.is_polynomial() && c.num().term_count() == 1) {
        const auto& [m, r] = c.num().leading();
        out = mpoly_term(m, r, t);
        if (has_vars) {
            if (m.is_one() && abs(r) == 1)
                out.body.clear();
            out.body += out.body.empty() ? "" : "*";
        }
        return out;
    }
    out.body = "(" + to_string(c, t) + ")";
    if (has_vars)
        out.body += "*";
    return out;
}

std::string exp2_str(int i, int j) {
    std::string out;
    if (i > 0) {
        out += "X";
        if (i > 1)
            out += "^" + std::to_string(i);
    }
    if (j > 0) {
        if (!out.empty())
            out += "*";
        out += "Y";
        if (j > 1)
            out += "^" + std::to_string(j);
    }
    return out;
}

/// Parenthesize a component that would otherwise swallow a following
/// token (used for derivation components before dX/dY).
std::string guarded(const std::string& s, bool compound) {
    return compound ? "(" + s + ")" : s;
}

} // namespace

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_string(const MPoly& p, const SymbolTable& t) {
    std::vector<TermText> terms;
    for (const auto& [m, c] : p.terms())
        terms.push_back(mpoly_term(m, c, t));
    return join_terms(terms);
}

std::string to_string(const Coeff& c, const SymbolTable& t) {
    if (c.is_polynomial())
        return to_string(c.num(), t);
    return "(" + to_string(c.num(), t) + ")/(" + to_string(c.den(), t) + ")";
}

std::string to_string(const Poly2& p, const SymbolTable& t) {
    std::vector<TermText> terms;
    for (const auto& [e, c] : p.terms()) {
        const std::string vars = exp2_str(e.i, e.j);
        TermText tt = coeff_factor(c, t, !vars.empty());
        tt.body += vars;
        terms.push_back(tt);
    }
    return join_terms(terms);
}

std::string to_string(const UPoly& p, const SymbolTable& t,
                      const std::string& var) {
    std::vector<TermText> terms;
    for (int d = p.degree(); d >= 0; --d) {
        const Coeff c = p.coeff(d);
        if (c.is_zero())
            continue;
        std::string vars;
        if (d > 0) {
            vars = var;
            if (d > 1)
                vars += "^" + std::to_string(d);
        }
        TermText tt = coeff_factor(c, t, !vars.empty());
        tt.body += vars;
        terms.push_back(tt);
    }
    return join_terms(terms);
}

std::string to_string(const Derivation& d, const SymbolTable& t) {
    auto component = [&](const Poly2& p) {
        return guarded(to_string(p, t), p.term_count() > 1);
    };
    std::string out;
    if (!d.px.is_zero())
        out += component(d.px) + " dX";
    if (!d.py.is_zero()) {
        if (!out.empty()) {
            const std::string plain = to_string(d.py, t);
            if (plain[0] == '-') {
                out += " - " + component(-d.py) + " dY";
                return out;
            }
            out += " + ";
        }
        out += component(d.py) + " dY";
    }
    if (out.empty())
        out = "0 dX";
    return out;
}

std::string to_string(const PolyMap& m, const SymbolTable& t) {
    return "[" + to_string(m.f, t) + ", " + to_string(m.g, t) + "]";
}

std::string to_string(const Matrix& m, const SymbolTable& t) {
    std::string out = "[";
    for (int r = 0; r < m.rows(); ++r) {
        if (r)
            out += ", ";
        out += "[";
        for (int c = 0; c < m.cols(); ++c) {
            if (c)
                out += ", ";
            out += to_string(m.at(r, c), t);
        }
        out += "]";
    }
    return out + "]";
}

std::string to_string(const Letter& l, const SymbolTable& t) {
    struct Visitor {
        const SymbolTable& t;
        std::string operator()(const AffineLetter& a) const {
            return "affine(" + to_string(a.a.at(0, 0), t) + ", " +
                   to_string(a.a.at(0, 1), t) + ", " +
                   to_string(a.a.at(1, 0), t) + ", " +
                   to_string(a.a.at(1, 1), t) + "; " + to_string(a.v[0], t) +
                   ", " + to_string(a.v[1], t) + ")";
        }
        std::string operator()(const ElemXLetter& e) const {
            return "elemX(" + to_string(e.shift, t) + ")";
        }
        std::string operator()(const ElemYLetter& e) const {
            return "elemY(" + to_string(e.shift, t) + ")";
        }
    };
    return std::visit(Visitor{t}, l);
}

std::string to_string(const AutWord& w, const SymbolTable& t) {
    if (w.letters.empty())
        return "affine(1, 0, 0, 1; 0, 0)";
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i)
            out += " * ";
        out += to_string(w.letters[i], t);
    }
    return out;
}

} // namespace lfd
