#include "lfd/session.hpp"

#include <cctype>
#include <set>
#include <vector>

#include "lfd/errors.hpp"
#include "lfd/printing.hpp"

namespace lfd {

namespace {

const std::set<std::string> kReserved = {
    "param", "exp",   "resonate", "let", "affine", "elemX",
    "elemY", "X",     "Y",        "E",   "dX",     "dY"};

struct Token {
    enum class Kind { Ident, Integer, Punct, End };
    Kind kind;
    std::string text;  // ident name or integer digits
    char punct = 0;
    std::size_t line = 1, col = 1;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto bump = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') {
                bump(src[i]);
                ++i;
            }
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            bump(c);
            ++i;
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Kind::Ident;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) ||
                    src[i] == '_')) {
                t.text += src[i];
                bump(src[i]);
                ++i;
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::Integer;
            while (i < src.size() &&
                   std::isdigit(static_cast<unsigned char>(src[i]))) {
                t.text += src[i];
                bump(src[i]);
                ++i;
            }
        } else if (std::string("+-*/^()[],;=").find(c) != std::string::npos) {
            t.kind = Token::Kind::Punct;
            t.punct = c;
            bump(c);
            ++i;
        } else {
            throw SyntaxError(std::string("unexpected character '") + c + "'",
                              line, col);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

class Parser {
public:
    Parser(Session& s, const std::string& text) : s_(s), toks_(lex(text)) {}

    void run() {
        while (!at_end())
            statement();
    }

    Poly2 poly_entry() {
        Poly2 p = expr();
        expect_end();
        return p;
    }

    Derivation derivation_entry() {
        Derivation d = derivation_value(expr());
        expect_end();
        return d;
    }

    Coeff scalar_entry() {
        Coeff c = as_scalar(expr(), "scalar expression");
        expect_end();
        return c;
    }

private:
    Session& s_;
    std::vector<Token> toks_;
    std::size_t i_ = 0;

    const Token& cur() const { return toks_[i_]; }
    void advance() {
        if (!at_end())
            ++i_;
    }
    bool at_end() const { return cur().kind == Token::Kind::End; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(msg, cur().line, cur().col);
    }

    bool is_punct(char c) const {
        return cur().kind == Token::Kind::Punct && cur().punct == c;
    }
    bool accept_punct(char c) {
        if (!is_punct(c))
            return false;
        advance();
        return true;
    }
    void expect_punct(char c, const char* what) {
        if (!accept_punct(c))
            fail(std::string("expected '") + c + "' " + what);
    }
    bool is_ident(const char* word) const {
        return cur().kind == Token::Kind::Ident && cur().text == word;
    }
    bool accept_ident(const char* word) {
        if (!is_ident(word))
            return false;
        advance();
        return true;
    }
    void expect_end() {
        if (!at_end())
            fail("unexpected trailing input");
    }

    std::string ident(const char* what) {
        if (cur().kind != Token::Kind::Ident)
            fail(std::string("expected ") + what);
        std::string name = cur().text;
        advance();
        return name;
    }

    // --- statements ---------------------------------------------------

    void statement() {
        if (accept_ident("param")) {
            stmt_param();
        } else if (is_ident("exp")) {
            advance();
            stmt_exp();
        } else if (accept_ident("resonate")) {
            stmt_resonate();
        } else if (accept_ident("let")) {
            stmt_let();
        } else {
            fail("expected a statement (param, exp, resonate, let)");
        }
    }

    void check_fresh(const std::string& name) {
        if (kReserved.count(name))
            throw DuplicateName("'" + name + "' is a reserved word");
        if (s_.table.find(name) || s_.bindings.count(name))
            throw DuplicateName("'" + name + "' is already defined");
    }

    void stmt_param() {
        bool any = false;
        while (cur().kind == Token::Kind::Ident) {
            const std::string name = ident("parameter name");
            check_fresh(name);
            s_.table.add_param(name);
            any = true;
            accept_punct(',');
        }
        if (!any)
            fail("expected at least one parameter name");
        expect_punct(';', "after param statement");
    }

    void stmt_exp() {
        exp_atom_id();
        expect_punct(';', "after exp statement");
    }

    void stmt_resonate() {
        const GenId g = exp_atom_id();
        expect_punct('=', "in resonate statement");
        const Coeff value = as_scalar(expr(), "resonance value");
        s_.table.set_resonance(g, value);
        expect_punct(';', "after resonate statement");
    }

    void stmt_let() {
        const std::string name = ident("binding name");
        check_fresh(name);
        expect_punct('=', "in let statement");
        Binding value = let_value();
        expect_punct(';', "after let statement");
        s_.bindings.emplace(name, std::move(value));
    }

    Binding let_value() {
        if (is_ident("affine") || is_ident("elemX") || is_ident("elemY"))
            return word_expr();
        if (accept_punct('[')) {
            Poly2 f = expr();
            expect_punct(',', "between the components of a map");
            Poly2 g = expr();
            expect_punct(']', "after the components of a map");
            return PolyMap{std::move(f), std::move(g)};
        }
        Poly2 first = expr();
        if (is_ident("dX") || is_ident("dY"))
            return derivation_value(std::move(first));
        return first;
    }

    Derivation derivation_value(Poly2 first) {
        Derivation d;
        if (accept_ident("dX")) {
            d.px = std::move(first);
            bool negate = false;
            if (accept_punct('+') || (negate = accept_punct('-'))) {
                Poly2 second = expr();
                if (!accept_ident("dY"))
                    fail("expected 'dY' after the second component");
                d.py = negate ? -second : second;
            }
        } else if (accept_ident("dY")) {
            d.py = std::move(first);
        } else {
            fail("expected 'dX' or 'dY'");
        }
        return d;
    }

    // --- scalar / polynomial expressions -------------------------------

    Coeff as_scalar(const Poly2& p, const char* what) {
        if (!p.is_constant())
            fail(std::string(what) + " must not involve X or Y");
        return p.constant_value();
    }

    Poly2 expr() {
        Poly2 acc = term();
        for (;;) {
            if (accept_punct('+'))
                acc += term();
            else if (accept_punct('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly2 term() {
        Poly2 acc = factor();
        for (;;) {
            if (accept_punct('*')) {
                acc = acc * factor();
            } else if (is_punct('/')) {
                const Token slash = cur();
                advance();
                Poly2 rhs = factor();
                if (!rhs.is_constant())
                    throw SyntaxError("division is defined for scalars only",
                                      slash.line, slash.col);
                const Coeff v = rhs.constant_value();
                if (v.is_zero())
                    throw ZeroDenominator("division by zero");
                acc = acc.scaled(v.inverse());
            } else {
                return acc;
            }
        }
    }

    Poly2 factor() {
        bool neg = false;
        while (is_punct('-') || is_punct('+')) {
            if (is_punct('-'))
                neg = !neg;
            advance();
        }
        Poly2 base = atom();
        if (accept_punct('^'))
            base = base.pow(exponent_literal());
        return neg ? -base : base;
    }

    int exponent_literal() {
        if (cur().kind != Token::Kind::Integer)
            fail("expected a nonnegative integer exponent");
        const std::string digits = cur().text;
        if (digits.size() > 6)
            fail("exponent too large");
        advance();
        return std::stoi(digits);
    }

    Poly2 atom() {
        if (cur().kind == Token::Kind::Integer) {
            const Rat v(cur().text);
            advance();
            return Poly2::constant(Coeff(v));
        }
        if (accept_punct('(')) {
            Poly2 inner = expr();
            expect_punct(')', "to close the parenthesized expression");
            return inner;
        }
        if (cur().kind != Token::Kind::Ident)
            fail("expected a value");
        if (is_ident("X")) {
            advance();
            return Poly2::X();
        }
        if (is_ident("Y")) {
            advance();
            return Poly2::Y();
        }
        if (is_ident("E")) {
            advance();
            const GenId g = exp_index_after_e();
            return Poly2::constant(Coeff::from_gen(g));
        }
        const Token tok = cur();
        const std::string name = ident("a value");
        if (auto g = s_.table.find(name)) {
            if (!s_.table.is_param(*g))
                throw SyntaxError("'" + name + "' is not usable here",
                                  tok.line, tok.col);
            return Poly2::constant(Coeff::from_gen(*g));
        }
        auto it = s_.bindings.find(name);
        if (it != s_.bindings.end()) {
            if (const Poly2* p = std::get_if<Poly2>(&it->second))
                return *p;
            throw SyntaxError("'" + name +
                                  "' is not a polynomial binding",
                              tok.line, tok.col);
        }
        throw UnknownSymbol("unknown symbol '" + name + "'");
    }

    GenId exp_atom_id() {
        if (!accept_ident("E"))
            fail("expected an exponential symbol E[...]");
        return exp_index_after_e();
    }

    GenId exp_index_after_e() {
        expect_punct('[', "after E");
        Monomial index;
        if (cur().kind == Token::Kind::Integer && cur().text == "1") {
            advance();
        } else {
            for (;;) {
                const Token tok = cur();
                const std::string name = ident("a parameter inside E[...]");
                auto g = s_.table.find(name);
                if (!g)
                    throw UnknownSymbol("unknown symbol '" + name + "'");
                if (!s_.table.is_param(*g))
                    throw SyntaxError("E[...] admits parameters only",
                                      tok.line, tok.col);
                int e = 1;
                if (accept_punct('^'))
                    e = exponent_literal();
                index = index.times(Monomial::gen(*g, e));
                if (!accept_punct('*'))
                    break;
            }
        }
        expect_punct(']', "to close E[...]");
        return s_.table.exp_symbol(index);
    }

    // --- automorphism words --------------------------------------------

    AutWord word_expr() {
        std::vector<Letter> letters;
        letters.push_back(letter());
        while (accept_punct('*'))
            letters.push_back(letter());
        return word(std::move(letters));
    }

    Letter letter() {
        if (accept_ident("affine")) {
            expect_punct('(', "after affine");
            Matrix m(2, 2);
            m.at(0, 0) = as_scalar(expr(), "affine entry");
            expect_punct(',', "between affine entries");
            m.at(0, 1) = as_scalar(expr(), "affine entry");
            expect_punct(',', "between affine entries");
            m.at(1, 0) = as_scalar(expr(), "affine entry");
            expect_punct(',', "between affine entries");
            m.at(1, 1) = as_scalar(expr(), "affine entry");
            expect_punct(';', "before the affine translation part");
            const Coeff v0 = as_scalar(expr(), "translation entry");
            expect_punct(',', "between translation entries");
            const Coeff v1 = as_scalar(expr(), "translation entry");
            expect_punct(')', "to close affine(...)");
            return affine_letter(m, v0, v1);
        }
        if (accept_ident("elemX")) {
            expect_punct('(', "after elemX");
            Poly2 p = expr();
            expect_punct(')', "to close elemX(...)");
            return elem_x_letter(p);
        }
        if (accept_ident("elemY")) {
            expect_punct('(', "after elemY");
            Poly2 p = expr();
            expect_punct(')', "to close elemY(...)");
            return elem_y_letter(p);
        }
        fail("expected a letter (affine, elemX, elemY)");
    }
};

} // namespace

const Binding& Session::require_binding(const std::string& name) const {
    auto it = bindings.find(name);
    if (it == bindings.end())
        throw UnknownSymbol("no binding named '" + name + "'");
    return it->second;
}

namespace {
template <typename T>
const T& require_kind(const Session& s, const std::string& name,
                      const char* kind) {
    const Binding& b = s.require_binding(name);
    if (const T* v = std::get_if<T>(&b))
        return *v;
    throw UnknownSymbol("binding '" + name + "' is not a " + kind);
}
} // namespace

const Derivation& Session::require_derivation(const std::string& name) const {
    return require_kind<Derivation>(*this, name, "derivation");
}
const Poly2& Session::require_poly(const std::string& name) const {
    return require_kind<Poly2>(*this, name, "polynomial");
}
const PolyMap& Session::require_map(const std::string& name) const {
    return require_kind<PolyMap>(*this, name, "map");
}
const AutWord& Session::require_word(const std::string& name) const {
    return require_kind<AutWord>(*this, name, "word");
}

Session parse_session(const std::string& text) {
    Session s;
    parse_into(s, text);
    return s;
}

void parse_into(Session& s, const std::string& text) {
    Parser(s, text).run();
}

Poly2 parse_poly(Session& s, const std::string& text) {
    return Parser(s, text).poly_entry();
}

Derivation parse_derivation(Session& s, const std::string& text) {
    return Parser(s, text).derivation_entry();
}

Coeff parse_scalar(Session& s, const std::string& text) {
    return Parser(s, text).scalar_entry();
}

std::string to_string(const Binding& b, const SymbolTable& t) {
    return std::visit([&](const auto& v) { return to_string(v, t); }, b);
}

} // namespace lfd
