#include "lfd/poly2.hpp"

#include <algorithm>
#include <stdexcept>

namespace lfd {

Poly2 Poly2::constant(Coeff c) {
    Poly2 p;
    p.add_term(0, 0, c);
    return p;
}

Poly2 Poly2::monomial(int i, int j, Coeff c) {
    Poly2 p;
    p.add_term(i, j, c);
    return p;
}

bool Poly2::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exp2{0, 0});
}

Coeff Poly2::constant_value() const {
    if (t_.empty())
        return Coeff();
    if (!is_constant())
        throw std::logic_error("Poly2::constant_value: not a constant");
    return t_.begin()->second;
}

int Poly2::degree_x() const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : t_)
        d = std::max(d, e.i);
    return d;
}

int Poly2::degree_y() const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [e, c] : t_)
        d = std::max(d, e.j);
    return d;
}

Coeff Poly2::coeff_of(int i, int j) const {
    auto it = t_.find(Exp2{i, j});
    return it == t_.end() ? Coeff() : it->second;
}

void Poly2::add_term(int i, int j, const Coeff& c) {
    if (c.is_zero())
        return;
    if (i < 0 || j < 0)
        throw std::logic_error("Poly2::add_term: negative exponent");
    Exp2 e{i, j};
    auto [it, inserted] = t_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            t_.erase(it);
    }
}

Poly2 Poly2::operator-() const {
    Poly2 r = *this;
    for (auto& [e, c] : r.t_)
        c = -c;
    return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [e, c] : o.t_)
        add_term(e.i, e.j, c);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (const auto& [e, c] : o.t_)
        add_term(e.i, e.j, -c);
    return *this;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 r = *this;
    r += o;
    return r;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 r = *this;
    r -= o;
    return r;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 r;
    for (const auto& [ea, ca] : t_)
        for (const auto& [eb, cb] : o.t_)
            r.add_term(ea.i + eb.i, ea.j + eb.j, ca * cb);
    return r;
}

Poly2 Poly2::scaled(const Coeff& c) const {
    Poly2 r;
    for (const auto& [e, k] : t_)
        r.add_term(e.i, e.j, k * c);
    return r;
}

Poly2 Poly2::pow(int e) const {
    if (e < 0)
        throw std::logic_error("Poly2::pow: negative exponent");
    Poly2 r = constant(1);
    Poly2 base = *this;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Poly2 Poly2::substitute(const Poly2& vx, const Poly2& vy) const {
    // Precompute the needed powers once; substitution is used heavily by
    // the commutation checks.
    std::vector<Poly2> px{constant(1)}, py{constant(1)};
    px.reserve(static_cast<std::size_t>(degree_x()) + 1);
    py.reserve(static_cast<std::size_t>(degree_y()) + 1);
    for (int k = 1; k <= degree_x(); ++k)
        px.push_back(px.back() * vx);
    for (int k = 1; k <= degree_y(); ++k)
        py.push_back(py.back() * vy);
    Poly2 r;
    for (const auto& [e, c] : t_)
        r += (px[static_cast<std::size_t>(e.i)] *
              py[static_cast<std::size_t>(e.j)])
                 .scaled(c);
    return r;
}

Poly2 Poly2::dx() const {
    Poly2 r;
    for (const auto& [e, c] : t_)
        if (e.i > 0)
            r.add_term(e.i - 1, e.j, c * Coeff(e.i));
    return r;
}

Poly2 Poly2::dy() const {
    Poly2 r;
    for (const auto& [e, c] : t_)
        if (e.j > 0)
            r.add_term(e.i, e.j - 1, c * Coeff(e.j));
    return r;
}

} // namespace lfd
