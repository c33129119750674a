#include "lfd/upoly.hpp"

#include <stdexcept>

#include "lfd/errors.hpp"

namespace lfd {

UPoly UPoly::constant(Coeff v) {
    return UPoly(std::vector<Coeff>{std::move(v)});
}

UPoly UPoly::variable() {
    return UPoly(std::vector<Coeff>{Coeff(0), Coeff(1)});
}

UPoly UPoly::monomial(int deg, Coeff v) {
    if (deg < 0)
        throw std::logic_error("UPoly::monomial: negative degree");
    std::vector<Coeff> c(static_cast<std::size_t>(deg) + 1);
    c.back() = std::move(v);
    return UPoly(std::move(c));
}

Coeff UPoly::coeff(int deg) const {
    if (deg < 0 || deg > degree())
        return Coeff();
    return c_[static_cast<std::size_t>(deg)];
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& v : r.c_)
        v = -v;
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Coeff> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < c_.size())
            c[i] += c_[i];
        if (i < o.c_.size())
            c[i] += o.c_[i];
    }
    return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero())
        return UPoly();
    std::vector<Coeff> c(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            c[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(c));
}

UPoly UPoly::scaled(const Coeff& v) const {
    UPoly r = *this;
    for (auto& x : r.c_)
        x *= v;
    r.trim();
    return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero())
        throw ZeroDenominator("polynomial division by zero");
    UPoly r = *this;
    if (degree() < d.degree())
        return {UPoly(), r};
    std::vector<Coeff> q(static_cast<std::size_t>(degree() - d.degree()) + 1);
    const Coeff lead_inv = d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        const int k = r.degree() - d.degree();
        const Coeff f = r.leading() * lead_inv;
        q[static_cast<std::size_t>(k)] = f;
        r = r - (d * UPoly::monomial(k, f));
    }
    return {UPoly(std::move(q)), r};
}

UPoly UPoly::derivative() const {
    if (degree() < 1)
        return UPoly();
    std::vector<Coeff> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        c[i - 1] = c_[i] * Coeff(static_cast<long>(i));
    return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
    if (is_zero() || leading().is_one())
        return *this;
    return scaled(leading().inverse());
}

Coeff UPoly::eval(const Coeff& x) const {
    Coeff acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    UPoly f = a, g = b;
    while (!g.is_zero()) {
        UPoly r = f % g;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

UPoly upoly_lcm(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero())
        return UPoly();
    const UPoly g = upoly_gcd(a, b);
    return ((a * b) / g).monic();
}

ExtGcd upoly_ext_gcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b;
    UPoly u0 = UPoly::constant(Coeff(1)), u1;
    UPoly v0, v1 = UPoly::constant(Coeff(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UPoly u2 = u0 - q * u1;
        u0 = std::move(u1);
        u1 = std::move(u2);
        UPoly v2 = v0 - q * v1;
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (r0.is_zero())
        return {r0, u0, v0};
    const Coeff inv = r0.leading().inverse();
    return {r0.scaled(inv), u0.scaled(inv), v0.scaled(inv)};
}

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 0)
        return p.monic();
    const UPoly g = upoly_gcd(p, p.derivative());
    return (p / g).monic();
}

bool is_squarefree(const UPoly& p) {
    if (p.degree() <= 0)
        return !p.is_zero();
    return upoly_gcd(p, p.derivative()).is_one();
}

bool is_power_of_variable(const UPoly& p) {
    if (p.degree() < 1)
        return false;
    for (int k = 0; k < p.degree(); ++k)
        if (!p.coeff(k).is_zero())
            return false;
    return true;
}

} // namespace lfd
