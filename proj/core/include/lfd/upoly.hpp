#pragma once

#include <utility>
#include <vector>

#include "lfd/coeff.hpp"

namespace lfd {

/// Dense univariate polynomial over the scalar field, used for minimal
/// polynomials and the semisimple/nilpotent splitting.  Invariant: the
/// trailing (highest-degree) coefficient is nonzero; the zero polynomial
/// has no coefficients and degree -1.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) {
        trim();
    }

    static UPoly zero() { return UPoly(); }
    static UPoly constant(Coeff v);
    static UPoly variable();               ///< T
    static UPoly monomial(int deg, Coeff v);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return degree() == 0 && c_[0].is_one(); }
    const Coeff& leading() const { return c_.back(); }
    Coeff coeff(int deg) const;
    const std::vector<Coeff>& coeffs() const { return c_; }

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(const Coeff& v) const;

    /// Euclidean division (field coefficients): returns {quotient, rem}.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    UPoly operator%(const UPoly& d) const { return divmod(d).second; }
    UPoly operator/(const UPoly& d) const { return divmod(d).first; }

    UPoly derivative() const;
    UPoly monic() const;
    Coeff eval(const Coeff& x) const;

    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

private:
    std::vector<Coeff> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }
};

/// Monic gcd (gcd with 0 is the other argument made monic).
UPoly upoly_gcd(const UPoly& a, const UPoly& b);
UPoly upoly_lcm(const UPoly& a, const UPoly& b);

/// Extended Euclid: returns {g, u, v} with u*a + v*b = g, g monic.
struct ExtGcd {
    UPoly g, u, v;
};
ExtGcd upoly_ext_gcd(const UPoly& a, const UPoly& b);

/// Product of the distinct irreducible factors (radical), monic.
UPoly squarefree_part(const UPoly& p);

/// True when gcd(p, p') == 1.
bool is_squarefree(const UPoly& p);

/// True when p == T^k for some k >= 1 (after making it monic).
bool is_power_of_variable(const UPoly& p);

} // namespace lfd
