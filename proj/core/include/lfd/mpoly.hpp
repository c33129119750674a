#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lfd {

/// Identifier of a scalar-level generator (a named parameter or a formal
/// exponential symbol).  Ids are handed out by the SymbolTable.
using GenId = std::uint32_t;

/// Exact rational number.
using Rat = mpq_class;
using Int = mpz_class;

/// A power product of scalar generators, e.g. a^2*t.  Factors are kept
/// sorted by generator id with strictly positive exponents; the empty
/// product is 1.
class Monomial {
public:
    using Factor = std::pair<GenId, int>;

    Monomial() = default;

    static Monomial one() { return Monomial(); }
    static Monomial gen(GenId g, int exp = 1);

    bool is_one() const { return f_.empty(); }
    int total_degree() const;
    int exponent(GenId g) const;
    bool contains(GenId g) const { return exponent(g) != 0; }
    const std::vector<Factor>& factors() const { return f_; }

    Monomial times(const Monomial& o) const;
    Monomial pow(int e) const;

    /// Whether this power product divides `o` factorwise.
    bool divides(const Monomial& o) const;
    /// Exact quotient; requires divides(o) == false ... requires *this
    /// dividing into `o` is handled by the caller: computes o / *this.
    Monomial quotient_of(const Monomial& o) const;
    static Monomial gcd(const Monomial& a, const Monomial& b);

    /// Graded order: total degree first, ties broken so that the monomial
    /// with the larger exponent on the smallest differing generator is
    /// greater.  Returns -1, 0 or +1.
    static int compare(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return f_ == o.f_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<Factor> f_;
};

/// Comparator placing the greatest monomial first, so polynomial term maps
/// iterate from the leading term down.
struct MonoDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::compare(a, b) > 0;
    }
};

/// Multivariate polynomial with exact rational coefficients, used for the
/// numerator/denominator layer of the scalar field.  Invariant: no stored
/// coefficient is zero.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rat, MonoDescending>;

    MPoly() = default;

    static MPoly constant(const Rat& c);
    static MPoly constant(long c) { return constant(Rat(c)); }
    static MPoly generator(GenId g, int exp = 1);
    static MPoly term(const Monomial& m, const Rat& c);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// Value of a constant polynomial (0 for the zero polynomial).
    Rat constant_value() const;

    int total_degree() const;
    int degree_in(GenId g) const;
    bool contains_gen(GenId g) const;
    /// Largest generator id appearing; nullopt for constants.
    std::optional<GenId> max_gen() const;
    /// All generator ids appearing, ascending.
    std::vector<GenId> gens() const;

    const TermMap& terms() const { return t_; }
    std::size_t term_count() const { return t_.size(); }
    Rat coefficient(const Monomial& m) const;
    const std::pair<const Monomial, Rat>& leading() const { return *t_.begin(); }

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly scaled(const Rat& c) const;
    MPoly pow(int e) const;

    MPoly derivative(GenId g) const;

    /// Adds c * m, dropping the term if the sum cancels.
    void add_term(const Monomial& m, const Rat& c);

    bool operator==(const MPoly& o) const { return t_ == o.t_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

private:
    TermMap t_;
};

/// Rational content: the unique c with p == c * primitive_part(p), where
/// the primitive part has coprime integer coefficients and positive
/// leading coefficient.  Content of 0 is 0.
Rat rational_content(const MPoly& p);
MPoly primitive_part(const MPoly& p);

/// Exact quotient; throws std::logic_error if b does not divide a.
MPoly divide_exact(const MPoly& a, const MPoly& b);
bool try_divide(const MPoly& a, const MPoly& b, MPoly& quotient);

/// Gcd of two polynomials, normalized to be integer-primitive with
/// positive leading coefficient (gcd(p, 0) = primitive_part(p)).
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

/// Exact square root if p is a perfect square (returned with positive
/// leading coefficient), nullopt otherwise.
std::optional<MPoly> mpoly_sqrt(const MPoly& p);

} // namespace lfd
