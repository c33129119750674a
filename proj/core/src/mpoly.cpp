#include "lfd/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace lfd {

// ---------------------------------------------------------------------------
// Monomial
// ---------------------------------------------------------------------------

Monomial Monomial::gen(GenId g, int exp) {
    Monomial m;
    if (exp < 0)
        throw std::logic_error("Monomial::gen: negative exponent");
    if (exp > 0)
        m.f_.push_back({g, exp});
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& [g, e] : f_)
        d += e;
    return d;
}

int Monomial::exponent(GenId g) const {
    for (const auto& [gid, e] : f_)
        if (gid == g)
            return e;
    return 0;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() || b != o.f_.end()) {
        if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) {
            r.f_.push_back(*a++);
        } else if (a == f_.end() || b->first < a->first) {
            r.f_.push_back(*b++);
        } else {
            r.f_.push_back({a->first, a->second + b->second});
            ++a, ++b;
        }
    }
    return r;
}

Monomial Monomial::pow(int e) const {
    if (e < 0)
        throw std::logic_error("Monomial::pow: negative exponent");
    Monomial r;
    if (e == 0)
        return r;
    r.f_ = f_;
    for (auto& [g, k] : r.f_)
        k *= e;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    auto b = o.f_.begin();
    for (const auto& [g, e] : f_) {
        while (b != o.f_.end() && b->first < g)
            ++b;
        if (b == o.f_.end() || b->first != g || b->second < e)
            return false;
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
    // o / *this, assuming divisibility.
    Monomial r;
    auto a = f_.begin();
    for (const auto& [g, e] : o.f_) {
        int sub = 0;
        while (a != f_.end() && a->first < g)
            ++a;
        if (a != f_.end() && a->first == g)
            sub = a->second;
        if (sub > e)
            throw std::logic_error("Monomial::quotient_of: not divisible");
        if (e - sub > 0)
            r.f_.push_back({g, e - sub});
    }
    return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto ia = a.f_.begin();
    for (const auto& [g, e] : b.f_) {
        while (ia != a.f_.end() && ia->first < g)
            ++ia;
        if (ia != a.f_.end() && ia->first == g)
            r.f_.push_back({g, std::min(e, ia->second)});
    }
    return r;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    const int da = a.total_degree(), db = b.total_degree();
    if (da != db)
        return da < db ? -1 : 1;
    // Same degree: walk generators in ascending id; the first position
    // where the exponents differ decides (bigger exponent on the earlier
    // generator wins).
    auto ia = a.f_.begin(), ib = b.f_.begin();
    while (ia != a.f_.end() && ib != b.f_.end()) {
        if (ia->first != ib->first) {
            // The monomial owning the smaller generator id has positive
            // exponent there while the other has zero.
            return ia->first < ib->first ? 1 : -1;
        }
        if (ia->second != ib->second)
            return ia->second > ib->second ? 1 : -1;
        ++ia, ++ib;
    }
    if (ia != a.f_.end())
        return 1;
    if (ib != b.f_.end())
        return -1;
    return 0;
}

// ---------------------------------------------------------------------------
// MPoly basics
// ---------------------------------------------------------------------------

MPoly MPoly::constant(const Rat& c) {
    MPoly p;
    p.add_term(Monomial::one(), c);
    return p;
}

MPoly MPoly::generator(GenId g, int exp) {
    MPoly p;
    p.add_term(Monomial::gen(g, exp), Rat(1));
    return p;
}

MPoly MPoly::term(const Monomial& m, const Rat& c) {
    MPoly p;
    p.add_term(m, c);
    return p;
}

bool MPoly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
}

bool MPoly::is_one() const {
    return t_.size() == 1 && t_.begin()->first.is_one() &&
           t_.begin()->second == 1;
}

Rat MPoly::constant_value() const {
    if (t_.empty())
        return Rat(0);
    if (!is_constant())
        throw std::logic_error("MPoly::constant_value: not a constant");
    return t_.begin()->second;
}

int MPoly::total_degree() const {
    if (t_.empty())
        return -1;
    return t_.begin()->first.total_degree();
}

int MPoly::degree_in(GenId g) const {
    int d = is_zero() ? -1 : 0;
    for (const auto& [m, c] : t_)
        d = std::max(d, m.exponent(g));
    return d;
}

bool MPoly::contains_gen(GenId g) const {
    for (const auto& [m, c] : t_)
        if (m.contains(g))
            return true;
    return false;
}

std::optional<GenId> MPoly::max_gen() const {
    std::optional<GenId> best;
    for (const auto& [m, c] : t_)
        for (const auto& [g, e] : m.factors())
            if (!best || g > *best)
                best = g;
    return best;
}

std::vector<GenId> MPoly::gens() const {
    std::vector<GenId> out;
    for (const auto& [m, c] : t_)
        for (const auto& [g, e] : m.factors())
            out.push_back(g);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rat MPoly::coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0)
        return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            t_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.t_)
        c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.t_)
        add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.t_)
        add_term(m, -c);
    return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    r += o;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    r -= o;
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    for (const auto& [ma, ca] : t_)
        for (const auto& [mb, cb] : o.t_)
            r.add_term(ma.times(mb), ca * cb);
    return r;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly r;
    if (c == 0)
        return r;
    r.t_ = t_;
    for (auto& [m, k] : r.t_)
        k *= c;
    return r;
}

MPoly MPoly::pow(int e) const {
    if (e < 0)
        throw std::logic_error("MPoly::pow: negative exponent");
    MPoly r = constant(1);
    MPoly base = *this;
    while (e > 0) {
        if (e & 1)
            r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

MPoly MPoly::derivative(GenId g) const {
    MPoly r;
    for (const auto& [m, c] : t_) {
        const int e = m.exponent(g);
        if (e == 0)
            continue;
        Monomial dm = Monomial::gen(g, e - 1).times(
            Monomial::gen(g, e).quotient_of(m));
        r.add_term(dm, c * e);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Content / primitive part
// ---------------------------------------------------------------------------

Rat rational_content(const MPoly& p) {
    if (p.is_zero())
        return Rat(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                c.get_den().get_mpz_t());
    }
    Rat content(num_gcd, den_lcm);
    content.canonicalize();
    if (p.leading().second < 0)
        content = -content;
    return content;
}

MPoly primitive_part(const MPoly& p) {
    if (p.is_zero())
        return p;
    Rat c = rational_content(p);
    return p.scaled(1 / c);
}

// ---------------------------------------------------------------------------
// Exact division
// ---------------------------------------------------------------------------

bool try_divide(const MPoly& a, const MPoly& b, MPoly& quotient) {
    if (b.is_zero())
        return false;
    MPoly q, r = a;
    const auto& [lbm, lbc] = b.leading();
    while (!r.is_zero()) {
        const auto& [lrm, lrc] = r.leading();
        if (!lbm.divides(lrm))
            return false;
        Monomial qm = lbm.quotient_of(lrm);
        Rat qc = lrc / lbc;
        q.add_term(qm, qc);
        r -= b * MPoly::term(qm, qc);
    }
    quotient = std::move(q);
    return true;
}

MPoly divide_exact(const MPoly& a, const MPoly& b) {
    MPoly q;
    if (!try_divide(a, b, q))
        throw std::logic_error("divide_exact: not divisible");
    return q;
}

// ---------------------------------------------------------------------------
// Gcd via a primitive polynomial remainder sequence
// ---------------------------------------------------------------------------

namespace {

/// Coefficients of p viewed as univariate in g; index = degree.
std::vector<MPoly> coeffs_in(const MPoly& p, GenId g) {
    std::vector<MPoly> out(static_cast<std::size_t>(p.degree_in(g) + 1));
    for (const auto& [m, c] : p.terms()) {
        const int e = m.exponent(g);
        Monomial rest = Monomial::gen(g, e).quotient_of(m);
        out[static_cast<std::size_t>(e)].add_term(rest, c);
    }
    return out;
}

MPoly from_coeffs(const std::vector<MPoly>& cs, GenId g) {
    MPoly p;
    for (std::size_t d = 0; d < cs.size(); ++d)
        p += cs[d] * MPoly::generator(g, static_cast<int>(d));
    return p;
}

void trim(std::vector<MPoly>& cs) {
    while (!cs.empty() && cs.back().is_zero())
        cs.pop_back();
}

/// Pseudo-remainder of a by b, both univariate in g (as coefficient
/// vectors).  Multiplies through by powers of b's leading coefficient so
/// every step stays polynomial.
std::vector<MPoly> prem(std::vector<MPoly> r, const std::vector<MPoly>& b) {
    trim(r);
    const MPoly& lb = b.back();
    const std::size_t db = b.size() - 1;
    while (r.size() >= b.size() && !r.empty()) {
        const MPoly lr = r.back();
        const std::size_t shift = r.size() - 1 - db;
        for (auto& c : r)
            c = c * lb;
        for (std::size_t i = 0; i < b.size(); ++i)
            r[shift + i] -= lr * b[i];
        r.pop_back();
        trim(r);
    }
    return r;
}

/// Gcd of the coefficients of p wrt g (the content of p as a univariate
/// polynomial in g over the remaining generators).
MPoly content_in(const MPoly& p, GenId g) {
    MPoly c;
    for (const auto& cs = coeffs_in(p, g); const MPoly& ci : cs)
        if (!ci.is_zero())
            c = mpoly_gcd(c, ci);
    return c;
}

} // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero())
        return primitive_part(b);
    if (b.is_zero())
        return primitive_part(a);
    if (a.is_constant() || b.is_constant()) {
        // Any nonzero constant divides everything; the primitive
        // normalization makes the gcd 1.
        if (a.is_constant() && b.is_constant())
            return MPoly::constant(1);
        return MPoly::constant(1);
    }

    const GenId g = std::max(*a.max_gen(), *b.max_gen());
    if (!a.contains_gen(g))
        return mpoly_gcd(a, content_in(b, g));
    if (!b.contains_gen(g))
        return mpoly_gcd(content_in(a, g), b);

    const MPoly ca = content_in(a, g);
    const MPoly cb = content_in(b, g);
    const MPoly cont = mpoly_gcd(ca, cb);

    std::vector<MPoly> f = coeffs_in(divide_exact(a, ca), g);
    std::vector<MPoly> h = coeffs_in(divide_exact(b, cb), g);
    if (f.size() < h.size())
        std::swap(f, h);

    // Primitive PRS: pseudo-divide, strip contents, repeat.
    while (true) {
        std::vector<MPoly> r = prem(f, h);
        if (r.empty()) {
            MPoly res = from_coeffs(h, g);
            res = divide_exact(res, content_in(res, g));
            return primitive_part(cont * res);
        }
        if (r.size() == 1) // nonzero, degree 0 in g: coprime wrt g
            return primitive_part(cont);
        MPoly rp = from_coeffs(r, g);
        rp = divide_exact(rp, content_in(rp, g));
        f = std::move(h);
        h = coeffs_in(rp, g);
    }
}

// ---------------------------------------------------------------------------
// Exact square root (via a squarefree decomposition)
// ---------------------------------------------------------------------------

namespace {

std::optional<Rat> rat_sqrt(const Rat& q) {
    if (q < 0)
        return std::nullopt;
    Int n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) ||
        !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    Rat r(sn, sd);
    r.canonicalize();
    return r;
}

/// Yun's squarefree decomposition of p (primitive in g, positive degree):
/// returns a_1, a_2, ... with p = prod a_i^i up to a constant.
std::vector<MPoly> squarefree_decomposition(const MPoly& p, GenId g) {
    std::vector<MPoly> factors;
    MPoly dp = p.derivative(g);
    MPoly gcd0 = mpoly_gcd(p, dp);
    MPoly c = divide_exact(p, gcd0);
    MPoly d = divide_exact(dp, gcd0) - c.derivative(g);
    while (!(c.is_constant())) {
        MPoly ai = mpoly_gcd(c, d);
        factors.push_back(ai);
        c = divide_exact(c, ai);
        d = divide_exact(d, ai) - c.derivative(g);
    }
    return factors;
}

} // namespace

std::optional<MPoly> mpoly_sqrt(const MPoly& p) {
    if (p.is_zero())
        return MPoly();
    if (p.is_constant()) {
        auto r = rat_sqrt(p.constant_value());
        if (!r)
            return std::nullopt;
        return MPoly::constant(*r);
    }
    const Rat content = rational_content(p);
    auto content_root = rat_sqrt(content);
    if (!content_root)
        return std::nullopt;
    const MPoly pp = p.scaled(1 / content);

    const GenId g = *pp.max_gen();
    if (pp.degree_in(g) % 2 != 0)
        return std::nullopt;

    const MPoly cont_g = content_in(pp, g);
    auto cont_root = mpoly_sqrt(cont_g);
    if (!cont_root)
        return std::nullopt;
    const MPoly main = divide_exact(pp, cont_g);

    MPoly root = MPoly::constant(1);
    auto factors = squarefree_decomposition(main, g);
    MPoly rebuilt = MPoly::constant(1);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const int mult = static_cast<int>(i) + 1;
        if (mult % 2 != 0 && !factors[i].is_constant())
            return std::nullopt;
        root = root * factors[i].pow(mult / 2);
        rebuilt = rebuilt * factors[i].pow(mult);
    }
    // The decomposition is up to a constant; fold it back in.
    MPoly quotient_check;
    if (!try_divide(main, rebuilt, quotient_check) ||
        !quotient_check.is_constant())
        return std::nullopt;
    auto leftover_root = rat_sqrt(quotient_check.constant_value());
    if (!leftover_root)
        return std::nullopt;

    MPoly result =
        root.scaled(*leftover_root * *content_root) * *cont_root;
    if (result.leading().second < 0)
        result = -result;
    return result;
}

} // namespace lfd
