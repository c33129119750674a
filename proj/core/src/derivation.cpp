#include "lfd/derivation.hpp"

#include <string>

#include "lfd/errors.hpp"

namespace lfd {

Poly2 apply(const Derivation& d, const Poly2& p) {
    return d.px * p.dx() + d.py * p.dy();
}

Derivation bracket(const Derivation& a, const Derivation& b) {
    return {apply(a, b.px) - apply(b, a.px),
            apply(a, b.py) - apply(b, a.py)};
}

IterSpan iter_span(const Derivation& d, const Poly2& g, int cap) {
    if (cap < 1)
        throw Error("iter_span: cap must be at least 1");
    IterSpan out;
    out.generator = g;

    SpanBuilder span;
    std::vector<int> degree_trace;
    std::vector<std::vector<Coeff>> columns;
    Poly2 w = g;
    std::vector<Coeff> dependence;
    while (true) {
        degree_trace.push_back(w.degree());
        auto coords = span.insert(w);
        if (coords) {
            dependence = std::move(*coords);
            break;
        }
        if (static_cast<int>(span.dimension()) > cap)
            throw NotStabilizedWithinCap(
                "iterate span did not stabilize within cap " +
                    std::to_string(cap),
                std::move(degree_trace));
        w = apply(d, w);
    }

    const std::size_t n = span.dimension();
    out.basis = span.basis();
    out.companion = Matrix(static_cast<int>(n), static_cast<int>(n));
    // D maps basis[j] to basis[j+1] for j < n-1, and basis[n-1] to the
    // dependent iterate whose coordinates we just found.
    for (std::size_t j = 0; j + 1 < n; ++j)
        out.companion.at(static_cast<int>(j) + 1, static_cast<int>(j)) =
            Coeff(1);
    for (std::size_t i = 0; i < n; ++i)
        out.companion.at(static_cast<int>(i), static_cast<int>(n) - 1) =
            dependence[i];

    // Minimal polynomial of the cyclic space: T^n - sum dependence_i T^i.
    std::vector<Coeff> mp(n + 1);
    for (std::size_t i = 0; i < n; ++i)
        mp[i] = -dependence[i];
    mp[n] = Coeff(1);
    out.min_poly = UPoly(std::move(mp));
    return out;
}

LFReport classify_lf(const Derivation& d, int cap) {
    LFReport report;
    try {
        const IterSpan sx = iter_span(d, Poly2::X(), cap);
        report.cap_used = static_cast<int>(sx.basis.size());
        const IterSpan sy = iter_span(d, Poly2::Y(), cap);
        report.cap_used =
            std::max(report.cap_used, static_cast<int>(sy.basis.size()));
        report.is_lf = true;
        report.min_poly = upoly_lcm(sx.min_poly, sy.min_poly);
        report.is_lnd = is_power_of_variable(report.min_poly);
        report.is_semisimple = is_squarefree(report.min_poly);
    } catch (const NotStabilizedWithinCap& e) {
        report.is_lf = false;
        report.cap_used = cap;
        report.degree_trace = e.degree_trace;
    }
    return report;
}

namespace {

/// Joint D-stable span of the X- and Y-orbits, with the matrix of D on it.
struct JointSpan {
    SpanBuilder span;
    std::vector<Coeff> x_coords, y_coords; // coordinates of X and of Y
    Matrix action;
};

JointSpan joint_span(const Derivation& d, int cap) {
    JointSpan js;
    std::vector<int> trace;

    auto grow = [&](Poly2 seed) {
        Poly2 w = std::move(seed);
        while (true) {
            trace.push_back(w.degree());
            auto coords = js.span.insert(w);
            if (coords)
                return *coords;
            if (static_cast<int>(js.span.dimension()) > cap)
                throw NotStabilizedWithinCap(
                    "joint orbit span did not stabilize within cap " +
                        std::to_string(cap),
                    std::move(trace));
            w = apply(d, w);
        }
    };

    grow(Poly2::X());
    grow(Poly2::Y());

    const int n = static_cast<int>(js.span.dimension());
    js.x_coords = *js.span.coords(Poly2::X());
    js.y_coords = *js.span.coords(Poly2::Y());
    js.action = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        auto col = js.span.coords(apply(d, js.span.basis()[
            static_cast<std::size_t>(j)]));
        if (!col)
            throw Error("internal: orbit span is not invariant");
        for (int i = 0; i < n; ++i)
            js.action.at(i, j) = (*col)[static_cast<std::size_t>(i)];
    }
    return js;
}

/// Semisimple part of a square matrix by the Newton iteration
/// t <- t - q(t)/q'(t) computed modulo the minimal polynomial, where q is
/// the squarefree part.  Works entirely inside the coefficient field.
Matrix semisimple_part(const Matrix& m) {
    UPoly p;
    {
        UPoly acc = UPoly::constant(Coeff(1));
        for (int k = 0; k < m.rows(); ++k)
            acc = upoly_lcm(acc, min_poly_of_vector(m, k));
        p = acc;
    }
    const UPoly q = squarefree_part(p);
    if (q == p) // already semisimple
        return m;

    auto compose_mod = [&p](const UPoly& f, const UPoly& t) {
        UPoly acc;
        for (int d = f.degree(); d >= 0; --d) {
            acc = (acc * t) % p;
            acc = acc + UPoly::constant(f.coeff(d));
        }
        return acc % p;
    };

    UPoly t = UPoly::variable();
    const UPoly dq = q.derivative();
    for (int iter = 0; iter < 64; ++iter) {
        const UPoly qt = compose_mod(q, t);
        if (qt.is_zero())
            return eval_at_matrix(t, m);
        const UPoly dqt = compose_mod(dq, t);
        const ExtGcd e = upoly_ext_gcd(dqt, p);
        if (e.g.degree() != 0)
            throw NonInvertibleNewtonStep(
                "correction term not invertible modulo the minimal "
                "polynomial");
        // e.g is the constant 1, so e.u is the inverse of dqt modulo p.
        t = (t - (qt * e.u) % p) % p;
    }
    throw NonInvertibleNewtonStep("splitting iteration failed to converge");
}

} // namespace

std::pair<Derivation, Derivation> jordan(const Derivation& d, int cap) {
    JointSpan js = joint_span(d, cap);
    const Matrix s = semisimple_part(js.action);

    auto image_of = [&](const std::vector<Coeff>& coords) {
        const std::vector<Coeff> v = s.apply(coords);
        Poly2 out;
        for (std::size_t i = 0; i < v.size(); ++i)
            out += js.span.basis()[i].scaled(v[i]);
        return out;
    };

    Derivation ds{image_of(js.x_coords), image_of(js.y_coords)};
    Derivation dn = d - ds;

    if (!bracket(ds, dn).is_zero())
        throw Error("internal: splitting parts do not commute");
    if (!classify_lf(dn, cap).is_lnd)
        throw Error("internal: nilpotent part is not locally nilpotent");
    if (!classify_lf(ds, cap).is_semisimple)
        throw Error("internal: semisimple part is not semisimple");
    return {std::move(ds), std::move(dn)};
}

NormalForm recognize_normal_form(const Derivation& d) {
    NormalForm nf;

    // f(X) d/dY (including f == 0, the zero derivation).
    if (d.px.is_zero() && !d.py.depends_on_y()) {
        nf.tag = NormalForm::Tag::Triangular;
        nf.f = d.py;
        return nf;
    }

    // d/dX + bY d/dY (b may be zero).
    if (d.px == Poly2::constant(1)) {
        const Coeff b = d.py.coeff_of(0, 1);
        if (d.py == Poly2::monomial(0, 1, b) || d.py.is_zero()) {
            nf.tag = NormalForm::Tag::TranslationScale;
            nf.b = b;
            return nf;
        }
        return nf;
    }

    // Homogeneous linear in both components.
    auto linear_part = [](const Poly2& p, Coeff& cx, Coeff& cy) {
        cx = p.coeff_of(1, 0);
        cy = p.coeff_of(0, 1);
        Poly2 rebuilt = Poly2::monomial(1, 0, cx) + Poly2::monomial(0, 1, cy);
        return p == rebuilt;
    };
    Coeff a00, a01, a10, a11;
    if (linear_part(d.px, a00, a01) && linear_part(d.py, a10, a11)) {
        nf.tag = NormalForm::Tag::Linear;
        nf.mat = Matrix(2, 2);
        nf.mat.at(0, 0) = a00;
        nf.mat.at(0, 1) = a01;
        nf.mat.at(1, 0) = a10;
        nf.mat.at(1, 1) = a11;
        return nf;
    }

    // aX d/dX + (a m Y + X^m) d/dY with m >= 2 (m == 1 is linear and was
    // caught above).
    const Coeff a = d.px.coeff_of(1, 0);
    if (!a.is_zero() && d.px == Poly2::monomial(1, 0, a)) {
        const int m = d.py.degree_x();
        if (m >= 2) {
            Poly2 expected = Poly2::monomial(0, 1, a * Coeff(m)) +
                             Poly2::monomial(m, 0, Coeff(1));
            if (d.py == expected) {
                nf.tag = NormalForm::Tag::ResonantScale;
                nf.a = a;
                nf.m = m;
                return nf;
            }
        }
    }

    return nf;
}

} // namespace lfd
