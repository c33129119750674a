#include "lfd/linalg.hpp"

#include <stdexcept>

#include "lfd/errors.hpp"

namespace lfd {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = Coeff(1);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw std::logic_error("Matrix::operator*: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero())
                continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

Matrix Matrix::scaled(const Coeff& c) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = a_[i] * c;
    return r;
}

std::vector<Coeff> Matrix::apply(const std::vector<Coeff>& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::logic_error("Matrix::apply: shape mismatch");
    std::vector<Coeff> r(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r[static_cast<std::size_t>(i)] +=
                at(i, j) * v[static_cast<std::size_t>(j)];
    return r;
}

Coeff Matrix::trace() const {
    Coeff t;
    for (int i = 0; i < rows_; ++i)
        t += at(i, i);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero())
            return false;
    return true;
}

Coeff Matrix::det() const {
    if (rows_ != cols_)
        throw std::logic_error("Matrix::det: not square");
    Matrix m = *this;
    Coeff d(1);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            return Coeff();
        if (pivot != col) {
            for (int c = 0; c < cols_; ++c)
                std::swap(m.at(pivot, c), m.at(col, c));
            d = -d;
        }
        d *= m.at(col, col);
        const Coeff inv = m.at(col, col).inverse();
        for (int r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero())
                continue;
            const Coeff f = m.at(r, col) * inv;
            for (int c = col; c < cols_; ++c)
                m.at(r, c) -= f * m.at(col, c);
        }
    }
    return d;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_)
        throw std::logic_error("Matrix::inverse: not square");
    Matrix m = *this;
    Matrix inv = identity(rows_);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            throw SingularMatrix("matrix is singular");
        if (pivot != col)
            for (int c = 0; c < cols_; ++c) {
                std::swap(m.at(pivot, c), m.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        const Coeff f = m.at(col, col).inverse();
        for (int c = 0; c < cols_; ++c) {
            m.at(col, c) *= f;
            inv.at(col, c) *= f;
        }
        for (int r = 0; r < rows_; ++r) {
            if (r == col || m.at(r, col).is_zero())
                continue;
            const Coeff g = m.at(r, col);
            for (int c = 0; c < cols_; ++c) {
                m.at(r, c) -= g * m.at(col, c);
                inv.at(r, c) -= g * inv.at(col, c);
            }
        }
    }
    return inv;
}

Matrix eval_at_matrix(const UPoly& p, const Matrix& m) {
    const int n = m.rows();
    Matrix acc(n, n);
    for (int d = p.degree(); d >= 0; --d) {
        acc = acc * m;
        const Coeff& c = p.coeff(d);
        if (!c.is_zero())
            for (int i = 0; i < n; ++i)
                acc.at(i, i) += c;
    }
    return acc;
}

UPoly min_poly_of_vector(const Matrix& m, int k) {
    const int n = m.rows();
    // Echelon over coordinate vectors, remembering coordinates in the
    // iterate basis v, m v, m^2 v, ...
    struct Row {
        std::vector<Coeff> vec;
        int pivot;
        std::vector<Coeff> coords;
    };
    std::vector<Row> rows;
    std::vector<Coeff> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(k)] = Coeff(1);

    for (int step = 0;; ++step) {
        std::vector<Coeff> r = v;
        std::vector<Coeff> used(static_cast<std::size_t>(step));
        for (const Row& row : rows) {
            const Coeff& c = r[static_cast<std::size_t>(row.pivot)];
            if (c.is_zero())
                continue;
            const Coeff f = c;
            for (std::size_t i = 0; i < r.size(); ++i)
                r[i] -= f * row.vec[i];
            for (std::size_t i = 0; i < row.coords.size(); ++i)
                used[i] += f * row.coords[i];
        }
        int pivot = -1;
        for (int i = 0; i < n; ++i)
            if (!r[static_cast<std::size_t>(i)].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) {
            // m^step v == sum used[i] m^i v: the relation gives the
            // minimal polynomial.
            std::vector<Coeff> poly(static_cast<std::size_t>(step) + 1);
            for (int i = 0; i < step; ++i)
                poly[static_cast<std::size_t>(i)] =
                    -used[static_cast<std::size_t>(i)];
            poly[static_cast<std::size_t>(step)] = Coeff(1);
            return UPoly(std::move(poly));
        }
        const Coeff inv = r[static_cast<std::size_t>(pivot)].inverse();
        Row row;
        row.pivot = pivot;
        row.vec.resize(r.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            row.vec[i] = r[i] * inv;
        row.coords.resize(static_cast<std::size_t>(step) + 1);
        for (std::size_t i = 0; i < used.size(); ++i)
            row.coords[i] = -used[i] * inv;
        row.coords[static_cast<std::size_t>(step)] = inv;
        rows.push_back(std::move(row));
        v = m.apply(v);
    }
}

std::pair<Poly2, std::vector<Coeff>> SpanBuilder::reduce(
    const Poly2& v) const {
    Poly2 r = v;
    std::vector<Coeff> used(basis_.size());
    for (const Row& row : rows_) {
        if (r.is_zero())
            break;
        const Exp2& lead = row.reduced.leading().first;
        const Coeff c = r.coeff_of(lead.i, lead.j);
        if (c.is_zero())
            continue;
        r -= row.reduced.scaled(c);
        for (std::size_t i = 0; i < row.coords.size(); ++i)
            used[i] += c * row.coords[i];
    }
    return {std::move(r), std::move(used)};
}

std::optional<std::vector<Coeff>> SpanBuilder::coords(const Poly2& v) const {
    auto [r, used] = reduce(v);
    if (!r.is_zero())
        return std::nullopt;
    return used;
}

std::optional<std::vector<Coeff>> SpanBuilder::insert(const Poly2& v) {
    auto [r, used] = reduce(v);
    if (r.is_zero())
        return used;

    const Coeff inv = r.leading().second.inverse();
    Row row;
    row.reduced = r.scaled(inv);
    row.coords.resize(basis_.size() + 1);
    for (std::size_t i = 0; i < used.size(); ++i)
        row.coords[i] = -used[i] * inv;
    row.coords[basis_.size()] = inv;
    basis_.push_back(v);

    const Exp2Descending before;
    auto it = rows_.begin();
    while (it != rows_.end() &&
           before(it->reduced.leading().first, row.reduced.leading().first))
        ++it;
    rows_.insert(it, std::move(row));
    // Older rows keep shorter coordinate vectors; pad lazily in reduce by
    // sizing `used` to the full basis.
    return std::nullopt;
}

} // namespace lfd
