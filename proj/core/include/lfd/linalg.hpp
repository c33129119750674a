#pragma once

#include <optional>
#include <vector>

#include "lfd/poly2.hpp"
#include "lfd/upoly.hpp"

namespace lfd {

/// Dense matrix over the scalar field (row-major).
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Coeff& at(int r, int c) {
        return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
    }
    const Coeff& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
    }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Coeff& c) const;
    std::vector<Coeff> apply(const std::vector<Coeff>& v) const;

    Coeff trace() const;
    /// Determinant (Gaussian elimination with exact arithmetic).
    Coeff det() const;
    /// Inverse; throws SingularMatrix when not invertible.
    Matrix inverse() const;

    bool is_zero() const;
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Coeff> a_;
};

/// Horner evaluation of p at a square matrix.
Matrix eval_at_matrix(const UPoly& p, const Matrix& m);

/// Minimal polynomial of the vector e_k under the linear map given by m
/// (the monic generator of the ideal of polynomials p with p(m) e_k == 0);
/// computed as the minimal polynomial of the cyclic subspace generated by
/// e_k.  For a companion matrix and k == 0 this is the full minimal
/// polynomial.
UPoly min_poly_of_vector(const Matrix& m, int k);

/// Incremental row-echelon basis of a subspace spanned by plane
/// polynomials, with coordinate bookkeeping: every inserted vector is kept
/// as an original basis member, and coordinates of later vectors are
/// expressed over those members.
class SpanBuilder {
public:
    /// If v already lies in the span, returns its coordinates over the
    /// inserted basis; otherwise inserts v as a new basis member and
    /// returns nullopt.
    std::optional<std::vector<Coeff>> insert(const Poly2& v);

    /// Coordinates of v over the inserted basis, or nullopt if v is
    /// outside the span.  Does not modify the builder.
    std::optional<std::vector<Coeff>> coords(const Poly2& v) const;

    bool contains(const Poly2& v) const { return coords(v).has_value(); }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Poly2>& basis() const { return basis_; }

private:
    struct Row {
        Poly2 reduced;              // echelon representative, monic leading
        std::vector<Coeff> coords;  // reduced == sum coords[k] * basis[k]
    };

    // Rows are kept sorted by decreasing leading term so one reduction
    // pass suffices.
    std::vector<Row> rows_;
    std::vector<Poly2> basis_;

    /// Reduces v against the rows; returns {remainder, coords of the
    /// reduced-away part over basis_}.
    std::pair<Poly2, std::vector<Coeff>> reduce(const Poly2& v) const;
};

} // namespace lfd
