#pragma once

// Exact dense linear algebra as free functions over Eigen expressions.
//
// Everything here is templated on the scalar of the argument and assumes
// exact arithmetic (Rational, or Integer where division is exact). No
// tolerance appears anywhere: a pivot is either zero or it is not.

#include "arrcensus/errors.hpp"
#include "arrcensus/rational.hpp"

#include <utility>
#include <vector>

namespace arrcensus {

namespace detail {

template <typename Scalar>
bool is_zero(const Scalar& x) {
    return x == Scalar(0);
}

// Fraction-free forward elimination in place. Returns the pivot columns in
// order; `swaps` counts row exchanges.
template <typename Scalar>
std::vector<Index> bareiss_eliminate(Matrix<Scalar>& a, int& swaps) {
    const Index rows = a.rows();
    const Index cols = a.cols();
    std::vector<Index> pivots;
    Scalar previous(1);
    Index r = 0;
    swaps = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index p = r;
        while (p < rows && is_zero(a(p, c))) ++p;
        if (p == rows) continue;
        if (p != r) {
            a.row(p).swap(a.row(r));
            ++swaps;
        }
        const Scalar pivot = a(r, c);
        for (Index i = r + 1; i < rows; ++i) {
            const Scalar factor = a(i, c);
            for (Index j = c + 1; j < cols; ++j) {
                a(i, j) = (a(i, j) * pivot - factor * a(r, j)) / previous;
            }
            a(i, c) = Scalar(0);
        }
        previous = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

/// Exact rank by Bareiss elimination.
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    Matrix<Scalar> work = m;
    int swaps = 0;
    return static_cast<Index>(detail::bareiss_eliminate(work, swaps).size());
}

/// Exact determinant of a square matrix; throws ShapeError otherwise.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    if (m.rows() != m.cols()) {
        throw ShapeError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
    }
    const Index n = m.rows();
    if (n == 0) return Scalar(1);
    Matrix<Scalar> work = m;
    int swaps = 0;
    const auto pivots = detail::bareiss_eliminate(work, swaps);
    if (static_cast<Index>(pivots.size()) < n) return Scalar(0);
    Scalar det = work(n - 1, n - 1);
    return (swaps % 2 == 0) ? det : Scalar(-det);
}

template <typename Scalar>
struct EchelonForm {
    Matrix<Scalar> reduced;      // reduced row echelon form, zero rows trimmed
    std::vector<Index> pivots;   // pivot column of each row of `reduced`
};

/// Reduced row echelon form (Gauss-Jordan, pivots normalised to one). The
/// result depends only on the row space of the input, so it doubles as a
/// canonical key for that space.
template <typename Derived>
EchelonForm<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    Matrix<Scalar> a = m;
    const Index rows = a.rows();
    const Index cols = a.cols();
    std::vector<Index> pivots;
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index p = r;
        while (p < rows && detail::is_zero(a(p, c))) ++p;
        if (p == rows) continue;
        if (p != r) a.row(p).swap(a.row(r));
        const Scalar inv = Scalar(1) / a(r, c);
        for (Index j = c; j < cols; ++j) a(r, j) *= inv;
        for (Index i = 0; i < rows; ++i) {
            if (i == r || detail::is_zero(a(i, c))) continue;
            const Scalar factor = a(i, c);
            for (Index j = c; j < cols; ++j) a(i, j) -= factor * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {a.topRows(r), std::move(pivots)};
}

/// Columns form a basis of {x : m x = 0}; one column per free variable of
/// the reduced echelon form, in increasing column order.
template <typename Derived>
Matrix<typename Derived::Scalar> nullspace_basis(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    const auto echelon = reduced_row_echelon(m);
    const Index cols = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Index p : echelon.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<Index> free_cols;
    for (Index c = 0; c < cols; ++c) {
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    }
    Matrix<Scalar> basis = Matrix<Scalar>::Zero(cols, static_cast<Index>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const Index f = free_cols[k];
        const auto col = static_cast<Index>(k);
        basis(f, col) = Scalar(1);
        for (std::size_t r = 0; r < echelon.pivots.size(); ++r) {
            basis(echelon.pivots[r], col) = -echelon.reduced(static_cast<Index>(r), f);
        }
    }
    return basis;
}

}  // namespace arrcensus
