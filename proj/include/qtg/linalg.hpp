#ifndef QTG_LINALG_HPP
#define QTG_LINALG_HPP

#include "qtg/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qtg {

/// Dense integer matrix, row-major. Sizes here stay tiny (ambient dimension
/// of a polytope), so every operation below favors exactness over asymptotics.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows);
    static IntMatrix from_columns(const std::vector<IntVector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;
    IntMatrix transposed() const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws NonSquare for rectangular input.
Int det(const IntMatrix& m);

/// Determinant of a square matrix given by rational columns. Used for
/// orientation tests on geometric edge directions.
Rat det_rational(const std::vector<QVector>& columns);

/// Inverse of a matrix with determinant +-1; the result is again integral.
/// Computed through the adjugate, so it shares no code path with
/// solve_rational. Throws NotUnimodular when |det| != 1.
IntMatrix unimodular_inverse(const IntMatrix& m);

/// Exact solution x of a*x = b by Gaussian elimination over the rationals.
/// Throws Singular when det(a) = 0.
QVector solve_rational(const IntMatrix& a, const QVector& b);

/// For an (n-1) x n matrix, the vector of signed maximal minors: an integer
/// kernel vector, zero iff the rows have rank < n-1.
IntVector kernel_direction(const IntMatrix& m);

} // namespace qtg

#endif
