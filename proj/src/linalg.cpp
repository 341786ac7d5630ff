#include "qtg/linalg.hpp"

#include "qtg/errors.hpp"

#include <stdexcept>
#include <utility>

namespace qtg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {
    if (rows == 0 || cols == 0)
        throw std::logic_error("IntMatrix: dimensions must be positive");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : IntMatrix(rows.size(), rows.begin()->size()) {
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::logic_error("IntMatrix: ragged initializer");
        std::size_t j = 0;
        for (long long x : r) at(i, j++) = x;
        ++i;
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
    if (rows.empty())
        throw std::logic_error("IntMatrix: no rows");
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw std::logic_error("IntMatrix: ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns) {
    if (columns.empty())
        throw std::logic_error("IntMatrix: no columns");
    IntMatrix m(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != m.rows_)
            throw std::logic_error("IntMatrix: ragged columns");
        for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = columns[j][i];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    IntVector out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::logic_error("IntMatrix: size mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += at(i, k) * rhs.at(k, j);
        }
    return out;
}

Int det(const IntMatrix& m) {
    if (!m.square())
        throw NonSquareError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a.at(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a.at(k, j), a.at(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev; // Bareiss: division is exact
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

Rat det_rational(const std::vector<QVector>& columns) {
    const std::size_t n = columns.size();
    for (const auto& c : columns)
        if (c.size() != n)
            throw NonSquareError("determinant of a non-square matrix");
    std::vector<QVector> a(n, QVector(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) a[i][j] = columns[j][i];

    Rat result(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            result = -result;
        }
        result *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat factor = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= factor * a[k][j];
        }
    }
    return result;
}

namespace {

Int minor_det(const IntMatrix& m, std::size_t drop_row, std::size_t drop_col) {
    const std::size_t n = m.rows();
    if (n == 1) return 1;
    IntMatrix sub(n - 1, n - 1);
    std::size_t si = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == drop_row) continue;
        std::size_t sj = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == drop_col) continue;
            sub.at(si, sj) = m.at(i, j);
            ++sj;
        }
        ++si;
    }
    return det(sub);
}

} // namespace

IntMatrix unimodular_inverse(const IntMatrix& m) {
    if (!m.square())
        throw NonSquareError("inverse of a non-square matrix");
    const Int d = det(m);
    if (d != 1 && d != -1)
        throw NotUnimodularError("matrix is not unimodular (det = " + d.str() + ")");
    const std::size_t n = m.rows();
    // adjugate divided by det; det = +-1 keeps everything integral
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int cof = minor_det(m, j, i);
            if ((i + j) % 2 == 1) cof = -cof;
            inv.at(i, j) = d == 1 ? cof : -cof;
        }
    return inv;
}

QVector solve_rational(const IntMatrix& a, const QVector& b) {
    if (!a.square())
        throw NonSquareError("solve with a non-square matrix");
    const std::size_t n = a.rows();
    if (b.size() != n)
        throw std::logic_error("solve_rational: right-hand side length mismatch");

    std::vector<QVector> aug(n, QVector(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rat(a.at(i, j));
        aug[i][n] = b[i];
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && aug[pivot][k] == 0) ++pivot;
        if (pivot == n)
            throw SingularError("singular system");
        if (pivot != k) std::swap(aug[pivot], aug[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (aug[i][k] == 0) continue;
            Rat factor = aug[i][k] / aug[k][k];
            for (std::size_t j = k; j <= n; ++j) aug[i][j] -= factor * aug[k][j];
        }
    }
    QVector x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rat s = aug[k][n];
        for (std::size_t j = k + 1; j < n; ++j) s -= aug[k][j] * x[j];
        x[k] = s / aug[k][k];
    }
    return x;
}

IntVector kernel_direction(const IntMatrix& m) {
    const std::size_t n = m.cols();
    if (m.rows() + 1 != n)
        throw std::logic_error("kernel_direction expects an (n-1) x n matrix");
    IntVector d(n);
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix sub(n - 1, n - 1);
        for (std::size_t i = 0; i < n - 1; ++i) {
            std::size_t sj = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(i, sj++) = m.at(i, c);
            }
        }
        Int minor = det(sub);
        d[j] = (j % 2 == 0) ? minor : -minor;
    }
    return d;
}

} // namespace qtg
