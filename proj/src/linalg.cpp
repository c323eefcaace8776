#include "horn/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace horn {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be non-negative");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0);
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

double Matrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace requires a square matrix");
    double s = 0.0;
    for (int i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix size mismatch in addition");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix size mismatch in subtraction");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (double& v : m.data_) v = -v;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch in product");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix size mismatch in comparison");
    double worst = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

double determinant(Matrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant requires a square matrix");
    const int n = a.rows();
    double det = 1.0;
    for (int c = 0; c < n; ++c) {
        int pivot = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a(r, c)) > std::abs(a(pivot, c))) pivot = r;
        if (a(pivot, c) == 0.0) return 0.0;
        if (pivot != c) {
            for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (int r = c + 1; r < n; ++r) {
            const double f = a(r, c) / a(c, c);
            if (f == 0.0) continue;
            for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
        }
    }
    return det;
}

SymMatrix::SymMatrix(int n) : m_(n, n) {
    if (n < 1) throw std::invalid_argument("symmetric matrix requires n >= 1");
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
    SymMatrix s(static_cast<int>(d.size()));
    for (int i = 0; i < s.size(); ++i) s.m_(i, i) = d[static_cast<std::size_t>(i)];
    return s;
}

SymMatrix SymMatrix::from_matrix(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("symmetrization requires a square matrix");
    SymMatrix s(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        s.m_(i, i) = m(i, i);
        for (int j = i + 1; j < m.cols(); ++j) {
            const double v = 0.5 * (m(i, j) + m(j, i));
            s.m_(i, j) = v;
            s.m_(j, i) = v;
        }
    }
    return s;
}

void SymMatrix::set(int i, int j, double v) {
    m_(i, j) = v;
    m_(j, i) = v;
}

SkewMatrix::SkewMatrix(int n) : m_(n, n) {
    if (n < 1) throw std::invalid_argument("antisymmetric matrix requires n >= 1");
}

SkewMatrix SkewMatrix::from_matrix(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("antisymmetrization requires a square matrix");
    SkewMatrix s(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = i + 1; j < m.cols(); ++j) {
            const double v = 0.5 * (m(i, j) - m(j, i));
            s.m_(i, j) = v;
            s.m_(j, i) = -v;
        }
    }
    return s;
}

void SkewMatrix::set(int i, int j, double v) {
    if (i == j) {
        if (v != 0.0) throw std::invalid_argument("antisymmetric diagonal must stay zero");
        return;
    }
    m_(i, j) = v;
    m_(j, i) = -v;
}

Rotation Rotation::from_matrix(Matrix m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw std::invalid_argument("rotation requires a square matrix of size >= 1");
    const int n = m.rows();
    const Matrix gram = m.transposed() * m;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double target = (i == j) ? 1.0 : 0.0;
            if (!(std::abs(gram(i, j) - target) <= kOrthogonalityTol))
                throw std::invalid_argument("matrix is not orthogonal within tolerance");
        }
    }
    if (!(std::abs(determinant(m) - 1.0) <= kDeterminantTol))
        throw std::invalid_argument("orthogonal matrix does not have determinant +1");
    return Rotation(std::move(m), Checked{});
}

Rotation Rotation::identity(int n) {
    if (n < 1) throw std::invalid_argument("rotation requires n >= 1");
    return Rotation(Matrix::identity(n), Checked{});
}

Rotation Rotation::inverse() const { return Rotation(m_.transposed(), Checked{}); }

}  // namespace horn
