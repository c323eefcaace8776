#pragma once

#include <cstddef>
#include <vector>

namespace horn {

/// Dense row-major matrix. Every matrix in this library is tiny (n <= ~16),
/// so operations are plain loops over contiguous storage.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);

    static Matrix identity(int n);

    double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Matrix transposed() const;
    double trace() const;
    double frobenius_norm() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(double s);
    Matrix operator-() const;

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, double s) { return lhs *= s; }
    friend Matrix operator*(double s, Matrix rhs) { return rhs *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    bool operator==(const Matrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

double max_abs_diff(const Matrix& a, const Matrix& b);

/// Determinant by LU with partial pivoting (works on a copy).
double determinant(Matrix a);

/// Real symmetric matrix; construction makes entries (i,j) and (j,i)
/// bitwise equal.
class SymMatrix {
public:
    explicit SymMatrix(int n);

    static SymMatrix diagonal(const std::vector<double>& d);

    /// Symmetrizes a square matrix: both mirror entries get (m_ij + m_ji)/2.
    static SymMatrix from_matrix(const Matrix& m);

    int size() const { return m_.rows(); }
    double operator()(int i, int j) const { return m_(i, j); }

    /// Writes both (i,j) and (j,i).
    void set(int i, int j, double v);

    const Matrix& matrix() const { return m_; }
    double trace() const { return m_.trace(); }

    bool operator==(const SymMatrix&) const = default;

private:
    Matrix m_;
};

/// Real antisymmetric matrix; diagonal is exactly zero and (j,i) = -(i,j).
class SkewMatrix {
public:
    explicit SkewMatrix(int n);

    /// Antisymmetrizes a square matrix: (m_ij - m_ji)/2 above the diagonal.
    static SkewMatrix from_matrix(const Matrix& m);

    int size() const { return m_.rows(); }
    double operator()(int i, int j) const { return m_(i, j); }

    /// Writes (i,j) = v and (j,i) = -v; rejects nonzero diagonal values.
    void set(int i, int j, double v);

    const Matrix& matrix() const { return m_; }

    bool operator==(const SkewMatrix&) const = default;

private:
    Matrix m_;
};

/// Element of SO(n). Construction validates R^T R = Id (per entry, 1e-12)
/// and det R = +1 (1e-9).
class Rotation {
public:
    static constexpr double kOrthogonalityTol = 1e-12;
    static constexpr double kDeterminantTol = 1e-9;

    static Rotation from_matrix(Matrix m);
    static Rotation identity(int n);

    int size() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }

    /// Inverse of a rotation is its transpose.
    Rotation inverse() const;

    bool operator==(const Rotation&) const = default;

private:
    struct Checked {};
    Rotation(Matrix m, Checked) : m_(std::move(m)) {}

    Matrix m_;
};

}  // namespace horn
