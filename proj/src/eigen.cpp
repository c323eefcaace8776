#include "horn/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace horn {

namespace {

double off_diagonal_norm(const Matrix& a) {
    double sum = 0.0;
    const int n = a.rows();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            sum += 2.0 * a(i, j) * a(i, j);
        }
    }
    return std::sqrt(sum);
}

}  // namespace

EigenDecomposition eigen_sym(const SymMatrix& s) {
    const int n = s.size();
    Matrix a = s.matrix();
    Matrix v = Matrix::identity(n);

    // Convergence is measured against the scale of the input, fixed once up
    // front so that a matrix of tiny norm is not rotated forever.
    const double threshold = 1e-14 * a.frobenius_norm();
    constexpr int kMaxSweeps = 100;

    int sweep = 0;
    while (off_diagonal_norm(a) > threshold) {
        if (++sweep > kMaxSweeps) {
            throw std::runtime_error("jacobi eigensolver failed to converge");
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) {
                    continue;
                }
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e10) {
                    t = 1.0 / (2.0 * theta);
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) {
                        t = -t;
                    }
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * c;
                const double tau = sn / (1.0 + c);

                const double app = a(p, p);
                const double aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) {
                        continue;
                    }
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = akp - sn * (akq + tau * akp);
                    a(p, k) = a(k, p);
                    a(k, q) = akq + sn * (akp - tau * akq);
                    a(q, k) = a(k, q);
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = vkp - sn * (vkq + tau * vkp);
                    v(k, q) = vkq + sn * (vkp - tau * vkq);
                }
            }
        }
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int lhs, int rhs) { return a(lhs, lhs) > a(rhs, rhs); });

    std::vector<double> values(static_cast<size_t>(n));
    Matrix vectors(n, n);
    for (int k = 0; k < n; ++k) {
        const int src = order[static_cast<size_t>(k)];
        values[static_cast<size_t>(k)] = a(src, src);
        for (int row = 0; row < n; ++row) {
            vectors(row, k) = v(row, src);
        }
    }
    return EigenDecomposition{Spectrum(std::move(values)), std::move(vectors)};
}

Spectrum eigenvalues_sym(const SymMatrix& s) {
    return eigen_sym(s).values;
}

}  // namespace horn
