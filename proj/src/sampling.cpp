#include "horn/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace horn {

namespace {

// Right-multiplies m by the Givens rotation in plane (a, b), a < b:
// exp(t xi) with xi_{ba} = 1, xi_{ab} = -1.
void apply_givens_right(Matrix& m, int a, int b, double t) {
    const double c = std::cos(t);
    const double s = std::sin(t);
    const int n = m.rows();
    for (int row = 0; row < n; ++row) {
        const double va = m(row, a);
        const double vb = m(row, b);
        m(row, a) = c * va + s * vb;
        m(row, b) = -s * va + c * vb;
    }
}

}  // namespace

Rotation random_rotation_product(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("rotation size must be positive");

    const int m = n * (n - 1) / 2;
    std::vector<double> angles(static_cast<std::size_t>(m));
    for (double& t : angles) t = rng.uniform(0.0, 2.0 * std::numbers::pi);

    std::vector<std::pair<int, int>> planes;
    planes.reserve(static_cast<std::size_t>(m));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) planes.emplace_back(a, b);
    rng.shuffle(planes);

    Matrix r = Matrix::identity(n);
    for (int j = 0; j < m; ++j) {
        const auto [a, b] = planes[static_cast<std::size_t>(j)];
        apply_givens_right(r, a, b, angles[static_cast<std::size_t>(j)]);
    }
    return Rotation::from_matrix(std::move(r));
}

Rotation haar_rotation(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("rotation size must be positive");

    Matrix q(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q(i, j) = rng.normal();

    // Modified Gram-Schmidt, two passes per column for orthogonality at
    // machine precision.
    for (int col = 0; col < n; ++col) {
        for (int pass = 0; pass < 2; ++pass) {
            for (int prev = 0; prev < col; ++prev) {
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += q(i, prev) * q(i, col);
                for (int i = 0; i < n; ++i) q(i, col) -= dot * q(i, prev);
            }
        }
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += q(i, col) * q(i, col);
        norm = std::sqrt(norm);
        if (norm < 1e-12) throw std::runtime_error("degenerate Gaussian sample");
        for (int i = 0; i < n; ++i) q(i, col) /= norm;
    }

    if (determinant(q) < 0.0)
        for (int i = 0; i < n; ++i) q(i, n - 1) = -q(i, n - 1);
    return Rotation::from_matrix(std::move(q));
}

Rotation sample_rotation(int n, Rng& rng, SamplerKind kind) {
    return kind == SamplerKind::Haar ? haar_rotation(n, rng) : random_rotation_product(n, rng);
}

HermitianStructure random_hermitian_structure(int p, Rng& rng, SamplerKind kind) {
    return HermitianStructure(p, sample_rotation(2 * p, rng, kind));
}

}  // namespace horn
