#include "horn/structures.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace horn {

namespace {

constexpr double kStructureTol = 1e-12;

bool within_entrywise(const Matrix& a, const Matrix& b, double tol) {
    return max_abs_diff(a, b) <= tol;
}

}  // namespace

Matrix standard_complex_structure(int p) {
    if (p < 1) throw std::invalid_argument("complex dimension must be positive");
    Matrix j(2 * p, 2 * p);
    for (int i = 0; i < p; ++i) {
        j(i, p + i) = -1.0;
        j(p + i, i) = 1.0;
    }
    return j;
}

HermitianStructure::HermitianStructure(int p, Rotation r) : p_(p), r_(std::move(r)) {
    if (p < 1) throw std::invalid_argument("complex dimension must be positive");
    if (r_.size() != 2 * p)
        throw std::invalid_argument("rotation size must be twice the complex dimension");

    const Matrix j0 = standard_complex_structure(p);
    j_ = r_.matrix().transposed() * j0 * r_.matrix();

    const Matrix identity = Matrix::identity(2 * p);
    if (!within_entrywise(j_ * j_, -identity, kStructureTol))
        throw std::invalid_argument("structure does not square to minus identity");
    if (!within_entrywise(j_.transposed() * j_, identity, kStructureTol))
        throw std::invalid_argument("structure is not orthogonal");
}

HermitianStructure HermitianStructure::standard(int p) {
    return HermitianStructure(p, Rotation::identity(2 * p));
}

HermitianStructure adapted_structure(const Rotation& rho) {
    const int p = rho.size();
    Matrix r(2 * p, 2 * p);
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) r(i, j) = rho.matrix()(i, j);
        r(p + i, p + i) = 1.0;
    }
    return HermitianStructure(p, Rotation::from_matrix(r));
}

}  // namespace horn
