#include "horn/mechanics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "horn/eigen.hpp"

namespace horn {

MassConfiguration::MassConfiguration(Matrix positions, std::vector<double> masses)
    : positions_(std::move(positions)), masses_(std::move(masses)) {
    if (positions_.rows() < 1 || positions_.cols() < 1)
        throw std::invalid_argument("configuration needs at least one body in at least one dimension");
    if (static_cast<int>(masses_.size()) != positions_.cols())
        throw std::invalid_argument("one mass per body required");
    for (double m : masses_)
        if (!(m > 0.0)) throw std::invalid_argument("masses must be positive");
    for (int i = 0; i < positions_.rows(); ++i) {
        double center = 0.0;
        for (int k = 0; k < positions_.cols(); ++k)
            center += masses_[static_cast<std::size_t>(k)] * positions_(i, k);
        if (std::abs(center) > 1e-10)
            throw std::invalid_argument("center of mass must be at the origin");
    }
}

SymMatrix inertia_matrix(const MassConfiguration& cfg) {
    const int dim = cfg.dim();
    const int n = cfg.count();
    const Matrix& x = cfg.positions();
    SymMatrix s(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            double sum = 0.0;
            for (int k = 0; k < n; ++k)
                sum += cfg.masses()[static_cast<std::size_t>(k)] * x(i, k) * x(j, k);
            s.set(i, j, sum);
        }
    }
    return s;
}

SkewMatrix angular_momentum(const MassConfiguration& pos, const MassConfiguration& vel) {
    if (pos.dim() != vel.dim() || pos.count() != vel.count() || pos.masses() != vel.masses())
        throw std::invalid_argument("positions and velocities must share dimensions and masses");
    const int dim = pos.dim();
    const Matrix& x = pos.positions();
    const Matrix& y = vel.positions();
    SkewMatrix c(dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = i + 1; j < dim; ++j) {
            double sum = 0.0;
            for (int k = 0; k < pos.count(); ++k)
                sum += pos.masses()[static_cast<std::size_t>(k)] * (-x(i, k) * y(j, k) + x(j, k) * y(i, k));
            c.set(i, j, sum);
        }
    }
    return c;
}

SkewMatrix relative_equilibrium_momentum(const SymMatrix& s0, const HermitianStructure& j) {
    if (s0.size() != j.dim())
        throw std::invalid_argument("inertia matrix side must match the structure dimension");
    return SkewMatrix::from_matrix(s0.matrix() * j.matrix() + j.matrix() * s0.matrix());
}

SymMatrix frequency_matrix(const HermitianStructure& j, const SymMatrix& s0) {
    if (s0.size() != j.dim())
        throw std::invalid_argument("inertia matrix side must match the structure dimension");
    const Matrix& jm = j.matrix();
    return SymMatrix::from_matrix(jm.transposed() * s0.matrix() * jm + s0.matrix());
}

SymMatrix frequency_matrix_conjugated(const Rotation& r, const SymMatrix& s0) {
    if (s0.size() != r.size())
        throw std::invalid_argument("inertia matrix side must match the rotation size");
    if (r.size() % 2 != 0) throw std::invalid_argument("rotation size must be even");
    const Matrix j0 = standard_complex_structure(r.size() / 2);
    const Matrix s = r.matrix() * s0.matrix() * r.matrix().transposed();
    return SymMatrix::from_matrix(s - j0 * s * j0);
}

Spectrum frequency_map(const HermitianStructure& j, const SymMatrix& s0) {
    const Spectrum gamma_hat = eigenvalues_sym(frequency_matrix(j, s0));
    const double tol = 1e-8 * std::max(1.0, s0.matrix().frobenius_norm());
    const int p = j.p();
    std::vector<double> nu(static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k) {
        const double hi = gamma_hat[static_cast<std::size_t>(2 * k)];
        const double lo = gamma_hat[static_cast<std::size_t>(2 * k + 1)];
        if (hi - lo > tol)
            throw std::runtime_error("frequency spectrum does not pair up; broken structure invariant");
        nu[static_cast<std::size_t>(k)] = 0.5 * (hi + lo);
    }
    return Spectrum(std::move(nu));
}

}  // namespace horn
