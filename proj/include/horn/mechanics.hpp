#pragma once

#include <vector>

#include "horn/linalg.hpp"
#include "horn/spectrum.hpp"
#include "horn/structures.hpp"

namespace horn {

/// Point masses in R^dim with the center of mass at the origin. Velocities
/// of a configuration are represented as a second MassConfiguration sharing
/// the same masses.
class MassConfiguration {
public:
    /// positions is dim x N (one column per body); masses must be positive
    /// and satisfy |sum_k m_k x_k| <= 1e-10 componentwise.
    MassConfiguration(Matrix positions, std::vector<double> masses);

    int dim() const { return positions_.rows(); }
    int count() const { return positions_.cols(); }
    const Matrix& positions() const { return positions_; }
    const std::vector<double>& masses() const { return masses_; }

private:
    Matrix positions_;
    std::vector<double> masses_;
};

/// s_ij = sum_k m_k x_ik x_jk; positive semidefinite, trace = moment of
/// inertia.
SymMatrix inertia_matrix(const MassConfiguration& cfg);

/// c_ij = sum_k m_k (-x_ik v_jk + x_jk v_ik).
SkewMatrix angular_momentum(const MassConfiguration& pos, const MassConfiguration& vel);

/// Angular momentum of the relative equilibrium with unit angular velocity:
/// C = S0 J + J S0.
SkewMatrix relative_equilibrium_momentum(const SymMatrix& s0, const HermitianStructure& j);

/// J^{-1} S0 J + S0 (J^{-1} = J^T for an orthogonal complex structure).
SymMatrix frequency_matrix(const HermitianStructure& j, const SymMatrix& s0);

/// Equivalent conjugated form: S - J0 S J0 with S = R S0 R^{-1}; same
/// spectrum as frequency_matrix(J, S0) for J = R^{-1} J0 R.
SymMatrix frequency_matrix_conjugated(const Rotation& r, const SymMatrix& s0);

/// The p paired eigenvalues of J^{-1} S0 J + S0. The 2p-spectrum must pair
/// up within 1e-8 * max(1, ||S0||_F); each returned value is the average of
/// its pair.
Spectrum frequency_map(const HermitianStructure& j, const SymMatrix& s0);

}  // namespace horn
