#pragma once

#include "horn/linalg.hpp"

namespace horn {

/// The 2p x 2p block matrix [[0, -Id],[Id, 0]].
Matrix standard_complex_structure(int p);

/// Orthogonal complex structure J = R^{-1} J0 R on R^{2p}: J^2 = -Id and
/// J^T J = Id. Identified with a point of U(p)\SO(2p) through R.
class HermitianStructure {
public:
    /// Requires r of size 2p; validates the J invariants (per entry, 1e-12).
    HermitianStructure(int p, Rotation r);

    static HermitianStructure standard(int p);

    int p() const { return p_; }
    int dim() const { return 2 * p_; }
    const Rotation& rotation() const { return r_; }
    const Matrix& matrix() const { return j_; }

private:
    int p_;
    Rotation r_;
    Matrix j_;
};

/// Structure sending the span of the first p basis vectors onto its
/// complement: matrix [[0, -rho^{-1}],[rho, 0]], realized as R = diag(rho, Id).
HermitianStructure adapted_structure(const Rotation& rho);

}  // namespace horn
