#pragma once

#include "horn/linalg.hpp"
#include "horn/spectrum.hpp"

namespace horn {

struct EigenDecomposition {
    Spectrum values;  // descending
    Matrix vectors;   // column k is a unit eigenvector of values[k]; S = V diag V^T
};

/// Full symmetric eigendecomposition by cyclic Jacobi rotations.
EigenDecomposition eigen_sym(const SymMatrix& s);

/// Eigenvalues only, in descending order.
Spectrum eigenvalues_sym(const SymMatrix& s);

}  // namespace horn
