#pragma once

#include "horn/linalg.hpp"
#include "horn/rng.hpp"
#include "horn/structures.hpp"

namespace horn {

enum class SamplerKind {
    PaperProduct,  // shuffled product of Givens rotations with uniform angles
    Haar,          // orthogonalized Gaussian matrix, uniform on SO(n)
};

/// Product of the m = n(n-1)/2 canonical Givens rotations, each with a
/// uniform angle in [0, 2pi], taken in a uniformly shuffled order. This is
/// the sampler used for all figure reproduction; it is NOT Haar measure.
/// n = 1 yields the identity (empty product).
Rotation random_rotation_product(int n, Rng& rng);

/// Haar-uniform element of SO(n): Gram-Schmidt of a Gaussian matrix with the
/// orientation fixed by negating the last column when det < 0.
Rotation haar_rotation(int n, Rng& rng);

Rotation sample_rotation(int n, Rng& rng, SamplerKind kind);

/// J = R^{-1} J0 R for a random R in SO(2p).
HermitianStructure random_hermitian_structure(int p, Rng& rng,
                                              SamplerKind kind = SamplerKind::PaperProduct);

}  // namespace horn
