#pragma once

// Small dense rational matrices (inputs for the equivariance transform).

#include <vector>

#include "hermop/rational.hpp"

namespace hermop {

using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix rat_identity(int n);
RatMatrix rat_transpose(const RatMatrix& a);
RatMatrix rat_mul(const RatMatrix& a, const RatMatrix& b);

// Exact inverse by Gauss-Jordan elimination; throws domain_error when the
// matrix is singular or not square.
RatMatrix rat_inverse(RatMatrix a);

bool rat_is_square(const RatMatrix& a, int n);

} // namespace hermop
