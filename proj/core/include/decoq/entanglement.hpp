#pragma once

#include "decoq/states.hpp"
#include "decoq/tensor.hpp"

namespace decoq {

struct ConcurrenceResult {
  double value;              // concurrence in [0, 1]
  Eigen::Vector4d lambdas;   // sqrt-eigenvalues of rho rho~, descending
};

// (sigma^2 (x) sigma^2) rho^* (sigma^2 (x) sigma^2)
CMat4 spin_flip(const CMat4& rho);

// Wootters concurrence: lambda_i are the eigenvalue square roots of
// sqrt(rho) rho~ sqrt(rho); value = max(0, l1 - l2 - l3 - l4).
// Eigenvalues of the product in [-1e-10, 0) are clipped to zero.
ConcurrenceResult concurrence(const DensityMatrix& rho);

// Transpose on the antifermion qubit only.
CMat4 partial_transpose_b(const CMat4& rho);

// Negativity: sum of |negative eigenvalues| of the partial transpose.
// Equals 1/2 for a Bell state.
double negativity(const DensityMatrix& rho);

}  // namespace decoq
