#include "decoq/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "decoq/errors.hpp"

namespace decoq {

CMat4 spin_flip(const CMat4& rho) {
  const CMat4 yy = kron(pauli(2), pauli(2));
  return yy * rho.conjugate() * yy;
}

ConcurrenceResult concurrence(const DensityMatrix& rho) {
  const CMat4& r = rho.matrix();
  const CMat4 sr = sqrt_psd(r);
  // The eigen-roots of the Hermitian similarity M = sqrt(rho) rho~ sqrt(rho)
  // are the singular values of B with B B+ = M.  Taking them from the SVD
  // avoids squaring: roots near zero keep absolute (not sqrt) accuracy.
  const CMat4 yy = kron(pauli(2), pauli(2));
  const CMat4 b = sr * yy * sr.conjugate();
  Eigen::JacobiSVD<CMat4> svd(b);
  ConcurrenceResult out;
  out.lambdas = svd.singularValues();  // nonnegative, descending
  out.value = std::max(
      0.0, out.lambdas[0] - out.lambdas[1] - out.lambdas[2] - out.lambdas[3]);
  out.value = std::min(out.value, 1.0);
  return out;
}

CMat4 partial_transpose_b(const CMat4& rho) {
  CMat4 out;
  // Indices factor as (a b); transpose the b indices inside each 2x2 block.
  for (int a1 = 0; a1 < 2; ++a1) {
    for (int a2 = 0; a2 < 2; ++a2) {
      out.block<2, 2>(2 * a1, 2 * a2) =
          rho.block<2, 2>(2 * a1, 2 * a2).transpose();
    }
  }
  return out;
}

double negativity(const DensityMatrix& rho) {
  const EigResult eig = eig_hermitian(partial_transpose_b(rho.matrix()));
  double neg = 0.0;
  for (int i = 0; i < 4; ++i) {
    neg += std::max(0.0, -eig.values[i]);
  }
  return neg;
}

}  // namespace decoq
