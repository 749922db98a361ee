#pragma once

#include <Eigen/Dense>
#include <complex>

namespace decoq {

using Complex = std::complex<double>;
using CMat2 = Eigen::Matrix2cd;
using CMat4 = Eigen::Matrix4cd;

// Two-qubit computational basis is |00>, |01>, |10>, |11>; the first slot
// is the fermion, the second the antifermion, and |0> is positive helicity.
// State vectors / density matrices on this basis use CMat4 / Eigen::Vector4cd.

// sigma^i for i = 0..3 (identity + the three Pauli matrices).
// Any other index is rejected with ArgumentError.
CMat2 pauli(int i);

// Ladder combinations sigma^1 +- i sigma^2 (no factor 1/2):
//   sigma_plus  = [[0,2],[0,0]]  maps |1> -> 2|0>
//   sigma_minus = [[0,0],[2,0]]  maps |0> -> 2|1>
CMat2 sigma_plus();
CMat2 sigma_minus();

// Kronecker product, a acting on the fermion slot, b on the antifermion slot.
CMat4 kron(const CMat2& a, const CMat2& b);

struct EigResult {
  Eigen::Vector4d values;  // real eigenvalues, descending
  CMat4 vectors;           // unitary; column j pairs with values[j]
};

// Eigendecomposition of a Hermitian 4x4 matrix.  Input must satisfy
// ||m - m^dag||_F <= 1e-10 * max(1, ||m||_F) or ContractViolation is thrown.
EigResult eig_hermitian(const CMat4& m);

struct EigResultX {
  Eigen::VectorXd values;    // descending
  Eigen::MatrixXcd vectors;
};

// Same contract for dynamic-size Hermitian matrices (Choi forms are 16x16).
EigResultX eig_hermitian(const Eigen::MatrixXcd& m);

// Principal square root of a positive semidefinite Hermitian matrix.
// Eigenvalues in [-1e-10, 0) are treated as rounding debris and clipped to
// zero; anything lower means the input is not PSD -> ContractViolation.
CMat4 sqrt_psd(const CMat4& m);

}  // namespace decoq
