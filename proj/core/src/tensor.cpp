#include "decoq/tensor.hpp"

#include <string>

#include "decoq/errors.hpp"

namespace decoq {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_hermitian(double defect, double scale, const char* who) {
  if (defect > 1e-10 * std::max(1.0, scale)) {
    throw ContractViolation(std::string(who) +
                            ": matrix is not Hermitian within tolerance");
  }
}

}  // namespace

CMat2 pauli(int i) {
  CMat2 m;
  switch (i) {
    case 0:
      m << 1, 0, 0, 1;
      break;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, -kI, kI, 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw ArgumentError("pauli: index must be in 0..3, got " +
                          std::to_string(i));
  }
  return m;
}

CMat2 sigma_plus() { return pauli(1) + kI * pauli(2); }

CMat2 sigma_minus() { return pauli(1) - kI * pauli(2); }

CMat4 kron(const CMat2& a, const CMat2& b) {
  CMat4 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

EigResult eig_hermitian(const CMat4& m) {
  require_hermitian((m - m.adjoint()).norm(), m.norm(), "eig_hermitian");
  Eigen::SelfAdjointEigenSolver<CMat4> solver(m);
  if (solver.info() != Eigen::Success) {
    throw ContractViolation("eig_hermitian: eigensolver failed to converge");
  }
  EigResult res;
  // Eigen sorts ascending; flip to descending.
  res.values = solver.eigenvalues().reverse();
  res.vectors = solver.eigenvectors().rowwise().reverse();
  return res;
}

EigResultX eig_hermitian(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) {
    throw ArgumentError("eig_hermitian: matrix must be square");
  }
  require_hermitian((m - m.adjoint()).norm(), m.norm(), "eig_hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw ContractViolation("eig_hermitian: eigensolver failed to converge");
  }
  EigResultX res;
  res.values = solver.eigenvalues().reverse();
  res.vectors = solver.eigenvectors().rowwise().reverse();
  return res;
}

CMat4 sqrt_psd(const CMat4& m) {
  const EigResult eig = eig_hermitian(m);
  Eigen::Vector4d clipped;
  for (int i = 0; i < 4; ++i) {
    const double v = eig.values[i];
    if (v < -1e-10) {
      throw ContractViolation(
          "sqrt_psd: eigenvalue " + std::to_string(v) +
          " is negative beyond tolerance; matrix is not PSD");
    }
    clipped[i] = std::sqrt(std::max(v, 0.0));
  }
  return eig.vectors * clipped.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace decoq
