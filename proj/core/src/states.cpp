#include "decoq/states.hpp"

#include <cmath>
#include <utility>

#include "decoq/errors.hpp"

namespace decoq {

CouplingKind coupling_kind_from_string(const std::string& s) {
  if (s == "S") return CouplingKind::S;
  if (s == "P") return CouplingKind::P;
  if (s == "V") return CouplingKind::V;
  if (s == "A") return CouplingKind::A;
  throw ArgumentError("coupling kind must be one of S, P, V, A; got '" + s +
                      "'");
}

std::string to_string(CouplingKind k) {
  switch (k) {
    case CouplingKind::S:
      return "S";
    case CouplingKind::P:
      return "P";
    case CouplingKind::V:
      return "V";
    case CouplingKind::A:
      return "A";
  }
  throw ArgumentError("to_string: invalid CouplingKind");
}

Coupling::Coupling(CouplingKind kind_, double alpha_)
    : kind(kind_), alpha(alpha_) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw ContractViolation("Coupling: alpha must be finite and >= 0");
  }
}

KinematicPoint::KinematicPoint(double m_f_, double m_phi_)
    : m_f(m_f_), m_phi(m_phi_) {
  if (!(m_f > 0.0) || !std::isfinite(m_f) || !std::isfinite(m_phi)) {
    throw ContractViolation("KinematicPoint: masses must be finite, m_f > 0");
  }
  if (!(m_phi > 2.0 * m_f)) {
    throw ContractViolation(
        "KinematicPoint: below threshold, need m_phi > 2 m_f");
  }
  beta = std::sqrt(1.0 - 4.0 * m_f * m_f / (m_phi * m_phi));
}

KinematicPoint KinematicPoint::from_beta(double m_f, double beta) {
  if (!(beta > 0.0) || !(beta < 1.0)) {
    throw ContractViolation("KinematicPoint: beta must lie in (0, 1)");
  }
  return KinematicPoint(m_f, 2.0 * m_f / std::sqrt(1.0 - beta * beta));
}

double KinematicPoint::x_ratio() const { return (1.0 - beta) / (1.0 + beta); }

RMatrix::RMatrix(const CMat4& m_, std::string context_)
    : m(m_), context(std::move(context_)) {
  if ((m - m.adjoint()).norm() > 1e-10 * std::max(1.0, m.norm())) {
    throw ContractViolation("RMatrix: matrix must be Hermitian");
  }
  if (!(m.trace().real() > 0.0)) {
    throw DomainError("RMatrix: trace must be positive");
  }
}

DensityMatrix::DensityMatrix(const CMat4& rho) : rho_(rho) {
  if ((rho - rho.adjoint()).norm() > 1e-10 * std::max(1.0, rho.norm())) {
    throw ContractViolation("DensityMatrix: not Hermitian within tolerance");
  }
  if (std::abs(rho.trace().real() - 1.0) > 1e-12 ||
      std::abs(rho.trace().imag()) > 1e-12) {
    throw ContractViolation("DensityMatrix: trace must equal 1 within 1e-12");
  }
  Eigen::SelfAdjointEigenSolver<CMat4> solver(rho);
  if (solver.info() != Eigen::Success) {
    throw ContractViolation("DensityMatrix: eigensolver failed");
  }
  if (solver.eigenvalues().minCoeff() < -1e-10) {
    throw ContractViolation(
        "DensityMatrix: negative eigenvalue beyond tolerance, not PSD");
  }
}

RMatrix lo_r_matrix(const KinematicPoint& kp, double y_f, double n_c) {
  if (!(y_f > 0.0) || !(n_c > 0.0)) {
    throw ContractViolation("lo_r_matrix: y_f and n_c must be positive");
  }
  const double b2 = kp.beta * kp.beta;
  const double pref = 4.0 * n_c * y_f * y_f * kp.m_f * kp.m_f * b2 / (1.0 - b2);
  CMat4 m = CMat4::Zero();
  // Opposite-helicity block only: rows/cols |01>, |10>.
  m(1, 1) = m(1, 2) = m(2, 1) = m(2, 2) = pref;
  return RMatrix(m, "lo phi->f fbar");
}

double lo_width(const RMatrix& r, const KinematicPoint& kp) {
  return r.m.trace().real() * kp.beta / (16.0 * M_PI * kp.m_phi);
}

DensityMatrix normalize(const RMatrix& r) {
  const double tr = r.m.trace().real();
  if (!(tr > 0.0)) {
    throw DomainError("normalize: R matrix trace must be positive");
  }
  return DensityMatrix(r.m / tr);
}

DensityMatrix bell_state() {
  Eigen::Vector4cd psi;
  psi << 0.0, 1.0, 1.0, 0.0;
  psi /= std::sqrt(2.0);
  return DensityMatrix(psi * psi.adjoint());
}

}  // namespace decoq
