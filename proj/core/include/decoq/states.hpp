#pragma once

#include <string>

#include "decoq/tensor.hpp"

namespace decoq {

// Lorentz structure of the scalar's Yukawa-type coupling to the fermions.
enum class CouplingKind { S, P, V, A };

CouplingKind coupling_kind_from_string(const std::string& s);
std::string to_string(CouplingKind k);

struct Coupling {
  CouplingKind kind;
  double alpha;  // g^2 / (4 pi), must be >= 0
  Coupling(CouplingKind kind, double alpha);
};

// Two-body decay kinematics phi -> f fbar in the phi rest frame.
// Requires m_phi > 2 m_f (ContractViolation otherwise); beta is always
// recomputed from the masses, never stored independently.
struct KinematicPoint {
  double m_f;
  double m_phi;
  double beta;  // fermion velocity sqrt(1 - 4 m_f^2 / m_phi^2)

  KinematicPoint(double m_f, double m_phi);
  // beta is the natural sweep variable; m_phi = 2 m_f / sqrt(1 - beta^2).
  static KinematicPoint from_beta(double m_f, double beta);

  double s() const { return m_phi * m_phi; }      // invariant mass^2
  double q() const { return 0.5 * m_phi; }        // fermion energy
  double x_ratio() const;                          // (1-beta)/(1+beta)
};

// Unnormalized spin correlation matrix R (production matrix).  Hermitian
// with positive trace; `context` records what produced it (diagnostics only).
struct RMatrix {
  CMat4 m;
  std::string context;
  RMatrix(const CMat4& m, std::string context);
};

// Physical two-qubit density matrix: Hermitian, unit trace, PSD.
// The constructor rejects violations with ContractViolation.
class DensityMatrix {
 public:
  explicit DensityMatrix(const CMat4& rho);
  const CMat4& matrix() const { return rho_; }
  Complex operator()(int i, int j) const { return rho_(i, j); }

 private:
  CMat4 rho_;
};

// Leading-order production matrix for phi -> f fbar: the only populated
// block is the central one (|01>, |10>), all four entries equal to
// 4 n_c y_f^2 m_f^2 beta^2 / (1 - beta^2).
RMatrix lo_r_matrix(const KinematicPoint& kp, double y_f = 1.0,
                    double n_c = 3.0);

// Decay width from an R matrix: tr[R] * beta / (16 pi m_phi).
double lo_width(const RMatrix& r, const KinematicPoint& kp);

// R / tr[R] as a validated density matrix; zero or negative trace -> DomainError.
DensityMatrix normalize(const RMatrix& r);

// |Psi+><Psi+| with |Psi+> = (|01> + |10>)/sqrt(2).
DensityMatrix bell_state();

}  // namespace decoq
