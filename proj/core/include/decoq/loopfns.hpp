#pragma once

#include <complex>

#include "decoq/states.hpp"

namespace decoq {

// Laurent expansion about d = 4 - 2 eps, truncated to pole + finite part.
// Convention: "1/eps" absorbs -gamma_E + ln 4pi, and for every object here
// d(finite)/d ln(mu^2) equals the pole coefficient.
struct LaurentSeries {
  Complex pole{0.0, 0.0};    // coefficient of 1/eps
  Complex finite{0.0, 0.0};
  double scale_mu = 0.0;     // reference scale of the finite part
};

// Addition requires matching scales (ContractViolation otherwise).
LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator*(const Complex& c, const LaurentSeries& s);
LaurentSeries operator*(double c, const LaurentSeries& s);

// Real dilogarithm Li_2(x) for x <= 1; x > 1 -> DomainError.
double dilog(double x);

// Scalar two-point coefficient function.  Supported mass configurations:
//   (p2; 0, m2)  and  (p2; m2, m2)   [either order for the first]
// anything else -> NotImplementedError.  The pole coefficient is exactly 1.
LaurentSeries b0(double p2, double m1sq, double m2sq, double mu);

// Infrared-divergent triangle coefficient for a massless internal line
// between two on-shell legs of mass^2 = mf2 at invariant mass^2 = mphi2.
// Requires mphi2 > 4 mf2.  Closed form in terms of dilogarithms.
LaurentSeries c0_ir(double mf2, double mphi2, double mu);

// One-loop virtual coefficient of the decay-rate correction for the given
// Lorentz structure, in units of the rate itself:
//   p_v = (alpha / 4 pi) * [ kappa * Re(loop combination) + counterterm ]
// with the on-shell counterterm included, so the P pole vanishes identically.
// The returned series is real (imaginary parts are projected out at rate
// level); its pole must cancel against the soft emission coefficient.
LaurentSeries virtual_coefficient(CouplingKind kind, const KinematicPoint& kp,
                                  double alpha, double mu);

}  // namespace decoq
