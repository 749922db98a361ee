#pragma once

#include <string>

#include "decoq/channels.hpp"
#include "decoq/loopfns.hpp"
#include "decoq/states.hpp"

namespace decoq {

// Helicity pattern of the quasi-collinear splitting f -> f + boson.
// Labels are +1 / -1 along the parent axis.
struct SplittingPattern {
  int lam_parent;
  int lam_child;
  int lam_boson;
};

// Massive splitting table entry F(z) (vector-boson emission):
//   (l, l, l)   -> gamma(z)            / sqrt(1-z)
//   (l, l, -l)  -> z gamma(z)          / sqrt(1-z)
//   (l, -l, l)  -> (1-z) m / (z q)     / sqrt(1-z)
//   (l, -l, -l) -> 0
// gamma(z) = sqrt((z q)^2 - m^2)/(z q) is the final fermion velocity;
// z q < m makes it imaginary -> DomainError.
double splitting_f(double z, double m, double q, const SplittingPattern& pat);

// Unresolved-emission region: bosons are unobservable when soft
// (energy below omega0) or quasi-collinear (inside a cone of half-angle
// theta_max with energy fraction in [zmin, zmax] for the fermion).
// Invariants: 0 < zmin < zmax < 1, 0 < omega0 < m_phi / 2, and the soft
// window must reach the cutoff: zmax <= 1 - 2 omega0 / m_phi (+1e-12 slack).
struct UnresolvedRegion {
  double omega0;
  double zmin;
  double zmax;
  double theta_max;
  UnresolvedRegion(double omega0, double zmin, double zmax, double theta_max,
                   const KinematicPoint& kp);
};

// Which fermion legs radiate.  One = antifermion leg only.
enum class LegMode { One, Both };
std::string to_string(LegMode m);
LegMode leg_mode_from_string(const std::string& s);

// Scalar coefficients of the one-emission decoherence map.
// All "raw" entries are O(alpha) and unnormalized; p_id and q_total refer
// to the normalized channel.  pole_residual = |pole(p_v) + pole(p_r_soft)|
// must vanish (infrared cancellation); beyond 1e-8 the construction throws
// PhysicsConsistencyError.
struct MapCoefficients {
  LaurentSeries p_v;           // virtual coefficient (real series)
  LaurentSeries p_r_soft;      // soft identity eikonal
  double p_r_hard = 0.0;       // identity-preserving hard remainder
  double q_hard = 0.0;         // non-identity hard weight (raw)
  double q5_soft = 0.0;        // non-identity soft weight (raw)
  double delta = 0.0;          // total O(alpha) normalization shift
  double p_id = 0.0;           // normalized identity probability
  double q_total = 0.0;        // 1 - p_id
  double pole_residual = 0.0;
};

MapCoefficients map_coefficients(const Coupling& g, const KinematicPoint& kp,
                                 const UnresolvedRegion& region, double mu,
                                 LegMode legs);

// Normalized decoherence channel applied to the LO state.
// Non-identity operator sets by coupling (antifermion slot shown; with
// LegMode::Both each op also appears mirrored on the fermion slot):
//   S -> {}          P -> {(0,3)}        V -> {(0,+), (0,-)}
//   A -> {(0,3), (0,+), (0,-)}
struct FullMapResult {
  Channel channel;
  MapCoefficients coeffs;
  DensityMatrix rho_out;
};

FullMapResult full_map(const Coupling& g, const KinematicPoint& kp,
                       const UnresolvedRegion& region, double mu,
                       LegMode legs);

// Difference of the mapped state against the LO state, with the entries the
// characteristic-pattern checks care about.
struct DeltaRhoReport {
  CMat4 delta;
  double d11() const { return delta(0, 0).real(); }
  double d22() const { return delta(1, 1).real(); }
  double d33() const { return delta(2, 2).real(); }
  double d44() const { return delta(3, 3).real(); }
  double d23() const { return delta(1, 2).real(); }
};
DeltaRhoReport delta_rho(const FullMapResult& r);

// Two-route consistency check of the first-order map: route (a) assembles
// Kraus operators from integrated weights and applies them; route (b)
// contracts the azimuth-integrated splitting densities entrywise against the
// LO state, never building an operator.  Both use the same quadrature nodes,
// so agreement is expected at the 1e-10 level.  broken_weight_factor != 1
// deliberately corrupts one route-(a) weight (negative-control hook).
struct ApCheckResult {
  double max_abs_dev;
  CMat4 delta_kraus;
  CMat4 delta_direct;
};
ApCheckResult ap_correspondence_check(const Coupling& g,
                                      const KinematicPoint& kp,
                                      const UnresolvedRegion& region,
                                      LegMode legs,
                                      double broken_weight_factor = 1.0);

}  // namespace decoq
