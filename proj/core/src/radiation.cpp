#include "decoq/radiation.hpp"

#include <cmath>
#include <string>

#include "decoq/errors.hpp"
#include "decoq/quadrature.hpp"

namespace decoq {

double splitting_f(double z, double m, double q, const SplittingPattern& pat) {
  auto valid = [](int l) { return l == 1 || l == -1; };
  if (!valid(pat.lam_parent) || !valid(pat.lam_child) ||
      !valid(pat.lam_boson)) {
    throw ArgumentError("splitting_f: helicity labels must be +1 or -1");
  }
  if (!(z > 0.0) || !(z < 1.0)) {
    throw DomainError("splitting_f: z must lie in (0, 1)");
  }
  if (!(q > 0.0) || m < 0.0) {
    throw DomainError("splitting_f: need q > 0 and m >= 0");
  }
  const double zq = z * q;
  if (zq < m) {
    throw DomainError(
        "splitting_f: z q < m makes the final velocity imaginary");
  }
  const double gamma = std::sqrt((zq - m) * (zq + m)) / zq;
  const double root = std::sqrt(1.0 - z);
  if (pat.lam_child == pat.lam_parent) {
    return (pat.lam_boson == pat.lam_parent ? gamma : z * gamma) / root;
  }
  // Helicity flip: angular momentum only allows the boson to carry the
  // parent's helicity; the other sector vanishes at leading power.
  if (pat.lam_boson == pat.lam_parent) {
    return (1.0 - z) * m / zq / root;
  }
  return 0.0;
}

UnresolvedRegion::UnresolvedRegion(double omega0_, double zmin_, double zmax_,
                                   double theta_max_, const KinematicPoint& kp)
    : omega0(omega0_), zmin(zmin_), zmax(zmax_), theta_max(theta_max_) {
  if (!(zmin > 0.0) || !(zmin < zmax) || !(zmax < 1.0)) {
    throw ContractViolation("UnresolvedRegion: need 0 < zmin < zmax < 1");
  }
  if (!(omega0 > 0.0) || !(omega0 < 0.5 * kp.m_phi)) {
    throw ContractViolation("UnresolvedRegion: need 0 < omega0 < m_phi / 2");
  }
  if (!(theta_max > 0.0) || !(theta_max < M_PI)) {
    throw ContractViolation("UnresolvedRegion: need 0 < theta_max < pi");
  }
  if (zmax > 1.0 - 2.0 * omega0 / kp.m_phi + 1e-12) {
    throw ContractViolation(
        "UnresolvedRegion: soft window must reach the energy cutoff, "
        "zmax <= 1 - 2 omega0 / m_phi");
  }
}

std::string to_string(LegMode m) {
  return m == LegMode::Both ? "both" : "one";
}

LegMode leg_mode_from_string(const std::string& s) {
  if (s == "both") return LegMode::Both;
  if (s == "one") return LegMode::One;
  throw ArgumentError("legs must be 'both' or 'one'; got '" + s + "'");
}

namespace {

constexpr double kPi = M_PI;
constexpr int kPanels = 4;

// Angular integrals over the collinear cone, c0 = cos(theta_max), at final
// fermion velocity gamma:
//   phi1 = ln((1 - gamma c0)/(1 - gamma)) / gamma
//   phi2 = (1 - c0) / ((1 - gamma)(1 - gamma c0))
//   j1   = (phi1 - (1 - gamma) phi2) / gamma   (generalized collinear log)
struct Angular {
  double gamma = 0.0;
  double phi2 = 0.0;
  double j1 = 0.0;
};

Angular angular_at(double z, double beta, double c0) {
  Angular a;
  const double g2 = 1.0 - (1.0 - beta * beta) / (z * z);
  a.gamma = std::sqrt(std::max(g2, 0.0));
  const double g = a.gamma;
  const double omc = 1.0 - c0;
  a.phi2 = omc / ((1.0 - g) * (1.0 - g * c0));
  if (g < 1e-3) {
    // Series in gamma; the closed form loses digits to cancellation here.
    // j1 = (1-c0)^2 sum_{n>=2} g^{n-2} (sum_{j=0}^{n-2} (j+1) c0^j) / n
    double sum = 0.0;
    double gp = 1.0;
    double inner = 0.0;
    double cp = 1.0;
    for (int n = 2; n <= 9; ++n) {
      inner += (n - 1) * cp;
      sum += gp * inner / n;
      gp *= g;
      cp *= c0;
    }
    a.j1 = omc * omc * sum;
  } else {
    const double phi1 = std::log((1.0 - g * c0) / (1.0 - g)) / g;
    a.j1 = (phi1 - (1.0 - g) * a.phi2) / g;
  }
  return a;
}

// Kinematic square-root combinations entering the massive splitting kernels.
struct Combos {
  double gm2 = 0.0;  // [sqrt((1-gamma)(1+beta)) - sqrt((1+gamma)(1-beta))]^2
  double hp2 = 0.0;  // [sqrt((1+gamma)(1+beta)) + sqrt((1-gamma)(1-beta))]^2
  double hm2 = 0.0;  // [sqrt((1+gamma)(1-beta)) + sqrt((1-gamma)(1+beta))]^2
  double lam = 0.0;  // z gamma / (z gamma + 1 - z)
};

Combos combos_at(double z, double beta, double gamma) {
  Combos c;
  const double pp = std::sqrt((1.0 + gamma) * (1.0 + beta));
  const double pm = std::sqrt((1.0 + gamma) * (1.0 - beta));
  const double mp = std::sqrt((1.0 - gamma) * (1.0 + beta));
  const double mm = std::sqrt((1.0 - gamma) * (1.0 - beta));
  const double gm = mp - pm;
  const double hp = pp + mm;
  const double hm = pm + mp;
  c.gm2 = gm * gm;
  c.hp2 = hp * hp;
  c.hm2 = hm * hm;
  c.lam = z * gamma / (z * gamma + 1.0 - z);
  return c;
}

// Azimuth-integrated splitting densities in units alpha/(2 pi):
//   flip    - directional helicity-flip rate
//   damp    - coherence damping from the helicity-diagonal sector
//   keep_id - identity-preserving share of the diagonal sector
struct Densities {
  double flip = 0.0;
  double damp = 0.0;
  double keep_id = 0.0;
};

Densities hard_densities(CouplingKind k, double z, double beta,
                         const Angular& a) {
  Densities d;
  const Combos c = combos_at(z, beta, a.gamma);
  const double omz = 1.0 - z;
  switch (k) {
    case CouplingKind::S:
      d.keep_id = c.hm2 * a.phi2 / (8.0 * omz);
      break;
    case CouplingKind::P:
      d.damp = c.gm2 * a.phi2 / (4.0 * omz);
      break;
    case CouplingKind::V: {
      const double b2 = beta * beta;
      d.flip = omz * (1.0 - b2) / (z * z) * a.phi2;
      d.damp = a.gamma * a.gamma * omz * a.j1;
      d.keep_id = a.gamma * a.gamma * (1.0 + z) * (1.0 + z) * a.j1 / (2.0 * omz);
      break;
    }
    case CouplingKind::A: {
      const double opl = 1.0 + c.lam;
      const double oml = 1.0 - c.lam;
      d.flip = c.hm2 * a.phi2 / (2.0 * omz);
      d.damp = opl * opl * c.hp2 * a.j1 / (4.0 * omz);
      d.keep_id = oml * oml * c.hp2 * a.j1 / (8.0 * omz);
      break;
    }
  }
  return d;
}

Densities soft_densities(CouplingKind k, double z, double beta,
                         const Angular& a) {
  Densities d;
  const Combos c = combos_at(z, beta, a.gamma);
  const double omz = 1.0 - z;
  switch (k) {
    case CouplingKind::S:
    case CouplingKind::V:
      break;  // soft content is pure identity eikonal
    case CouplingKind::P:
      d.damp = c.gm2 * a.phi2 / (4.0 * omz);
      break;
    case CouplingKind::A: {
      // Flip sector with its z -> 1 limit removed; the removed piece is part
      // of the effective identity eikonal.
      const double hm2_lim = 4.0 * (1.0 - beta * beta);
      d.flip = (c.hm2 - hm2_lim) * a.phi2 / (2.0 * omz);
      break;
    }
  }
  return d;
}

// Per-leg raw operator weights (already include alpha/(2 pi)).
struct LegWeights {
  double hard_flip_op = 0.0;  // each sigma+- operator
  double hard_w3 = 0.0;       // sigma3 operator
  double hard_id = 0.0;       // identity-preserving hard remainder
  double soft_flip_op = 0.0;
  double soft_w3 = 0.0;

  double flip_op() const { return hard_flip_op + soft_flip_op; }
  double w3() const { return hard_w3 + soft_w3; }
  double nonid_hard() const { return 2.0 * hard_flip_op + hard_w3; }
  double nonid_soft() const { return 2.0 * soft_flip_op + soft_w3; }
};

struct DensityIntegrals {
  double flip = 0.0;
  double damp = 0.0;
  double keep_id = 0.0;
};

template <class DensFn>
DensityIntegrals integrate_densities(DensFn&& fn, double lo, double hi) {
  DensityIntegrals out;
  if (!(lo < hi)) {
    return out;
  }
  out.flip = gl_integrate([&](double z) { return fn(z).flip; }, lo, hi,
                          kPanels);
  out.damp = gl_integrate([&](double z) { return fn(z).damp; }, lo, hi,
                          kPanels);
  out.keep_id = gl_integrate([&](double z) { return fn(z).keep_id; }, lo, hi,
                             kPanels);
  return out;
}

LegWeights compute_leg_weights(const Coupling& g, const KinematicPoint& kp,
                               const UnresolvedRegion& region) {
  const double beta = kp.beta;
  const double c0 = std::cos(region.theta_max);
  const double z_th = std::sqrt(1.0 - beta * beta);  // = m / q
  const double pref = g.alpha / (2.0 * kPi);

  auto hard = [&](double z) {
    return hard_densities(g.kind, z, beta, angular_at(z, beta, c0));
  };
  auto soft = [&](double z) {
    return soft_densities(g.kind, z, beta, angular_at(z, beta, c0));
  };

  LegWeights lw;
  const double z0 = std::max(region.zmin, z_th);
  const double z1 = region.zmax;
  const DensityIntegrals h = integrate_densities(hard, z0, z1);
  const DensityIntegrals s = integrate_densities(soft, std::max(z1, z_th), 1.0);

  // Encoding convention, matching the coupling's characteristic operator set:
  // for V the diagonal-sector damping rides on the ladder weights (no sigma3
  // operator); for P and A it becomes the sigma3 weight.
  switch (g.kind) {
    case CouplingKind::S:
      break;
    case CouplingKind::P:
      lw.hard_w3 = pref * h.damp / 2.0;
      lw.soft_w3 = pref * s.damp / 2.0;
      break;
    case CouplingKind::V:
      lw.hard_flip_op = pref * (h.flip + h.damp) / 2.0;
      break;
    case CouplingKind::A:
      lw.hard_flip_op = pref * h.flip / 2.0;
      lw.hard_w3 = pref * h.damp / 2.0;
      lw.soft_flip_op = pref * s.flip / 2.0;
      break;
  }
  lw.hard_id = pref * h.keep_id;
  return lw;
}

// Pole coefficient of the soft identity eikonal in units alpha/(4 pi):
// virtual pole + soft pole cancel exactly (infrared cancellation).
double soft_a_coefficient(CouplingKind k, double beta) {
  const double lx = std::log((1.0 - beta) / (1.0 + beta));
  const double b2 = beta * beta;
  switch (k) {
    case CouplingKind::S:
      return 4.0 - 2.0 * (1.0 - b2) * lx / beta;
    case CouplingKind::P:
      return 0.0;
    case CouplingKind::V:
      return -4.0 - 2.0 * (1.0 + b2) * lx / beta;
    case CouplingKind::A:
      return 12.0 + 2.0 * (3.0 * b2 - 1.0) * lx / beta;
  }
  throw ArgumentError("soft_a_coefficient: invalid CouplingKind");
}

MapCoefficients assemble_coefficients(const Coupling& g,
                                      const KinematicPoint& kp,
                                      const UnresolvedRegion& region,
                                      double mu, LegMode legs,
                                      const LegWeights& lw) {
  if (!(mu > 0.0)) {
    throw DomainError("map_coefficients: mu must be positive");
  }
  const double legf = (legs == LegMode::Both) ? 2.0 : 1.0;

  MapCoefficients mc;
  mc.p_v = virtual_coefficient(g.kind, kp, g.alpha, mu);

  const double acoef = soft_a_coefficient(g.kind, kp.beta);
  const double pref = g.alpha / (4.0 * kPi);
  mc.p_r_soft.pole = Complex(-pref * acoef, 0.0);
  mc.p_r_soft.finite =
      Complex(pref * acoef * 2.0 * std::log(2.0 * region.omega0 / mu), 0.0);
  mc.p_r_soft.scale_mu = mu;

  mc.pole_residual = std::abs(mc.p_v.pole + mc.p_r_soft.pole);
  if (mc.pole_residual > 1e-8) {
    throw PhysicsConsistencyError(
        "map_coefficients: infrared poles fail to cancel, residual = " +
        std::to_string(mc.pole_residual));
  }

  mc.p_r_hard = legf * lw.hard_id;
  mc.q_hard = legf * lw.nonid_hard();
  mc.q5_soft = legf * lw.nonid_soft();
  mc.delta = mc.p_v.finite.real() + mc.p_r_soft.finite.real() + mc.p_r_hard +
             mc.q_hard + mc.q5_soft;
  if (!(1.0 + mc.delta > 0.1)) {
    throw PhysicsConsistencyError(
        "map_coefficients: normalization 1 + delta collapsed; the expansion "
        "is outside its validity range");
  }
  mc.q_total = (mc.q_hard + mc.q5_soft) / (1.0 + mc.delta);
  mc.p_id = 1.0 - mc.q_total;
  return mc;
}

}  // namespace

MapCoefficients map_coefficients(const Coupling& g, const KinematicPoint& kp,
                                 const UnresolvedRegion& region, double mu,
                                 LegMode legs) {
  return assemble_coefficients(g, kp, region, mu, legs,
                               compute_leg_weights(g, kp, region));
}

FullMapResult full_map(const Coupling& g, const KinematicPoint& kp,
                       const UnresolvedRegion& region, double mu,
                       LegMode legs) {
  const LegWeights lw = compute_leg_weights(g, kp, region);
  const MapCoefficients mc = assemble_coefficients(g, kp, region, mu, legs, lw);

  const double norm = 1.0 + mc.delta;
  const double wp = lw.flip_op() / norm;
  const double w3 = lw.w3() / norm;

  std::vector<KrausOperator> ops;
  ops.push_back(make_kraus(OpTag::I, OpTag::I, mc.p_id));
  auto add_leg = [&](bool antifermion) {
    auto push = [&](OpTag t, double w) {
      if (w > 0.0) {
        ops.push_back(antifermion ? make_kraus(OpTag::I, t, w)
                                  : make_kraus(t, OpTag::I, w));
      }
    };
    push(OpTag::Z, w3);
    push(OpTag::Plus, wp);
    push(OpTag::Minus, wp);
  };
  add_leg(true);
  if (legs == LegMode::Both) {
    add_leg(false);
  }

  Channel channel(std::move(ops), ChannelKind::Full);
  DensityMatrix rho_out = channel.apply(bell_state());
  return FullMapResult{std::move(channel), mc, std::move(rho_out)};
}

DeltaRhoReport delta_rho(const FullMapResult& r) {
  DeltaRhoReport rep;
  rep.delta = r.rho_out.matrix() - bell_state().matrix();
  return rep;
}

ApCheckResult ap_correspondence_check(const Coupling& g,
                                      const KinematicPoint& kp,
                                      const UnresolvedRegion& region,
                                      LegMode legs,
                                      double broken_weight_factor) {
  const LegWeights lw = compute_leg_weights(g, kp, region);
  const CMat4 rho = bell_state().matrix();

  // Route (a): raw first-order operator-sum difference from Kraus operators.
  const double wp = lw.flip_op() * broken_weight_factor;
  const double wm = lw.flip_op();
  const double w3 = lw.w3();
  CMat4 dk = CMat4::Zero();
  auto add_kraus_leg = [&](bool antifermion) {
    auto add = [&](OpTag t, double w) {
      if (w == 0.0) return;
      const CMat4 k = (antifermion ? make_kraus(OpTag::I, t, w)
                                   : make_kraus(t, OpTag::I, w))
                          .matrix;
      dk += k * rho * k.adjoint() - w * rho;
    };
    add(OpTag::Plus, wp);
    add(OpTag::Minus, wm);
    add(OpTag::Z, w3);
  };
  add_kraus_leg(true);
  if (legs == LegMode::Both) add_kraus_leg(false);

  // Route (b): entrywise contraction of the azimuth-integrated densities.
  // Same quadrature nodes, no operator construction.  F is the effective
  // directional flip rate, D the extra coherence damping; for V the damping
  // is folded into F (ladder encoding), for P and A it stays in D.
  const double beta = kp.beta;
  const double c0 = std::cos(region.theta_max);
  const double z_th = std::sqrt(1.0 - beta * beta);
  const double z0 = std::max(region.zmin, z_th);
  const double z1 = region.zmax;
  auto hard = [&](double z) {
    return hard_densities(g.kind, z, beta, angular_at(z, beta, c0));
  };
  auto soft = [&](double z) {
    return soft_densities(g.kind, z, beta, angular_at(z, beta, c0));
  };
  const DensityIntegrals h = integrate_densities(hard, z0, z1);
  const DensityIntegrals s = integrate_densities(soft, std::max(z1, z_th), 1.0);
  const double pref = g.alpha / (2.0 * kPi);
  double F = 0.0, D = 0.0;
  switch (g.kind) {
    case CouplingKind::S:
      break;
    case CouplingKind::P:
      D = pref * (h.damp + s.damp);
      break;
    case CouplingKind::V:
      F = pref * (h.flip + h.damp);
      break;
    case CouplingKind::A:
      F = pref * (h.flip + s.flip);
      D = pref * h.damp;
      break;
  }

  CMat4 dd = CMat4::Zero();
  auto add_direct_leg = [&](bool antifermion) {
    if (antifermion) {
      dd(0, 0) += F * rho(1, 1).real();  // |01> -> |00>
      dd(3, 3) += F * rho(2, 2).real();  // |10> -> |11>
    } else {
      dd(0, 0) += F * rho(2, 2).real();  // |10> -> |00>
      dd(3, 3) += F * rho(1, 1).real();  // |01> -> |11>
    }
    dd(1, 1) -= F * rho(1, 1).real();
    dd(2, 2) -= F * rho(2, 2).real();
    dd(1, 2) -= (F + D) * rho(1, 2);
    dd(2, 1) -= (F + D) * rho(2, 1);
  };
  add_direct_leg(true);
  if (legs == LegMode::Both) add_direct_leg(false);

  ApCheckResult res;
  res.delta_kraus = dk;
  res.delta_direct = dd;
  res.max_abs_dev = (dk - dd).cwiseAbs().maxCoeff();
  return res;
}

}  // namespace decoq
