#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "decoq/channels.hpp"
#include "decoq/entanglement.hpp"
#include "decoq/errors.hpp"
#include "decoq/radiation.hpp"
#include "decoq/states.hpp"
#include "oracles.hpp"

using namespace decoq;

namespace {

UnresolvedRegion default_region(const KinematicPoint& kp) {
  return UnresolvedRegion(0.05 * kp.m_phi, 0.1, 0.9, 0.5, kp);
}

std::set<std::string> nonid_labels(const Channel& ch) {
  std::set<std::string> out;
  for (const KrausOperator& k : ch.ops()) {
    const std::string l = to_string(k.label);
    if (l != "00") out.insert(l);
  }
  return out;
}

}  // namespace

TEST_CASE("splitting table at the massless point") {
  // z = 0.5, m = 0: gamma = 1, so (+,+,+) -> 1/sqrt(0.5)
  CHECK(splitting_f(0.5, 0.0, 1.0, {1, 1, 1}) ==
        doctest::Approx(1.0 / std::sqrt(0.5)).epsilon(1e-14));
  CHECK(splitting_f(0.5, 0.0, 1.0, {1, 1, -1}) ==
        doctest::Approx(0.5 / std::sqrt(0.5)).epsilon(1e-14));
  CHECK(splitting_f(0.5, 0.0, 1.0, {1, -1, 1}) == doctest::Approx(0.0));
  CHECK(splitting_f(0.5, 0.0, 1.0, {1, -1, -1}) == doctest::Approx(0.0));
  // parity: flipping every label is a symmetry
  CHECK(splitting_f(0.3, 0.2, 1.0, {-1, -1, -1}) ==
        doctest::Approx(splitting_f(0.3, 0.2, 1.0, {1, 1, 1})));
}

TEST_CASE("splitting table with mass: flip channel scales as (1-z) m/(z q)") {
  const double z = 0.6, m = 0.3, q = 1.0;
  const double gamma = std::sqrt(z * q * z * q - m * m) / (z * q);
  const double root = std::sqrt(1.0 - z);
  CHECK(splitting_f(z, m, q, {1, 1, 1}) ==
        doctest::Approx(gamma / root).epsilon(1e-14));
  CHECK(splitting_f(z, m, q, {1, 1, -1}) ==
        doctest::Approx(z * gamma / root).epsilon(1e-14));
  CHECK(splitting_f(z, m, q, {1, -1, 1}) ==
        doctest::Approx((1.0 - z) * m / (z * q) / root).epsilon(1e-14));
  CHECK(splitting_f(z, m, q, {1, -1, -1}) == doctest::Approx(0.0));
}

TEST_CASE("splitting rejects kinematics with imaginary velocity") {
  CHECK_THROWS_AS(splitting_f(0.5, 0.9, 1.0, {1, 1, 1}), DomainError);
  CHECK_THROWS_AS(splitting_f(1.2, 0.0, 1.0, {1, 1, 1}), DomainError);
  CHECK_THROWS_AS(splitting_f(0.5, 0.0, 1.0, {2, 1, 1}), ArgumentError);
}

TEST_CASE("unresolved region invariants") {
  const KinematicPoint kp = KinematicPoint::from_beta(172.5, 0.8);
  CHECK_NOTHROW(default_region(kp));
  CHECK_THROWS_AS(UnresolvedRegion(0.05 * kp.m_phi, 0.9, 0.1, 0.5, kp),
                  ContractViolation);  // zmin > zmax
  CHECK_THROWS_AS(UnresolvedRegion(0.05 * kp.m_phi, 0.1, 1.1, 0.5, kp),
                  ContractViolation);  // zmax > 1
  CHECK_THROWS_AS(UnresolvedRegion(0.6 * kp.m_phi, 0.1, 0.9, 0.5, kp),
                  ContractViolation);  // omega0 too large
  CHECK_THROWS_AS(UnresolvedRegion(0.05 * kp.m_phi, 0.1, 0.95, 0.5, kp),
                  ContractViolation);  // soft window detached from cutoff
}

TEST_CASE("infrared poles cancel between virtual and soft coefficients") {
  for (int i = 0; i < 10; ++i) {
    const double beta = 0.05 + i * (0.94 / 9.0);
    const KinematicPoint kp = KinematicPoint::from_beta(172.5, beta);
    const UnresolvedRegion region = default_region(kp);
    for (CouplingKind k : {CouplingKind::S, CouplingKind::P, CouplingKind::V,
                           CouplingKind::A}) {
      const MapCoefficients mc = map_coefficients(
          Coupling(k, 0.1), kp, region, kp.m_phi, LegMode::Both);
      CHECK(mc.pole_residual <= 1e-8);
      if (k == CouplingKind::P) CHECK(mc.pole_residual == 0.0);
    }
  }
}

TEST_CASE("operator sets per coupling") {
  const KinematicPoint kp = KinematicPoint::from_beta(172.5, 0.9);
  const UnresolvedRegion region = default_region(kp);
  auto labels = [&](CouplingKind k, LegMode legs) {
    return nonid_labels(
        full_map(Coupling(k, 0.1), kp, region, kp.m_phi, legs).channel);
  };
  CHECK(labels(CouplingKind::S, LegMode::Both).empty());
  CHECK(labels(CouplingKind::P, LegMode::Both) ==
        std::set<std::string>{"03", "30"});
  CHECK(labels(CouplingKind::V, LegMode::Both) ==
        std::set<std::string>{"0+", "0-", "+0", "-0"});
  CHECK(labels(CouplingKind::A, LegMode::Both) ==
        std::set<std::string>{"03", "30", "0+", "0-", "+0", "-0"});
  // single-leg mode radiates only from the antifermion (second slot)
  CHECK(labels(CouplingKind::A, LegMode::One) ==
        std::set<std::string>{"03", "0+", "0-"});
}

TEST_CASE("channel is complete and its choi form is positive") {
  for (double beta : {0.3, 0.6, 0.95}) {
    const KinematicPoint kp = KinematicPoint::from_beta(172.5, beta);
    const UnresolvedRegion region = default_region(kp);
    for (CouplingKind k : {CouplingKind::S, CouplingKind::P, CouplingKind::V,
                           CouplingKind::A}) {
      const FullMapResult fm =
          full_map(Coupling(k, 0.1), kp, region, kp.m_phi, LegMode::Both);
      CHECK(completeness_defect(fm.channel.ops()) <= 1e-10);
      CHECK(std::abs(fm.coeffs.p_id + fm.coeffs.q_total - 1.0) <= 1e-10);
      const EigResultX ce = eig_hermitian(choi(fm.channel));
      CHECK(ce.values[ce.values.size() - 1] >= -1e-10);
    }
  }
}

TEST_CASE("raw weights are linear in alpha and halve on a single leg") {
  const KinematicPoint kp = KinematicPoint::from_beta(172.5, 0.85);
  const UnresolvedRegion region = default_region(kp);
  for (CouplingKind k : {CouplingKind::P, CouplingKind::V, CouplingKind::A}) {
    const MapCoefficients a = map_coefficients(Coupling(k, 0.05), kp, region,
                                               kp.m_phi, LegMode::Both);
    const MapCoefficients b = map_coefficients(Coupling(k, 0.10), kp, region,
                                               kp.m_phi, LegMode::Both);
    CHECK(std::abs(b.q_hard - 2.0 * a.q_hard) <=
          1e-14 * std::max(1.0, std::abs(b.q_hard)));
    CHECK(std::abs(b.q5_soft - 2.0 * a.q5_soft) <=
          1e-14 * std::max(1.0, std::abs(b.q5_soft)));
    CHECK(std::abs(b.p_r_hard - 2.0 * a.p_r_hard) <=
          1e-14 * std::max(1.0, std::abs(b.p_r_hard)));

    const MapCoefficients one = map_coefficients(Coupling(k, 0.10), kp, region,
                                                 kp.m_phi, LegMode::One);
    CHECK(one.q_hard == doctest::Approx(b.q_hard / 2.0).epsilon(1e-14));
    CHECK(one.q5_soft == doctest::Approx(b.q5_soft / 2.0).epsilon(1e-14));
    CHECK(one.p_r_hard == doctest::Approx(b.p_r_hard / 2.0).epsilon(1e-14));
  }
}

TEST_CASE("scalar coupling never decoheres the pair") {
  for (double beta : {0.05, 0.3, 0.6, 0.9, 0.99}) {
    const KinematicPoint kp = KinematicPoint::from_beta(172.5, beta);
    const FullMapResult fm = full_map(Coupling(CouplingKind::S, 0.1), kp,
                                      default_region(kp), kp.m_phi,
                                      LegMode::Both);
    CHECK(concurrence(fm.rho_out).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fm.coeffs.q_total == 0.0);
  }
}

TEST_CASE("concurrence degrades monotonically with coupling strength") {
  const KinematicPoint kp = KinematicPoint::from_beta(172.5, 0.9);
  const UnresolvedRegion region = default_region(kp);
  for (CouplingKind k : {CouplingKind::P, CouplingKind::V, CouplingKind::A}) {
    double prev = 1.0;
    for (double alpha : {1.0 / 137.0, 1.0 / 50.0, 1.0 / 10.0}) {
      const FullMapResult fm =
          full_map(Coupling(k, alpha), kp, region, kp.m_phi, LegMode::Both);
      const double c = concurrence(fm.rho_out).value;
      CHECK(c <= prev + 1e-14);
      prev = c;
    }
    CHECK(prev < 1.0);  // the strongest coupling visibly decoheres
  }
}

TEST_CASE("density-difference patterns distinguish the couplings") {
  for (double beta : {0.5, 0.65, 0.8, 0.9, 0.97}) {
    const KinematicPoint kp = KinematicPoint::from_beta(172.5, beta);
    const UnresolvedRegion region = default_region(kp);
    auto dr = [&](CouplingKind k) {
      return delta_rho(
          full_map(Coupling(k, 0.1), kp, region, kp.m_phi, LegMode::Both));
    };

    const DeltaRhoReport s = dr(CouplingKind::S);
    CHECK(s.delta.norm() <= 1e-12);

    // P: pure dephasing; populations frozen, coherence drops
    const DeltaRhoReport p = dr(CouplingKind::P);
    const double pscale = std::abs(p.d23());
    CHECK(pscale > 0.0);
    CHECK(std::abs(p.d11()) <= 1e-10 * pscale);
    CHECK(std::abs(p.d22()) <= 1e-10 * pscale);
    CHECK(p.d23() < 0.0);

    // V: population transfer and coherence loss at the same rate
    const DeltaRhoReport v = dr(CouplingKind::V);
    CHECK(v.d11() > 0.0);
    CHECK(std::abs(v.d11() + v.d22()) <= 1e-10 * v.d11());
    CHECK(std::abs(v.d23() - v.d22()) <= 1e-10 * v.d11());
    CHECK(std::abs(v.d11() - v.d44()) <= 1e-12 * v.d11());
    CHECK(std::abs(v.d22() - v.d33()) <= 1e-12 * v.d11());

    // A: extra dephasing on top of the population flow
    const DeltaRhoReport a = dr(CouplingKind::A);
    CHECK(a.d11() > 0.0);
    CHECK(std::abs(a.d11() + a.d22()) <= 1e-10 * a.d11());
    CHECK(std::abs(a.d23()) > std::abs(a.d22()) * (1.0 + 1e-6));
  }
}

TEST_CASE("two assembly routes for the first-order map agree") {
  struct Cfg {
    CouplingKind kind;
    double beta;
  };
  const Cfg cfgs[] = {{CouplingKind::V, 0.6},
                      {CouplingKind::V, 0.95},
                      {CouplingKind::P, 0.8},
                      {CouplingKind::A, 0.7},
                      {CouplingKind::A, 0.95}};
  for (const Cfg& c : cfgs) {
    const KinematicPoint kp = KinematicPoint::from_beta(172.5, c.beta);
    const ApCheckResult r = ap_correspondence_check(
        Coupling(c.kind, 0.1), kp, default_region(kp), LegMode::Both);
    CHECK(r.max_abs_dev <= 1e-10);
  }
}

TEST_CASE("a corrupted weight is caught by the two-route comparison") {
  const KinematicPoint kp = KinematicPoint::from_beta(172.5, 0.9);
  const ApCheckResult r = ap_correspondence_check(
      Coupling(CouplingKind::V, 0.1), kp, default_region(kp), LegMode::Both,
      1.5);
  CHECK(r.max_abs_dev > 1e-10);
}

TEST_CASE("soft slope of the identity eikonal matches phase-space integrals") {
  // numeric d I / d ln omega0 probed as I(2 w0) - I(w0), lambda-regulated;
  // compare against the analytic slope 2 ln2 * A / (4 pi) with A extracted
  // from the soft pole.  alpha = 1 on both sides.
  for (double beta : {0.3, 0.6, 0.95}) {
    const KinematicPoint kp = KinematicPoint::from_beta(172.5, beta);
    const UnresolvedRegion region = default_region(kp);
    for (CouplingKind k : {CouplingKind::S, CouplingKind::V}) {
      const MapCoefficients mc = map_coefficients(
          Coupling(k, 1.0), kp, region, kp.m_phi, LegMode::Both);
      const double acoef = -mc.p_r_soft.pole.real() * 4.0 * M_PI;
      const double analytic = 2.0 * std::log(2.0) * acoef / (4.0 * M_PI);
      const double numeric =
          oracle::soft_slope(k == CouplingKind::V, beta, kp.m_phi);
      CHECK(std::abs(numeric - analytic) <= 2e-3 * std::abs(analytic));
    }
  }
}

TEST_CASE("soft coefficient also fixes the omega0 dependence of the finite part") {
  const KinematicPoint kp = KinematicPoint::from_beta(172.5, 0.7);
  for (CouplingKind k : {CouplingKind::S, CouplingKind::P, CouplingKind::V,
                         CouplingKind::A}) {
    const UnresolvedRegion r1(0.02 * kp.m_phi, 0.1, 0.9, 0.5, kp);
    const UnresolvedRegion r2(0.04 * kp.m_phi, 0.1, 0.9, 0.5, kp);
    const Coupling g(k, 0.1);
    const MapCoefficients m1 =
        map_coefficients(g, kp, r1, kp.m_phi, LegMode::Both);
    const MapCoefficients m2 =
        map_coefficients(g, kp, r2, kp.m_phi, LegMode::Both);
    const double got = m2.p_r_soft.finite.real() - m1.p_r_soft.finite.real();
    const double want = -2.0 * std::log(2.0) * m1.p_r_soft.pole.real();
    CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("narrow kinematics: empty hard window leaves the state pure") {
  // at beta = 0.05 the z threshold m/q = sqrt(1-beta^2) lies above zmax,
  // so no collinear phase space is available at all
  const KinematicPoint kp = KinematicPoint::from_beta(172.5, 0.05);
  const UnresolvedRegion region = default_region(kp);
  for (CouplingKind k : {CouplingKind::P, CouplingKind::V, CouplingKind::A}) {
    const FullMapResult fm =
        full_map(Coupling(k, 0.1), kp, region, kp.m_phi, LegMode::Both);
    CHECK(fm.coeffs.q_hard == 0.0);  // z threshold sits above zmax
  }
  // V has no soft non-identity content either, so its state stays pure
  const FullMapResult v = full_map(Coupling(CouplingKind::V, 0.1), kp, region,
                                   kp.m_phi, LegMode::Both);
  CHECK(v.coeffs.q_total == 0.0);
  CHECK(concurrence(v.rho_out).value == doctest::Approx(1.0).epsilon(1e-12));
}
