#include "decoq/loopfns.hpp"

#include <cmath>
#include <string>

#include "decoq/errors.hpp"

namespace decoq {

namespace {

constexpr double kPi = M_PI;
constexpr double kPi2_6 = M_PI * M_PI / 6.0;
constexpr Complex kImag{0.0, 1.0};

void require_same_scale(const LaurentSeries& a, const LaurentSeries& b) {
  if (std::abs(a.scale_mu - b.scale_mu) >
      1e-12 * std::max(1.0, std::abs(a.scale_mu))) {
    throw ContractViolation(
        "LaurentSeries: cannot combine series at different scales mu");
  }
}

// Power series sum_k t^k / k^2, valid for |t| <= 1/2.
double dilog_series(double t) {
  double sum = 0.0;
  double power = t;
  for (int k = 1; k < 200; ++k) {
    const double term = power / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) {
      break;
    }
    power *= t;
  }
  return sum;
}

}  // namespace

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_scale(a, b);
  return {a.pole + b.pole, a.finite + b.finite, a.scale_mu};
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_scale(a, b);
  return {a.pole - b.pole, a.finite - b.finite, a.scale_mu};
}

LaurentSeries operator*(const Complex& c, const LaurentSeries& s) {
  return {c * s.pole, c * s.finite, s.scale_mu};
}

LaurentSeries operator*(double c, const LaurentSeries& s) {
  return Complex(c, 0.0) * s;
}

double dilog(double x) {
  if (!(x <= 1.0)) {
    throw DomainError("dilog: argument must satisfy x <= 1, got " +
                      std::to_string(x));
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return kPi2_6;
  if (x >= -0.5 && x <= 0.5) return dilog_series(x);
  if (x > 0.5) {
    // Reflection Li2(x) + Li2(1-x) = pi^2/6 - ln x ln(1-x).
    return kPi2_6 - std::log(x) * std::log(1.0 - x) - dilog(1.0 - x);
  }
  // Landen for x < -1/2: Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2.
  const double l = std::log(1.0 - x);
  return -dilog(x / (x - 1.0)) - 0.5 * l * l;
}

LaurentSeries b0(double p2, double m1sq, double m2sq, double mu) {
  if (!(mu > 0.0)) {
    throw DomainError("b0: mu must be positive");
  }
  if (m1sq < 0.0 || m2sq < 0.0) {
    throw DomainError("b0: squared masses must be non-negative");
  }
  // Canonicalize the one-massless configuration.
  if (m2sq == 0.0 && m1sq > 0.0) std::swap(m1sq, m2sq);

  if (m1sq == 0.0 && m2sq > 0.0) {
    const double m2 = m2sq;
    const double L = std::log(mu * mu / m2);
    Complex extra(0.0, 0.0);
    if (p2 == 0.0) {
      extra = -1.0;  // limit of (m^2 - p^2)/p^2 * ln(1 - p^2/m^2)
    } else if (std::abs(m2 - p2) > 1e-14 * m2) {
      // (m^2 - p^2)/p^2 * ln((m^2 - p^2 - i0)/m^2)
      const Complex lg = (p2 > m2)
                             ? Complex(std::log((p2 - m2) / m2), -kPi)
                             : Complex(std::log((m2 - p2) / m2), 0.0);
      extra = (m2 - p2) / p2 * lg;
    }  // at p2 == m2 the logarithmic term vanishes
    return {Complex(1.0, 0.0), Complex(L + 2.0, 0.0) + extra, mu};
  }

  if (m1sq > 0.0 && std::abs(m1sq - m2sq) <= 1e-14 * m1sq) {
    const double m2 = m1sq;
    const double L = std::log(mu * mu / m2);
    Complex phi(0.0, 0.0);
    if (p2 == 0.0) {
      phi = -2.0;
    } else if (p2 > 4.0 * m2) {
      const double beta = std::sqrt(1.0 - 4.0 * m2 / p2);
      const double lx = std::log((1.0 - beta) / (1.0 + beta));
      phi = beta * Complex(lx, kPi);
    } else if (p2 > 0.0) {
      const double bb = std::sqrt(4.0 * m2 / p2 - 1.0);
      phi = -2.0 * bb * std::atan(1.0 / bb);
    } else {
      const double bp = std::sqrt(1.0 - 4.0 * m2 / p2);
      phi = bp * std::log((bp - 1.0) / (bp + 1.0));
    }
    return {Complex(1.0, 0.0), Complex(L + 2.0, 0.0) + phi, mu};
  }

  throw NotImplementedError(
      "b0: only the (p2; 0, m2) and (p2; m2, m2) mass configurations are "
      "supported");
}

LaurentSeries c0_ir(double mf2, double mphi2, double mu) {
  if (!(mu > 0.0)) {
    throw DomainError("c0_ir: mu must be positive");
  }
  if (!(mf2 > 0.0) || !(mphi2 > 4.0 * mf2)) {
    throw DomainError("c0_ir: requires mphi2 > 4 mf2 > 0");
  }
  const double s = mphi2;
  const double beta = std::sqrt(1.0 - 4.0 * mf2 / s);
  const double lx = std::log((1.0 - beta) / (1.0 + beta));

  const Complex pole = Complex(lx, kPi) / (s * beta);

  const double l2b = std::log(2.0 * beta);
  const double arg1 = 2.0 * beta / (1.0 + beta);       // in (0, 1)
  const double arg2 = -(1.0 - beta) / (2.0 * beta);    // negative
  const double l1 = std::log(arg1);
  const Complex K =
      (0.5 * std::log(1.0 - beta * beta) * lx + 5.0 * kPi * kPi / 6.0 +
       l2b * lx - 0.5 * l1 * l1 - dilog(arg1) - dilog(arg2) +
       2.0 * kImag * kPi * l2b) /
      (2.0 * beta);

  const Complex finite = pole * std::log(4.0 * mu * mu / s) - 2.0 * K / s;
  return {pole, finite, mu};
}

LaurentSeries virtual_coefficient(CouplingKind kind, const KinematicPoint& kp,
                                  double alpha, double mu) {
  if (!(alpha >= 0.0)) {
    throw DomainError("virtual_coefficient: alpha must be >= 0");
  }
  const double m2 = kp.m_f * kp.m_f;
  const double s = kp.s();
  const double b2 = kp.beta * kp.beta;
  const double L = std::log(mu * mu / m2);

  const LaurentSeries B0ss = b0(s, m2, m2, mu);
  const LaurentSeries B0mm = b0(m2, 0.0, m2, mu);
  const LaurentSeries C0 = c0_ir(m2, s, mu);

  LaurentSeries combo;
  double kappa = 0.0;
  double ct_pole = 0.0;
  double ct_fin = 0.0;
  switch (kind) {
    case CouplingKind::S:
      combo = (4.0 * m2) * C0 + ((2.0 - b2) / b2) * B0ss -
              (2.0 * (1.0 - b2) / b2) * B0mm;
      kappa = -2.0;
      ct_pole = 6.0;
      ct_fin = 6.0 * L + 14.0;
      break;
    case CouplingKind::P:
      combo = B0ss;
      kappa = -2.0;
      ct_pole = 2.0;
      ct_fin = 2.0 * L + 2.0;
      break;
    case CouplingKind::V:
      combo = (1.0 / (b2 * s)) *
              ((2.0 * (s - 2.0 * m2)) * (2.0 * B0mm - (b2 * s) * C0) -
               (8.0 * m2) * B0ss);
      kappa = 2.0;
      ct_pole = -12.0;
      ct_fin = -12.0 * L - 16.0;
      break;
    case CouplingKind::A:
      combo = (1.0 / (b2 * s)) *
              ((2.0 * (s - 6.0 * m2)) * (2.0 * B0mm - (b2 * s) * C0) +
               (8.0 * m2) * B0ss);
      kappa = -2.0;
      ct_pole = 20.0;
      ct_fin = 20.0 * L + 32.0;
      break;
  }

  // Rate-level coefficient: only the dispersive part enters.
  const double pref = alpha / (4.0 * kPi);
  LaurentSeries out;
  out.pole = Complex(pref * (kappa * combo.pole.real() + ct_pole), 0.0);
  out.finite = Complex(pref * (kappa * combo.finite.real() + ct_fin), 0.0);
  out.scale_mu = mu;
  return out;
}

}  // namespace decoq
