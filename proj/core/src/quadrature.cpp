#include "decoq/quadrature.hpp"

#include <cmath>

#include "decoq/errors.hpp"

namespace decoq {

GaussLegendre::GaussLegendre(int n) {
  if (n < 2) {
    throw ArgumentError("GaussLegendre: need at least 2 nodes");
  }
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n.
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
      }
      // p0 = P_n(z); derivative from the standard recurrence.
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) {
        break;
      }
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    w[n - 1 - i] = w[i];
  }
}

const GaussLegendre& gl64() {
  static const GaussLegendre rule(64);
  return rule;
}

}  // namespace decoq
