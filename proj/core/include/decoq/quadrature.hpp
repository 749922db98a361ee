#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace decoq {

// Gauss-Legendre rule on (-1, 1).  Nodes are found by Newton iteration on
// P_n, so the rule is fully deterministic and reproducible across platforms.
struct GaussLegendre {
  explicit GaussLegendre(int n);
  std::vector<double> x;  // nodes, ascending
  std::vector<double> w;  // weights
};

// Shared 64-node rule; enough for every kernel integrated here (all are
// smooth on the integration panels).
const GaussLegendre& gl64();

// Integrate f over [a, b] split into `panels` equal panels, 64 nodes each.
// Works for any value type with double scaling (double, complex, structs).
template <class F>
auto gl_integrate(F&& f, double a, double b, int panels = 1)
    -> decltype(f(a) * 1.0) {
  const GaussLegendre& rule = gl64();
  using R = decltype(f(a) * 1.0);
  R total = R{};
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      total = total + f(mid + half * rule.x[i]) * (rule.w[i] * half);
    }
  }
  return total;
}

}  // namespace decoq
