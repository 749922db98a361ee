#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "decoq/radiation.hpp"
#include "decoq/states.hpp"

namespace decoq {

// Linear beta grid, endpoints included; steps == 1 collapses to {min}.
struct BetaGrid {
  double min = 0.5;
  double max = 0.95;
  int steps = 10;
  std::vector<double> points() const;
};

// Unresolved region in units of the decay kinematics; omega0 = frac * m_phi.
struct RegionSpec {
  double omega0_frac = 0.05;
  double zmin = 0.1;
  double zmax = 0.9;
  double theta_max = 0.5;
};

// One run = a beta grid x a list of couplings, common region and scale.
struct RunConfig {
  double m_f = 172.5;
  BetaGrid beta;
  std::vector<Coupling> couplings;
  RegionSpec region;
  double mu_frac = 1.0;  // mu = mu_frac * m_phi
  LegMode legs = LegMode::Both;
  std::string out;  // CSV path; empty = stdout

  UnresolvedRegion region_at(const KinematicPoint& kp) const;
  double mu_at(const KinematicPoint& kp) const { return mu_frac * kp.m_phi; }
};

// Strict JSON schema (unknown keys rejected); throws ArgumentError on any
// parse or validation problem.
RunConfig config_from_json(const std::string& text);
RunConfig load_config(const std::string& path);

struct SweepRow {
  double beta;
  CouplingKind coupling;
  double alpha;
  double concurrence;
  double p_id;
  double q_total;
  double pole_residual;
};

// Rows ordered by beta ascending, couplings in canonical S, P, V, A order.
std::vector<SweepRow> run_sweep(const RunConfig& cfg);

// CSV with the fixed header
//   beta,coupling,alpha,concurrence,p_id,q_total,pole_residual
// and 12-significant-digit values; byte-identical across runs.
std::string csv_string(const std::vector<SweepRow>& rows);
void write_csv(const std::vector<SweepRow>& rows, std::ostream& os);

// Channel description at beta.min for every configured coupling: map
// coefficients plus the full Kraus-operator dump, as a JSON array.
std::string channel_info_json(const RunConfig& cfg);

}  // namespace decoq
