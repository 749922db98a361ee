#include "decoq/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "decoq/channels.hpp"
#include "decoq/entanglement.hpp"
#include "decoq/errors.hpp"

namespace decoq {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw ArgumentError("config: '" + key + "' must be a number");
  }
  return j[key].get<double>();
}

double number_or(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) {
    throw ArgumentError("config: '" + key + "' must be a number");
  }
  return j[key].get<double>();
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> ok,
                         const std::string& where) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : ok) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ArgumentError("config: unknown key '" + item.key() + "' in " +
                          where);
    }
  }
}

}  // namespace

std::vector<double> BetaGrid::points() const {
  std::vector<double> pts;
  pts.reserve(static_cast<size_t>(steps));
  if (steps == 1) {
    pts.push_back(min);
    return pts;
  }
  const double h = (max - min) / (steps - 1);
  for (int i = 0; i < steps; ++i) {
    pts.push_back(i + 1 == steps ? max : min + h * i);
  }
  return pts;
}

UnresolvedRegion RunConfig::region_at(const KinematicPoint& kp) const {
  return UnresolvedRegion(region.omega0_frac * kp.m_phi, region.zmin,
                          region.zmax, region.theta_max, kp);
}

RunConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("config: JSON parse failure: ") +
                        e.what());
  }
  if (!j.is_object()) {
    throw ArgumentError("config: top level must be a JSON object");
  }
  reject_unknown_keys(
      j, {"m_f", "beta", "couplings", "region", "mu_frac", "legs", "out"},
      "top level");

  RunConfig cfg;
  cfg.m_f = number_or(j, "m_f", cfg.m_f);
  if (!(cfg.m_f > 0.0)) {
    throw ArgumentError("config: m_f must be positive");
  }

  if (!j.contains("beta") || !j["beta"].is_object()) {
    throw ArgumentError("config: 'beta' object {min, max, steps} is required");
  }
  const json& jb = j["beta"];
  reject_unknown_keys(jb, {"min", "max", "steps"}, "'beta'");
  cfg.beta.min = require_number(jb, "min");
  cfg.beta.max = require_number(jb, "max");
  if (!jb.contains("steps") || !jb["steps"].is_number_integer()) {
    throw ArgumentError("config: beta.steps must be an integer");
  }
  cfg.beta.steps = jb["steps"].get<int>();
  if (!(cfg.beta.min > 0.0) || !(cfg.beta.min <= cfg.beta.max) ||
      !(cfg.beta.max < 1.0)) {
    throw ArgumentError("config: need 0 < beta.min <= beta.max < 1");
  }
  if (cfg.beta.steps < 1) {
    throw ArgumentError("config: beta.steps must be >= 1");
  }

  if (!j.contains("couplings") || !j["couplings"].is_array() ||
      j["couplings"].empty()) {
    throw ArgumentError("config: 'couplings' must be a non-empty array");
  }
  for (const json& jc : j["couplings"]) {
    if (!jc.is_object()) {
      throw ArgumentError("config: each coupling must be an object");
    }
    reject_unknown_keys(jc, {"kind", "alpha"}, "coupling entry");
    if (!jc.contains("kind") || !jc["kind"].is_string()) {
      throw ArgumentError("config: coupling 'kind' must be a string");
    }
    const CouplingKind kind =
        coupling_kind_from_string(jc["kind"].get<std::string>());
    const double alpha = require_number(jc, "alpha");
    if (!(alpha >= 0.0)) {
      throw ArgumentError("config: coupling 'alpha' must be >= 0");
    }
    cfg.couplings.emplace_back(kind, alpha);
  }

  if (j.contains("region")) {
    if (!j["region"].is_object()) {
      throw ArgumentError("config: 'region' must be an object");
    }
    const json& jr = j["region"];
    reject_unknown_keys(jr, {"omega0_frac", "zmin", "zmax", "theta_max"},
                        "'region'");
    cfg.region.omega0_frac = number_or(jr, "omega0_frac", cfg.region.omega0_frac);
    cfg.region.zmin = number_or(jr, "zmin", cfg.region.zmin);
    cfg.region.zmax = number_or(jr, "zmax", cfg.region.zmax);
    cfg.region.theta_max = number_or(jr, "theta_max", cfg.region.theta_max);
  }
  const RegionSpec& r = cfg.region;
  if (!(r.omega0_frac > 0.0) || !(r.omega0_frac < 0.5)) {
    throw ArgumentError("config: need 0 < region.omega0_frac < 0.5");
  }
  if (!(r.zmin > 0.0) || !(r.zmin < r.zmax) || !(r.zmax < 1.0)) {
    throw ArgumentError("config: need 0 < region.zmin < region.zmax < 1");
  }
  if (!(r.theta_max > 0.0) || !(r.theta_max < 3.141592653589793)) {
    throw ArgumentError("config: need 0 < region.theta_max < pi");
  }
  if (r.zmax > 1.0 - 2.0 * r.omega0_frac + 1e-12) {
    throw ArgumentError(
        "config: need region.zmax <= 1 - 2 * region.omega0_frac so the soft "
        "window reaches the cutoff");
  }

  cfg.mu_frac = number_or(j, "mu_frac", cfg.mu_frac);
  if (!(cfg.mu_frac > 0.0)) {
    throw ArgumentError("config: mu_frac must be positive");
  }

  if (j.contains("legs")) {
    if (!j["legs"].is_string()) {
      throw ArgumentError("config: 'legs' must be a string");
    }
    cfg.legs = leg_mode_from_string(j["legs"].get<std::string>());
  }

  if (j.contains("out")) {
    if (!j["out"].is_string()) {
      throw ArgumentError("config: 'out' must be a string");
    }
    cfg.out = j["out"].get<std::string>();
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ArgumentError("config: cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return config_from_json(ss.str());
}

namespace {

std::vector<Coupling> canonical_couplings(const RunConfig& cfg) {
  std::vector<Coupling> gs = cfg.couplings;
  std::stable_sort(gs.begin(), gs.end(),
                   [](const Coupling& a, const Coupling& b) {
                     return static_cast<int>(a.kind) < static_cast<int>(b.kind);
                   });
  return gs;
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::vector<SweepRow> run_sweep(const RunConfig& cfg) {
  const std::vector<Coupling> gs = canonical_couplings(cfg);
  std::vector<SweepRow> rows;
  rows.reserve(gs.size() * static_cast<size_t>(cfg.beta.steps));
  for (double beta : cfg.beta.points()) {
    const KinematicPoint kp = KinematicPoint::from_beta(cfg.m_f, beta);
    const UnresolvedRegion region = cfg.region_at(kp);
    const double mu = cfg.mu_at(kp);
    for (const Coupling& g : gs) {
      const FullMapResult fm = full_map(g, kp, region, mu, cfg.legs);
      SweepRow row;
      row.beta = beta;
      row.coupling = g.kind;
      row.alpha = g.alpha;
      row.concurrence = concurrence(fm.rho_out).value;
      row.p_id = fm.coeffs.p_id;
      row.q_total = fm.coeffs.q_total;
      row.pole_residual = fm.coeffs.pole_residual;
      rows.push_back(row);
    }
  }
  return rows;
}

std::string csv_string(const std::vector<SweepRow>& rows) {
  std::string out = "beta,coupling,alpha,concurrence,p_id,q_total,pole_residual\n";
  for (const SweepRow& r : rows) {
    out += fmt12(r.beta);
    out += ',';
    out += to_string(r.coupling);
    out += ',';
    out += fmt12(r.alpha);
    out += ',';
    out += fmt12(r.concurrence);
    out += ',';
    out += fmt12(r.p_id);
    out += ',';
    out += fmt12(r.q_total);
    out += ',';
    out += fmt12(r.pole_residual);
    out += '\n';
  }
  return out;
}

void write_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
  os << csv_string(rows);
}

std::string channel_info_json(const RunConfig& cfg) {
  json arr = json::array();
  const double beta = cfg.beta.min;
  const KinematicPoint kp = KinematicPoint::from_beta(cfg.m_f, beta);
  const UnresolvedRegion region = cfg.region_at(kp);
  const double mu = cfg.mu_at(kp);
  for (const Coupling& g : canonical_couplings(cfg)) {
    const FullMapResult fm = full_map(g, kp, region, mu, cfg.legs);
    json entry;
    entry["beta"] = beta;
    entry["coupling"] = to_string(g.kind);
    entry["alpha"] = g.alpha;
    entry["mu"] = mu;
    entry["legs"] = to_string(cfg.legs);
    entry["p_id"] = fm.coeffs.p_id;
    entry["q_total"] = fm.coeffs.q_total;
    entry["delta"] = fm.coeffs.delta;
    entry["pole_residual"] = fm.coeffs.pole_residual;
    entry["channel"] = json::parse(channel_to_json(fm.channel));
    arr.push_back(entry);
  }
  return arr.dump(2);
}

}  // namespace decoq
