// Command-line front end: sweeps, self-checks, channel dumps, loop values.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "decoq/channels.hpp"
#include "decoq/config.hpp"
#include "decoq/errors.hpp"
#include "decoq/loopfns.hpp"
#include "decoq/radiation.hpp"

namespace {

using nlohmann::json;

int cmd_sweep(const std::string& config_path, const std::string& out_flag) {
  decoq::RunConfig cfg;
  try {
    cfg = decoq::load_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  const std::vector<decoq::SweepRow> rows = decoq::run_sweep(cfg);
  const std::string out_path = out_flag.empty() ? cfg.out : out_flag;
  if (out_path.empty()) {
    std::cout << decoq::csv_string(rows);
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return 1;
  }
  out << decoq::csv_string(rows);
  std::cerr << "wrote " << rows.size() << " rows to " << out_path << "\n";
  return 0;
}

int cmd_check(bool inject_broken_weight) {
  const double factor = inject_broken_weight ? 1.5 : 1.0;
  const double m_f = 172.5;
  const double alpha = 0.1;
  int failures = 0;
  auto report = [&](bool ok, const std::string& name, double value,
                    double tol) {
    std::printf("[%s] %-44s %.3e (tol %.0e)\n", ok ? "ok" : "FAIL",
                name.c_str(), value, tol);
    if (!ok) ++failures;
  };

  const std::vector<double> betas = {0.5, 0.75, 0.95};
  const std::vector<decoq::CouplingKind> kinds = {
      decoq::CouplingKind::S, decoq::CouplingKind::P, decoq::CouplingKind::V,
      decoq::CouplingKind::A};

  for (double beta : betas) {
    const decoq::KinematicPoint kp = decoq::KinematicPoint::from_beta(m_f, beta);
    const decoq::UnresolvedRegion region(0.05 * kp.m_phi, 0.1, 0.9, 0.5, kp);
    for (decoq::CouplingKind kind : kinds) {
      const decoq::Coupling g(kind, alpha);
      const std::string tag = decoq::to_string(kind) + " beta=" +
                              std::to_string(beta).substr(0, 4);

      if (kind != decoq::CouplingKind::S) {
        const decoq::ApCheckResult ap = decoq::ap_correspondence_check(
            g, kp, region, decoq::LegMode::Both, factor);
        report(ap.max_abs_dev <= 1e-10, "splitting/Kraus agreement " + tag,
               ap.max_abs_dev, 1e-10);
      }

      const decoq::FullMapResult fm =
          decoq::full_map(g, kp, region, kp.m_phi, decoq::LegMode::Both);
      const double defect = decoq::completeness_defect(fm.channel.ops());
      report(defect <= 1e-10, "Kraus completeness " + tag, defect, 1e-10);
      const double tol = kind == decoq::CouplingKind::P ? 0.0 : 1e-8;
      report(fm.coeffs.pole_residual <= tol, "infrared pole residual " + tag,
             fm.coeffs.pole_residual, tol == 0.0 ? 1e-300 : tol);
    }
  }

  if (failures == 0) {
    std::printf("all checks passed\n");
    return 0;
  }
  std::printf("%d check(s) failed\n", failures);
  return 1;
}

int cmd_channel_info(const std::string& config_path) {
  decoq::RunConfig cfg;
  try {
    cfg = decoq::load_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  std::cout << decoq::channel_info_json(cfg) << "\n";
  return 0;
}

int cmd_loop_eval(const std::string& coupling, double beta, double mu_frac,
                  double alpha, double m_f) {
  const decoq::CouplingKind kind = decoq::coupling_kind_from_string(coupling);
  const decoq::KinematicPoint kp = decoq::KinematicPoint::from_beta(m_f, beta);
  const decoq::LaurentSeries s =
      decoq::virtual_coefficient(kind, kp, alpha, mu_frac * kp.m_phi);
  json out;
  out["pole"] = {s.pole.real(), s.pole.imag()};
  out["finite"] = {s.finite.real(), s.finite.imag()};
  std::cout << out.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radiative decoherence maps for scalar decay to fermion pairs"};
  app.require_subcommand(1);

  std::string sweep_config, sweep_out;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "run a beta sweep from a JSON config and emit CSV");
  sweep->add_option("--config", sweep_config, "JSON config path")->required();
  sweep->add_option("--out", sweep_out, "CSV output path (default: stdout)");

  bool broken = false;
  CLI::App* check =
      app.add_subcommand("check", "run the built-in consistency battery");
  check->add_flag("--inject-broken-weight", broken,
                  "corrupt one Kraus weight to exercise the failure path")
      ->group("");

  std::string info_config;
  CLI::App* info = app.add_subcommand(
      "channel-info", "dump map coefficients and Kraus operators as JSON");
  info->add_option("--config", info_config, "JSON config path")->required();

  std::string le_coupling;
  double le_beta = 0.0, le_mu_frac = 1.0, le_alpha = 1.0, le_m_f = 172.5;
  CLI::App* loop = app.add_subcommand(
      "loop-eval", "evaluate the virtual coefficient at one kinematic point");
  loop->add_option("--coupling", le_coupling, "S, P, V or A")->required();
  loop->add_option("--beta", le_beta, "fermion velocity in (0,1)")->required();
  loop->add_option("--mu-frac", le_mu_frac, "mu / m_phi (default 1)");
  loop->add_option("--alpha", le_alpha, "coupling strength (default 1)");
  loop->add_option("--m-f", le_m_f, "fermion mass in GeV (default 172.5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sweep) return cmd_sweep(sweep_config, sweep_out);
    if (*check) return cmd_check(broken);
    if (*info) return cmd_channel_info(info_config);
    if (*loop)
      return cmd_loop_eval(le_coupling, le_beta, le_mu_frac, le_alpha, le_m_f);
  } catch (const decoq::PhysicsConsistencyError& e) {
    std::cerr << "physics consistency error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
