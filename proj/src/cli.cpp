#include "spinchain/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "spinchain/bethe.hpp"
#include "spinchain/hamiltonian.hpp"
#include "spinchain/io.hpp"
#include "spinchain/spectrum.hpp"
#include "spinchain/thermo.hpp"
#include "spinchain/transfer.hpp"

namespace spinchain::cli {

namespace {

struct ModelFlags {
  int sites = 4;
  double eta = std::numeric_limits<double>::quiet_NaN();
  double gamma = std::numeric_limits<double>::quiet_NaN();
  double a = std::numeric_limits<double>::quiet_NaN();
  double b = std::numeric_limits<double>::quiet_NaN();
  std::string regime;
};

void add_model_options(CLI::App* cmd, ModelFlags& f) {
  cmd->add_option("--sites", f.sites, "number of chain sites (even)");
  cmd->add_option("--eta", f.eta, "real anisotropy, in (0, pi)");
  cmd->add_option("--gamma", f.gamma, "imaginary anisotropy eta = i*gamma, gamma > 0");
  cmd->add_option("--a", f.a, "real inhomogeneity (imag-eta / nonhermitian regimes)");
  cmd->add_option("--b", f.b, "inhomogeneity a = i*b (real-eta regime)");
  cmd->add_option("--regime", f.regime,
                  "explicit regime: real-eta-hermitian | imag-eta-hermitian | nonhermitian");
}

bool flag_set(double v) { return !std::isnan(v); }

// Regime is inferred from which flags are present and cross-checked against
// an explicit --regime.
ModelParams resolve_params(const ModelFlags& f) {
  ModelParams p;
  if (flag_set(f.b)) {
    if (!flag_set(f.eta) || flag_set(f.a) || flag_set(f.gamma))
      throw CLI::ValidationError("--b requires --eta and excludes --a/--gamma");
    p = ModelParams::real_eta(f.sites, f.eta, f.b);
  } else if (flag_set(f.gamma)) {
    if (!flag_set(f.a) || flag_set(f.eta))
      throw CLI::ValidationError("--gamma requires --a and excludes --eta");
    p = ModelParams::imag_eta(f.sites, f.gamma, f.a);
  } else if (flag_set(f.eta) && flag_set(f.a)) {
    p = ModelParams::non_hermitian(f.sites, f.eta, f.a);
  } else {
    throw CLI::ValidationError("specify (--eta,--b), (--gamma,--a) or (--eta,--a)");
  }
  if (!f.regime.empty() && f.regime != to_string(p.regime))
    throw CLI::ValidationError("--regime " + f.regime + " conflicts with flags (" +
                               to_string(p.regime) + ")");
  return p;
}

std::string resolve_output_path(const std::string& name) {
  std::filesystem::path p(name);
  if (p.is_absolute()) return name;
  if (const char* dir = std::getenv("SPINCHAIN_OUTDIR")) return (std::filesystem::path(dir) / p).string();
  return name;
}

void emit(const std::string& command, const ModelParams* params, const CsvTable& table,
          const std::string& out, const std::string& format, const std::string& started) {
  const std::string path = resolve_output_path(out);
  if (format == "csv") {
    write_text_file(path, table.to_string());
  } else if (format == "json") {
    ResultRecord rec;
    rec.command = command;
    rec.params = params ? params_to_json(*params) : nlohmann::json::object();
    rec.payload["columns"] = table.header;
    rec.payload["rows"] = table.rows;
    rec.started_at = started;
    rec.finished_at = iso_timestamp();
    write_text_file(path, rec.to_json().dump(2) + "\n");
  } else {
    throw CLI::ValidationError("--format must be csv or json");
  }
  std::cout << command << ": wrote " << table.rows.size() << " rows to " << path << "\n";
}

int run_ed(const ModelParams& p, const std::string& out, const std::string& format,
           const std::string& started) {
  const HamiltonianBuild h = build_direct(p);
  const SpectrumResult s = eigs(h.matrix, h.hermitian);
  CsvTable t;
  t.header = {"index", "re", "im", "multiplicity"};
  for (size_t i = 0; i < s.eigenvalues.size(); ++i) {
    int mult = 1;
    double best = std::numeric_limits<double>::infinity();
    for (const Level& level : s.levels) {
      const double d = std::abs(s.eigenvalues[i] - level.value);
      if (d < best) {
        best = d;
        mult = level.multiplicity;
      }
    }
    t.rows.push_back({format_cell(int(i)), format_cell(s.eigenvalues[i].real()),
                      format_cell(s.eigenvalues[i].imag()), format_cell(mult)});
  }
  emit("ed", &p, t, out, format, started);
  std::cout << "ed: " << s.eigenvalues.size() << " eigenvalues, " << s.levels.size()
            << " levels, min re " << format_cell(s.eigenvalues.front().real()) << "\n";
  return 0;
}

int run_bae(const ModelParams& p, int m_min, int m_max, std::uint64_t seed, bool match_ed,
            const std::string& out, const std::string& format, const std::string& started) {
  SolveOptions opt;
  opt.rng_seed = seed;
  CsvTable t;
  t.header = {"M", "root_index", "re", "im", "residual", "energy_re", "energy_im"};
  std::vector<cplx> energies;
  for (int m = m_min; m <= m_max; ++m) {
    for (const BetheRoots& sol : solve_bae(p, m, opt)) {
      const cplx e = energy_from_roots(sol, p);
      energies.push_back(e);
      if (sol.roots.empty())
        t.rows.push_back({format_cell(m), format_cell(-1), format_cell(0.0), format_cell(0.0),
                          format_cell(sol.residual), format_cell(e.real()), format_cell(e.imag())});
      for (size_t j = 0; j < sol.roots.size(); ++j)
        t.rows.push_back({format_cell(m), format_cell(int(j)), format_cell(sol.roots[j].real()),
                          format_cell(sol.roots[j].imag()), format_cell(sol.residual),
                          format_cell(e.real()), format_cell(e.imag())});
    }
  }
  emit("bae", &p, t, out, format, started);
  if (match_ed) {
    const HamiltonianBuild h = build_direct(p);
    const SpectrumResult s = eigs(h.matrix, h.hermitian);
    const CompletenessReport rep = match_spectrum(energies, s, 1e-6);
    std::cout << "bae: matched " << rep.matched.size() << " energies, coverage "
              << format_cell(rep.coverage_fraction) << " of " << s.levels.size() << " levels\n";
  }
  return 0;
}

int run_density(const ModelParams& p, double u_min, double u_max, int points,
                const std::string& out, const std::string& format, const std::string& started) {
  if (std::isnan(u_min) || std::isnan(u_max)) {
    const double half = hole_grid_halfwidth(p);
    u_min = -half;
    u_max = half;
  }
  const DensityProfile prof = density_profile(p, u_min, u_max, points);
  CsvTable t;
  t.header = {"u", "rho"};
  for (size_t i = 0; i < prof.grid.size(); ++i)
    t.rows.push_back({format_cell(prof.grid[i]), format_cell(prof.rho[i])});
  emit("thermo-density", &p, t, out, format, started);
  std::cout << "thermo-density: ground energy density " << format_cell(ground_energy_density(p))
            << "\n";
  return 0;
}

int run_dispersion(const ModelParams& p, int samples, bool pair_grid, const std::string& out,
                   const std::string& format, const std::string& started) {
  const std::vector<DispersionPoint> pts =
      pair_grid ? dispersion_grid(p, samples) : dispersion_curve(p, samples);
  CsvTable t;
  t.header = {"u_r", "u_s", "K", "dE"};
  for (const DispersionPoint& d : pts)
    t.rows.push_back({format_cell(d.u_r), format_cell(d.u_s), format_cell(d.momentum),
                      format_cell(d.delta_e)});
  emit("dispersion", &p, t, out, format, started);
  return 0;
}

int run_gap(double gamma, double a_step, const std::string& out, const std::string& format,
            const std::string& started) {
  CsvTable t;
  t.header = {"a", "gap", "branch"};
  double max_gap = 0.0, argmax = 0.0;
  for (double a = 0.0; a <= pi + 0.5 * a_step; a += a_step) {
    const GapResult g = gap(std::min(a, pi), gamma);
    t.rows.push_back({format_cell(g.a), format_cell(g.gap), to_string(g.branch)});
    if (g.gap > max_gap) {
      max_gap = g.gap;
      argmax = g.a;
    }
    if (a >= pi) break;
  }
  emit("gap", nullptr, t, out, format, started);
  std::cout << "gap: max " << format_cell(max_gap) << " at a = " << format_cell(argmax) << "\n";
  return 0;
}

int run_reality_scan(double eta, int sites, double a_step, const std::string& out,
                     const std::string& format, const std::string& started) {
  const RealityScanResult scan = reality_scan(eta, sites, a_step);
  CsvTable t;
  t.header = {"a", "all_real", "max_imag"};
  for (size_t i = 0; i < scan.a_grid.size(); ++i)
    t.rows.push_back({format_cell(scan.a_grid[i]), format_cell(int(scan.all_real_flags[i])),
                      format_cell(scan.max_imags[i])});
  emit("reality-scan", nullptr, t, out, format, started);
  std::cout << "reality-scan: intervals";
  for (const auto& [lo, hi] : scan.intervals)
    std::cout << " [" << format_cell(lo) << ", " << format_cell(hi) << "]";
  std::cout << "\n";
  return 0;
}

int run_verify(const ModelParams& p, std::uint64_t seed, const std::string& out,
               const std::string& format, const std::string& started) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto rnd = [&]() { return cplx(unit(rng), 0.4 * unit(rng)); };
  const cplx eta = p.eta_c();

  double ybe = 0.0;
  for (int k = 0; k < 20; ++k) ybe = std::max(ybe, verify_ybe(rnd(), rnd(), rnd(), eta));
  double rprops = 0.0;
  for (int k = 0; k < 3; ++k) rprops = std::max(rprops, verify_r_properties(rnd(), eta).max());
  const double rtt = rtt_residual(rnd(), rnd(), p);
  const cplx u = rnd(), v = rnd();
  const Matrix tu = transfer(u, p), tv = transfer(v, p);
  const double commute = max_abs(tu * tv - tv * tu);
  const double hat_relation = max_abs(tu - transfer_hat(-u - eta, p));
  const HamiltonianBuild direct = build_direct(p);
  const double reconstruction = max_abs(direct.matrix - hamiltonian_from_transfer(p));
  const double perm = verify_permutation_commutator();

  struct Check {
    const char* name;
    double residual;
    double threshold;
  };
  const Check checks[] = {
      {"yang-baxter", ybe, 1e-12},          {"r-properties", rprops, 1e-12},
      {"rtt-relation", rtt, 1e-10},         {"transfer-commutation", commute, 1e-10},
      {"transfer-hat-relation", hat_relation, 1e-10},
      {"hamiltonian-reconstruction", reconstruction, 1e-10},
      {"permutation-commutator", perm, 1e-14},
  };
  CsvTable t;
  t.header = {"check", "residual", "threshold", "pass"};
  bool all_ok = true;
  for (const Check& c : checks) {
    const bool ok = c.residual < c.threshold;
    all_ok = all_ok && ok;
    t.rows.push_back({c.name, format_cell(c.residual), format_cell(c.threshold),
                      format_cell(int(ok))});
    std::cout << "verify: " << c.name << " residual " << format_cell(c.residual)
              << (ok ? " ok" : " FAIL") << "\n";
  }
  emit("verify", &p, t, out, format, started);
  return all_ok ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args) {
  CLI::App app{"integrable anisotropic J1-J2 spin chain laboratory"};
  app.name("spinchain");
  app.require_subcommand(1);

  const std::string started = iso_timestamp();
  std::string out, format = "csv";
  std::uint64_t seed = 1;

  ModelFlags mf;
  int m_min = 0, m_max = -1, samples = 200, points = 201;
  bool match_ed = false, pair_grid = false;
  double u_min = std::numeric_limits<double>::quiet_NaN();
  double u_max = std::numeric_limits<double>::quiet_NaN();
  double a_step = 0.01, scan_eta = 0.8;
  double gap_gamma = 1.0;
  int scan_sites = 6;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out, "output file (relative paths resolve under $SPINCHAIN_OUTDIR)");
    cmd->add_option("--format", format, "output format: csv | json");
    cmd->add_option("--seed", seed, "seed for all solver randomness");
  };

  CLI::App* verify_cmd = app.add_subcommand("verify", "structural identity residuals");
  add_model_options(verify_cmd, mf);
  add_common(verify_cmd);

  CLI::App* ed_cmd = app.add_subcommand("ed", "exact diagonalization spectrum");
  add_model_options(ed_cmd, mf);
  add_common(ed_cmd);

  CLI::App* bae_cmd = app.add_subcommand("bae", "Bethe equation solutions and energies");
  add_model_options(bae_cmd, mf);
  add_common(bae_cmd);
  bae_cmd->add_option("--m-min", m_min, "lowest magnon sector");
  bae_cmd->add_option("--m-max", m_max, "highest magnon sector (default N)");
  bae_cmd->add_flag("--match-ed", match_ed, "report coverage against the ED levels");

  CLI::App* density_cmd = app.add_subcommand("thermo-density", "ground-state root density");
  add_model_options(density_cmd, mf);
  add_common(density_cmd);
  density_cmd->add_option("--u-min", u_min, "grid start");
  density_cmd->add_option("--u-max", u_max, "grid end");
  density_cmd->add_option("--points", points, "grid points");

  CLI::App* dispersion_cmd = app.add_subcommand("dispersion", "two-spinon dispersion samples");
  add_model_options(dispersion_cmd, mf);
  add_common(dispersion_cmd);
  dispersion_cmd->add_option("--samples", samples, "hole samples per axis");
  dispersion_cmd->add_flag("--pair-grid", pair_grid, "emit the full (u_r, u_s) grid");

  CLI::App* gap_cmd = app.add_subcommand("gap", "spinon gap over a in [0, pi]");
  add_common(gap_cmd);
  gap_cmd->add_option("--gamma", gap_gamma, "imaginary anisotropy")->required();
  gap_cmd->add_option("--a-step", a_step, "grid step");

  CLI::App* scan_cmd = app.add_subcommand("reality-scan", "all-real spectrum windows over a");
  add_common(scan_cmd);
  scan_cmd->add_option("--eta", scan_eta, "real anisotropy")->required();
  scan_cmd->add_option("--sites", scan_sites, "number of chain sites");
  scan_cmd->add_option("--a-step", a_step, "grid step");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify_cmd->parsed())
      return run_verify(resolve_params(mf), seed, out.empty() ? "verify.csv" : out, format,
                        started);
    if (ed_cmd->parsed())
      return run_ed(resolve_params(mf), out.empty() ? "spectrum.csv" : out, format, started);
    if (bae_cmd->parsed()) {
      const ModelParams p = resolve_params(mf);
      if (m_max < 0) m_max = p.half_sites();
      if (m_min < 0 || m_max > p.half_sites() || m_min > m_max)
        throw CLI::ValidationError("magnon range must satisfy 0 <= m-min <= m-max <= N");
      return run_bae(p, m_min, m_max, seed, match_ed, out.empty() ? "bethe.csv" : out, format,
                     started);
    }
    if (density_cmd->parsed())
      return run_density(resolve_params(mf), u_min, u_max, points,
                         out.empty() ? "density.csv" : out, format, started);
    if (dispersion_cmd->parsed())
      return run_dispersion(resolve_params(mf), samples, pair_grid,
                            out.empty() ? "dispersion.csv" : out, format, started);
    if (gap_cmd->parsed())
      return run_gap(gap_gamma, a_step, out.empty() ? "gap.csv" : out, format, started);
    if (scan_cmd->parsed())
      return run_reality_scan(scan_eta, scan_sites, a_step, out.empty() ? "reality.csv" : out,
                              format, started);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace spinchain::cli
