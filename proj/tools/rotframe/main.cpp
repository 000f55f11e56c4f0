// rotframe: command-line front end for rotating-frame quantum mechanics.
//
//   rotframe <mode> --config <file> [--out <dir>] [--units si|natural]
//
// Modes: sagnac, spin-phase, spin-orbit, propagate, ehrenfest, dirac-compare,
// gauge-check. Every run writes <out>/summary.json; propagate/ehrenfest also
// emit CSV time series (t, x, y, z, vx, vy, vz) and a binary final snapshot.
//
// Exit codes: 0 ok, 2 config error, 3 precondition error, 4 numerical
// stability abort.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "config.hpp"
#include "rotqm/rotqm.hpp"

using nlohmann::json;
using namespace rotqm;
using rotcli::Config;
using rotcli::ConfigError;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitStability = 4;

constexpr double kHbarSi = 1.054571817e-34;  // J s
constexpr double kCSi = 299792458.0;         // m / s

/// Unit boundary: SI inputs are rescaled once, at parse, to natural units
/// with hbar = c = 1 and the meter as the length unit. Phases are
/// dimensionless either way; times and momenta are converted back on output.
struct Units {
  bool si = false;

  double mass_to_natural(double m) const { return si ? m * kCSi / kHbarSi : m; }
  double omega_to_natural(double w) const { return si ? w / kCSi : w; }
  double time_to_natural(double t) const { return si ? t * kCSi : t; }
  double momentum_to_natural(double p) const { return si ? p / kHbarSi : p; }

  double time_out(double t) const { return si ? t / kCSi : t; }
  double velocity_out(double v) const { return si ? v * kCSi : v; }
  double energy_out(double e) const { return si ? e * kHbarSi * kCSi : e; }

  const char* label() const { return si ? "si" : "natural"; }
};

struct Experiment {
  Config cfg;
  Units units;
  std::string mode;
  std::filesystem::path out_dir;
};

RotationSetup parse_setup(const Experiment& ex) {
  const double mass = ex.cfg.get_positive("setup", "mass");
  const Vec3 omega = ex.cfg.get_vec3_or("setup", "omega", {0, 0, 0});
  if (ex.units.si)
    return RotationSetup(ex.units.mass_to_natural(mass), 1.0, 1.0,
                         {ex.units.omega_to_natural(omega.x), ex.units.omega_to_natural(omega.y),
                          ex.units.omega_to_natural(omega.z)});
  const double hbar = ex.cfg.get_positive_or("setup", "hbar", 1.0);
  const double c = ex.cfg.get_positive_or("setup", "c", 1.0);
  return RotationSetup(mass, hbar, c, omega);
}

ClosedPath parse_path(const Experiment& ex) {
  const int subdiv = static_cast<int>(ex.cfg.get_integer_or("path", "subdivisions", 1000));
  if (ex.cfg.has("path", "polygon")) {
    const auto n = static_cast<std::size_t>(ex.cfg.get_integer_or("path", "polygon", 0));
    const double radius = ex.cfg.get_positive("path", "radius");
    const Vec3 center = ex.cfg.get_vec3_or("path", "center", {0, 0, 0});
    return ClosedPath::regular_polygon(n, radius, center, subdiv);
  }
  return ClosedPath(ex.cfg.get_vertices("path", "vertices"), subdiv);
}

GridSpec parse_grid(const Experiment& ex) {
  const auto ns = ex.cfg.get_doubles("grid", "n");
  const auto origin = ex.cfg.get_doubles("grid", "origin");
  const auto spacing = ex.cfg.get_doubles("grid", "spacing");
  if (ns.size() < 1 || ns.size() > 3) throw ConfigError("field grid.n needs 1 to 3 entries");
  if (origin.size() != ns.size() || spacing.size() != ns.size())
    throw ConfigError("fields grid.origin and grid.spacing must match grid.n in length");
  GridSpec g;
  g.dim = static_cast<int>(ns.size());
  for (int a = 0; a < g.dim; ++a) {
    if (!(ns[a] >= 2.0) || ns[a] != std::floor(ns[a]))
      throw ConfigError("field grid.n entries must be integers >= 2");
    g.axes[a] = {static_cast<std::size_t>(ns[a]), origin[a], spacing[a]};
  }
  g.validate();
  return g;
}

Vec3 padded_vec3(const Config& cfg, const std::string& sec, const std::string& key, double fill) {
  if (!cfg.has(sec, key)) return {fill, fill, fill};
  auto v = cfg.get_doubles(sec, key);
  if (v.size() > 3) throw ConfigError("field " + sec + "." + key + " has more than 3 entries");
  while (v.size() < 3) v.push_back(fill);
  return {v[0], v[1], v[2]};
}

WaveState parse_packet(const Experiment& ex, const GridSpec& g, const RotationSetup& su) {
  const Vec3 center = padded_vec3(ex.cfg, "packet", "center", 0.0);
  const Vec3 sigma = padded_vec3(ex.cfg, "packet", "sigma", 1.0);
  Vec3 momentum = padded_vec3(ex.cfg, "packet", "momentum", 0.0);
  momentum = {ex.units.momentum_to_natural(momentum.x), ex.units.momentum_to_natural(momentum.y),
              ex.units.momentum_to_natural(momentum.z)};
  for (int a = 0; a < g.dim; ++a)
    if (!(sigma[a] > 0.0)) throw ConfigError("field packet.sigma must be positive on grid axes");
  if (ex.cfg.has("packet", "spin")) {
    const auto s = ex.cfg.get_doubles("packet", "spin");
    if (s.size() != 4) throw ConfigError("field packet.spin needs 4 numbers (re0 im0 re1 im1)");
    WaveState w = WaveState::spinor_gaussian(g, center, sigma, momentum, su.hbar, {s[0], s[1]}, {s[2], s[3]});
    normalize(w);
    return w;
  }
  return WaveState::gaussian(g, center, sigma, momentum, su.hbar);
}

json vec3_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

json operator_json(const Mat2c& m, bool real_part) {
  json rows = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (int c = 0; c < 2; ++c) row.push_back(real_part ? m(r, c).real() : m(r, c).imag());
    rows.push_back(row);
  }
  return rows;
}

json path_summary_json(const ClosedPath& p) {
  return json{{"vertices", p.vertices.size()},
              {"subdivisions", p.subdivisions},
              {"area", vec3_json(enclosed_area(p))},
              {"planar", is_planar(p)}};
}

void fill_phase_json(json& out, const PhaseResult& r) {
  out["method"] = to_string(r.method);
  if (r.value) {
    out["value_rad"] = *r.value;
    out["value_mod_2pi"] = r.value_mod_2pi();
  }
  if (r.op) {
    out["operator_re"] = operator_json(*r.op, true);
    out["operator_im"] = operator_json(*r.op, false);
  }
}

// ---------------------------------------------------------------------------
// modes
// ---------------------------------------------------------------------------

json run_sagnac(const Experiment& ex) {
  const RotationSetup su = parse_setup(ex);
  const ClosedPath path = parse_path(ex);
  const std::string method = ex.cfg.get_string_or("phase", "method", "compare");
  json out;
  out["path_summary"] = path_summary_json(path);
  if (method == "line_integral") {
    fill_phase_json(out, sagnac_phase(path, su, PhaseMethod::line_integral));
  } else if (method == "closed_form") {
    fill_phase_json(out, sagnac_phase(path, su));
  } else if (method == "compare") {
    const PhaseResult area = sagnac_phase(path, su);
    const PhaseResult line = sagnac_phase(path, su, PhaseMethod::line_integral);
    fill_phase_json(out, area);
    out["line_integral_value_rad"] = *line.value;
    out["stokes_delta"] = std::abs(*area.value - *line.value);
  } else {
    throw ConfigError("field phase.method must be closed_form, line_integral or compare");
  }
  return out;
}

json run_spin_phase(const Experiment& ex) {
  const RotationSetup su = parse_setup(ex);
  const double t = ex.units.time_to_natural(ex.cfg.get_double("phase", "time"));
  const std::string method = ex.cfg.get_string_or("phase", "method", "closed_form");
  const int steps = static_cast<int>(ex.cfg.get_integer_or("phase", "steps", 10000));
  json out;
  out["time"] = ex.units.time_out(t);
  if (method == "closed_form") {
    fill_phase_json(out, spin_phase_operator(su, t));
  } else if (method == "ordered_product") {
    fill_phase_json(out, spin_phase_operator(su, t, PhaseMethod::ordered_product, steps));
  } else {
    throw ConfigError("field phase.method must be closed_form or ordered_product");
  }
  return out;
}

json run_spin_orbit(const Experiment& ex) {
  const RotationSetup su = parse_setup(ex);
  const ClosedPath path = parse_path(ex);
  const std::string method = ex.cfg.get_string_or("phase", "method", "ordered_product");
  json out;
  out["path_summary"] = path_summary_json(path);
  if (method == "ordered_product") {
    fill_phase_json(out, spin_orbit_operator(path, su, PhaseMethod::ordered_product));
  } else if (method == "closed_form") {
    fill_phase_json(out, spin_orbit_operator(path, su, PhaseMethod::closed_form));
  } else {
    throw ConfigError("field phase.method must be closed_form or ordered_product");
  }
  if (is_planar(path)) {
    const PhaseResult scalar = spin_orbit_scalar_phase(path, su);
    out["value_rad"] = *scalar.value;
    out["value_mod_2pi"] = scalar.value_mod_2pi();
  }
  return out;
}

struct EvolveParams {
  double dt;
  int steps;
  int sample_every;
  bool spin;
  bool spin_orbit;
};

EvolveParams parse_evolve(const Experiment& ex) {
  EvolveParams p;
  p.dt = ex.units.time_to_natural(ex.cfg.get_positive("evolve", "dt"));
  p.steps = static_cast<int>(ex.cfg.get_integer_or("evolve", "steps", 100));
  if (p.steps < 0) throw ConfigError("field evolve.steps must be >= 0");
  p.sample_every = static_cast<int>(ex.cfg.get_integer_or("evolve", "sample_every", 1));
  if (p.sample_every < 1) throw ConfigError("field evolve.sample_every must be >= 1");
  p.spin = ex.cfg.get_bool_or("evolve", "spin", false);
  p.spin_orbit = ex.cfg.get_bool_or("evolve", "spin_orbit", false);
  return p;
}

std::vector<std::vector<double>> trajectory_rows(const EhrenfestTrajectory& traj, const Units& units) {
  std::vector<std::vector<double>> rows;
  rows.reserve(traj.times.size());
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const Vec3& x = traj.mean_position[i];
    const Vec3& v = traj.mean_velocity[i];
    rows.push_back({units.time_out(traj.times[i]), x.x, x.y, x.z, units.velocity_out(v.x),
                    units.velocity_out(v.y), units.velocity_out(v.z)});
  }
  return rows;
}

const std::vector<std::string> kTrajectoryHeader{"t", "x", "y", "z", "vx", "vy", "vz"};

json run_propagate(const Experiment& ex, int& exit_code) {
  const RotationSetup su = parse_setup(ex);
  const GridSpec g = parse_grid(ex);
  const EvolveParams ev = parse_evolve(ex);
  WaveState state = parse_packet(ex, g, su);
  const RotatingHamiltonian h = build_hamiltonian(su, ev.spin, ev.spin_orbit);

  json out;
  out["initial_norm"] = grid_norm(state);
  Diagnostics diag;
  const EhrenfestTrajectory traj =
      ehrenfest_trajectory(state, h, ev.dt, ev.steps, ev.sample_every, &diag);
  // final state for the snapshot (same propagation, deterministic)
  const WaveState final_state = propagate(std::move(state), h, ev.dt, ev.steps);

  const auto series_path = ex.out_dir / "series.csv";
  write_csv(kTrajectoryHeader, trajectory_rows(traj, ex.units), series_path.string());
  const auto snapshot_path = ex.out_dir / "final.wave";
  write_snapshot(final_state, snapshot_path.string());

  out["final_norm"] = grid_norm(final_state);
  out["final_time"] = ex.units.time_out(final_state.time());
  out["mean_position"] = vec3_json(position_expectation(final_state));
  const Vec3 p = momentum_expectation(final_state, su.hbar);
  out["mean_momentum"] = vec3_json(ex.units.si ? kHbarSi * p : p);
  out["series"] = series_path.string();
  out["snapshot"] = snapshot_path.string();
  out["boundary_hit"] = diag.boundary_hit;
  out["warnings"] = diag.warnings;
  if (diag.boundary_hit) exit_code = kExitStability;
  return out;
}

json run_ehrenfest(const Experiment& ex, int& exit_code) {
  const RotationSetup su = parse_setup(ex);
  const GridSpec g = parse_grid(ex);
  const EvolveParams ev = parse_evolve(ex);
  WaveState state = parse_packet(ex, g, su);
  const RotatingHamiltonian h = build_hamiltonian(su, ev.spin, ev.spin_orbit);

  Diagnostics diag;
  const EhrenfestTrajectory traj =
      ehrenfest_trajectory(std::move(state), h, ev.dt, ev.steps, ev.sample_every, &diag);

  const auto traj_path = ex.out_dir / "trajectory.csv";
  write_csv(kTrajectoryHeader, trajectory_rows(traj, ex.units), traj_path.string());

  // residual of the semiclassical equation of motion from finite differences
  double res = 0.0, scale = 0.0;
  const double dts = ev.sample_every * ev.dt;
  for (std::size_t i = 1; i + 1 < traj.mean_position.size(); ++i) {
    const Vec3 acc =
        (traj.mean_position[i + 1] - 2.0 * traj.mean_position[i] + traj.mean_position[i - 1]) / (dts * dts);
    const Vec3 vel = (traj.mean_position[i + 1] - traj.mean_position[i - 1]) / (2.0 * dts);
    const Vec3 rhs = 2.0 * cross(vel, su.omega) + cross(su.omega, cross(traj.mean_position[i], su.omega));
    res = std::max(res, norm(acc - rhs));
    scale = std::max(scale, norm(rhs));
  }

  json out;
  out["samples"] = traj.times.size();
  out["trajectory"] = traj_path.string();
  out["boundary_hit"] = traj.boundary_hit;
  out["ehrenfest_residual"] = res;
  out["ehrenfest_residual_relative"] = scale > 0.0 ? res / scale : 0.0;
  out["final_position"] = vec3_json(traj.mean_position.back());
  out["warnings"] = diag.warnings;
  if (traj.boundary_hit) exit_code = kExitStability;
  return out;
}

json run_dirac_compare(const Experiment& ex) {
  const RotationSetup su = parse_setup(ex);
  const GridSpec g = parse_grid(ex);
  if (g.dim != 1) throw ConfigError("dirac-compare expects a 1-D grid (field grid.n)");
  const auto levels = static_cast<std::size_t>(ex.cfg.get_integer_or("compare", "levels", 14));

  const WeakMetric metric = rotating_metric(su);
  const auto dirac_eigs = upper_dominated_eigenvalues(low_energy_dirac_matrix(su, metric, g), g.num_points());
  const PauliReduction red = pauli_reduction(su, metric, g);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(pauli_matrix(red, g));
  std::vector<double> pauli_eigs(es.eigenvalues().data(),
                                 es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(pauli_eigs.begin(), pauli_eigs.end());
  if (dirac_eigs.size() < levels || pauli_eigs.size() < levels)
    throw ConfigError("field compare.levels exceeds the available spectrum");

  // error budget: relativistic dispersion + slice spin-rotation + gauge square
  const double omega_norm = norm(su.omega);
  const double half_extent = 0.5 * static_cast<double>(g.axes[0].n) * g.axes[0].spacing;
  const double amax = omega_norm * half_extent / su.c;
  json deigs = json::array(), peigs = json::array(), budgets = json::array();
  double worst = 0.0;
  bool within = true;
  for (std::size_t i = 0; i < levels; ++i) {
    const double ep = pauli_eigs[i];
    const double budget = 1.5 * ep * ep / (2.0 * su.mass * su.c * su.c) + 0.6 * su.hbar * omega_norm +
                          1.5 * 0.375 * su.mass * amax * amax * su.c * su.c;
    const double dev = std::abs(dirac_eigs[i] - ep);
    worst = std::max(worst, dev);
    within = within && dev <= budget;
    deigs.push_back(ex.units.energy_out(dirac_eigs[i]));
    peigs.push_back(ex.units.energy_out(ep));
    budgets.push_back(ex.units.energy_out(budget));
  }
  json out;
  out["levels"] = levels;
  out["dirac_eigenvalues"] = deigs;
  out["pauli_eigenvalues"] = peigs;
  out["budgets"] = budgets;
  out["max_abs_deviation"] = ex.units.energy_out(worst);
  out["within_budget"] = within;
  out["darwin_constant"] = ex.units.energy_out(red.darwin_constant);
  return out;
}

json run_gauge_check(const Experiment& ex) {
  const RotationSetup su = parse_setup(ex);
  const ClosedPath path = parse_path(ex);
  const SpacetimeLoop loop = SpacetimeLoop::spatial(path);
  const WeakMetric metric = rotating_metric(su);
  const double base = *weakfield_phase(loop, extract_weak_potential(metric), su).value;

  const int count = static_cast<int>(ex.cfg.get_integer_or("gauge", "count", 20));
  const double amp = ex.cfg.get_positive_or("gauge", "amplitude", 0.05);
  const auto seed = static_cast<unsigned>(ex.cfg.get_integer_or("gauge", "seed", 0));
  const double tolerance = 1e-10;

  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uq(0.3, 1.2), uph(0.0, 6.283185307179586), ua(-amp, amp);
  double max_delta = 0.0;
  for (int i = 0; i < count; ++i) {
    const double a1 = ua(rng), a2 = ua(rng), q1 = uq(rng), q2 = uq(rng), p1 = uph(rng), p2 = uph(rng);
    GaugeVector xi;
    xi.xi0 = [=](const Vec3& x) { return a1 * std::sin(q1 * x.x + p1) + a2 * std::cos(q2 * x.y + p2); };
    xi.grad_xi0 = [=](const Vec3& x) {
      return Vec3{a1 * q1 * std::cos(q1 * x.x + p1), -a2 * q2 * std::sin(q2 * x.y + p2), 0.0};
    };
    const auto [shifted, report] = gauge_transform_weakfield(metric, xi, {});
    (void)report;
    const double phi = *weakfield_phase(loop, extract_weak_potential(shifted), su).value;
    max_delta = std::max(max_delta, std::abs(phi - base));
  }

  // the same machinery rejects a time-dependent spatial shift
  bool rejected = false;
  try {
    GaugeVector bad;
    bad.xi0 = [](const Vec3&) { return 0.0; };
    bad.grad_xi0 = [](const Vec3&) { return Vec3{}; };
    bad.xi_dot = [](const Vec3&) { return Vec3{0.01, 0, 0}; };
    (void)gauge_transform_weakfield(metric, bad, {});
  } catch (const std::invalid_argument&) {
    rejected = true;
  }

  json out;
  out["base_phase_rad"] = base;
  out["transform_count"] = count;
  out["max_phase_delta"] = max_delta;
  out["tolerance"] = tolerance;
  out["invariant"] = max_delta < tolerance;
  out["unrestricted_rejected"] = rejected;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum mechanics in a uniformly rotating frame"};
  std::string mode, config_path, out_dir = ".", units_flag;
  app.add_option("mode", mode,
                 "sagnac | spin-phase | spin-orbit | propagate | ehrenfest | dirac-compare | gauge-check")
      ->required();
  app.add_option("--config", config_path, "experiment configuration file")->required();
  app.add_option("--out", out_dir, "output directory (default: current)");
  app.add_option("--units", units_flag, "si or natural; overrides the config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  json summary;
  int exit_code = kExitOk;
  try {
    Experiment ex{Config::parse_file(config_path), {}, mode, out_dir};

    const std::string cfg_mode = ex.cfg.get_string_or("", "mode", mode);
    if (cfg_mode != mode)
      throw ConfigError("config declares mode '" + cfg_mode + "' but '" + mode + "' was requested");

    std::string units = units_flag.empty() ? ex.cfg.get_string_or("", "units", "natural") : units_flag;
    if (units != "si" && units != "natural") throw ConfigError("units must be 'si' or 'natural'");
    ex.units.si = units == "si";

    std::filesystem::create_directories(ex.out_dir);

    summary["schema_version"] = 1;
    summary["mode"] = mode;
    summary["units"] = ex.units.label();

    json result;
    if (mode == "sagnac")
      result = run_sagnac(ex);
    else if (mode == "spin-phase")
      result = run_spin_phase(ex);
    else if (mode == "spin-orbit")
      result = run_spin_orbit(ex);
    else if (mode == "propagate")
      result = run_propagate(ex, exit_code);
    else if (mode == "ehrenfest")
      result = run_ehrenfest(ex, exit_code);
    else if (mode == "dirac-compare")
      result = run_dirac_compare(ex);
    else if (mode == "gauge-check")
      result = run_gauge_check(ex);
    else
      throw ConfigError("unknown mode '" + mode + "'");

    summary.update(result);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::domain_error& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStability;
  }

  const auto summary_path = std::filesystem::path(out_dir) / "summary.json";
  std::ofstream os(summary_path);
  os << summary.dump(2) << "\n";
  std::cout << summary.dump(2) << "\n";
  return exit_code;
}
