// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Tolerances are pinned in code next to each check.

#include <cstdio>
#include <random>
#include <vector>

#include "rotqm/rotqm.hpp"

using namespace rotqm;

namespace {

int failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] %d. %s (%s)\n", pass ? "PASS" : "FAIL", idx, name, detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(const char* pattern, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b);
  return buf;
}

// -----------------------------------------------------------------------
// 1. gauge-picture equivalence for 50 random gaussian states and boosts
// -----------------------------------------------------------------------
void criterion_gauge_pictures() {
  const double tol = 1e-8;
  std::mt19937 rng(101);
  // ranges keep every compared expectation value bounded away from zero and
  // the spectra well inside the grid band
  std::uniform_real_distribution<double> uc(1.5, 3.0), us(0.8, 1.3), up(0.5, 2.0), uv(-1.5, -0.2),
      ut(0.0, 0.6), usign(0.0, 1.0);
  const GridSpec g = GridSpec::centered_line(256, 32.0);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const double sign = usign(rng) < 0.5 ? -1.0 : 1.0;
    const WaveState s =
        WaveState::gaussian(g, {sign * uc(rng), 0, 0}, {us(rng), 1, 1}, {up(rng), 0, 0}, 1.0);
    const BoostSpec spec{{uv(rng), 0, 0}, 1.0, ut(rng)};
    for (auto obs :
         {BoostObservable::position, BoostObservable::momentum, BoostObservable::kinetic_energy}) {
      const auto [a, b] = picture_equivalence_check(s, spec, obs);
      worst = std::max(worst, std::abs(a - b) / std::max(std::abs(a), std::abs(b)));
    }
  }
  report(1, "gauge-picture equivalence, x / p / kinetic energy", worst < tol,
         fmt("max relative deviation %.3g, tolerance %.1g", worst, tol));
}

// -----------------------------------------------------------------------
// 2. sagnac line integral vs area form on random planar polygons
// -----------------------------------------------------------------------
void criterion_sagnac_stokes() {
  const double tol = 1e-10;
  std::mt19937 rng(202);
  std::uniform_real_distribution<double> u(-1.0, 1.0), radius(0.5, 2.5), ua(0.0, 6.283185307179586);
  std::uniform_int_distribution<int> nv(3, 12);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Vec3 normal = normalized(Vec3{u(rng), u(rng), u(rng) + 1.4});
    const Vec3 t1 = normalized(cross(normal, Vec3{0.9, 0.1, 0.3}));
    const Vec3 t2 = cross(normal, t1);
    const Vec3 center{u(rng), u(rng), u(rng)};
    const int n = nv(rng);
    std::vector<double> ang(n);
    for (auto& a : ang) a = ua(rng);
    std::sort(ang.begin(), ang.end());
    std::vector<Vec3> verts;
    for (int i = 0; i < n; ++i) {
      const double r = radius(rng);
      verts.push_back(center + r * std::cos(ang[i]) * t1 + r * std::sin(ang[i]) * t2);
    }
    const ClosedPath path(verts, 1000);
    const RotationSetup su = RotationSetup::natural(1.0, {u(rng), u(rng), u(rng)});
    const double area_form = *sagnac_phase(path, su).value;
    const double line_form = *sagnac_phase(path, su, PhaseMethod::line_integral).value;
    worst = std::max(worst, std::abs(area_form - line_form));
  }
  report(2, "sagnac stokes identity on 100 random planar polygons", worst < tol,
         fmt("max |line - area| %.3g, tolerance %.1g", worst, tol));
}

// -----------------------------------------------------------------------
// 3. ehrenfest trajectories vs the classical coriolis + centrifugal oracle
// -----------------------------------------------------------------------
struct ClassicalState {
  Vec3 x, v;
};

ClassicalState rk4_step(const ClassicalState& s, const Vec3& omega, double dt) {
  auto acc = [&](const ClassicalState& st) {
    return 2.0 * cross(st.v, omega) + cross(omega, cross(st.x, omega));
  };
  auto add = [](const ClassicalState& a, const ClassicalState& b, double h) {
    return ClassicalState{a.x + h * b.x, a.v + h * b.v};
  };
  const ClassicalState k1{s.v, acc(s)};
  const ClassicalState s2 = add(s, k1, dt / 2);
  const ClassicalState k2{s2.v, acc(s2)};
  const ClassicalState s3 = add(s, k2, dt / 2);
  const ClassicalState k3{s3.v, acc(s3)};
  const ClassicalState s4 = add(s, k3, dt);
  const ClassicalState k4{s4.v, acc(s4)};
  ClassicalState out = s;
  out.x += (dt / 6.0) * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
  out.v += (dt / 6.0) * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
  return out;
}

void criterion_ehrenfest() {
  const double tol = 0.01;  // 1% of the trajectory scale
  const double m = 5.0, omega_z = 0.5;
  const Vec3 omega{0, 0, omega_z};
  const RotationSetup su(m, 1.0, 1.0, omega);
  const GridSpec g = GridSpec::centered_square(128, 32.0);
  const double period = 2.0 * 3.14159265358979323846 / omega_z;
  const int steps = 1024, sample = 8;
  const double dt = period / steps;

  struct Condition {
    Vec3 x0, p0;
    const char* label;
  };
  const Condition conds[] = {
      {{5.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, "rest in the inertial frame at radius 5"},
      {{0.0, 0.0, 0.0}, {0.0, 2.5, 0.0}, "launched from the origin"},
      {{3.0, 0.0, 0.0}, {0.0, -2.5, 0.0}, "offset with transverse momentum"},
  };

  double worst = 0.0;
  bool ok = true;
  for (const Condition& cond : conds) {
    WaveState s = WaveState::gaussian(g, cond.x0, {1.0, 1.0, 1}, cond.p0, 1.0);
    Diagnostics diag;
    const auto traj = ehrenfest_trajectory(std::move(s), build_hamiltonian(su), dt, steps, sample, &diag);
    ok = ok && !traj.boundary_hit;

    ClassicalState c{cond.x0, cond.p0 / m - cross(omega, cond.x0)};
    std::vector<Vec3> ref{c.x};
    for (int i = 1; i <= steps; ++i) {
      c = rk4_step(c, omega, dt);
      if (i % sample == 0) ref.push_back(c.x);
    }
    double scale = 0.0, dev = 0.0;
    for (const Vec3& x : ref) scale = std::max(scale, norm(x));
    for (std::size_t i = 0; i < ref.size(); ++i)
      dev = std::max(dev, norm(traj.mean_position[i] - ref[i]));
    worst = std::max(worst, dev / scale);
  }
  report(3, "ehrenfest trajectories over one rotation period, 128^2 grid", ok && worst < tol,
         fmt("max relative deviation %.3g, tolerance %.1g", worst, tol));
}

// -----------------------------------------------------------------------
// 4. spin-rotation phase: ordered product vs closed form, full-turn sign flip
// -----------------------------------------------------------------------
void criterion_spin_phase() {
  const double tol_ordered = 1e-8, tol_full_turn = 1e-12;
  std::mt19937 rng(404);
  std::uniform_real_distribution<double> u(-1.0, 1.0), ut(0.5, 6.0);
  double worst = 0.0;
  for (int trial = 0; trial < 8; ++trial) {
    const RotationSetup su = RotationSetup::natural(1.0, {u(rng), u(rng), u(rng)});
    const double t = ut(rng);
    const Mat2c closed = *spin_phase_operator(su, t).op;
    const Mat2c ordered = *spin_phase_operator(su, t, PhaseMethod::ordered_product, 10000).op;
    worst = std::max(worst, frobenius_norm(ordered - closed));
  }
  const RotationSetup su = RotationSetup::natural(1.0, {0, 0, 0.73});
  const double two_pi = 6.283185307179586476925286766559;
  const Mat2c full = *spin_phase_operator(su, two_pi / 0.73).op;
  const double flip = frobenius_norm(full - cd(-1.0) * Mat2c::identity());
  report(4, "spin-rotation closed form vs 1e4-step ordered product; full turn = -1",
         worst < tol_ordered && flip < tol_full_turn,
         fmt("ordered deviation %.3g, full-turn deviation %.3g", worst, flip));
}

// -----------------------------------------------------------------------
// 5. spin-orbit phase on a 256-gon circle
// -----------------------------------------------------------------------
void criterion_spin_orbit() {
  const double tol_op = 1e-6, tol_scalar = 1e-8;
  const RotationSetup su = RotationSetup::natural(1.0, {0, 0, 1.0});
  const ClosedPath circle = ClosedPath::regular_polygon(256, 1.0);
  const Mat2c ordered = *spin_orbit_operator(circle, su, PhaseMethod::ordered_product).op;
  const Mat2c closed = *spin_orbit_operator(circle, su, PhaseMethod::closed_form).op;
  const double opdev = frobenius_norm(ordered - closed);

  // polarized along the area normal (+hbar/2 eigenstate): phase of the
  // up-spinor amplitude equals Omega^2 A / c^2
  const double area = norm(enclosed_area(circle));
  const double expect = *spin_orbit_scalar_phase(circle, su).value;
  const double measured = std::arg(closed(0, 0));
  const bool pass = opdev < tol_op && std::abs(measured - expect) < tol_scalar &&
                    std::abs(expect - area) < 1e-14;
  report(5, "spin-orbit ordered product vs circular closed form; polarized scalar phase", pass,
         fmt("operator deviation %.3g, eigenphase deviation %.3g", opdev, std::abs(measured - expect)));
}

// -----------------------------------------------------------------------
// 6. pauli limit of the low-energy dirac operator (1-D 32-point slice)
// -----------------------------------------------------------------------
void criterion_pauli_limit() {
  // regime: m = 4, extent 16, Omega = 1e-3 z, natural units. budget per level:
  //   1.5 E^2/(2 m c^2)            relativistic dispersion
  //   0.6 hbar Omega               spin coupling on a periodic slice (the
  //                                sampled gauge field has zero net curl
  //                                through the torus, suppressing the
  //                                operator-generated splitting)
  //   1.5 (3/8) m max|A|^2         gauge-potential square left by the
  //                                half-coupling vierbein
  const double m = 4.0, omega_z = 1e-3, extent = 16.0;
  const RotationSetup su(m, 1.0, 1.0, {0, 0, omega_z});
  const GridSpec g = GridSpec::centered_line(32, extent);
  const WeakMetric metric = rotating_metric(su);

  const auto dirac_eigs =
      upper_dominated_eigenvalues(low_energy_dirac_matrix(su, metric, g), g.num_points());
  const PauliReduction red = pauli_reduction(su, metric, g);
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(pauli_matrix(red, g));
  std::vector<double> pauli_eigs(es.eigenvalues().data(),
                                 es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(pauli_eigs.begin(), pauli_eigs.end());

  const std::size_t levels = 14;
  const double amax = omega_z * extent / 2.0;
  const double e_scale = std::pow(2.0 * 3.14159265358979 / extent, 2.0) / (2.0 * m);
  bool within = dirac_eigs.size() >= levels;
  double worst_ratio = 0.0;
  for (std::size_t i = 0; within && i < levels; ++i) {
    const double ep = pauli_eigs[i];
    const double budget = 1.5 * ep * ep / (2.0 * m) + 0.6 * omega_z + 1.5 * 0.375 * m * amax * amax;
    within = within && std::abs(dirac_eigs[i] - ep) <= budget &&
             budget <= 0.05 * std::max(std::abs(ep), e_scale);
    worst_ratio = std::max(worst_ratio, std::abs(dirac_eigs[i] - ep) / std::max(std::abs(ep), e_scale));
  }

  // with E -> 0 the pauli hamiltonian is the spin-rotation hamiltonian exactly
  const double h5h4 = (pauli_matrix(red, g, false) - h4_matrix(su, g)).cwiseAbs().maxCoeff();
  report(6, "dirac upper spectrum vs pauli hamiltonian within budget; H5(E->0) = H4",
         within && h5h4 < 1e-12,
         fmt("worst deviation/scale %.3g (budgeted, < 5%%), H5-H4 residual %.3g", worst_ratio, h5h4));
}

// -----------------------------------------------------------------------
// 7. weak-field gauge invariance and the necessity of the restriction
// -----------------------------------------------------------------------
void criterion_gauge_invariance() {
  const double tol = 1e-10;
  const RotationSetup su = RotationSetup::natural(1.0, {0, 0, 0.8});
  const WeakMetric metric = rotating_metric(su);
  const ClosedPath square({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, 100000);
  const SpacetimeLoop loop = SpacetimeLoop::spatial(square);
  const double base = *weakfield_phase(loop, extract_weak_potential(metric), su).value;

  std::mt19937 rng(707);
  std::uniform_real_distribution<double> uq(0.3, 1.2), uph(0.0, 6.283185307179586), ua(-0.05, 0.05);
  double max_delta = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double a1 = ua(rng), a2 = ua(rng), q1 = uq(rng), q2 = uq(rng), p1 = uph(rng), p2 = uph(rng);
    GaugeVector xi;
    xi.xi0 = [=](const Vec3& x) { return a1 * std::sin(q1 * x.x + p1) + a2 * std::cos(q2 * x.y + p2); };
    xi.grad_xi0 = [=](const Vec3& x) {
      return Vec3{a1 * q1 * std::cos(q1 * x.x + p1), -a2 * q2 * std::sin(q2 * x.y + p2), 0.0};
    };
    const auto [shifted, report_] = gauge_transform_weakfield(metric, xi, {});
    (void)report_;
    const double phi = *weakfield_phase(loop, extract_weak_potential(shifted), su).value;
    max_delta = std::max(max_delta, std::abs(phi - base));
  }

  // counterexample: xi^i_,0 time-independent but nonzero (a steady
  // differential rotation, not a gradient) shifts G by a field with
  // circulation and moves the loop phase
  const double kappa = 0.01;
  const WeakPotential g0 = extract_weak_potential(metric);
  WeakPotential bad;
  bad.g0 = g0.g0;
  bad.gvec = [&, kappa](const Vec3& x) { return g0.gvec(x) - (kappa / su.c) * Vec3{-x.y, x.x, 0.0}; };
  const double counterexample = std::abs(*weakfield_phase(loop, bad, su).value - base);

  report(7, "restricted gauge shifts invariant; unrestricted counterexample shifts the phase",
         max_delta < tol && counterexample > 10.0 * tol,
         fmt("max restricted delta %.3g, counterexample delta %.3g", max_delta, counterexample));
}

// -----------------------------------------------------------------------
// 8. vierbein and spin-connection identities
// -----------------------------------------------------------------------
void criterion_vierbein_connection() {
  const double omega_z = 0.3;
  const RotationSetup su = RotationSetup::natural(1.0, {0, 0, omega_z});
  const WeakMetric metric = rotating_metric(su);
  const Vierbein v = build_vierbein(metric);

  std::mt19937 rng(808);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  bool recon_ok = true;
  double worst = 0.0;
  for (int i = 0; i < 40; ++i) {
    const Vec3 p{u(rng), u(rng), u(rng)};
    const double hf = metric.frobenius(p);
    const double res = vierbein_reconstruction_residual(v, metric, p);
    recon_ok = recon_ok && res <= 0.25 * hf * hf + 1e-12;
    worst = std::max(worst, res);
  }

  // Gamma_120 = -Omega: analytic coefficients vs central differences of h
  const SpinConnection analytic = spin_connection(metric);
  WeakMetric fd = metric;
  fd.dh = nullptr;  // force the finite-difference path
  bool gamma_ok = true;
  double worst_gamma = 0.0;
  for (int i = 0; i < 10; ++i) {
    const Vec3 p{u(rng), u(rng), u(rng)};
    const double a = analytic.gamma(p, 1, 2, 0);
    gamma_ok = gamma_ok && std::abs(a + omega_z) < 1e-12;
    // second-order finite differences: error scales with spacing^2
    fd.fd_spacing = 1e-4;
    const double g1 = spin_connection(fd).gamma(p, 1, 2, 0);
    gamma_ok = gamma_ok && std::abs(g1 - a) < 1e-8;  // h is quadratic: fd is exact to rounding
    worst_gamma = std::max(worst_gamma, std::abs(g1 - a));
  }
  report(8, "vierbein reconstruction bound; Gamma_120 = -Omega (symbolic and finite differences)",
         recon_ok && gamma_ok, fmt("max residual %.3g, max fd deviation %.3g", worst, worst_gamma));
}

// -----------------------------------------------------------------------
// 9. unitarity and norm conservation
// -----------------------------------------------------------------------
void criterion_unitarity() {
  const double tol_norm = 1e-10, tol_unitary = 1e-12;

  // scalar packet in the rotating frame, 1000 steps
  const RotationSetup su(5.0, 1.0, 1.0, {0, 0, 0.5});
  const GridSpec g = GridSpec::centered_square(64, 24.0);
  WaveState s = WaveState::gaussian(g, {3.0, 0, 0}, {0.8, 0.8, 1}, {0, 0, 0}, 1.0);
  const double n0 = grid_norm(s);
  const double drift_scalar = std::abs(grid_norm(propagate(s, build_hamiltonian(su), 0.01, 1000)) - n0);

  // spinor with spin and spin-orbit couplings on, 1000 steps
  WaveState sp = WaveState::spinor_gaussian(g, {2.0, 1.0, 0}, {0.9, 0.9, 1}, {0.5, 0, 0}, 1.0,
                                            cd(0.8), cd(0.0, 0.6));
  const double np0 = grid_norm(sp);
  const double drift_spinor =
      std::abs(grid_norm(propagate(sp, build_hamiltonian(su, true, true), 0.01, 1000)) - np0);

  // phase operators
  const RotationSetup su2 = RotationSetup::natural(1.0, {0.3, -0.4, 0.8});
  double worst_u = 0.0;
  worst_u = std::max(worst_u, unitarity_residual(*spin_phase_operator(su2, 3.1).op));
  worst_u = std::max(worst_u,
                     unitarity_residual(*spin_phase_operator(su2, 3.1, PhaseMethod::ordered_product, 10000).op));
  const ClosedPath circle = ClosedPath::regular_polygon(256, 1.3, {0.4, 0.2, 0.0});
  worst_u = std::max(worst_u, unitarity_residual(*spin_orbit_operator(circle, su2, PhaseMethod::closed_form).op));
  worst_u =
      std::max(worst_u, unitarity_residual(*spin_orbit_operator(circle, su2, PhaseMethod::ordered_product).op));

  report(9, "norm conserved over 1000 steps; phase operators unitary",
         drift_scalar < tol_norm && drift_spinor < tol_norm && worst_u < tol_unitary,
         fmt("max norm drift %.3g, max unitarity residual %.3g", std::max(drift_scalar, drift_spinor),
             worst_u));
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion_gauge_pictures();
  criterion_sagnac_stokes();
  criterion_ehrenfest();
  criterion_spin_phase();
  criterion_spin_orbit();
  criterion_pauli_limit();
  criterion_gauge_invariance();
  criterion_vierbein_connection();
  criterion_unitarity();
  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return 1;
}
