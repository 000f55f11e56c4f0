#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rotqm/metric.hpp"
#include "rotqm/phases.hpp"

using namespace rotqm;

namespace {

ClosedPath unit_square(int subdiv = 1) {
  return ClosedPath({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, subdiv);
}

ClosedPath random_planar_polygon(std::mt19937& rng, int n, int subdiv) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), radius(0.5, 2.5);
  const Vec3 normal = normalized(Vec3{u(rng), u(rng), u(rng) + 1.4});
  const Vec3 t1 = normalized(cross(normal, Vec3{0.9, 0.1, 0.3}));
  const Vec3 t2 = cross(normal, t1);
  const Vec3 center{u(rng), u(rng), u(rng)};
  std::vector<double> ang(n);
  std::uniform_real_distribution<double> ua(0.0, 6.283185307179586);
  for (auto& a : ang) a = ua(rng);
  std::sort(ang.begin(), ang.end());
  std::vector<Vec3> v;
  for (int i = 0; i < n; ++i) {
    const double r = radius(rng);
    v.push_back(center + r * std::cos(ang[i]) * t1 + r * std::sin(ang[i]) * t2);
  }
  return ClosedPath(std::move(v), subdiv);
}

double operator_distance(const Mat2c& a, const Mat2c& b) { return frobenius_norm(a - b); }

}  // namespace

// ---------------------------------------------------------------------------
// Sagnac
// ---------------------------------------------------------------------------

TEST_CASE("sagnac phase vanishes when the loop plane contains Omega") {
  // loop in the xz-plane, Omega along z: area vector is along y
  const ClosedPath p({{0, 0, 0}, {1, 0, 0}, {1, 0, 1}, {0, 0, 1}});
  const RotationSetup su = RotationSetup::natural(1.0, {0, 0, 1.0});
  CHECK(*sagnac_phase(p, su).value == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("sagnac phase of the unit square") {
  const RotationSetup su = RotationSetup::natural(1.0, {0, 0, 1.0});
  CHECK(*sagnac_phase(unit_square(), su).value == Catch::Approx(2.0).margin(1e-14));
  CHECK(*sagnac_phase(unit_square(1000), su, PhaseMethod::line_integral).value ==
        Catch::Approx(2.0).margin(1e-12));
}

TEST_CASE("sagnac line integral agrees with the area form (stokes identity)") {
  std::mt19937 rng(31415);
  std::uniform_real_distribution<double> uo(-1.0, 1.0);
  std::uniform_int_distribution<int> nv(3, 10);
  for (int trial = 0; trial < 25; ++trial) {
    const ClosedPath p = random_planar_polygon(rng, nv(rng), 1000);
    const RotationSetup su = RotationSetup::natural(1.0, {uo(rng), uo(rng), uo(rng)});
    const double area_form = *sagnac_phase(p, su).value;
    const double line_form = *sagnac_phase(p, su, PhaseMethod::line_integral).value;
    CHECK(std::abs(area_form - line_form) < 1e-10);
  }
}

TEST_CASE("sagnac phase doubles when the loop is traversed twice") {
  const RotationSetup su = RotationSetup::natural(1.3, {0.2, -0.4, 0.9});
  std::mt19937 rng(8);
  const ClosedPath p = random_planar_polygon(rng, 6, 1);
  std::vector<Vec3> twice = p.vertices;
  twice.insert(twice.end(), p.vertices.begin(), p.vertices.end());
  const ClosedPath p2(twice, 1);
  CHECK(*sagnac_phase(p2, su).value == Catch::Approx(2.0 * *sagnac_phase(p, su).value).epsilon(1e-14));
  // the reduced value folds into [0, 2 pi)
  const PhaseResult r = sagnac_phase(p2, su);
  CHECK(r.value_mod_2pi() >= 0.0);
  CHECK(r.value_mod_2pi() < 6.283185307179587);
}

// ---------------------------------------------------------------------------
// Spin-rotation
// ---------------------------------------------------------------------------

TEST_CASE("spin phase closed form at marker times") {
  const double w = 0.83;
  const RotationSetup su = RotationSetup::natural(1.0, {0, 0, w});

  CHECK(operator_distance(*spin_phase_operator(su, 0.0).op, Mat2c::identity()) == 0.0);

  // a full turn flips the spinor sign
  const double two_pi = 6.283185307179586476925286766559;
  const Mat2c full = *spin_phase_operator(su, two_pi / w).op;
  CHECK(operator_distance(full, cd(-1.0) * Mat2c::identity()) < 1e-12);

  // half a turn gives i sigma_z
  const Mat2c half = *spin_phase_operator(su, two_pi / (2.0 * w)).op;
  CHECK(operator_distance(half, cd(0.0, 1.0) * pauli(2)) < 1e-12);
}

TEST_CASE("ordered product converges to the spin closed form") {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> u(-1.0, 1.0), ut(0.1, 5.0);
  for (int trial = 0; trial < 5; ++trial) {
    const RotationSetup su = RotationSetup::natural(1.0, {u(rng), u(rng), u(rng)});
    const double t = ut(rng);
    const Mat2c closed = *spin_phase_operator(su, t).op;
    const Mat2c ordered = *spin_phase_operator(su, t, PhaseMethod::ordered_product, 10000).op;
    CHECK(operator_distance(ordered, closed) < 1e-8);
    CHECK(unitarity_residual(ordered) < 1e-12);
  }
  // Omega = 0 with the ordered product returns the identity
  const RotationSetup su0 = RotationSetup::natural(1.0, {0, 0, 0});
  CHECK(operator_distance(*spin_phase_operator(su0, 2.0, PhaseMethod::ordered_product, 100).op,
                          Mat2c::identity()) == 0.0);
  CHECK_THROWS_AS(spin_phase_operator(su0, -1.0), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Spin-orbit
// ---------------------------------------------------------------------------

TEST_CASE("spin-orbit operator is the identity without rotation") {
  const RotationSetup su = RotationSetup::natural(1.0, {0, 0, 0});
  const ClosedPath circle = ClosedPath::regular_polygon(64, 1.0);
  CHECK(operator_distance(*spin_orbit_operator(circle, su, PhaseMethod::ordered_product).op,
                          Mat2c::identity()) == 0.0);
}

TEST_CASE("path-ordered product matches the closed form on a centered circle") {
  const RotationSetup su = RotationSetup::natural(1.0, {0, 0, 1.0});
  const ClosedPath circle = ClosedPath::regular_polygon(256, 1.0);
  const Mat2c ordered = *spin_orbit_operator(circle, su, PhaseMethod::ordered_product).op;
  const Mat2c closed = *spin_orbit_operator(circle, su, PhaseMethod::closed_form).op;
  CHECK(operator_distance(ordered, closed) < 1e-6);
  CHECK(unitarity_residual(ordered) < 1e-12);
  CHECK(unitarity_residual(closed) < 1e-12);
}

TEST_CASE("ordered product converges to the ideal circle at order >= 1") {
  // against exp(i 2 Omega^2 A.S / hbar c^2) with A = pi R^2 (the ideal circle),
  // the n-gon product differs by the polygon area deficit, O(1/n^2)
  const RotationSetup su = RotationSetup::natural(1.0, {0, 0, 1.0});
  const double pi = 3.14159265358979323846;
  const Mat2c ideal = pauli_exponential({0, 0, pi});
  std::vector<double> err;
  for (std::size_t n : {64u, 128u, 256u}) {
    const Mat2c ordered =
        *spin_orbit_operator(ClosedPath::regular_polygon(n, 1.0), su, PhaseMethod::ordered_product).op;
    err.push_back(operator_distance(ordered, ideal));
  }
  const double order1 = std::log2(err[0] / err[1]);
  const double order2 = std::log2(err[1] / err[2]);
  CHECK(order1 >= 1.0);
  CHECK(order2 >= 1.0);
  CHECK(err[2] < 1e-3);
}

TEST_CASE("reversing the path inverts the spin-orbit operator") {
  // off-center circle: the per-segment generators do not commute, so the
  // ordering genuinely matters
  const RotationSetup su = RotationSetup::natural(1.0, {0, 0, 1.2});
  const ClosedPath circle = ClosedPath::regular_polygon(64, 1.0, {1.5, 0.5, 0.0});
  const Mat2c fwd = *spin_orbit_operator(circle, su, PhaseMethod::ordered_product).op;
  const Mat2c bwd = *spin_orbit_operator(reversed(circle), su, PhaseMethod::ordered_product).op;
  CHECK(operator_distance(bwd, adjoint(fwd)) < 1e-10);
}

TEST_CASE("polarized scalar phase") {
  SECTION("area pi at unit rotation rate") {
    // square of area pi, natural units: dphi = Omega^2 A / c^2 = pi
    const double s = std::sqrt(3.14159265358979323846);
    const ClosedPath p({{0, 0, 0}, {s, 0, 0}, {s, s, 0}, {0, s, 0}});
    const RotationSetup su = RotationSetup::natural(1.0, {0, 0, 1.0});
    CHECK(*spin_orbit_scalar_phase(p, su).value == Catch::Approx(3.14159265358979323846).epsilon(1e-14));
  }

  SECTION("earth rotation, one square meter, SI units") {
    const double omega_e = 7.29e-5, c_si = 299792458.0;
    const RotationSetup su(1.0, 1.0, c_si, {0, 0, omega_e});
    const ClosedPath p({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
    const double phi = *spin_orbit_scalar_phase(p, su).value;
    CHECK(phi == Catch::Approx(omega_e * omega_e / (c_si * c_si)).epsilon(1e-12));
    CHECK(phi == Catch::Approx(5.913e-26).epsilon(1e-3));
    // cross-check against the operator eigenphase: Phi - Phi^dag = 2 i sin(dphi) sigma.n
    const Mat2c op = *spin_orbit_operator(p, su, PhaseMethod::closed_form).op;
    CHECK(std::abs((op(0, 0) - std::conj(op(0, 0))).imag() / 2.0 - phi) < 1e-28);
  }

  SECTION("figure eight with canceling lobes") {
    const ClosedPath p({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 0},
                        {0, -1, 0}, {-1, -1, 0}, {-1, 0, 0}});
    CHECK(norm(enclosed_area(p)) < 1e-15);
    const RotationSetup su = RotationSetup::natural(1.0, {0, 0, 2.0});
    CHECK(*spin_orbit_scalar_phase(p, su).value == 0.0);
  }

  SECTION("non-planar paths are rejected") {
    const ClosedPath skew({{0, 0, 0}, {1, 0, 0}, {1, 1, 0.4}, {0, 1, 0}});
    const RotationSetup su = RotationSetup::natural(1.0, {0, 0, 1.0});
    CHECK_THROWS_AS(spin_orbit_scalar_phase(skew, su), std::invalid_argument);
  }
}

// ---------------------------------------------------------------------------
// Weak-field phase
// ---------------------------------------------------------------------------

TEST_CASE("weak-field phase reproduces the sagnac phase for the rotating metric") {
  const RotationSetup su = RotationSetup::natural(1.0, {0, 0, 1.0});
  const WeakPotential g = extract_weak_potential(rotating_metric(su));
  const SpacetimeLoop loop = SpacetimeLoop::spatial(unit_square(64));
  CHECK(*weakfield_phase(loop, g, su).value == Catch::Approx(2.0).margin(1e-12));
  CHECK(*weakfield_phase(loop, g, su).value ==
        Catch::Approx(*sagnac_phase(unit_square(), su).value).margin(1e-12));
}

TEST_CASE("weak-field phase vanishes for flat space") {
  WeakPotential g;
  g.g0 = [](const Vec3&) { return 0.0; };
  g.gvec = [](const Vec3&) { return Vec3{}; };
  const RotationSetup su = RotationSetup::natural(1.0, {0, 0, 1.0});
  // loop with genuine time legs
  const SpacetimeLoop loop({{0.0, {0, 0, 0}}, {1.0, {1, 0, 0}}, {2.0, {1, 1, 0}}, {0.5, {0, 1, 0}}}, 16);
  CHECK(*weakfield_phase(loop, g, su).value == 0.0);
}

TEST_CASE("restricted gauge shifts leave the loop phase invariant") {
  const RotationSetup su = RotationSetup::natural(1.0, {0, 0, 0.8});
  const WeakPotential g = extract_weak_potential(rotating_metric(su));
  // high subdivision count: the residual is midpoint-rule quadrature error
  const SpacetimeLoop loop = SpacetimeLoop::spatial(unit_square(100000));
  const double base = *weakfield_phase(loop, g, su).value;

  std::mt19937 rng(99);
  std::uniform_real_distribution<double> ua(0.3, 1.2), uc(-0.2, 0.2), up(0.0, 6.28);
  for (int trial = 0; trial < 6; ++trial) {
    const double a1 = ua(rng), a2 = ua(rng), c1 = uc(rng), c2 = uc(rng), p1 = up(rng), p2 = up(rng);
    // G^mu -> G^mu - d^mu xi0 for smooth xi0(x), plus a constant time slope
    const double slope = uc(rng);
    auto xi0 = [=](const Vec3& x) { return c1 * std::sin(a1 * x.x + p1) + c2 * std::cos(a2 * x.y + p2); };
    auto grad = [=](const Vec3& x) {
      return Vec3{c1 * a1 * std::cos(a1 * x.x + p1), -c2 * a2 * std::sin(a2 * x.y + p2), 0.0};
    };
    (void)xi0;
    WeakPotential shifted;
    shifted.g0 = [=](const Vec3& x) { return g.g0(x) - slope; };
    shifted.gvec = [=](const Vec3& x) { return g.gvec(x) + grad(x); };
    const double phi = *weakfield_phase(loop, shifted, su).value;
    CHECK(std::abs(phi - base) < 1e-10);
  }
}

TEST_CASE("time-independent xi^i_,0  shifts the loop phase: the restriction is necessary") {
  const RotationSetup su = RotationSetup::natural(1.0, {0, 0, 0.8});
  const WeakPotential g = extract_weak_potential(rotating_metric(su));
  const SpacetimeLoop loop = SpacetimeLoop::spatial(unit_square(2000));
  const double base = *weakfield_phase(loop, g, su).value;

  // xi^i = t f^i(x) with a non-gradient f (a steady differential rotation):
  // h_0i picks up +f_i/c, so G^i shifts by -f_i/c, which has nonzero circulation
  const double kappa = 0.01;
  WeakPotential bad;
  bad.g0 = g.g0;
  bad.gvec = [=](const Vec3& x) { return g.gvec(x) - (kappa / su.c) * Vec3{-x.y, x.x, 0.0}; };
  const double phi = *weakfield_phase(loop, bad, su).value;
  // expected shift: -(m/hbar) kappa 2A = -0.02 for the unit square
  CHECK(std::abs(phi - base) > 10.0 * 1e-10);
  CHECK(phi - base == Catch::Approx(-0.02).epsilon(1e-10));
}

TEST_CASE("spacetime loop validation") {
  CHECK_THROWS_AS(SpacetimeLoop({{0.0, {0, 0, 0}}, {1.0, {1, 0, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(SpacetimeLoop({{0.0, {0, 0, 0}}, {1.0, {1, 0, 0}}, {0.0, {0, 0, 0}}}),
                  std::invalid_argument);
}
