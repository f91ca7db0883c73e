#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "liouville/errors.hpp"
#include "liouville/radial_ode.hpp"
#include "support/ref_rk4.hpp"

using namespace liouville;
using liouville::testsupport::RefM1;

TEST_CASE("unit sphere areas") {
  CHECK(unit_sphere_area(1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(unit_sphere_area(2) == doctest::Approx(2.0 * std::numbers::pi).epsilon(1e-14));
  CHECK(unit_sphere_area(3) == doctest::Approx(4.0 * std::numbers::pi).epsilon(1e-14));
  CHECK(unit_sphere_area(4) ==
        doctest::Approx(2.0 * std::numbers::pi * std::numbers::pi).epsilon(1e-14));
  CHECK(unit_sphere_area(6) ==
        doctest::Approx(std::pow(std::numbers::pi, 3)).epsilon(1e-13));
}

TEST_CASE("vector field values") {
  const ProblemParams prm{3, 1, 0, 0, 2, 2};

  RadialState s;
  s.r = 0.0;
  s.w = {1.0};
  s.wp = {0.0};
  s.z = {1.0};
  s.zp = {0.0};
  const RadialState d0 = vector_field(prm, s);
  CHECK(d0.wp[0] == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
  CHECK(d0.zp[0] == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));

  // zero state maps to zero derivative, accumulators included
  RadialState z;
  z.r = 0.5;
  z.w = {0.0};
  z.wp = {0.0};
  z.z = {0.0};
  z.zp = {0.0};
  const RadialState dz = vector_field(prm, z);
  CHECK(dz.wp[0] == 0.0);
  CHECK(dz.Qa == 0.0);
  CHECK(dz.Qb == 0.0);
  CHECK(dz.Pa == 0.0);
  CHECK(dz.Pb == 0.0);

  RadialState s1;
  s1.r = 1.0;
  s1.w = {1.0};
  s1.wp = {-0.1};
  s1.z = {4.0};
  s1.zp = {0.0};
  const RadialState d1 = vector_field(prm, s1);
  CHECK(d1.wp[0] == doctest::Approx(-15.8).epsilon(1e-14));
}

TEST_CASE("vector field rejects fractional powers of negative values") {
  const ProblemParams prm{3, 1, 0, 0, 2.5, 2};
  RadialState s;
  s.r = 1.0;
  s.w = {1.0};
  s.wp = {0.0};
  s.z = {-1.0};
  s.zp = {0.0};
  CHECK_THROWS_AS(vector_field(prm, s), NegativeBase);

  // integer exponent is fine
  const ProblemParams pint{3, 1, 0, 0, 3, 2};
  CHECK_NOTHROW(vector_field(pint, s));
}

TEST_CASE("series start") {
  // unweighted reduction: particular term is -c r0^2 / (2n)
  const double r0 = 1e-3;
  const RadialState s0 = series_start({3, 1, 0, 0, 2, 2}, InitialData::uv(1.0, 1.0), r0);
  CHECK(s0.w[0] == doctest::Approx(1.0 - r0 * r0 / 6.0).epsilon(1e-15));
  CHECK(s0.wp[0] == doctest::Approx(-r0 / 3.0).epsilon(1e-12));

  // weighted top level: w(r0) = 1 - r0^4/20, w'(r0) = -r0^3/5 for n=3, a=2
  const RadialState sw = series_start({3, 1, 2, 2, 2, 2}, InitialData::uv(1.0, 1.0), r0);
  CHECK(sw.w[0] == doctest::Approx(1.0 - std::pow(r0, 4) / 20.0).epsilon(1e-15));
  CHECK(sw.wp[0] == doctest::Approx(-std::pow(r0, 3) / 5.0).epsilon(1e-12));

  // zero data stays zero
  const RadialState sz = series_start({3, 1, 0, 0, 2, 2}, InitialData::zeros(1), r0);
  CHECK(sz.w[0] == 0.0);
  CHECK(sz.wp[0] == 0.0);
  CHECK(sz.Qa == 0.0);

  CHECK_THROWS_AS(series_start({3, 1, 0, 0, 2, 2}, InitialData::uv(1.0, 1.0), 0.1),
                  InvalidParams);
}

TEST_CASE("integrating the exact critical bubble") {
  const auto bub = exact_solution_oracle(OracleKind::CriticalBubble, 3);
  CHECK(bub.params().p == doctest::Approx(5.0));
  const Trajectory traj = integrate(bub.params(), bub.initial_data(), 100.0, {});
  for (double r : {1.0, 10.0, 100.0}) {
    const double num = traj.state_at(r).w[0];
    const double ref = bub.value(r);
    CHECK(std::abs(num - ref) / ref < 1e-8);
  }
  CHECK(!detect_sign_change(traj));
  // the symmetric components coincide
  const RadialState s = traj.state_at(7.0);
  CHECK(s.w[0] == doctest::Approx(s.z[0]).epsilon(1e-12));
}

TEST_CASE("zero data gives the zero trajectory with a degenerate event") {
  const Trajectory traj = integrate({3, 1, 0, 0, 2, 2}, InitialData::zeros(1), 10.0, {});
  const auto ev = detect_sign_change(traj);
  REQUIRE(ev.has_value());
  CHECK(ev->r == doctest::Approx(1e-3));
  CHECK(ev->component == 0);
  CHECK(traj.r_end() == doctest::Approx(10.0));
  const RadialState s = traj.state_at(5.0);
  CHECK(s.w[0] == 0.0);
  CHECK(s.Qa == 0.0);
}

TEST_CASE("negative initial data is rejected") {
  CHECK_THROWS_AS(integrate({3, 1, 0, 0, 2, 2}, InitialData::uv(-1.0, 1.0), 10.0, {}),
                  InvalidParams);
}

TEST_CASE("unattainable tolerances underflow the step size") {
  IntegrateOptions opts;
  opts.rtol = 1e-30;  // below machine precision, every step gets rejected
  opts.atol = 1e-300;
  CHECK_THROWS_AS(integrate({3, 1, 0, 0, 2, 2}, InitialData::uv(1.0, 1.0), 10.0, opts),
                  StepUnderflow);
}

TEST_CASE("subcritical shot crosses zero; crossing radius cross-checked") {
  const ProblemParams prm{3, 1, 0, 0, 2, 2};
  IntegrateOptions opts;
  opts.stop_at_sign_change = true;
  const Trajectory traj = integrate(prm, InitialData::uv(1.0, 1.0), 1e3, opts);
  const auto ev = detect_sign_change(traj);
  REQUIRE(ev.has_value());
  CHECK(ev->r < 1e3);

  // independent fixed-step reference
  RefM1 ref{3, 0, 0, 2, 2};
  double crossing = -1.0;
  ref.run(1.0, 1.0, 1e-3, 20.0, 2e-5, &crossing);
  REQUIRE(crossing > 0.0);
  CHECK(std::abs(ev->r - crossing) / crossing < 1e-6);

  // refinement is stable under tighter tolerances
  IntegrateOptions tight = opts;
  tight.rtol = 1e-12;
  tight.atol = 1e-14;
  const auto ev2 = detect_sign_change(integrate(prm, InitialData::uv(1.0, 1.0), 1e3, tight));
  REQUIRE(ev2.has_value());
  CHECK(std::abs(ev->r - ev2->r) / ev->r < 1e-8);
}

TEST_CASE("bubble trajectory matches the independent fixed-step integrator") {
  const auto bub = exact_solution_oracle(OracleKind::CriticalBubble, 3);
  const Trajectory traj = integrate(bub.params(), bub.initial_data(), 10.0, {});
  RefM1 ref{3, 0, 0, 5, 5};
  const auto y = ref.run(bub.value(0), bub.value(0), 1e-3, 10.0, 1e-4);
  CHECK(std::abs(traj.state_at(10.0).w[0] - y[0]) / y[0] < 1e-8);
}

TEST_CASE("monotone derivatives while positive") {
  const ProblemParams prm{5, 2, 1, 2, 2, 3};
  InitialData init;
  init.w0 = {1.0, 0.5};
  init.z0 = {0.8, 0.3};
  IntegrateOptions opts;
  opts.stop_at_sign_change = true;
  const Trajectory traj = integrate(prm, init, 1e3, opts);
  const auto sc = traj.first_sign_change();
  const double r_pos = sc ? sc->r : traj.r_end();
  for (double r : traj.step_radii()) {
    if (r >= r_pos) break;
    const RadialState s = traj.state_at(r);
    for (int i = 0; i < prm.m; ++i) {
      CHECK(s.wp[i] < 0.0);
      CHECK(s.zp[i] < 0.0);
    }
  }
}

TEST_CASE("scaling covariance of the flow") {
  // if (u, v) solves the system then so does (L^au u(Lr), L^av v(Lr))
  const ProblemParams prm{5, 1, 0, 0, 5, 5};
  const auto [au, av] = scaling_exponents(prm);
  const double L = 2.0;
  const Trajectory t1 = integrate(prm, InitialData::uv(1.0, 1.0), 1e3, {});
  const Trajectory t2 = integrate(
      prm, InitialData::uv(std::pow(L, au), std::pow(L, av)), 500.0, {});
  for (double r : {0.01, 0.1, 1.0, 10.0, 100.0}) {
    const double lhs = t2.state_at(r).w[0];
    const double rhs = std::pow(L, au) * t1.state_at(L * r).w[0];
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-7);
  }
}

TEST_CASE("tolerance tightening improves accuracy by 4x per decade") {
  const auto bub = exact_solution_oracle(OracleKind::CriticalBubble, 3);
  double prev = -1.0;
  for (double rtol : {1e-6, 1e-7, 1e-8, 1e-9}) {
    IntegrateOptions opts;
    opts.rtol = rtol;
    opts.atol = rtol * 1e-2;
    const Trajectory traj = integrate(bub.params(), bub.initial_data(), 20.0, opts);
    const double err =
        std::abs(traj.state_at(10.0).w[0] - bub.value(10.0)) / bub.value(10.0);
    if (prev > 0.0) CHECK(prev / err > 4.0);
    prev = err;
  }
}

TEST_CASE("accumulators agree with composite quadrature") {
  const ProblemParams prm{3, 1, 1, 2, 2, 3};
  const Trajectory traj = integrate(prm, InitialData::uv(0.4, 0.3), 8.0, {});
  const double omega = unit_sphere_area(prm.n);
  const double R = 5.0;

  // composite Simpson on a fine uniform grid, from dense trajectory samples
  auto simpson = [&](auto f) {
    const int N = 20000;  // even
    const double lo = 1e-3, h = (R - lo) / N;
    double acc = f(lo) + f(R);
    for (int i = 1; i < N; ++i) acc += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
  };
  const double Pa_q = simpson([&](double r) {
    return omega * std::pow(r, prm.n - 1.0 + prm.a) * std::pow(traj.state_at(r).z[0], prm.p);
  });
  const double Qb_q = simpson([&](double r) {
    return omega * std::pow(r, prm.n - 1.0 + prm.b) *
           std::pow(traj.state_at(r).w[0], prm.q + 1.0);
  });
  const RadialState s = traj.state_at(R);
  CHECK(std::abs(s.Pa - Pa_q) / Pa_q < 1e-7);
  CHECK(std::abs(s.Qb - Qb_q) / Qb_q < 1e-7);
  // accumulators never decrease
  double prev = 0.0;
  for (double r : traj.checkpoint_radii()) {
    const double cur = traj.state_at(r).Qa;
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("decay fits") {
  const auto bub = exact_solution_oracle(OracleKind::CriticalBubble, 3);
  const Trajectory traj = integrate(bub.params(), bub.initial_data(), 1e3, {});
  const DecaySlopes sl = decay_fit(traj, 1e2, 1e3);
  CHECK(std::abs(sl.slope_u + 1.0) < 0.02);
  CHECK(std::abs(sl.slope_v + 1.0) < 0.02);

  // pure power-law data recovers the exponent exactly
  std::vector<double> lr, lu;
  for (int i = 0; i <= 16; ++i) {
    const double r = std::pow(10.0, 2.0 + i / 8.0);
    lr.push_back(std::log(r));
    lu.push_back(std::log(1.0574 * std::pow(r, -0.5)));
  }
  CHECK(fit_slope(lr, lu) == doctest::Approx(-0.5).epsilon(1e-12));

  // constant data has slope zero
  std::vector<double> lc(lr.size(), std::log(3.7));
  CHECK(fit_slope(lr, lc) == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(
      decay_fit(integrate({3, 1, 0, 0, 2, 2}, InitialData::zeros(1), 10.0, {}), 1.0, 10.0),
      NotPositiveOnWindow);
}

TEST_CASE("closed-form oracles solve their equations") {
  const auto bub = exact_solution_oracle(OracleKind::CriticalBubble, 3);
  CHECK(bub.value(0.0) == doctest::Approx(std::pow(3.0, 0.25)).epsilon(1e-14));
  CHECK(bub.deriv(0.0) == 0.0);
  for (double r : {0.5, 1.0, 5.0}) CHECK(bub.ode_residual(r) < 1e-12);

  const auto hen = exact_solution_oracle(OracleKind::HenonBubble, 5, 1.5);
  CHECK(hen.params().p == doctest::Approx((5.0 + 2.0 + 3.0) / 3.0));
  for (double r : {0.3, 1.0, 4.0}) CHECK(hen.ode_residual(r) < 1e-11);
  // reduces to the unweighted bubble at a = 0
  const auto hen0 = exact_solution_oracle(OracleKind::HenonBubble, 3, 0.0);
  CHECK(hen0.value(1.3) == doctest::Approx(bub.value(1.3)).epsilon(1e-14));

  const auto sing = exact_solution_oracle(OracleKind::SingularPower, 5, 5.0);
  CHECK(sing.value(1.0) == doctest::Approx(std::pow(1.25, 0.25)).epsilon(1e-14));
  for (double r : {0.5, 1.0, 10.0}) CHECK(sing.ode_residual(r) < 1e-12);
  CHECK_THROWS_AS(sing.initial_data(), UnsupportedKind);

  CHECK_THROWS_AS(exact_solution_oracle(OracleKind::CriticalBubble, 2), UnsupportedKind);
  CHECK_THROWS_AS(exact_solution_oracle(OracleKind::SingularPower, 3, 2.0),
                  UnsupportedKind);
}

TEST_CASE("trajectory domain and checkpoints") {
  const Trajectory traj = integrate({3, 1, 0, 0, 2, 2}, InitialData::uv(0.2, 0.2), 50.0, {});
  CHECK(traj.r_begin() == doctest::Approx(1e-3));
  CHECK(traj.r_end() >= 50.0 * (1.0 - 1e-12));
  CHECK_THROWS_AS(traj.state_at(100.0), OutOfDomain);
  CHECK_THROWS_AS(traj.state_at(1e-5), OutOfDomain);
  const auto radii = traj.checkpoint_radii();
  REQUIRE(radii.size() > 10);
  for (size_t i = 1; i < radii.size(); ++i) CHECK(radii[i] > radii[i - 1]);
  CHECK(radii.front() == doctest::Approx(1e-3));
  CHECK(radii.back() == doctest::Approx(traj.r_end()));
}
