#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "liouville/params.hpp"

namespace liouville {

// Area of the unit sphere S^{n-1}: 2 pi^{n/2} / Gamma(n/2), computed via the
// half-integer Gamma recursion.
double unit_sphere_area(int n);

// State of the radial reduction at radius r. The solution components are
// w[i] = (-Laplace)^i u and z[i] = (-Laplace)^i v for i = 0..m-1, with their
// radial derivatives, plus four quadrature accumulators
//   Qa = int_{B_r} |x|^a |v|^{p+1},  Qb = int_{B_r} |x|^b |u|^{q+1},
//   Pa = int_{B_r} |x|^a |v|^p,     Pb = int_{B_r} |x|^b |u|^q.
struct RadialState {
  double r = 0.0;
  std::vector<double> w, wp, z, zp;  // each of size m
  double Qa = 0.0, Qb = 0.0, Pa = 0.0, Pb = 0.0;
};

// Values of (-Laplace)^i u and (-Laplace)^i v at r = 0. Shooting searches in
// the positive orthant; the all-zero vector is accepted and produces the
// trivial trajectory with a degenerate sign-change event at r0.
struct InitialData {
  std::vector<double> w0;  // size m
  std::vector<double> z0;  // size m

  static InitialData ones(int m);
  static InitialData zeros(int m);
  static InitialData uv(double u0, double v0);  // m = 1
};

enum class EventKind { SignChange, BlowUp };

struct Event {
  EventKind kind;
  double r = 0.0;
  int component = -1;  // 0..m-1 = w_i, m..2m-1 = z_{i-m}; -1 for blow-up
};

std::string component_name(int component, int m);

struct IntegrateOptions {
  double r0 = 1e-3;
  double rtol = 1e-10;
  double atol = 1e-12;
  double blowup_threshold = 1e12;
  bool stop_at_sign_change = false;
  bool scalar = false;  // identify v = u (requires p = q, a = b)
};

// One accepted step of the embedded Dormand-Prince 5(4) integrator together
// with its dense-output coefficients (fourth-order continuous extension).
struct Step {
  double r0 = 0.0, r1 = 0.0;
  std::vector<double> cont;  // 5 * dim coefficients
  int dim() const { return static_cast<int>(cont.size()) / 5; }
  void eval(double theta, double* y) const;
  double eval_component(double theta, int c) const;
};

class Trajectory {
 public:
  Trajectory(ProblemParams prm, bool scalar, std::vector<Step> steps,
             std::vector<Event> events);

  const ProblemParams& params() const { return prm_; }
  bool scalar() const { return scalar_; }
  double r_begin() const;
  double r_end() const;
  bool in_domain(double r) const;

  const std::vector<Step>& steps() const { return steps_; }
  const std::vector<Event>& events() const { return events_; }
  std::optional<Event> first_sign_change() const;
  std::optional<Event> blow_up() const;

  // Dense evaluation anywhere in [r_begin, r_end]. Throws OutOfDomain.
  RadialState state_at(double r) const;
  std::vector<double> raw_state_at(double r) const;

  // Geometric checkpoint radii r0 * 10^{k/8} clipped to the domain, with
  // r_end appended.
  std::vector<double> checkpoint_radii() const;
  // Radii of all accepted steps (r_begin plus every step end).
  std::vector<double> step_radii() const;

  // True while no sign change has occurred at or before r.
  bool positive_at(double r) const;

 private:
  ProblemParams prm_;
  bool scalar_;
  std::vector<Step> steps_;
  std::vector<Event> events_;
};

// Radial vector field of the first-order system. Strict power semantics:
// throws NegativeBase when a negative base would be raised to a non-integer
// exponent (the caller must have stopped at the sign change). state.r == 0
// uses the regularized limit -w_{i+1}/n in place of the singular term.
RadialState vector_field(const ProblemParams& prm, const RadialState& state);

// Taylor-regularized state at small r0 > 0 (<= 1e-3), second order in the
// homogeneous part plus the exact weighted particular term at the top level.
RadialState series_start(const ProblemParams& prm, const InitialData& init, double r0);

// Adaptive embedded RK5(4) integration of the radial system from
// series_start(r0) to r_max. Sign changes are recorded as events; with
// stop_at_sign_change they are terminal, otherwise integration continues
// through them using the odd continuation sign(y)|y|^p of the powers (which
// agrees with the true field up to the first crossing). Any solution
// component exceeding blowup_threshold in magnitude records a BlowUp event
// and stops. Throws StepUnderflow if the step size falls below 1e-14 r.
Trajectory integrate(const ProblemParams& prm, const InitialData& init,
                     double r_max, const IntegrateOptions& opts = {});

// First radius where a solution component reaches zero, refined to relative
// width 1e-10 within the bracketing accepted step.
std::optional<Event> detect_sign_change(const Trajectory& traj);

// Log-log least-squares slope over checkpoints in [window_lo, window_hi].
struct DecaySlopes {
  double slope_u = 0.0;
  double slope_v = 0.0;
};
DecaySlopes decay_fit(const Trajectory& traj, double window_lo, double window_hi);

// Plain least-squares slope of y against x (helper for the log-log fits).
double fit_slope(std::span<const double> x, std::span<const double> y);

// Shooting outcome.
struct SignChangeResult {
  double r = 0.0;
  int component = -1;
};
struct PositiveToRmax {
  double slope_u = 0.0;
  double slope_v = 0.0;
};
struct BlowUpResult {
  double r = 0.0;
};
using ShootResult = std::variant<SignChangeResult, PositiveToRmax, BlowUpResult>;

std::string to_string(const ShootResult& res, int m);

struct BisectionPoint {
  double s = 0.0;          // trial parameter value
  int component = -1;      // first component to vanish (-1: none)
  double r_cross = 0.0;    // crossing radius (r_max if none)
};

struct ShootOutcome {
  ShootResult result;
  std::vector<BisectionPoint> trace;
};

// m = 1 system shooting: u(0) = 1, bisection on v(0) = s in [s_lo, s_hi]
// with predicate "which of u, v vanishes first". Returns the outcome at the
// final midpoint; a shot that stays positive to r_max returns immediately as
// a candidate entire solution. Throws InvalidBracket when both endpoints
// agree on the first-vanishing component.
ShootOutcome shoot_system_m1(const ProblemParams& prm, double s_lo, double s_hi,
                             double r_max, const IntegrateOptions& opts = {});

// Scalar case p = q, a = b (v identified with u, state dimension 2m):
// w0(0) = 1; no free parameter for m = 1, bisection on w1(0) for m = 2,
// coordinate-wise bisection on (w1(0), w2(0)) for m = 3.
ShootOutcome shoot_scalar(const ProblemParams& prm, double r_max,
                          const IntegrateOptions& opts = {});

// Single scalar probe at explicit higher-order initial values (size m-1,
// the values of (-Laplace)^i u(0) for i = 1..m-1).
ShootResult scalar_probe(const ProblemParams& prm, std::span<const double> higher,
                         double r_max, const IntegrateOptions& opts = {});

// Closed-form solution oracles.
enum class OracleKind {
  CriticalBubble,  // m=1, a=0:  u = (n(n-2))^{(n-2)/4} (1+r^2)^{-(n-2)/2}
  HenonBubble,     // m=1:       u = ((n-2)(n+a))^{(n-2)/(2(2+a))} (1+r^{2+a})^{-(n-2)/(2+a)}
  SingularPower,   // m=1, a=0:  u = A r^{-2/(p-1)}, A^{p-1} = (2/(p-1))(n-2-2/(p-1))
};

class ClosedFormSolution {
 public:
  static ClosedFormSolution make(OracleKind kind, int n, double a_or_p = 0.0);

  OracleKind kind() const { return kind_; }
  const ProblemParams& params() const { return prm_; }

  double value(double r) const;
  double deriv(double r) const;
  double second_deriv(double r) const;

  // Max absolute defect of the closed form in the first-order system at r,
  // measured through vector_field.
  double ode_residual(double r) const;

  // Initial data for the regular (bubble) kinds. Throws UnsupportedKind for
  // the singular power solution.
  InitialData initial_data() const;

 private:
  OracleKind kind_;
  ProblemParams prm_;
  double amp_ = 0.0;   // leading amplitude
  double expo_ = 0.0;  // structural exponent (decay rate or power)
};

ClosedFormSolution exact_solution_oracle(OracleKind kind, int n, double a_or_p = 0.0);

}  // namespace liouville
