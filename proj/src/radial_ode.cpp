#include "liouville/radial_ode.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "liouville/errors.hpp"

namespace liouville {

double unit_sphere_area(int n) {
  if (n < 1) throw InvalidParams("dimension must be >= 1");
  // Gamma(n/2) by the recursion Gamma(x+1) = x Gamma(x), seeded at
  // Gamma(1) = 1 or Gamma(1/2) = sqrt(pi).
  double g = (n % 2 == 0) ? 1.0 : std::sqrt(std::numbers::pi);
  for (double x = (n % 2 == 0) ? 1.0 : 0.5; x < n / 2.0 - 0.25; x += 1.0) g *= x;
  return 2.0 * std::pow(std::numbers::pi, n / 2.0) / g;
}

namespace {

bool is_integer(double x) { return std::floor(x) == x; }

// Strict power: negative base with non-integer exponent is the caller's bug.
double pow_strict(double base, double expo) {
  if (base < 0.0 && !is_integer(expo))
    throw NegativeBase("negative base raised to non-integer exponent");
  return std::pow(base, expo);
}

// Odd continuation sign(y)|y|^p, used by the integrator so trajectories can
// be continued through a zero crossing; identical to pow while y >= 0.
double pow_odd(double base, double expo) {
  const double v = std::pow(std::abs(base), expo);
  return base < 0.0 ? -v : v;
}

enum class PowPolicy { Strict, OddContinuation };

// Layout of the raw state vector y:
//   coupled: [w_0..w_{m-1}, w'_0..w'_{m-1}, z_0..z_{m-1}, z'_0..z'_{m-1}, Qa, Qb, Pa, Pb]
//   scalar:  [w_0..w_{m-1}, w'_0..w'_{m-1}, Qa, Qb, Pa, Pb]        (z = w)
struct SystemView {
  const ProblemParams& prm;
  bool scalar;
  int m;

  int dim() const { return (scalar ? 2 * m : 4 * m) + 4; }
  int iw(int i) const { return i; }
  int iwp(int i) const { return m + i; }
  int iz(int i) const { return scalar ? i : 2 * m + i; }
  int izp(int i) const { return scalar ? m + i : 3 * m + i; }
  int iacc() const { return (scalar ? 2 : 4) * m; }
  int num_solution_components() const { return scalar ? m : 2 * m; }

  // component index c -> position of its value in y
  int value_index(int c) const { return c < m ? iw(c) : iz(c - m); }

  void rhs(double r, const double* y, double* dy, PowPolicy pol) const {
    const double n = prm.n;
    const auto pw = (pol == PowPolicy::Strict) ? pow_strict : pow_odd;
    const double u0 = y[iw(0)];
    const double v0 = y[iz(0)];
    const double fw = pw(v0, prm.p);  // v^p drives the w chain
    const double fz = pw(u0, prm.q);  // u^q drives the z chain
    const double omega = unit_sphere_area(prm.n);

    const double inv_r = (r > 0.0) ? 1.0 / r : 0.0;
    auto chain = [&](auto idx_v, auto idx_d, double forcing, double weight_exp) {
      for (int i = 0; i < m; ++i) {
        // pow(0, 0) = 1, so the weight factor has the right r -> 0 limit
        const double next = (i + 1 < m) ? y[idx_v(i + 1)]
                                        : std::pow(r, weight_exp) * forcing;
        dy[idx_v(i)] = y[idx_d(i)];
        if (r > 0.0)
          dy[idx_d(i)] = -(n - 1.0) * inv_r * y[idx_d(i)] - next;
        else
          dy[idx_d(i)] = -next / n;  // regularized limit at the origin
      }
    };
    chain([&](int i) { return iw(i); }, [&](int i) { return iwp(i); }, fw, prm.a);
    if (!scalar)
      chain([&](int i) { return iz(i); }, [&](int i) { return izp(i); }, fz, prm.b);

    const double ra = std::pow(r, n - 1.0 + prm.a);
    const double rb = std::pow(r, n - 1.0 + prm.b);
    dy[iacc() + 0] = omega * ra * std::pow(std::abs(v0), prm.p + 1.0);
    dy[iacc() + 1] = omega * rb * std::pow(std::abs(u0), prm.q + 1.0);
    dy[iacc() + 2] = omega * ra * std::pow(std::abs(v0), prm.p);
    dy[iacc() + 3] = omega * rb * std::pow(std::abs(u0), prm.q);
  }

  RadialState unpack(double r, const double* y) const {
    RadialState s;
    s.r = r;
    s.w.resize(m);
    s.wp.resize(m);
    s.z.resize(m);
    s.zp.resize(m);
    for (int i = 0; i < m; ++i) {
      s.w[i] = y[iw(i)];
      s.wp[i] = y[iwp(i)];
      s.z[i] = y[iz(i)];
      s.zp[i] = y[izp(i)];
    }
    s.Qa = y[iacc() + 0];
    s.Qb = y[iacc() + 1];
    s.Pa = y[iacc() + 2];
    s.Pb = y[iacc() + 3];
    return s;
  }
};

}  // namespace

InitialData InitialData::ones(int m) {
  return {std::vector<double>(m, 1.0), std::vector<double>(m, 1.0)};
}

InitialData InitialData::zeros(int m) {
  return {std::vector<double>(m, 0.0), std::vector<double>(m, 0.0)};
}

InitialData InitialData::uv(double u0, double v0) { return {{u0}, {v0}}; }

std::string component_name(int component, int m) {
  if (component < 0) return "-";
  if (component < m) return "u" + std::to_string(component);
  return "v" + std::to_string(component - m);
}

RadialState vector_field(const ProblemParams& prm, const RadialState& state) {
  prm.validate();
  if (static_cast<int>(state.w.size()) != prm.m)
    throw InvalidParams("state order does not match m");
  SystemView sys{prm, false, prm.m};
  std::vector<double> y(sys.dim()), dy(sys.dim());
  for (int i = 0; i < prm.m; ++i) {
    y[sys.iw(i)] = state.w[i];
    y[sys.iwp(i)] = state.wp[i];
    y[sys.iz(i)] = state.z[i];
    y[sys.izp(i)] = state.zp[i];
  }
  y[sys.iacc() + 0] = state.Qa;
  y[sys.iacc() + 1] = state.Qb;
  y[sys.iacc() + 2] = state.Pa;
  y[sys.iacc() + 3] = state.Pb;
  sys.rhs(state.r, y.data(), dy.data(), PowPolicy::Strict);
  return sys.unpack(state.r, dy.data());
}

namespace {

std::vector<double> series_start_raw(const SystemView& sys, const InitialData& init,
                                     double r0) {
  const ProblemParams& prm = sys.prm;
  const int m = sys.m;
  const double n = prm.n;
  std::vector<double> y(sys.dim(), 0.0);
  const double cu = pow_strict(init.z0[0], prm.p);  // forcing amplitude for w chain
  const double cv = pow_strict(init.w0[0], prm.q);

  auto fill = [&](const std::vector<double>& v0, auto idx_v, auto idx_d, double c,
                  double wt) {
    for (int i = 0; i + 1 < m; ++i) {
      y[idx_v(i)] = v0[i] - v0[i + 1] * r0 * r0 / (2.0 * n);
      y[idx_d(i)] = -v0[i + 1] * r0 / n;
    }
    const double K = (2.0 + wt) * (n + wt);
    y[idx_v(m - 1)] = v0[m - 1] - c * std::pow(r0, 2.0 + wt) / K;
    y[idx_d(m - 1)] = -c * std::pow(r0, 1.0 + wt) / (n + wt);
  };
  fill(init.w0, [&](int i) { return sys.iw(i); }, [&](int i) { return sys.iwp(i); }, cu,
       prm.a);
  if (!sys.scalar)
    fill(init.z0, [&](int i) { return sys.iz(i); }, [&](int i) { return sys.izp(i); }, cv,
         prm.b);

  const double omega = unit_sphere_area(prm.n);
  y[sys.iacc() + 0] = omega * pow_strict(init.z0[0], prm.p + 1.0) *
                      std::pow(r0, n + prm.a) / (n + prm.a);
  y[sys.iacc() + 1] = omega * pow_strict(init.w0[0], prm.q + 1.0) *
                      std::pow(r0, n + prm.b) / (n + prm.b);
  y[sys.iacc() + 2] = omega * cu * std::pow(r0, n + prm.a) / (n + prm.a);
  y[sys.iacc() + 3] = omega * cv * std::pow(r0, n + prm.b) / (n + prm.b);
  return y;
}

void check_init(const ProblemParams& prm, const InitialData& init, bool scalar) {
  if (static_cast<int>(init.w0.size()) != prm.m ||
      (!scalar && static_cast<int>(init.z0.size()) != prm.m))
    throw InvalidParams("initial data size does not match m");
  for (double v : init.w0)
    if (!(v >= 0.0)) throw InvalidParams("initial data must be nonnegative");
  if (!scalar)
    for (double v : init.z0)
      if (!(v >= 0.0)) throw InvalidParams("initial data must be nonnegative");
}

}  // namespace

RadialState series_start(const ProblemParams& prm, const InitialData& init, double r0) {
  prm.validate();
  check_init(prm, init, false);
  if (!(r0 > 0.0) || r0 > 1e-3) throw InvalidParams("r0 must lie in (0, 1e-3]");
  SystemView sys{prm, false, prm.m};
  return sys.unpack(r0, series_start_raw(sys, init, r0).data());
}

// ---------------------------------------------------------------------------
// Dormand-Prince 5(4) with dense output (Hairer's DOPRI5 coefficients).

namespace dp5 {
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;
}  // namespace dp5

void Step::eval(double theta, double* y) const {
  const int d = dim();
  const double th1 = 1.0 - theta;
  for (int i = 0; i < d; ++i) {
    const double* c = cont.data() + 5 * i;
    y[i] = c[0] + theta * (c[1] + th1 * (c[2] + theta * (c[3] + th1 * c[4])));
  }
}

double Step::eval_component(double theta, int c) const {
  const double* q = cont.data() + 5 * c;
  const double th1 = 1.0 - theta;
  return q[0] + theta * (q[1] + th1 * (q[2] + theta * (q[3] + th1 * q[4])));
}

namespace {

struct Stepper {
  const SystemView& sys;
  PowPolicy pol;
  int dim;
  std::vector<double> k1, k2, k3, k4, k5, k6, k7, ytmp;

  explicit Stepper(const SystemView& s, PowPolicy policy)
      : sys(s), pol(policy), dim(s.dim()) {
    for (auto* v : {&k1, &k2, &k3, &k4, &k5, &k6, &k7, &ytmp}) v->resize(dim);
  }

  // One attempted step from (r, y) with size h; on return y1 holds the
  // 5th-order result, err the scaled error norm. k1 must hold f(r, y).
  double attempt(double r, const std::vector<double>& y, double h,
                 std::vector<double>& y1, double rtol, double atol) {
    using namespace dp5;
    auto f = [&](double rr, const std::vector<double>& yy, std::vector<double>& kk) {
      sys.rhs(rr, yy.data(), kk.data(), pol);
    };
    for (int i = 0; i < dim; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    f(r + c2 * h, ytmp, k2);
    for (int i = 0; i < dim; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    f(r + c3 * h, ytmp, k3);
    for (int i = 0; i < dim; ++i)
      ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(r + c4 * h, ytmp, k4);
    for (int i = 0; i < dim; ++i)
      ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(r + c5 * h, ytmp, k5);
    for (int i = 0; i < dim; ++i)
      ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                            a65 * k5[i]);
    f(r + h, ytmp, k6);
    for (int i = 0; i < dim; ++i)
      y1[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    f(r + h, y1, k7);

    double err2 = 0.0;
    for (int i = 0; i < dim; ++i) {
      const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                             e6 * k6[i] + e7 * k7[i]);
      const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y1[i]));
      err2 += (ei / sc) * (ei / sc);
    }
    return std::sqrt(err2 / dim);
  }

  Step make_step(double r, double h, const std::vector<double>& y,
                 const std::vector<double>& y1) const {
    using namespace dp5;
    Step st;
    st.r0 = r;
    st.r1 = r + h;
    st.cont.resize(5 * dim);
    for (int i = 0; i < dim; ++i) {
      double* c = st.cont.data() + 5 * i;
      const double ydiff = y1[i] - y[i];
      const double bspl = h * k1[i] - ydiff;
      c[0] = y[i];
      c[1] = ydiff;
      c[2] = bspl;
      c[3] = ydiff - h * k7[i] - bspl;
      c[4] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] +
                  d7 * k7[i]);
    }
    return st;
  }
};

// Earliest zero of component c of the dense interpolant on [0, 1], assuming
// value(0) > 0 >= value(1); bisection to relative radius width 1e-10.
double locate_zero(const Step& st, int c, double theta_hi) {
  double lo = 0.0, hi = theta_hi;
  const double span = st.r1 - st.r0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (st.eval_component(mid, c) > 0.0)
      lo = mid;
    else
      hi = mid;
    const double r_mid = st.r0 + mid * span;
    if ((hi - lo) * span <= 1e-10 * std::max(r_mid, 1e-30)) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Trajectory integrate(const ProblemParams& prm, const InitialData& init, double r_max,
                     const IntegrateOptions& opts) {
  prm.validate();
  if (opts.scalar && !prm.scalar_case())
    throw InvalidParams("scalar mode requires p = q and a = b");
  check_init(prm, init, opts.scalar);
  if (!(r_max > opts.r0)) throw InvalidParams("r_max must exceed r0");
  if (!(opts.rtol > 0.0) || !(opts.atol > 0.0))
    throw InvalidParams("tolerances must be positive");

  SystemView sys{prm, opts.scalar, prm.m};
  const int dim = sys.dim();
  std::vector<double> y = series_start_raw(sys, init, opts.r0);
  std::vector<double> y1(dim);
  std::vector<Step> steps;
  std::vector<Event> events;

  // Degenerate (zero) starting components are reported as an immediate
  // sign-change event at r0; integration still proceeds.
  bool sign_change_seen = false;
  for (int c = 0; c < sys.num_solution_components() && !sign_change_seen; ++c) {
    const double v0c = c < prm.m ? init.w0[c] : init.z0[c - prm.m];
    if (v0c == 0.0) {
      events.push_back({EventKind::SignChange, opts.r0, c});
      sign_change_seen = true;
    }
  }

  Stepper stepper(sys, PowPolicy::OddContinuation);
  sys.rhs(opts.r0, y.data(), stepper.k1.data(), PowPolicy::OddContinuation);

  double r = opts.r0;
  double h = opts.r0 / 10.0;
  bool stopped = false;
  const int max_steps = 400'000;
  int nstep = 0;
  for (; nstep < max_steps && r < r_max; ++nstep) {
    // blow-up check on the current state
    double big = 0.0;
    for (int c = 0; c < sys.num_solution_components(); ++c) {
      big = std::max(big, std::abs(y[sys.value_index(c)]));
      big = std::max(big, std::abs(y[c < prm.m ? sys.iwp(c) : sys.izp(c - prm.m)]));
    }
    if (big > opts.blowup_threshold || !std::isfinite(big)) {
      events.push_back({EventKind::BlowUp, r, -1});
      stopped = true;
      break;
    }

    if (r + h > r_max) h = r_max - r;
    const double err = stepper.attempt(r, y, h, y1, opts.rtol, opts.atol);
    if (!std::isfinite(err)) {
      h *= 0.1;
      if (h < 1e-14 * std::max(r, opts.r0)) {
        events.push_back({EventKind::BlowUp, r, -1});
        stopped = true;
        break;
      }
      continue;
    }
    if (err > 1.0) {
      h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
      if (h < 1e-14 * std::max(r, opts.r0))
        throw StepUnderflow("step size underflow at r = " + std::to_string(r));
      continue;
    }

    Step st = stepper.make_step(r, h, y, y1);

    // sign-change detection on solution components over the accepted step
    if (!sign_change_seen) {
      double best_theta = 2.0;
      int best_c = -1;
      for (int c = 0; c < sys.num_solution_components(); ++c) {
        const int vi = sys.value_index(c);
        if (y[vi] > 0.0 && y1[vi] <= 0.0) {
          const double th = locate_zero(st, vi, 1.0);
          if (th < best_theta) {
            best_theta = th;
            best_c = c;
          }
        }
      }
      if (best_c >= 0) {
        sign_change_seen = true;
        events.push_back({EventKind::SignChange, r + best_theta * h, best_c});
        if (opts.stop_at_sign_change) {
          steps.push_back(std::move(st));
          stopped = true;
          break;
        }
      }
    }

    steps.push_back(std::move(st));
    std::swap(y, y1);
    std::swap(stepper.k1, stepper.k7);  // FSAL
    r += h;
    h *= std::min(10.0, std::max(0.2, 0.9 * std::pow(std::max(err, 1e-10), -0.2)));
  }

  if (!stopped && nstep >= max_steps)
    throw StepUnderflow("step budget exhausted at r = " + std::to_string(r) +
                        "; tolerances unattainable");

  if (steps.empty()) {
    // Zero-length domain (immediate blow-up cannot happen from finite data;
    // this is the degenerate r0-only case). Materialize a trivial step.
    Step st;
    st.r0 = st.r1 = opts.r0;
    st.cont.assign(5 * dim, 0.0);
    for (int i = 0; i < dim; ++i) st.cont[5 * i] = y[i];
    steps.push_back(std::move(st));
  }

  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return a.r < b.r; });
  return Trajectory(prm, opts.scalar, std::move(steps), std::move(events));
}

// ---------------------------------------------------------------------------

Trajectory::Trajectory(ProblemParams prm, bool scalar, std::vector<Step> steps,
                       std::vector<Event> events)
    : prm_(std::move(prm)), scalar_(scalar), steps_(std::move(steps)),
      events_(std::move(events)) {
  if (steps_.empty()) throw InvalidParams("trajectory requires at least one step");
}

double Trajectory::r_begin() const { return steps_.front().r0; }
double Trajectory::r_end() const { return steps_.back().r1; }

bool Trajectory::in_domain(double r) const {
  return r >= r_begin() * (1.0 - 1e-12) && r <= r_end() * (1.0 + 1e-12);
}

std::optional<Event> Trajectory::first_sign_change() const {
  for (const Event& e : events_)
    if (e.kind == EventKind::SignChange) return e;
  return std::nullopt;
}

std::optional<Event> Trajectory::blow_up() const {
  for (const Event& e : events_)
    if (e.kind == EventKind::BlowUp) return e;
  return std::nullopt;
}

std::vector<double> Trajectory::raw_state_at(double r) const {
  if (!in_domain(r)) throw OutOfDomain("radius outside trajectory domain");
  r = std::clamp(r, r_begin(), r_end());
  // first step with r1 >= r
  auto it = std::lower_bound(steps_.begin(), steps_.end(), r,
                             [](const Step& s, double rr) { return s.r1 < rr; });
  if (it == steps_.end()) it = std::prev(steps_.end());
  const Step& st = *it;
  const double span = st.r1 - st.r0;
  const double theta = span > 0.0 ? std::clamp((r - st.r0) / span, 0.0, 1.0) : 0.0;
  std::vector<double> y(st.dim());
  st.eval(theta, y.data());
  return y;
}

RadialState Trajectory::state_at(double r) const {
  SystemView sys{prm_, scalar_, prm_.m};
  const std::vector<double> y = raw_state_at(r);
  return sys.unpack(r, y.data());
}

std::vector<double> Trajectory::checkpoint_radii() const {
  std::vector<double> out;
  const double lo = r_begin(), hi = r_end();
  for (int k = 0;; ++k) {
    const double r = lo * std::pow(10.0, k / 8.0);
    if (r > hi * (1.0 + 1e-12)) break;
    out.push_back(std::min(r, hi));
  }
  if (out.empty() || out.back() < hi) out.push_back(hi);
  return out;
}

std::vector<double> Trajectory::step_radii() const {
  std::vector<double> out;
  out.reserve(steps_.size() + 1);
  out.push_back(steps_.front().r0);
  for (const Step& s : steps_)
    if (s.r1 > out.back()) out.push_back(s.r1);
  return out;
}

bool Trajectory::positive_at(double r) const {
  const auto sc = first_sign_change();
  return !sc || r < sc->r;
}

std::optional<Event> detect_sign_change(const Trajectory& traj) {
  return traj.first_sign_change();
}

double fit_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw InvalidParams("fit_slope needs >= 2 matching points");
  const double nn = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = nn * sxx - sx * sx;
  if (denom == 0.0) throw InvalidParams("degenerate abscissae in fit");
  return (nn * sxy - sx * sy) / denom;
}

DecaySlopes decay_fit(const Trajectory& traj, double window_lo, double window_hi) {
  if (!(window_lo > 0.0) || !(window_hi > window_lo))
    throw InvalidParams("decay window must satisfy 0 < lo < hi");
  std::vector<double> lr, lu, lv;
  for (double r : traj.checkpoint_radii()) {
    if (r < window_lo || r > window_hi) continue;
    const RadialState s = traj.state_at(r);
    if (s.w[0] <= 0.0 || s.z[0] <= 0.0)
      throw NotPositiveOnWindow("trajectory not positive on the fit window");
    lr.push_back(std::log(r));
    lu.push_back(std::log(s.w[0]));
    lv.push_back(std::log(s.z[0]));
  }
  if (lr.size() < 2) throw NotPositiveOnWindow("fewer than two checkpoints in window");
  return {fit_slope(lr, lu), fit_slope(lr, lv)};
}

std::string to_string(const ShootResult& res, int m) {
  if (const auto* sc = std::get_if<SignChangeResult>(&res))
    return "SignChange r=" + std::to_string(sc->r) +
           " component=" + component_name(sc->component, m);
  if (const auto* pos = std::get_if<PositiveToRmax>(&res))
    return "PositiveToRmax slope_u=" + std::to_string(pos->slope_u) +
           " slope_v=" + std::to_string(pos->slope_v);
  return "BlowUp r=" + std::to_string(std::get<BlowUpResult>(res).r);
}

}  // namespace liouville
