#include <algorithm>
#include <cmath>
#include <vector>

#include "liouville/errors.hpp"
#include "liouville/radial_ode.hpp"

namespace liouville {

namespace {

struct Shot {
  ShootResult result;
  int component = -1;   // -1 when no crossing
  double r_cross = 0.0;
};

Shot classify_trajectory(const Trajectory& traj, double r_max) {
  if (const auto bu = traj.blow_up(); bu && !traj.first_sign_change())
    return {BlowUpResult{bu->r}, -1, bu->r};
  if (const auto sc = traj.first_sign_change())
    return {SignChangeResult{sc->r, sc->component}, sc->component, sc->r};
  const DecaySlopes sl = decay_fit(traj, r_max / 10.0, r_max);
  return {PositiveToRmax{sl.slope_u, sl.slope_v}, -1, r_max};
}

}  // namespace

ShootOutcome shoot_system_m1(const ProblemParams& prm, double s_lo, double s_hi,
                             double r_max, const IntegrateOptions& opts_in) {
  prm.validate();
  if (prm.m != 1) throw InvalidParams("shoot_system_m1 requires m = 1");
  if (!(0.0 < s_lo && s_lo < s_hi)) throw InvalidParams("need 0 < s_lo < s_hi");

  IntegrateOptions opts = opts_in;
  opts.stop_at_sign_change = true;

  ShootOutcome out;
  auto eval = [&](double s) {
    const Trajectory traj = integrate(prm, InitialData::uv(1.0, s), r_max, opts);
    Shot shot = classify_trajectory(traj, r_max);
    out.trace.push_back({s, shot.component, shot.r_cross});
    return shot;
  };

  const Shot lo = eval(s_lo);
  if (lo.component < 0) {
    out.result = lo.result;
    return out;
  }
  const Shot hi = eval(s_hi);
  if (hi.component < 0) {
    out.result = hi.result;
    return out;
  }
  if (lo.component == hi.component)
    throw InvalidBracket("both bracket endpoints lose the same component; widen it");

  // log-scale bisection on the separatrix between "u first" and "v first"
  double a = s_lo, b = s_hi;
  int comp_a = lo.component;
  Shot last = hi;
  for (int it = 0; it < 80 && (b - a) > 1e-12 * b; ++it) {
    const double mid = std::sqrt(a * b);
    last = eval(mid);
    if (last.component < 0) {
      out.result = last.result;
      return out;
    }
    if (last.component == comp_a)
      a = mid;
    else
      b = mid;
  }
  out.result = last.result;
  return out;
}

ShootResult scalar_probe(const ProblemParams& prm, std::span<const double> higher,
                         double r_max, const IntegrateOptions& opts_in) {
  prm.validate();
  if (!prm.scalar_case()) throw InvalidParams("scalar probe requires p = q, a = b");
  if (static_cast<int>(higher.size()) != prm.m - 1)
    throw InvalidParams("need m-1 higher-order initial values");
  InitialData init;
  init.w0.assign(prm.m, 1.0);
  for (int i = 1; i < prm.m; ++i) init.w0[i] = higher[i - 1];
  init.z0 = init.w0;
  IntegrateOptions opts = opts_in;
  opts.stop_at_sign_change = true;
  opts.scalar = true;
  const Trajectory traj = integrate(prm, init, r_max, opts);
  return classify_trajectory(traj, r_max).result;
}

namespace {

struct ScalarEval {
  const ProblemParams& prm;
  double r_max;
  IntegrateOptions opts;
  std::vector<BisectionPoint>* trace;

  Shot operator()(std::span<const double> higher) const {
    InitialData init;
    init.w0.assign(prm.m, 1.0);
    for (int i = 1; i < prm.m; ++i) init.w0[i] = higher[i - 1];
    init.z0 = init.w0;
    const Trajectory traj = integrate(prm, init, r_max, opts);
    Shot shot = classify_trajectory(traj, r_max);
    trace->push_back({higher.empty() ? 1.0 : higher[0], shot.component, shot.r_cross});
    return shot;
  }
};

// 1-d bisection over coordinate `axis` of `point` on [lo, hi]; returns the
// last midpoint shot, or the first positive-to-rmax shot encountered.
Shot bisect_axis(const ScalarEval& eval, std::vector<double>& point, int axis,
                 double lo, double hi) {
  std::vector<double> pt = point;
  pt[axis] = lo;
  const Shot slo = eval(pt);
  if (slo.component < 0) return slo;
  pt[axis] = hi;
  const Shot shi = eval(pt);
  if (shi.component < 0) return shi;
  if (slo.component == shi.component)
    throw InvalidBracket("scalar shooting bracket endpoints agree; widen it");
  double a = lo, b = hi;
  const int comp_a = slo.component;
  Shot last = shi;
  for (int it = 0; it < 60 && (b - a) > 1e-10 * b; ++it) {
    const double mid = std::sqrt(a * b);
    pt[axis] = mid;
    last = eval(pt);
    if (last.component < 0) return last;
    (last.component == comp_a ? a : b) = mid;
  }
  point[axis] = pt[axis];
  return last;
}

}  // namespace

ShootOutcome shoot_scalar(const ProblemParams& prm, double r_max,
                          const IntegrateOptions& opts_in) {
  prm.validate();
  if (!prm.scalar_case()) throw InvalidParams("shoot_scalar requires p = q, a = b");
  if (prm.m > 3) throw UnsupportedOrder("scalar shooting supports m <= 3");

  IntegrateOptions opts = opts_in;
  opts.stop_at_sign_change = true;
  opts.scalar = true;

  ShootOutcome out;
  ScalarEval eval{prm, r_max, opts, &out.trace};

  if (prm.m == 1) {
    out.result = eval(std::span<const double>{}).result;
    return out;
  }

  std::vector<double> point(prm.m - 1, 1.0);
  if (prm.m == 2) {
    out.result = bisect_axis(eval, point, 0, 1e-3, 1e3).result;
    return out;
  }

  // m = 3: coordinate-wise refinement of (w1(0), w2(0))
  Shot last{SignChangeResult{}, 0, 0.0};
  for (int round = 0; round < 3; ++round)
    for (int axis = 0; axis < 2; ++axis) {
      last = bisect_axis(eval, point, axis, point[axis] * 1e-2, point[axis] * 1e2);
      if (last.component < 0) {
        out.result = last.result;
        return out;
      }
    }
  out.result = last.result;
  return out;
}

}  // namespace liouville
