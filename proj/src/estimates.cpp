#include "liouville/estimates.hpp"

#include <algorithm>
#include <cmath>

#include "liouville/errors.hpp"

namespace liouville {

TestExponents choose_test_exponents(int m, double p, double q) {
  if (m < 1 || !(p >= 1.0) || !(q >= 1.0)) throw InvalidParams("need m >= 1, p, q >= 1");
  const double pq1 = p * q - 1.0;
  if (pq1 <= 0.0) throw DegenerateExponents();
  const double tm = 2.0 * m;
  // 2m + s/q < (s-2m)p  for  s > 2mq(p+1)/(pq-1); unit margin keeps it strict
  const double s = tm * q * (p + 1.0) / pq1 + 1.0;
  const double t_lo = tm + s / q;
  const double t_hi = (s - tm) * p;
  return {s, 0.5 * (t_lo + t_hi)};
}

MassGrowthFit mass_growth_fit(const ProblemParams& prm, const Trajectory& traj,
                              std::span<const double> radii) {
  prm.validate();
  if (radii.size() < 4) throw InvalidParams("need at least 4 fit radii");
  const auto [rmin, rmax] = std::minmax_element(radii.begin(), radii.end());
  if (*rmax < 10.0 * *rmin) throw InvalidParams("fit radii must span a decade");
  if (!traj.positive_at(*rmax))
    throw NotPositive("trajectory loses positivity before the largest fit radius");

  std::vector<double> lr, la, lb;
  for (double r : radii) {
    const RadialState s = traj.state_at(r);
    if (!(s.Pa > 0.0) || !(s.Pb > 0.0))
      throw NotPositive("vanishing mass accumulator on the fit range");
    lr.push_back(std::log(r));
    la.push_back(std::log(s.Pa));
    lb.push_back(std::log(s.Pb));
  }
  const auto [alpha_u, alpha_v] = scaling_exponents(prm);
  MassGrowthFit fit;
  fit.slope_a = fit_slope(lr, la);
  fit.slope_b = fit_slope(lr, lb);
  fit.cap_a = prm.n - 2.0 * prm.m - alpha_u + 0.1;
  fit.cap_b = prm.n - 2.0 * prm.m - alpha_v + 0.1;
  return fit;
}

namespace {

void record(InequalityScan& scan, double slack, double r, int comp, double tol) {
  ++scan.checked;
  if (scan.checked == 1 || slack < scan.worst_slack) {
    scan.worst_slack = slack;
    scan.worst_r = r;
    scan.worst_component = comp;
  }
  if (slack < -tol) scan.pass = false;
}

}  // namespace

DecayCheckReport pointwise_decay_check(const ProblemParams& prm, const Trajectory& traj) {
  prm.validate();
  if (prm.n < 3) throw InvalidParams("decay checks require n >= 3");
  const int m = prm.m;
  const double n = prm.n;
  const auto [alpha_u, alpha_v] = scaling_exponents(prm);
  const double pq1 = prm.p * prm.q - 1.0;

  DecayCheckReport rep;
  for (int i = 0; i <= m; ++i) {
    rep.chained_constants_u.push_back(
        std::pow(n * (n - 2.0), i + m * (prm.p + 1.0) / pq1));
    rep.chained_constants_v.push_back(
        std::pow(n * (n - 2.0), i + m * (prm.q + 1.0) / pq1));
  }

  const auto sc = traj.first_sign_change();
  const double r_pos = sc ? sc->r : traj.r_end();
  rep.positivity_radius = r_pos;

  for (double r : traj.step_radii()) {
    if (r > r_pos) break;
    const RadialState s = traj.state_at(r);
    bool all_positive = true;
    for (int i = 0; i < m; ++i)
      all_positive = all_positive && s.w[i] > 0.0 && s.z[i] > 0.0;
    if (!all_positive) break;

    auto forcing = [&](bool uside) {
      return uside ? std::pow(r, prm.a) * std::pow(s.z[0], prm.p)
                   : std::pow(r, prm.b) * std::pow(s.w[0], prm.q);
    };

    for (int side = 0; side < 2; ++side) {
      const bool uside = (side == 0);
      const auto& w = uside ? s.w : s.z;
      const auto& wp = uside ? s.wp : s.zp;
      const double wt = uside ? prm.a : prm.b;
      const double alpha = uside ? alpha_u : alpha_v;
      const auto& K = uside ? rep.chained_constants_u : rep.chained_constants_v;

      for (int i = 0; i < m; ++i) {
        const int comp = side * m + i;
        // (A) r w_{i+1} <= -n_i w_i'. The top level carries the weight, so
        // its constant is n + a (the unweighted display's n when a = 0).
        // Near the origin both sides vanish like r while integration error
        // tracks the O(1) state, so the slack is normalized against the
        // component value as well.
        const double next = (i + 1 < m) ? w[i + 1] : forcing(uside);
        const double n_i = (i + 1 < m) ? n : n + wt;
        const double lhsA = r * next;
        const double rhsA = -n_i * wp[i];
        record(rep.flux,
               (rhsA - lhsA) /
                   std::max({std::abs(lhsA), std::abs(rhsA), std::abs(w[i]), 1e-300}),
               r, comp, 1e-9);

        // (B) -r w_i' <= (n-2) w_i
        const double lhsB = -r * wp[i];
        const double rhsB = (n - 2.0) * w[i];
        record(rep.harnack,
               (rhsB - lhsB) / std::max({std::abs(lhsB), std::abs(rhsB), 1e-300}), r, comp,
               1e-12);

        // (C) w_i <= K_i r^{-2i-alpha}
        const double bound = K[i] * std::pow(r, -2.0 * i - alpha);
        record(rep.chained, (bound - w[i]) / std::max({bound, w[i], 1e-300}), r, comp,
               1e-12);

        // (D) |w_i'| <= (n-2) K_i r^{-2i-1-alpha}, meaningful where (B) holds
        if (rhsB - lhsB >= -1e-12 * std::max(std::abs(lhsB), std::abs(rhsB))) {
          const double dbound = (n - 2.0) * K[i] * std::pow(r, -2.0 * i - 1.0 - alpha);
          record(rep.deriv_decay,
                 (dbound - std::abs(wp[i])) / std::max({dbound, std::abs(wp[i]), 1e-300}),
                 r, comp, 1e-12);
        }
      }
      // (C) also covers the forced top level i = m
      const double bound_m = K[m] * std::pow(r, -2.0 * m - alpha);
      const double wm = forcing(uside);
      record(rep.chained, (bound_m - wm) / std::max({bound_m, wm, 1e-300}), r,
             side * m + m, 1e-12);
    }
  }
  return rep;
}

}  // namespace liouville
