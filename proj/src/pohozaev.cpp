#include "liouville/pohozaev.hpp"

#include <algorithm>
#include <cmath>

#include "liouville/errors.hpp"

namespace liouville {

namespace {

void check_admissible(const ProblemParams& prm, double lambda, double gamma) {
  const double target = prm.n - 2.0 * prm.m;
  if (std::abs(lambda + gamma - target) >
      1e-9 * (1.0 + std::abs(lambda) + std::abs(gamma) + std::abs(target)))
    throw InvalidParams("lambda + gamma must equal n - 2m");
}

// Signed plain-Laplacian views of the stored (-Laplace)^i state.
struct SignedView {
  const RadialState& s;
  int n;
  int m;
  double sgn(int i) const { return (i % 2 == 0) ? 1.0 : -1.0; }
  double lap_u(int i) const { return sgn(i) * s.w[i]; }    // Delta^i u
  double lap_v(int i) const { return sgn(i) * s.z[i]; }
  double dlap_u(int i) const { return sgn(i) * s.wp[i]; }  // (Delta^i u)'
  double dlap_v(int i) const { return sgn(i) * s.zp[i]; }
  // (Delta^i f)'' = Delta^{i+1} f - (n-1)/r (Delta^i f)';  needs i+1 <= m-1
  double d2lap_u(int i) const {
    return lap_u(i + 1) - (n - 1.0) / s.r * dlap_u(i);
  }
  double d2lap_v(int i) const {
    return lap_v(i + 1) - (n - 1.0) / s.r * dlap_v(i);
  }
};

// I(u,v) = sum_{i<k} int_{dB_R} ( Delta^i v d_nu Delta^{m-i-1} u
//                               - Delta^{m-i-1} u d_nu Delta^i v )
double I_term(const SignedView& g, bool swap_uv, int k, double surf) {
  double acc = 0.0;
  const int m = g.m;
  for (int i = 0; i < k; ++i) {
    const double vi = swap_uv ? g.lap_u(i) : g.lap_v(i);
    const double dvi = swap_uv ? g.dlap_u(i) : g.dlap_v(i);
    const double um = swap_uv ? g.lap_v(m - i - 1) : g.lap_u(m - i - 1);
    const double dum = swap_uv ? g.dlap_v(m - i - 1) : g.dlap_u(m - i - 1);
    acc += vi * dum - um * dvi;
  }
  return surf * acc;
}

// J(u,v) = sum_{i<k} int_{dB_R} ( Delta^i(x.grad v) d_nu Delta^{m-i-1} u
//                               - Delta^{m-i-1} u d_nu Delta^i(x.grad v) )
// with Delta^i(x.grad v) = 2i Delta^i v + r (Delta^i v)' and
// d/dr of it = (2i+1)(Delta^i v)' + r (Delta^i v)''.
double J_term(const SignedView& g, bool swap_uv, int k, double surf) {
  double acc = 0.0;
  const int m = g.m;
  const double R = g.s.r;
  for (int i = 0; i < k; ++i) {
    const double vi = swap_uv ? g.lap_u(i) : g.lap_v(i);
    const double dvi = swap_uv ? g.dlap_u(i) : g.dlap_v(i);
    const double d2vi = swap_uv ? g.d2lap_u(i) : g.d2lap_v(i);
    const double um = swap_uv ? g.lap_v(m - i - 1) : g.lap_u(m - i - 1);
    const double dum = swap_uv ? g.dlap_v(m - i - 1) : g.dlap_u(m - i - 1);
    acc += (2.0 * i * vi + R * dvi) * dum - um * ((2.0 * i + 1.0) * dvi + R * d2vi);
  }
  return surf * acc;
}

}  // namespace

std::vector<BoundaryTerm> pohozaev_boundary_terms(const ProblemParams& prm,
                                                  const RadialState& state,
                                                  double lambda, double gamma) {
  prm.validate();
  check_admissible(prm, lambda, gamma);
  if (static_cast<int>(state.w.size()) != prm.m)
    throw InvalidParams("state order does not match m");

  const int m = prm.m;
  const int k = (m % 2 == 0) ? m / 2 : (m - 1) / 2;
  const bool odd = (m % 2 == 1);
  const double R = state.r;
  const double omega = unit_sphere_area(prm.n);
  const double surf = omega * std::pow(R, prm.n - 1.0);  // int_{dB_R} of a radial value
  SignedView g{state, prm.n, m};

  std::vector<BoundaryTerm> terms;
  terms.push_back({"weighted_surface_v",
                   surf * std::pow(R, 1.0 + prm.a) *
                       std::pow(std::abs(state.z[0]), prm.p + 1.0) / (prm.p + 1.0)});
  terms.push_back({"weighted_surface_u",
                   surf * std::pow(R, 1.0 + prm.b) *
                       std::pow(std::abs(state.w[0]), prm.q + 1.0) / (prm.q + 1.0)});

  if (odd) {
    const double du = g.dlap_u(k), dv = g.dlap_v(k);
    const double uu = g.lap_u(k), vv = g.lap_v(k);
    terms.push_back({"grad_grad_xnu", -surf * R * du * dv});
    terms.push_back({"du_nu_xgrad_v", surf * R * du * dv});
    terms.push_back({"dv_nu_xgrad_u", surf * R * dv * du});
    terms.push_back({"lambda_v_dnu_u", (lambda + m - 1.0) * surf * vv * du});
    terms.push_back({"gamma_u_dnu_v", (gamma + m - 1.0) * surf * uu * dv});
    terms.push_back({"lambda_I_uv", lambda * I_term(g, false, k, surf)});
    terms.push_back({"gamma_I_vu", gamma * I_term(g, true, k, surf)});
    terms.push_back({"J_uv", J_term(g, false, k, surf)});
    terms.push_back({"J_vu", J_term(g, true, k, surf)});
  } else {
    terms.push_back({"lap_u_lap_v_xnu", -surf * R * g.lap_u(k) * g.lap_v(k)});
    terms.push_back({"lambda_I_uv", -lambda * I_term(g, false, k, surf)});
    terms.push_back({"gamma_I_vu", -gamma * I_term(g, true, k, surf)});
    terms.push_back({"J_uv", -J_term(g, false, k, surf)});
    terms.push_back({"J_vu", -J_term(g, true, k, surf)});
  }
  return terms;
}

double pohozaev_lhs(const ProblemParams& prm, const Trajectory& traj, double R,
                    double lambda, double gamma) {
  prm.validate();
  check_admissible(prm, lambda, gamma);
  const RadialState s = traj.state_at(R);  // throws OutOfDomain
  const double ca = (prm.n + prm.a) / (prm.p + 1.0) - lambda;
  const double cb = (prm.n + prm.b) / (prm.q + 1.0) - gamma;
  return ca * s.Qa + cb * s.Qb;
}

PohozaevReport pohozaev_residual(const ProblemParams& prm, const Trajectory& traj,
                                 double R, double lambda, double gamma) {
  PohozaevReport rep;
  rep.R = R;
  rep.lambda = lambda;
  rep.gamma = gamma;
  rep.lhs = pohozaev_lhs(prm, traj, R, lambda, gamma);
  rep.terms = pohozaev_boundary_terms(prm, traj.state_at(R), lambda, gamma);
  rep.rhs = 0.0;
  rep.scale = std::max(std::abs(rep.lhs), 0.0);
  for (const BoundaryTerm& t : rep.terms) {
    rep.rhs += t.value;
    rep.scale = std::max(rep.scale, std::abs(t.value));
  }
  rep.scale = std::max(rep.scale, std::abs(rep.rhs));
  rep.residual = std::abs(rep.lhs - rep.rhs) / std::max(rep.scale, 1e-300);
  return rep;
}

double lambda_invariance_check(const ProblemParams& prm, const Trajectory& traj,
                               double R, double lambda1, double lambda2) {
  const double target = prm.n - 2.0 * prm.m;
  const double r1 = pohozaev_residual(prm, traj, R, lambda1, target - lambda1).residual;
  const double r2 = pohozaev_residual(prm, traj, R, lambda2, target - lambda2).residual;
  return std::max(r1, r2);
}

}  // namespace liouville
