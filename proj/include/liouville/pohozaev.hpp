#pragma once

#include <string>
#include <utility>
#include <vector>

#include "liouville/radial_ode.hpp"

namespace liouville {

// One named boundary term, stored with its sign as it appears on the
// right-hand side of the identity (rhs = sum of values).
struct BoundaryTerm {
  std::string name;
  double value = 0.0;
};

struct PohozaevReport {
  double R = 0.0;
  double lambda = 0.0;
  double gamma = 0.0;
  double lhs = 0.0;
  std::vector<BoundaryTerm> terms;
  double rhs = 0.0;
  double scale = 0.0;     // largest magnitude among lhs, rhs and all terms
  double residual = 0.0;  // |lhs - rhs| / max(scale, floor)
};

// Left side of the identity at radius R:
//   ((n+a)/(p+1) - lambda) Qa(R) + ((n+b)/(q+1) - gamma) Qb(R),
// reading the trajectory accumulators through the dense interpolant.
double pohozaev_lhs(const ProblemParams& prm, const Trajectory& traj, double R,
                    double lambda, double gamma);

// Radial transcription of every boundary integral, for the parity case of m.
// Requires lambda + gamma = n - 2m. Surface integrals reduce via
// int_{dB_R} g = omega R^{n-1} g(R), x.nu = R, d_nu = d/dr, x.grad = r d/dr;
// second radial derivatives are recovered from the Laplacian chain.
std::vector<BoundaryTerm> pohozaev_boundary_terms(const ProblemParams& prm,
                                                  const RadialState& state,
                                                  double lambda, double gamma);

PohozaevReport pohozaev_residual(const ProblemParams& prm, const Trajectory& traj,
                                 double R, double lambda, double gamma);

// Max residual over two admissible lambda choices (gamma inferred); the
// identity must hold for every admissible pair.
double lambda_invariance_check(const ProblemParams& prm, const Trajectory& traj,
                               double R, double lambda1, double lambda2);

}  // namespace liouville
