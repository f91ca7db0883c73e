#pragma once

#include <string>

#include "liouville/rational.hpp"

namespace liouville {

// The parameter sextuple of the weighted polyharmonic system
//
//   (-Laplace)^m u = |x|^a v^p,   (-Laplace)^m v = |x|^b u^q   on R^n.
//
// Valid when n, m >= 1 (integers), a, b >= 0, p, q >= 1 and pq != 1.
struct ProblemParams {
  int n = 3;
  int m = 1;
  double a = 0.0;
  double b = 0.0;
  double p = 2.0;
  double q = 2.0;

  void validate() const;  // throws InvalidParams
  bool scalar_case() const { return p == q && a == b; }
};

enum class Criticality { Subcritical, Critical, Supercritical };

std::string to_string(Criticality c);

// Decay/scaling exponents of the system:
//   alpha_u = ((b+2m)p + (a+2m)) / (pq-1),
//   alpha_v = ((a+2m)q + (b+2m)) / (pq-1).
struct ScalingExponents {
  double alpha_u = 0.0;
  double alpha_v = 0.0;
};

struct FTriple {
  double f1 = 0.0;
  double f1_tilde = 0.0;
  double f2 = 0.0;
  double min() const;
};

struct EpsilonCertificate {
  double epsilon = 0.0;
  double f1 = 0.0;
  double f1_tilde = 0.0;
  double f2 = 0.0;
};

// Signed distance from the critical hyperbola:
//   (n+a)/(p+1) + (n+b)/(q+1) - (n-2m).
// Positive below the hyperbola (subcritical side), zero on it.
double criticality_gap(const ProblemParams& prm);

// Sign class of the gap, with relative tolerance 1e-12 for the zero case.
Criticality classify(const ProblemParams& prm);

ScalingExponents scaling_exponents(const ProblemParams& prm);

// The three decay-rate functions of epsilon whose positivity certifies the
// subcritical nonexistence argument. All three are positive at eps = 0
// exactly when the gap is positive.
FTriple f_epsilon(const ProblemParams& prm, double eps);

// Finds eps > 0 with f1, f1_tilde, f2 all positive by geometric halving
// from 0.1. Requires classify(prm) == Subcritical.
EpsilonCertificate find_epsilon(const ProblemParams& prm);

// Solves (n+a)/(p+1) + (n+b)/(q+1) = n-2m for q. Requires n > 2m.
// Throws NoSolution when n - 2m - (n+a)/(p+1) <= 0.
double hyperbola_q(int n, int m, double a, double b, double p);

// Exact-rational path, used when CLI inputs are given as rationals so the
// measure-zero Critical boundary is decidable.
struct RationalParams {
  int n = 3;
  int m = 1;
  Rational a = 0;
  Rational b = 0;
  Rational p = 2;
  Rational q = 2;

  void validate() const;
  ProblemParams to_double() const;
};

Rational criticality_gap_exact(const RationalParams& prm);
Criticality classify_exact(const RationalParams& prm);

}  // namespace liouville
