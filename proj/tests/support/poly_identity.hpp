#pragma once

// Exact-arithmetic oracle for the boundary-term transcription: for arbitrary
// even polynomials U, V and any lambda + gamma = n - 2m, the bulk integral
//
//   M = int_{B_R} [ Lap^m U (x.grad V + lambda V) + Lap^m V (x.grad U + gamma U) ]
//
// equals a pure boundary expression. Everything here is a polynomial in R
// with rational coefficients, so the comparison is exact. This file is a
// hand transcription kept independent of src/pohozaev.cpp; the unit tests
// check both against each other.

#include <map>
#include <vector>

#include "liouville/radial_poly.hpp"

namespace liouville::testsupport {

// int_0^R f(r) r^{n-1} dr as a polynomial in R (the common sphere-area
// factor omega is dropped on both sides).
inline RadialPolynomial integrate_radial(const RadialPolynomial& f, int n) {
  std::map<int, Rational> out;
  for (const auto& [k, c] : f.coeffs()) out[k + n] = c / (k + n);
  return RadialPolynomial(std::move(out));
}

struct PolyPair {
  RadialPolynomial u, v;
};

// Bulk side M (divided by omega).
inline RadialPolynomial master_bulk(const PolyPair& f, int n, int m, const Rational& lambda,
                                    const Rational& gamma) {
  const RadialPolynomial lu = iterated_laplacian(f.u, n, m);
  const RadialPolynomial lv = iterated_laplacian(f.v, n, m);
  const RadialPolynomial integrand =
      lu * (f.v.euler() + f.v * lambda) + lv * (f.u.euler() + f.u * gamma);
  return integrate_radial(integrand, n);
}

// Boundary side (divided by omega), as the polynomial r^{n-1} * [...] in r.
// These are the plus-sign boundary terms of the function-level identity;
// substituting (-Lap)^m into the bulk flips the whole right side for even m,
// which is where the minus signs of the even production case come from.
inline RadialPolynomial master_boundary(const PolyPair& f, int n, int m,
                                        const Rational& lambda, const Rational& gamma) {
  const int k = m / 2;  // floor; m odd -> (m-1)/2
  auto lap = [&](const RadialPolynomial& g, int i) { return iterated_laplacian(g, n, i); };

  // I(u,v) and J(u,v) with Delta^i(x.grad v) computed directly
  auto I_sum = [&](const RadialPolynomial& u, const RadialPolynomial& v) {
    RadialPolynomial acc;
    for (int i = 0; i < k; ++i)
      acc = acc + lap(v, i) * lap(u, m - i - 1).derivative() -
            lap(u, m - i - 1) * lap(v, i).derivative();
    return acc;
  };
  auto J_sum = [&](const RadialPolynomial& u, const RadialPolynomial& v) {
    RadialPolynomial acc;
    for (int i = 0; i < k; ++i) {
      const RadialPolynomial xv = lap(v.euler(), i);  // Delta^i (x.grad v)
      acc = acc + xv * lap(u, m - i - 1).derivative() - lap(u, m - i - 1) * xv.derivative();
    }
    return acc;
  };

  RadialPolynomial inner;
  if (m % 2 == 1) {
    const RadialPolynomial du = lap(f.u, k).derivative();
    const RadialPolynomial dv = lap(f.v, k).derivative();
    inner = (du * dv).times_r()                                   // net of the three
            + lap(f.v, k) * du * (lambda + m - 1)                 //   gradient terms
            + lap(f.u, k) * dv * (gamma + m - 1) + I_sum(f.u, f.v) * lambda +
            I_sum(f.v, f.u) * gamma + J_sum(f.u, f.v) + J_sum(f.v, f.u);
  } else {
    inner = (lap(f.u, k) * lap(f.v, k)).times_r() + I_sum(f.u, f.v) * lambda +
            I_sum(f.v, f.u) * gamma + J_sum(f.u, f.v) + J_sum(f.v, f.u);
  }
  return inner.times_r(n - 1);
}

}  // namespace liouville::testsupport
