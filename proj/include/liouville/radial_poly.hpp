#pragma once

#include <map>
#include <string>

#include "liouville/rational.hpp"

namespace liouville {

// Polynomial in the radius r with exact rational coefficients, stored as a
// sparse power -> coefficient map. Internal operations (derivatives,
// products) produce odd powers; the public identity checks take even-power
// polynomials, which is the class closed under the radial Laplacian and
// matches smooth radial functions.
class RadialPolynomial {
 public:
  RadialPolynomial() = default;
  explicit RadialPolynomial(std::map<int, Rational> coeffs);

  // c * r^k
  static RadialPolynomial monomial(int k, Rational c);
  static RadialPolynomial constant(Rational c);

  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool has_only_even_powers() const;
  int degree() const;  // -1 for the zero polynomial

  Rational coeff(int k) const;
  double eval(double r) const;
  Rational eval_exact(const Rational& r) const;

  RadialPolynomial derivative() const;           // d/dr
  RadialPolynomial euler() const;                // r d/dr  (radial x . grad)
  RadialPolynomial times_r(int power = 1) const; // multiply by r^power

  RadialPolynomial operator+(const RadialPolynomial& o) const;
  RadialPolynomial operator-(const RadialPolynomial& o) const;
  RadialPolynomial operator*(const RadialPolynomial& o) const;
  RadialPolynomial operator*(const Rational& s) const;
  bool operator==(const RadialPolynomial& o) const { return coeffs_ == o.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::map<int, Rational> coeffs_;  // power -> coefficient, no zero entries
};

// Radial Laplacian in dimension n: c_k r^k -> c_k k (k+n-2) r^{k-2}.
RadialPolynomial radial_laplacian(const RadialPolynomial& poly, int n);

// i-fold radial Laplacian; i = 0 is the identity.
RadialPolynomial iterated_laplacian(const RadialPolynomial& poly, int n, int i);

// r d/dr, the radial form of x . grad.
RadialPolynomial euler_derivative(const RadialPolynomial& poly);

// Delta^i(x.grad z) - 2i Delta^i z - x.grad Delta^i z. Identically zero.
RadialPolynomial commutator_residual(const RadialPolynomial& poly, int n, int i);

// Radial form of grad z . grad(x.grad w) + grad w . grad(x.grad z)
//               - 2 grad z . grad w - x.grad(grad z . grad w),
// i.e. z'(r w')' + w'(r z')' - 2 z'w' - r (z'w')'. Identically zero.
RadialPolynomial bilinear_identity_residual(const RadialPolynomial& z,
                                            const RadialPolynomial& w, int n);

}  // namespace liouville
