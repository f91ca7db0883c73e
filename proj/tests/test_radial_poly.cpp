#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "liouville/errors.hpp"
#include "liouville/radial_poly.hpp"

using namespace liouville;

namespace {

RadialPolynomial random_even_poly(std::mt19937_64& rng, int max_half_degree) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9), dd(0, max_half_degree);
  std::map<int, Rational> c;
  const int d = dd(rng);
  for (int k = 0; k <= d; ++k) c[2 * k] = Rational(num(rng), den(rng));
  return RadialPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("radial Laplacian on monomials") {
  const auto r2 = RadialPolynomial::monomial(2, 1);
  CHECK(radial_laplacian(r2, 3) == RadialPolynomial::constant(6));

  const auto r4 = RadialPolynomial::monomial(4, 1);
  CHECK(radial_laplacian(r4, 3) == RadialPolynomial::monomial(2, 20));

  CHECK(radial_laplacian(RadialPolynomial::constant(7), 3).is_zero());
  CHECK_THROWS_AS(radial_laplacian(RadialPolynomial::monomial(3, 1), 3), InvalidParams);
}

TEST_CASE("iterated Laplacian") {
  const auto r4 = RadialPolynomial::monomial(4, 1);
  CHECK(iterated_laplacian(r4, 3, 2) == RadialPolynomial::constant(120));
  CHECK(iterated_laplacian(r4, 3, 3).is_zero());

  std::mt19937_64 rng(5);
  const auto p = random_even_poly(rng, 5);
  CHECK(iterated_laplacian(p, 7, 0) == p);
}

TEST_CASE("Euler operator r d/dr") {
  CHECK(euler_derivative(RadialPolynomial::monomial(2, 1)) ==
        RadialPolynomial::monomial(2, 2));
  CHECK(euler_derivative(RadialPolynomial::constant(5)).is_zero());
  const auto both = RadialPolynomial::monomial(4, 1) + RadialPolynomial::monomial(2, 1);
  CHECK(euler_derivative(both) ==
        RadialPolynomial::monomial(4, 4) + RadialPolynomial::monomial(2, 2));
}

TEST_CASE("commutator identity holds exactly") {
  CHECK(commutator_residual(RadialPolynomial::monomial(2, 1), 3, 1).is_zero());
  CHECK(commutator_residual(RadialPolynomial::monomial(4, 1), 5, 2).is_zero());
  const auto mix = RadialPolynomial::monomial(6, 1) + RadialPolynomial::monomial(2, 3);
  CHECK(commutator_residual(mix, 7, 3).is_zero());

  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> nd(1, 10), id(0, 4);
  for (int t = 0; t < 300; ++t)
    CHECK(commutator_residual(random_even_poly(rng, 6), nd(rng), id(rng)).is_zero());
}

TEST_CASE("bilinear gradient identity holds exactly") {
  const auto r2 = RadialPolynomial::monomial(2, 1);
  const auto r4 = RadialPolynomial::monomial(4, 1);
  const auto r6 = RadialPolynomial::monomial(6, 1);
  CHECK(bilinear_identity_residual(r2, r2, 3).is_zero());
  CHECK(bilinear_identity_residual(r4, r2, 6).is_zero());
  CHECK(bilinear_identity_residual(r6, r4, 9).is_zero());

  std::mt19937_64 rng(202);
  std::uniform_int_distribution<int> nd(1, 10);
  for (int t = 0; t < 300; ++t)
    CHECK(bilinear_identity_residual(random_even_poly(rng, 5), random_even_poly(rng, 5),
                                     nd(rng))
              .is_zero());
}

TEST_CASE("radial Laplacian agrees with finite differences") {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> rd(0.5, 2.0);
  std::uniform_int_distribution<int> nd(2, 9);
  for (int t = 0; t < 20; ++t) {
    const auto p = random_even_poly(rng, 3);
    const int n = nd(rng);
    const auto lap = radial_laplacian(p, n);
    const double r = rd(rng);
    // fourth-order stencils keep the roundoff floor below the tolerance
    const double h = 3e-3;
    const double f2h = p.eval(r + 2 * h), f1h = p.eval(r + h), f0 = p.eval(r),
                 g1h = p.eval(r - h), g2h = p.eval(r - 2 * h);
    const double d2 = (-f2h + 16 * f1h - 30 * f0 + 16 * g1h - g2h) / (12 * h * h);
    const double d1 = (-f2h + 8 * f1h - 8 * g1h + g2h) / (12 * h);
    const double fd = d2 + (n - 1.0) / r * d1;
    const double exact = lap.eval(r);
    const double scale = std::max({std::abs(exact), std::abs(f0), 1.0});
    CHECK(std::abs(fd - exact) / scale < 1e-8);
  }
}

TEST_CASE("evaluation and exact evaluation agree") {
  std::mt19937_64 rng(404);
  for (int t = 0; t < 30; ++t) {
    const auto p = random_even_poly(rng, 6);
    const Rational r(3, 2);
    CHECK(p.eval(1.5) == doctest::Approx(to_double(p.eval_exact(r))).epsilon(1e-13));
  }
}

TEST_CASE("zero polynomial conventions") {
  RadialPolynomial zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(radial_laplacian(zero, 4).is_zero());
  CHECK((zero + zero).is_zero());
  const auto p = RadialPolynomial::monomial(2, Rational(1, 3));
  CHECK((p - p).is_zero());
}
