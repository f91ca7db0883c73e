#include "liouville/radial_poly.hpp"

#include <sstream>

#include "liouville/errors.hpp"

namespace liouville {

RadialPolynomial::RadialPolynomial(std::map<int, Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  for (const auto& [k, c] : coeffs_)
    if (k < 0) throw InvalidParams("negative power in radial polynomial");
  trim();
}

RadialPolynomial RadialPolynomial::monomial(int k, Rational c) {
  RadialPolynomial p;
  if (k < 0) throw InvalidParams("negative power in radial polynomial");
  if (c != 0) p.coeffs_[k] = std::move(c);
  return p;
}

RadialPolynomial RadialPolynomial::constant(Rational c) { return monomial(0, std::move(c)); }

bool RadialPolynomial::has_only_even_powers() const {
  for (const auto& [k, c] : coeffs_)
    if (k % 2 != 0) return false;
  return true;
}

int RadialPolynomial::degree() const {
  return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

Rational RadialPolynomial::coeff(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

double RadialPolynomial::eval(double r) const {
  // Horner over the sparse representation, highest power first.
  double acc = 0.0;
  int prev = -1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (prev >= 0)
      for (int j = it->first; j < prev; ++j) acc *= r;
    acc += to_double(it->second);
    prev = it->first;
  }
  if (prev > 0)
    for (int j = 0; j < prev; ++j) acc *= r;
  return acc;
}

Rational RadialPolynomial::eval_exact(const Rational& r) const {
  Rational acc = 0;
  int prev = -1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (prev >= 0)
      for (int j = it->first; j < prev; ++j) acc *= r;
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0)
    for (int j = 0; j < prev; ++j) acc *= r;
  return acc;
}

RadialPolynomial RadialPolynomial::derivative() const {
  RadialPolynomial out;
  for (const auto& [k, c] : coeffs_)
    if (k > 0) out.coeffs_[k - 1] = c * k;
  out.trim();
  return out;
}

RadialPolynomial RadialPolynomial::euler() const {
  RadialPolynomial out;
  for (const auto& [k, c] : coeffs_)
    if (k > 0) out.coeffs_[k] = c * k;
  out.trim();
  return out;
}

RadialPolynomial RadialPolynomial::times_r(int power) const {
  RadialPolynomial out;
  for (const auto& [k, c] : coeffs_) out.coeffs_[k + power] = c;
  return out;
}

RadialPolynomial RadialPolynomial::operator+(const RadialPolynomial& o) const {
  RadialPolynomial out = *this;
  for (const auto& [k, c] : o.coeffs_) out.coeffs_[k] += c;
  out.trim();
  return out;
}

RadialPolynomial RadialPolynomial::operator-(const RadialPolynomial& o) const {
  RadialPolynomial out = *this;
  for (const auto& [k, c] : o.coeffs_) out.coeffs_[k] -= c;
  out.trim();
  return out;
}

RadialPolynomial RadialPolynomial::operator*(const RadialPolynomial& o) const {
  RadialPolynomial out;
  for (const auto& [k1, c1] : coeffs_)
    for (const auto& [k2, c2] : o.coeffs_) out.coeffs_[k1 + k2] += c1 * c2;
  out.trim();
  return out;
}

RadialPolynomial RadialPolynomial::operator*(const Rational& s) const {
  RadialPolynomial out;
  if (s == 0) return out;
  for (const auto& [k, c] : coeffs_) out.coeffs_[k] = c * s;
  return out;
}

std::string RadialPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!first) os << " + ";
    os << "(" << it->second << ")";
    if (it->first > 0) os << " r^" << it->first;
    first = false;
  }
  return os.str();
}

void RadialPolynomial::trim() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
}

RadialPolynomial radial_laplacian(const RadialPolynomial& poly, int n) {
  if (n < 1) throw InvalidParams("dimension must be >= 1");
  if (!poly.has_only_even_powers())
    throw InvalidParams("radial Laplacian requires even powers only");
  std::map<int, Rational> out;
  for (const auto& [k, c] : poly.coeffs()) {
    if (k == 0) continue;  // constant term drops
    out[k - 2] += c * k * (k + n - 2);
  }
  return RadialPolynomial(std::move(out));
}

RadialPolynomial iterated_laplacian(const RadialPolynomial& poly, int n, int i) {
  if (i < 0) throw InvalidParams("iteration count must be >= 0");
  RadialPolynomial out = poly;
  for (int j = 0; j < i; ++j) out = radial_laplacian(out, n);
  return out;
}

RadialPolynomial euler_derivative(const RadialPolynomial& poly) { return poly.euler(); }

RadialPolynomial commutator_residual(const RadialPolynomial& poly, int n, int i) {
  const RadialPolynomial lap_i = iterated_laplacian(poly, n, i);
  return iterated_laplacian(poly.euler(), n, i) - lap_i * Rational(2 * i) - lap_i.euler();
}

RadialPolynomial bilinear_identity_residual(const RadialPolynomial& z,
                                            const RadialPolynomial& w, int /*n*/) {
  const RadialPolynomial zp = z.derivative();
  const RadialPolynomial wp = w.derivative();
  const RadialPolynomial prod = zp * wp;
  return zp * wp.times_r().derivative() + wp * zp.times_r().derivative() -
         prod * Rational(2) - prod.derivative().times_r();
}

}  // namespace liouville
