#include "liouville/params.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <sstream>

#include "liouville/errors.hpp"

namespace liouville {

std::optional<Rational> parse_rational(const std::string& text) {
  static const std::regex pat(R"(^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$)");
  std::smatch m;
  if (!std::regex_match(text, m, pat)) return std::nullopt;
  BigInt num(m[1].str());
  BigInt den = m[2].matched ? BigInt(m[2].str()) : BigInt(1);
  if (den == 0) return std::nullopt;
  return Rational(num, den);
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

int sign(const Rational& x) { return x.sign(); }

std::string to_string(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

void ProblemParams::validate() const {
  if (n < 1 || m < 1) throw InvalidParams("n and m must be integers >= 1");
  if (!(a >= 0.0) || !(b >= 0.0)) throw InvalidParams("weights a, b must be >= 0");
  if (!(p >= 1.0) || !(q >= 1.0)) throw InvalidParams("exponents p, q must be >= 1");
  if (p == 1.0 && q == 1.0) throw InvalidParams("pq = 1 is excluded");
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(p) || !std::isfinite(q))
    throw InvalidParams("parameters must be finite");
}

std::string to_string(Criticality c) {
  switch (c) {
    case Criticality::Subcritical: return "Subcritical";
    case Criticality::Critical: return "Critical";
    case Criticality::Supercritical: return "Supercritical";
  }
  return "?";
}

double FTriple::min() const { return std::min({f1, f1_tilde, f2}); }

double criticality_gap(const ProblemParams& prm) {
  prm.validate();
  const double n = prm.n;
  return (n + prm.a) / (prm.p + 1.0) + (n + prm.b) / (prm.q + 1.0) - (n - 2.0 * prm.m);
}

Criticality classify(const ProblemParams& prm) {
  const double gap = criticality_gap(prm);
  const double n = prm.n;
  const double scale = (n + prm.a) / (prm.p + 1.0) + (n + prm.b) / (prm.q + 1.0) +
                       std::abs(n - 2.0 * prm.m);
  if (std::abs(gap) <= 1e-12 * std::max(scale, 1.0)) return Criticality::Critical;
  return gap > 0.0 ? Criticality::Subcritical : Criticality::Supercritical;
}

ScalingExponents scaling_exponents(const ProblemParams& prm) {
  prm.validate();
  const double pq1 = prm.p * prm.q - 1.0;
  if (pq1 <= 0.0) throw DegenerateExponents();
  const double tm = 2.0 * prm.m;
  return {((prm.b + tm) * prm.p + (prm.a + tm)) / pq1,
          ((prm.a + tm) * prm.q + (prm.b + tm)) / pq1};
}

FTriple f_epsilon(const ProblemParams& prm, double eps) {
  prm.validate();
  if (eps < 0.0) throw InvalidParams("eps must be >= 0");
  const double pq1 = prm.p * prm.q - 1.0;
  if (pq1 <= 0.0) throw DegenerateExponents();
  const auto [alpha_u, alpha_v] = scaling_exponents(prm);
  const double n = prm.n, tm = 2.0 * prm.m, e1 = 1.0 + eps;
  FTriple f;
  f.f1 = (prm.p + 1.0) * ((tm + alpha_v - prm.b * eps) / e1 - tm - (n + prm.a) / (prm.p + 1.0));
  f.f1_tilde =
      (prm.q + 1.0) * ((tm + alpha_u - prm.a * eps) / e1 - tm - (n + prm.b) / (prm.q + 1.0));
  f.f2 = -n + tm * (1.0 - eps) / e1 +
         ((prm.b + tm) * (prm.p + 1.0) + (prm.a + tm) * (prm.q + 1.0)) / (pq1 * e1) -
         (prm.a + prm.b) * eps / e1;
  return f;
}

EpsilonCertificate find_epsilon(const ProblemParams& prm) {
  if (classify(prm) != Criticality::Subcritical) throw NotSubcritical();
  double eps = 0.1;
  for (int k = 0; k < 200; ++k, eps *= 0.5) {
    const FTriple f = f_epsilon(prm, eps);
    if (f.min() > 0.0) return {eps, f.f1, f.f1_tilde, f.f2};
  }
  throw NoEpsilonFound();
}

double hyperbola_q(int n, int m, double a, double b, double p) {
  if (n <= 2 * m) throw InvalidParams("hyperbola_q requires n > 2m");
  if (!(p >= 1.0)) throw InvalidParams("p must be >= 1");
  const double denom = (n - 2.0 * m) - (n + a) / (p + 1.0);
  if (denom <= 0.0) throw NoSolution("no finite q on the critical curve for this p");
  return (n + b) / denom - 1.0;
}

void RationalParams::validate() const {
  if (n < 1 || m < 1) throw InvalidParams("n and m must be integers >= 1");
  if (a < 0 || b < 0) throw InvalidParams("weights a, b must be >= 0");
  if (p < 1 || q < 1) throw InvalidParams("exponents p, q must be >= 1");
  if (p == 1 && q == 1) throw InvalidParams("pq = 1 is excluded");
}

ProblemParams RationalParams::to_double() const {
  return {n, m, liouville::to_double(a), liouville::to_double(b), liouville::to_double(p),
          liouville::to_double(q)};
}

Rational criticality_gap_exact(const RationalParams& prm) {
  prm.validate();
  const Rational n(prm.n), tm(2 * prm.m);
  return (n + prm.a) / (prm.p + 1) + (n + prm.b) / (prm.q + 1) - (n - tm);
}

Criticality classify_exact(const RationalParams& prm) {
  switch (sign(criticality_gap_exact(prm))) {
    case 1: return Criticality::Subcritical;
    case 0: return Criticality::Critical;
    default: return Criticality::Supercritical;
  }
}

}  // namespace liouville
