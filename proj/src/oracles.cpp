#include <cmath>

#include "liouville/errors.hpp"
#include "liouville/radial_ode.hpp"

namespace liouville {

// CriticalBubble:  u = (n(n-2))^{(n-2)/4} (1+r^2)^{-(n-2)/2}
//                  solves -Lap u = u^{(n+2)/(n-2)}            (n >= 3)
// HenonBubble:     u = ((n-2)(n+a))^{(n-2)/(2(2+a))} (1+r^{2+a})^{-(n-2)/(2+a)}
//                  solves -Lap u = r^a u^{(n+2+2a)/(n-2)}     (n >= 3, a >= 0)
// SingularPower:   u = A r^{-2/(p-1)}, A^{p-1} = (2/(p-1))(n-2-2/(p-1))
//                  solves -Lap u = u^p                        (2/(p-1) < n-2)
ClosedFormSolution ClosedFormSolution::make(OracleKind kind, int n, double a_or_p) {
  ClosedFormSolution s;
  s.kind_ = kind;
  switch (kind) {
    case OracleKind::CriticalBubble: {
      if (n < 3) throw UnsupportedKind("critical bubble requires n >= 3");
      const double p = (n + 2.0) / (n - 2.0);
      s.prm_ = {n, 1, 0.0, 0.0, p, p};
      s.amp_ = std::pow(n * (n - 2.0), (n - 2.0) / 4.0);
      s.expo_ = (n - 2.0) / 2.0;
      break;
    }
    case OracleKind::HenonBubble: {
      const double a = a_or_p;
      if (n < 3 || a < 0.0) throw UnsupportedKind("Henon bubble requires n >= 3, a >= 0");
      const double p = (n + 2.0 + 2.0 * a) / (n - 2.0);
      s.prm_ = {n, 1, a, a, p, p};
      s.amp_ = std::pow((n - 2.0) * (n + a), (n - 2.0) / (2.0 * (2.0 + a)));
      s.expo_ = (n - 2.0) / (2.0 + a);
      break;
    }
    case OracleKind::SingularPower: {
      const double p = a_or_p;
      const double alpha = 2.0 / (p - 1.0);
      if (!(p > 1.0) || !(alpha < n - 2.0))
        throw UnsupportedKind("singular power requires p > 1 and 2/(p-1) < n-2");
      s.prm_ = {n, 1, 0.0, 0.0, p, p};
      s.amp_ = std::pow(alpha * (n - 2.0 - alpha), 1.0 / (p - 1.0));
      s.expo_ = alpha;
      break;
    }
  }
  return s;
}

double ClosedFormSolution::value(double r) const {
  switch (kind_) {
    case OracleKind::CriticalBubble:
      return amp_ * std::pow(1.0 + r * r, -expo_);
    case OracleKind::HenonBubble: {
      const double s = std::pow(r, 2.0 + prm_.a);
      return amp_ * std::pow(1.0 + s, -(prm_.n - 2.0) / (2.0 + prm_.a));
    }
    case OracleKind::SingularPower:
      return amp_ * std::pow(r, -expo_);
  }
  return 0.0;
}

double ClosedFormSolution::deriv(double r) const {
  switch (kind_) {
    case OracleKind::CriticalBubble:
      return amp_ * -expo_ * std::pow(1.0 + r * r, -expo_ - 1.0) * 2.0 * r;
    case OracleKind::HenonBubble: {
      const double ta = 2.0 + prm_.a;
      const double beta = (prm_.n - 2.0) / ta;
      const double s = std::pow(r, ta);
      return amp_ * -beta * std::pow(1.0 + s, -beta - 1.0) * ta * std::pow(r, ta - 1.0);
    }
    case OracleKind::SingularPower:
      return amp_ * -expo_ * std::pow(r, -expo_ - 1.0);
  }
  return 0.0;
}

double ClosedFormSolution::second_deriv(double r) const {
  switch (kind_) {
    case OracleKind::CriticalBubble: {
      const double w = 1.0 + r * r;
      return amp_ * 2.0 * expo_ *
             (2.0 * (expo_ + 1.0) * r * r * std::pow(w, -expo_ - 2.0) -
              std::pow(w, -expo_ - 1.0));
    }
    case OracleKind::HenonBubble: {
      const double ta = 2.0 + prm_.a;
      const double beta = (prm_.n - 2.0) / ta;
      const double s = std::pow(r, ta);
      const double w = 1.0 + s;
      // d/dr [ -beta ta r^{ta-1} (1+s)^{-beta-1} ]
      return amp_ * beta * ta *
             ((beta + 1.0) * ta * std::pow(r, 2.0 * ta - 2.0) * std::pow(w, -beta - 2.0) -
              (ta - 1.0) * std::pow(r, ta - 2.0) * std::pow(w, -beta - 1.0));
    }
    case OracleKind::SingularPower:
      return amp_ * expo_ * (expo_ + 1.0) * std::pow(r, -expo_ - 2.0);
  }
  return 0.0;
}

double ClosedFormSolution::ode_residual(double r) const {
  if (!(r > 0.0)) throw InvalidParams("residual check requires r > 0");
  RadialState s;
  s.r = r;
  s.w = {value(r)};
  s.wp = {deriv(r)};
  s.z = s.w;
  s.zp = s.wp;
  const RadialState d = vector_field(prm_, s);
  // d.w[0] is the derivative relation (exact by construction); d.wp[0] must
  // reproduce u''.
  return std::max(std::abs(d.w[0] - deriv(r)), std::abs(d.wp[0] - second_deriv(r)));
}

InitialData ClosedFormSolution::initial_data() const {
  if (kind_ == OracleKind::SingularPower)
    throw UnsupportedKind("singular solution has no regular data at the origin");
  return InitialData::uv(amp_, amp_);
}

ClosedFormSolution exact_solution_oracle(OracleKind kind, int n, double a_or_p) {
  return ClosedFormSolution::make(kind, n, a_or_p);
}

}  // namespace liouville
