// liouville-lab: numerical laboratory for the weighted polyharmonic system
//   (-Lap)^m u = |x|^a v^p,  (-Lap)^m v = |x|^b u^q   on R^n.
//
// Subcommands: classify, exponents, epsilon, shoot, pohozaev, scan, curve,
// poly-check. Exit codes: 0 success, 1 usage error, 2 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "liouville/errors.hpp"
#include "liouville/estimates.hpp"
#include "liouville/params.hpp"
#include "liouville/pohozaev.hpp"
#include "liouville/radial_poly.hpp"
#include "liouville/scan.hpp"

namespace {

using namespace liouville;

struct ParamArgs {
  int n = 3, m = 1;
  std::string a = "0", b = "0", p = "2", q = "2";

  // All four exponent strings exact (integers or fractions)?
  std::optional<RationalParams> exact() const {
    const auto ra = parse_rational(a), rb = parse_rational(b);
    const auto rp = parse_rational(p), rq = parse_rational(q);
    if (ra && rb && rp && rq) return RationalParams{n, m, *ra, *rb, *rp, *rq};
    return std::nullopt;
  }

  ProblemParams numeric() const {
    auto parse = [](const std::string& s, const char* name) {
      if (const auto r = parse_rational(s)) return to_double(*r);
      try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
      } catch (const std::exception&) {
        throw InvalidParams(std::string("cannot parse --") + name + " value '" + s + "'");
      }
    };
    return ProblemParams{n, m, parse(a, "a"), parse(b, "b"), parse(p, "p"), parse(q, "q")};
  }
};

void add_param_flags(CLI::App* cmd, ParamArgs& pa) {
  cmd->add_option("--n", pa.n, "space dimension");
  cmd->add_option("--m", pa.m, "polyharmonic order");
  cmd->add_option("--a", pa.a, "weight exponent a (number or fraction like 7/3)");
  cmd->add_option("--b", pa.b, "weight exponent b");
  cmd->add_option("--p", pa.p, "exponent p");
  cmd->add_option("--q", pa.q, "exponent q");
}

int cmd_classify(const ParamArgs& pa) {
  Criticality c;
  if (const auto exact = pa.exact())
    c = classify_exact(*exact);
  else
    c = classify(pa.numeric());
  std::cout << to_string(c) << "\n";
  return 0;
}

int cmd_exponents(const ParamArgs& pa) {
  const ProblemParams prm = pa.numeric();
  const auto [au, av] = scaling_exponents(prm);
  const double gap = criticality_gap(prm);
  std::printf("alpha_u = %.12g\nalpha_v = %.12g\ngap = %.12g\n", au, av, gap);
  return 0;
}

int cmd_epsilon(const ParamArgs& pa) {
  const EpsilonCertificate cert = find_epsilon(pa.numeric());
  std::printf("epsilon = %.12g\nf1 = %.12g\nf1_tilde = %.12g\nf2 = %.12g\n",
              cert.epsilon, cert.f1, cert.f1_tilde, cert.f2);
  return 0;
}

int cmd_shoot(const ParamArgs& pa, double rmax, double lo, double hi, bool trace) {
  const ProblemParams prm = pa.numeric();
  ShootOutcome out;
  if (prm.m == 1)
    out = shoot_system_m1(prm, lo, hi, rmax);
  else if (prm.scalar_case())
    out = shoot_scalar(prm, rmax);
  else
    throw InvalidParams("shooting for m > 1 needs the scalar case p = q, a = b");
  if (trace)
    for (const auto& pt : out.trace)
      std::printf("trial s=%.12g  first=%s  r=%.6g\n", pt.s,
                  component_name(pt.component, prm.m).c_str(), pt.r_cross);
  std::cout << to_string(out.result, prm.m) << "\n";
  return 0;
}

int cmd_pohozaev(const ParamArgs& pa, double R, double lambda, std::string u0s,
                 std::string v0s, double rmax, double rtol, double atol) {
  const ProblemParams prm = pa.numeric();
  auto parse_list = [&](const std::string& s) {
    std::vector<double> vals;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(std::stod(item));
    if (static_cast<int>(vals.size()) == 1) vals.resize(prm.m, vals[0]);
    if (static_cast<int>(vals.size()) != prm.m)
      throw InvalidParams("initial data needs 1 or m comma-separated values");
    return vals;
  };
  InitialData init{parse_list(u0s), parse_list(v0s)};
  IntegrateOptions opts;
  opts.rtol = rtol;
  opts.atol = atol;
  const Trajectory traj = integrate(prm, init, std::max(rmax, 1.2 * R), opts);
  const double gamma = (prm.n - 2.0 * prm.m) - lambda;
  const PohozaevReport rep = pohozaev_residual(prm, traj, R, lambda, gamma);

  std::printf("R = %g   lambda = %.12g   gamma = %.12g\n", rep.R, rep.lambda, rep.gamma);
  std::printf("%-24s %24.16e\n", "lhs", rep.lhs);
  for (const auto& t : rep.terms) std::printf("%-24s %24.16e\n", t.name.c_str(), t.value);
  std::printf("%-24s %24.16e\n", "rhs (sum)", rep.rhs);
  std::printf("%-24s %24.16e\n", "residual", rep.residual);

  // machine-readable record
  std::printf("{\"R\":%.17g,\"lambda\":%.17g,\"gamma\":%.17g,\"lhs\":%.17g,"
              "\"rhs\":%.17g,\"residual\":%.17g}\n",
              rep.R, rep.lambda, rep.gamma, rep.lhs, rep.rhs, rep.residual);
  return 0;
}

int cmd_poly_check(uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9), deg(0, 6), dim(1, 10),
      iter(0, 4);
  auto random_poly = [&]() {
    std::map<int, Rational> c;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k)
      if (num(rng) % 2 == 0) c[2 * k] = Rational(num(rng), den(rng));
    return RadialPolynomial(std::move(c));
  };
  bool ok_comm = true, ok_bilin = true;
  for (int t = 0; t < cases; ++t) {
    const RadialPolynomial pz = random_poly(), pw = random_poly();
    const int n = dim(rng), i = iter(rng);
    if (!commutator_residual(pz, n, i).is_zero()) ok_comm = false;
    if (!bilinear_identity_residual(pz, pw, n).is_zero()) ok_bilin = false;
  }
  std::printf("%s commutator identity  Delta^i(r z') = 2i Delta^i z + r (Delta^i z)'  "
              "(%d cases)\n", ok_comm ? "PASS" : "FAIL", cases);
  std::printf("%s bilinear identity    z'(rw')' + w'(rz')' = 2 z'w' + r (z'w')'  "
              "(%d cases)\n", ok_bilin ? "PASS" : "FAIL", cases);
  return (ok_comm && ok_bilin) ? 0 : 2;
}

int cmd_scan(const std::string& config_path, bool resume) {
  const ScanConfig cfg = load_scan_config(config_path);
  const auto records = run_scan(cfg, resume);
  int sub = 0, sign_changes = 0;
  for (const auto& r : records) {
    if (r.classification == Criticality::Subcritical) ++sub;
    if (r.shoot.kind == "SignChange") ++sign_changes;
  }
  std::printf("scan complete: %zu cells -> %s (subcritical %d, sign-change %d)\n",
              records.size(), resolve_output_path(cfg.output).c_str(), sub, sign_changes);
  return 0;
}

int cmd_curve(int n, int m, const std::string& a, const std::string& b, double p_min,
              double p_max, int count, const std::string& output) {
  auto parse = [](const std::string& s) {
    if (const auto r = parse_rational(s)) return to_double(*r);
    return std::stod(s);
  };
  std::ostringstream body;
  emit_curve(n, m, parse(a), parse(b), p_min, p_max, count, body);
  if (output.empty() || output == "-") {
    std::cout << body.str();
  } else {
    const std::string path = resolve_output_path(output);
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path);
    out << body.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "liouville-lab: radial shooting, Pohozaev-identity verification and\n"
      "criticality scans for the weighted polyharmonic system\n"
      "  (-Lap)^m u = |x|^a v^p,  (-Lap)^m v = |x|^b u^q  on R^n.\n\n"
      "Scan config file: 'key = value' lines with keys n, m, a, b,\n"
      "p_min, p_max, p_count, q_min, q_max, q_count, r_max, rtol, atol,\n"
      "workers, output. Scan output: one JSON record per line with fields\n"
      "i, j, n, m, a, b, p, q, gap, classification, shoot{kind, r|slopes},\n"
      "pohozaev_residual, error. Curve output: CSV 'p,q_critical'.\n"
      "LIOUVILLE_LAB_OUT overrides the output directory."};
  app.require_subcommand(1);

  ParamArgs pa;
  double rmax = 1e4, bracket_lo = 0.1, bracket_hi = 10.0, radius = 1.0;
  double lambda = 0.0, rtol = 1e-10, atol = 1e-12;
  bool trace = false, resume = false;
  std::string u0 = "1", v0 = "1", config_path, output;
  uint64_t seed = 20240901;
  int cases = 500, curve_count = 50;
  double p_min = 1.0, p_max = 9.0;

  auto* c_classify = app.add_subcommand("classify", "criticality vs the Sobolev hyperbola");
  add_param_flags(c_classify, pa);

  auto* c_expo = app.add_subcommand("exponents", "scaling exponents and hyperbola gap");
  add_param_flags(c_expo, pa);

  auto* c_eps = app.add_subcommand("epsilon", "epsilon certificate (subcritical only)");
  add_param_flags(c_eps, pa);

  auto* c_shoot = app.add_subcommand("shoot", "radial shooting experiment");
  add_param_flags(c_shoot, pa);
  c_shoot->add_option("--rmax", rmax, "integration radius");
  c_shoot->add_option("--bracket-lo", bracket_lo, "lower v(0) bracket (m = 1)");
  c_shoot->add_option("--bracket-hi", bracket_hi, "upper v(0) bracket (m = 1)");
  c_shoot->add_flag("--trace", trace, "print every bisection trial");

  auto* c_poho = app.add_subcommand("pohozaev", "identity residual report at radius R");
  add_param_flags(c_poho, pa);
  c_poho->add_option("--radius", radius, "evaluation radius R");
  c_poho->add_option("--lambda", lambda, "lambda (gamma = n - 2m - lambda inferred)");
  c_poho->add_option("--u0", u0, "initial data for u chain (value or m-list)");
  c_poho->add_option("--v0", v0, "initial data for v chain (value or m-list)");
  c_poho->add_option("--rmax", rmax, "integration radius");
  c_poho->add_option("--rtol", rtol, "relative tolerance");
  c_poho->add_option("--atol", atol, "absolute tolerance");

  auto* c_scan = app.add_subcommand("scan", "(p,q) grid scan from a config file");
  c_scan->add_option("config", config_path, "key = value config file")->required();
  c_scan->add_flag("--resume", resume, "skip cells already present in the output");

  auto* c_curve = app.add_subcommand("curve", "critical hyperbola samples as CSV");
  c_curve->add_option("--n", pa.n, "space dimension");
  c_curve->add_option("--m", pa.m, "polyharmonic order");
  c_curve->add_option("--a", pa.a, "weight exponent a");
  c_curve->add_option("--b", pa.b, "weight exponent b");
  c_curve->add_option("--p-min", p_min, "first p sample");
  c_curve->add_option("--p-max", p_max, "last p sample");
  c_curve->add_option("--count", curve_count, "number of samples");
  c_curve->add_option("--output", output, "output file ('-' = stdout)");

  auto* c_poly = app.add_subcommand("poly-check",
                                    "exact differential identities on random polynomials");
  c_poly->add_option("--seed", seed, "RNG seed");
  c_poly->add_option("--cases", cases, "number of random cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // --help exits 0, anything malformed is a usage error
  }

  try {
    if (c_classify->parsed()) return cmd_classify(pa);
    if (c_expo->parsed()) return cmd_exponents(pa);
    if (c_eps->parsed()) return cmd_epsilon(pa);
    if (c_shoot->parsed()) return cmd_shoot(pa, rmax, bracket_lo, bracket_hi, trace);
    if (c_poho->parsed()) {
      if (c_poho->count("--lambda") == 0) {
        const ProblemParams prm = pa.numeric();
        lambda = 0.5 * (prm.n - 2.0 * prm.m);
      }
      return cmd_pohozaev(pa, radius, lambda, u0, v0, rmax, rtol, atol);
    }
    if (c_scan->parsed()) return cmd_scan(config_path, resume);
    if (c_curve->parsed())
      return cmd_curve(pa.n, pa.m, pa.a, pa.b, p_min, p_max, curve_count, output);
    if (c_poly->parsed()) return cmd_poly_check(seed, cases);
  } catch (const InvalidParams& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
