#include "liouville/scan.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "liouville/errors.hpp"
#include "liouville/pohozaev.hpp"

namespace liouville {

using ordered_json = nlohmann::ordered_json;

void ScanConfig::validate() const {
  if (n < 1 || m < 1) throw InvalidParams("scan: n and m must be >= 1");
  if (a < 0.0 || b < 0.0) throw InvalidParams("scan: weights must be >= 0");
  if (!(p_min <= p_max) || !(q_min <= q_max)) throw InvalidParams("scan: empty range");
  if (!(p_min >= 1.0) || !(q_min >= 1.0)) throw InvalidParams("scan: exponents start at 1");
  if (p_count < 2 || q_count < 2) throw InvalidParams("scan: resolution must be >= 2");
  if (!(r_max > 1.0)) throw InvalidParams("scan: r_max must exceed 1");
  if (workers < 1) throw InvalidParams("scan: workers must be >= 1");
  if (output.empty()) throw InvalidParams("scan: output path required");
}

double ScanConfig::p_at(int i) const {
  return p_min + (p_max - p_min) * i / (p_count - 1);
}
double ScanConfig::q_at(int j) const {
  return q_min + (q_max - q_min) * j / (q_count - 1);
}

ScanConfig parse_scan_config(std::istream& in, const std::string& origin) {
  ScanConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos)
      throw IoError(origin + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    try {
      if (key == "n") cfg.n = std::stoi(val);
      else if (key == "m") cfg.m = std::stoi(val);
      else if (key == "a") cfg.a = std::stod(val);
      else if (key == "b") cfg.b = std::stod(val);
      else if (key == "p_min") cfg.p_min = std::stod(val);
      else if (key == "p_max") cfg.p_max = std::stod(val);
      else if (key == "p_count") cfg.p_count = std::stoi(val);
      else if (key == "q_min") cfg.q_min = std::stod(val);
      else if (key == "q_max") cfg.q_max = std::stod(val);
      else if (key == "q_count") cfg.q_count = std::stoi(val);
      else if (key == "r_max") cfg.r_max = std::stod(val);
      else if (key == "rtol") cfg.rtol = std::stod(val);
      else if (key == "atol") cfg.atol = std::stod(val);
      else if (key == "workers") cfg.workers = std::stoi(val);
      else if (key == "output") cfg.output = val;
      else
        throw IoError(origin + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw IoError(origin + ":" + std::to_string(lineno) + ": bad value for '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

ScanConfig load_scan_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scan config: " + path);
  return parse_scan_config(in, path);
}

std::string resolve_output_path(const std::string& configured) {
  const char* dir = std::getenv("LIOUVILLE_LAB_OUT");
  if (!dir || !*dir) return configured;
  return (std::filesystem::path(dir) /
          std::filesystem::path(configured).filename()).string();
}

std::string ScanRecord::to_json_line() const {
  ordered_json j;
  j["i"] = i;
  j["j"] = this->j;
  j["n"] = params.n;
  j["m"] = params.m;
  j["a"] = params.a;
  j["b"] = params.b;
  j["p"] = params.p;
  j["q"] = params.q;
  j["gap"] = gap;
  j["classification"] = liouville::to_string(classification);
  ordered_json js;
  js["kind"] = shoot.kind;
  if (shoot.kind == "SignChange") {
    js["r"] = shoot.r;
    js["component"] = shoot.component;
  } else if (shoot.kind == "PositiveToRmax") {
    js["slope_u"] = shoot.slope_u;
    js["slope_v"] = shoot.slope_v;
  } else if (shoot.kind == "BlowUp") {
    js["r"] = shoot.r;
  }
  j["shoot"] = js;
  if (pohozaev_residual)
    j["pohozaev_residual"] = *pohozaev_residual;
  else
    j["pohozaev_residual"] = nullptr;
  if (!error.empty()) j["error"] = error;
  return j.dump();
}

namespace {

ScanRecord record_from_json_line(const std::string& line) {
  const auto j = ordered_json::parse(line);
  ScanRecord rec;
  rec.i = j.at("i").get<int>();
  rec.j = j.at("j").get<int>();
  rec.params = {j.at("n").get<int>(), j.at("m").get<int>(), j.at("a").get<double>(),
                j.at("b").get<double>(), j.at("p").get<double>(), j.at("q").get<double>()};
  rec.gap = j.at("gap").get<double>();
  const std::string cls = j.at("classification").get<std::string>();
  rec.classification = cls == "Subcritical"    ? Criticality::Subcritical
                       : cls == "Critical"     ? Criticality::Critical
                                               : Criticality::Supercritical;
  const auto& js = j.at("shoot");
  rec.shoot.kind = js.at("kind").get<std::string>();
  if (js.contains("r")) rec.shoot.r = js.at("r").get<double>();
  if (js.contains("component")) rec.shoot.component = js.at("component").get<std::string>();
  if (js.contains("slope_u")) rec.shoot.slope_u = js.at("slope_u").get<double>();
  if (js.contains("slope_v")) rec.shoot.slope_v = js.at("slope_v").get<double>();
  if (!j.at("pohozaev_residual").is_null())
    rec.pohozaev_residual = j.at("pohozaev_residual").get<double>();
  if (j.contains("error")) rec.error = j.at("error").get<std::string>();
  return rec;
}

}  // namespace

ScanRecord compute_cell(const ScanConfig& cfg, int i, int j) {
  ScanRecord rec;
  rec.i = i;
  rec.j = j;
  rec.params = {cfg.n, cfg.m, cfg.a, cfg.b, cfg.p_at(i), cfg.q_at(j)};
  rec.gap = criticality_gap(rec.params);
  rec.classification = classify(rec.params);
  try {
    IntegrateOptions opts;
    opts.rtol = cfg.rtol;
    opts.atol = cfg.atol;
    opts.stop_at_sign_change = true;
    const Trajectory traj =
        integrate(rec.params, InitialData::ones(cfg.m), cfg.r_max, opts);

    double r_positive = cfg.r_max;
    if (const auto sc = traj.first_sign_change()) {
      rec.shoot.kind = "SignChange";
      rec.shoot.r = sc->r;
      rec.shoot.component = component_name(sc->component, cfg.m);
      r_positive = sc->r;
    } else if (const auto bu = traj.blow_up()) {
      rec.shoot.kind = "BlowUp";
      rec.shoot.r = bu->r;
      r_positive = bu->r;
    } else {
      rec.shoot.kind = "PositiveToRmax";
      const DecaySlopes sl = decay_fit(traj, cfg.r_max / 10.0, cfg.r_max);
      rec.shoot.slope_u = sl.slope_u;
      rec.shoot.slope_v = sl.slope_v;
    }

    // identity probe inside the positivity region
    const double R = std::min(1.0, 0.5 * r_positive);
    if (R > 1e-2 && traj.in_domain(R)) {
      const double lambda = 0.5 * (cfg.n - 2.0 * cfg.m);
      rec.pohozaev_residual =
          pohozaev_residual(rec.params, traj, R, lambda, lambda).residual;
    }
  } catch (const NumericalError& e) {
    rec.error = e.what();
    rec.shoot.kind = "Error";
  }
  return rec;
}

namespace {

std::vector<ScanRecord> scan_cells(const ScanConfig& cfg, const std::vector<int>& todo,
                                   std::ofstream* out) {
  const int q_count = cfg.q_count;
  std::vector<ScanRecord> done(todo.size());

  auto emit = [&](const ScanRecord& rec) {
    if (out) {
      (*out) << rec.to_json_line() << "\n";
      out->flush();
    }
  };

  if (cfg.workers == 1) {
    // serial reference path
    for (size_t t = 0; t < todo.size(); ++t) {
      done[t] = compute_cell(cfg, todo[t] / q_count, todo[t] % q_count);
      emit(done[t]);
    }
    return done;
  }

#ifdef LIOUVILLE_HAVE_OPENMP
  // parallel cells, grid-ordered emission through a reorder buffer
  std::map<size_t, const ScanRecord*> buffer;
  size_t next = 0;
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.workers)
  for (size_t t = 0; t < todo.size(); ++t) {
    ScanRecord rec = compute_cell(cfg, todo[t] / q_count, todo[t] % q_count);
#pragma omp critical(liouville_scan_writer)
    {
      done[t] = std::move(rec);
      buffer[t] = &done[t];
      while (!buffer.empty() && buffer.begin()->first == next) {
        emit(*buffer.begin()->second);
        buffer.erase(buffer.begin());
        ++next;
      }
    }
  }
#else
  for (size_t t = 0; t < todo.size(); ++t) {
    done[t] = compute_cell(cfg, todo[t] / q_count, todo[t] % q_count);
    emit(done[t]);
  }
#endif
  return done;
}

}  // namespace

std::vector<ScanRecord> run_scan_in_memory(const ScanConfig& cfg) {
  cfg.validate();
  std::vector<int> todo(static_cast<size_t>(cfg.p_count) * cfg.q_count);
  for (size_t t = 0; t < todo.size(); ++t) todo[t] = static_cast<int>(t);
  return scan_cells(cfg, todo, nullptr);
}

std::vector<ScanRecord> run_scan(const ScanConfig& cfg, bool resume) {
  cfg.validate();
  const std::string path = resolve_output_path(cfg.output);
  const int total = cfg.p_count * cfg.q_count;

  std::map<int, ScanRecord> existing;
  if (resume && std::filesystem::exists(path)) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read existing output: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        ScanRecord rec = record_from_json_line(line);
        existing[rec.i * cfg.q_count + rec.j] = std::move(rec);
      } catch (const std::exception& e) {
        throw IoError(path + ":" + std::to_string(lineno) + ": unreadable record");
      }
    }
  }

  std::vector<int> todo;
  for (int idx = 0; idx < total; ++idx)
    if (!existing.count(idx)) todo.push_back(idx);

  std::vector<ScanRecord> fresh;
  if (!todo.empty()) {
    std::ofstream out(path, resume ? std::ios::app : std::ios::trunc);
    if (!out) throw IoError("cannot open scan output: " + path);
    fresh = scan_cells(cfg, todo, &out);
  } else if (!resume) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open scan output: " + path);
  }

  std::vector<ScanRecord> all;
  all.reserve(total);
  size_t f = 0;
  for (int idx = 0; idx < total; ++idx) {
    if (auto it = existing.find(idx); it != existing.end())
      all.push_back(std::move(it->second));
    else
      all.push_back(std::move(fresh[f++]));
  }
  return all;
}

void emit_curve(int n, int m, double a, double b, double p_min, double p_max, int count,
                std::ostream& out) {
  if (n <= 2 * m) throw InvalidParams("curve requires n > 2m");
  if (count < 2 || !(p_min <= p_max) || !(p_min >= 1.0))
    throw InvalidParams("curve: bad p range");
  char buf[128];
  out << "p,q_critical\n";
  for (int i = 0; i < count; ++i) {
    const double p = p_min + (p_max - p_min) * i / (count - 1);
    try {
      const double q = hyperbola_q(n, m, a, b, p);
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p, q);
      out << buf;
    } catch (const NoSolution&) {
      std::snprintf(buf, sizeof buf, "# p=%.17g: no finite q on the critical curve\n", p);
      out << buf;
    }
  }
}

}  // namespace liouville
