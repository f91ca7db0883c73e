// Wall-time comparison of the serial reference scan against the OpenMP
// kernel on the same grid. The outputs are required to match cell for cell.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef LIOUVILLE_HAVE_OPENMP
#include <omp.h>
#endif

#include "liouville/scan.hpp"

using namespace liouville;
using clk = std::chrono::steady_clock;

namespace {

double run_once(ScanConfig cfg, int workers, std::vector<ScanRecord>& out) {
  cfg.workers = workers;
  const auto t0 = clk::now();
  out = run_scan_in_memory(cfg);
  return std::chrono::duration<double>(clk::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  ScanConfig cfg;
  cfg.n = 3;
  cfg.m = 1;
  cfg.p_min = cfg.q_min = 1.2;
  cfg.p_max = cfg.q_max = 7.0;
  cfg.p_count = cfg.q_count = 12;
  cfg.r_max = 1e3;

  int threads = 4;
#ifdef LIOUVILLE_HAVE_OPENMP
  threads = omp_get_max_threads();
#endif
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--grid") && i + 1 < argc)
      cfg.p_count = cfg.q_count = std::stoi(argv[++i]);
    else if (!std::strcmp(argv[i], "--threads") && i + 1 < argc)
      threads = std::stoi(argv[++i]);
    else if (!std::strcmp(argv[i], "--rmax") && i + 1 < argc)
      cfg.r_max = std::stod(argv[++i]);
    else {
      std::printf("usage: bench-scan [--grid N] [--threads T] [--rmax R]\n");
      return 1;
    }
  }

  std::printf("grid %dx%d, r_max %g, n=%d m=%d\n", cfg.p_count, cfg.q_count, cfg.r_max,
              cfg.n, cfg.m);

  std::vector<ScanRecord> serial, parallel;
  const double t_serial = run_once(cfg, 1, serial);
  std::printf("serial reference : %8.3f s\n", t_serial);

  const double t_par = run_once(cfg, threads, parallel);
  std::printf("openmp x%-2d       : %8.3f s   speedup %.2fx\n", threads, t_par,
              t_serial / t_par);

  bool match = serial.size() == parallel.size();
  for (size_t i = 0; match && i < serial.size(); ++i)
    match = serial[i].to_json_line() == parallel[i].to_json_line();
  std::printf("outputs %s\n", match ? "match" : "DIFFER");
  return match ? 0 : 2;
}
