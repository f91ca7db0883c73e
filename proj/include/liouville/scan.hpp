#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "liouville/params.hpp"
#include "liouville/radial_ode.hpp"

namespace liouville {

// Grid scan over (p, q) at fixed (n, m, a, b): classification, a
// deterministic unit-height shot per cell, and a Pohozaev residual probe.
struct ScanConfig {
  int n = 3;
  int m = 1;
  double a = 0.0;
  double b = 0.0;
  double p_min = 1.1, p_max = 8.0;
  int p_count = 10;
  double q_min = 1.1, q_max = 8.0;
  int q_count = 10;
  double r_max = 1e4;
  double rtol = 1e-10;
  double atol = 1e-12;
  int workers = 1;
  std::string output = "scan.jsonl";

  void validate() const;
  double p_at(int i) const;
  double q_at(int j) const;
};

// Parses the key = value config format ('#' starts a comment). Unknown keys
// are an error.
ScanConfig load_scan_config(const std::string& path);
ScanConfig parse_scan_config(std::istream& in, const std::string& origin);

struct ShootSummary {
  std::string kind;        // "SignChange" | "PositiveToRmax" | "BlowUp"
  double r = 0.0;          // crossing / blow-up radius
  std::string component;   // first component to vanish
  double slope_u = 0.0, slope_v = 0.0;
};

struct ScanRecord {
  int i = 0, j = 0;
  ProblemParams params;
  Criticality classification = Criticality::Subcritical;
  double gap = 0.0;
  ShootSummary shoot;
  std::optional<double> pohozaev_residual;
  std::string error;  // per-cell numerical failure, if any

  std::string to_json_line() const;
};

// Applies the LIOUVILLE_LAB_OUT directory override, if set, to a configured
// output path.
std::string resolve_output_path(const std::string& configured);

ScanRecord compute_cell(const ScanConfig& cfg, int i, int j);

// Runs the scan, streaming records to cfg.output in grid order (row-major in
// (i, j)) regardless of completion order. workers > 1 uses the OpenMP path;
// workers == 1 is the serial reference. With resume, cells whose grid index
// is already present in the output file are not recomputed; a complete file
// is left untouched.
std::vector<ScanRecord> run_scan(const ScanConfig& cfg, bool resume = false);

// In-memory scan without file output (used by the benchmark and tests).
std::vector<ScanRecord> run_scan_in_memory(const ScanConfig& cfg);

// Critical-curve sampler: CSV rows "p,q_critical" for p on a uniform grid;
// p values with no finite q on the curve emit a comment row instead.
void emit_curve(int n, int m, double a, double b, double p_min, double p_max,
                int count, std::ostream& out);

}  // namespace liouville
