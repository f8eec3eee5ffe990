#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heckeeta/analytic.hpp"
#include "heckeeta/golden.hpp"
#include "heckeeta/quad_ring.hpp"

namespace heckeeta {

// ---- golden data ----

struct TableCheck {
  std::string series;  // "eta" or "delta5"
  int D = 0;
  int N = 0;
  RingElem expected;
  RingElem actual;
  bool passed = false;
};

/// Recomputes every entry with eta_series / delta5_series and compares exactly.
std::vector<TableCheck> verify_table(std::span<const GoldenEntry> eta_entries = golden_eta_table(),
                                     std::span<const GoldenEntry> tau_entries = golden_tau5());

// ---- oracle ----

struct OracleCheck {
  int N = 0;
  RingElem product;  // eta_series
  RingElem oracle;   // a_via_convolution
  bool passed = false;
};

struct OracleReport {
  int D = 0;
  std::vector<OracleCheck> rows;
  std::optional<int> first_divergence;
  bool passed() const { return !first_divergence.has_value(); }
};

OracleReport oracle_check(int D, int N);

// ---- conjecture tooling ----

struct SignReport {
  int D = 0;
  int N_max = 0;
  std::vector<int> signs;         // sign of a_D(N) for N = 0..N_max (0 for zero)
  std::vector<int> changes;       // N where sign(a_D(N)) != sign(a_D(N-1)), zeros skipped
  int count() const { return static_cast<int>(changes.size()); }
};

SignReport signs_report(int D, int N_max);

struct GrowthPoint {
  int N = 0;
  double sqrt_N = 0;
  double log_abs = 0;
};

struct GrowthReport {
  int D = 0;
  int N_max = 0;
  std::vector<GrowthPoint> points;  // N >= 1 with a_D(N) != 0
  std::vector<int> zero_indices;    // excluded from the fit
  int window_lo = 1;
  int window_hi = 0;
  double slope = 0;      // least squares log|a| ~ slope sqrt(N) + intercept
  double intercept = 0;
  double c_estimate() const { return slope; }
};

/// Window [lo, hi] restricts the fit; hi <= 0 means N_max.
GrowthReport growth_report(int D, int N_max, int window_lo = 1, int window_hi = 0);

// ---- modularity ----

struct ModularitySample {
  HalfPlanePoint z{0.0, 1.0};
  ResidualReport inversion;
  ResidualReport translation;
};

/// `samples` pseudo-random points with |Re z| <= sqrt(D)/2, Im z in [im_lo, im_hi].
std::vector<ModularitySample> verify_modularity(int D, int samples, int n_max, double tol,
                                                std::uint64_t seed = 20240601, double im_lo = 0.5,
                                                double im_hi = 1.5);

struct GridRow {
  double re = 0;
  double im = 0;
  Complex eta_z;
  Complex eta_inv;
};

/// nx * ny grid over [re_min, re_max] x [im_min, im_max] of eta_D(z) and eta_D(-1/z).
std::vector<GridRow> eta_grid(int D, double re_min, double re_max, double im_min, double im_max, int nx,
                              int ny, int n_max);

}  // namespace heckeeta
