#include "heckeeta/reports.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "heckeeta/errors.hpp"
#include "heckeeta/oracle.hpp"
#include "heckeeta/qseries.hpp"

namespace heckeeta {

std::vector<TableCheck> verify_table(std::span<const GoldenEntry> eta_entries,
                                     std::span<const GoldenEntry> tau_entries) {
  std::vector<TableCheck> out;
  std::vector<int> discriminants;
  for (const auto& e : eta_entries)
    if (std::find(discriminants.begin(), discriminants.end(), e.D) == discriminants.end())
      discriminants.push_back(e.D);

  for (int D : discriminants) {
    int n_max = 0;
    for (const auto& e : eta_entries)
      if (e.D == D) n_max = std::max(n_max, e.N);
    const QSeries f = eta_series(D, n_max);
    for (const auto& e : eta_entries) {
      if (e.D != D) continue;
      RingElem expected(BigInt(e.a), BigInt(e.b));
      out.push_back({"eta", D, e.N, expected, f[e.N], f[e.N] == expected});
    }
  }

  if (!tau_entries.empty()) {
    int n_max = 1;
    for (const auto& e : tau_entries) n_max = std::max(n_max, e.N);
    const QSeries delta = delta5_series(n_max - 1);
    for (const auto& e : tau_entries) {
      if (e.D != 5 || e.N < 1) throw Error("tau_5 golden entries must have D = 5 and N >= 1");
      RingElem expected(BigInt(e.a), BigInt(e.b));
      out.push_back({"delta5", 5, e.N, expected, delta[e.N - 1], delta[e.N - 1] == expected});
    }
  }
  return out;
}

OracleReport oracle_check(int D, int N) {
  const QSeries f = eta_series(D, N);
  const std::vector<RingElem> g = a_via_convolution(D, N);
  OracleReport r;
  r.D = D;
  for (int n = 0; n <= N; ++n) {
    const bool ok = f[n] == g[n];
    r.rows.push_back({n, f[n], g[n], ok});
    if (!ok && !r.first_divergence) r.first_divergence = n;
  }
  return r;
}

SignReport signs_report(int D, int N_max) {
  const QSeries f = eta_series(D, N_max);
  SignReport r;
  r.D = D;
  r.N_max = N_max;
  int last = 0;
  for (int n = 0; n <= N_max; ++n) {
    const Real v = f.ctx().embed(f[n]);
    const int s = f[n].is_zero() ? 0 : (v > 0 ? 1 : -1);
    r.signs.push_back(s);
    if (s != 0) {
      if (last != 0 && s != last) r.changes.push_back(n);
      last = s;
    }
  }
  return r;
}

GrowthReport growth_report(int D, int N_max, int window_lo, int window_hi) {
  const QSeries f = eta_series(D, N_max);
  GrowthReport r;
  r.D = D;
  r.N_max = N_max;
  r.window_lo = std::max(1, window_lo);
  r.window_hi = window_hi <= 0 ? N_max : std::min(window_hi, N_max);

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (int n = 1; n <= N_max; ++n) {
    if (f[n].is_zero()) {
      r.zero_indices.push_back(n);
      continue;
    }
    const double log_abs = log(abs(f.ctx().embed(f[n]))).convert_to<double>();
    const double x = std::sqrt(double(n));
    r.points.push_back({n, x, log_abs});
    if (n >= r.window_lo && n <= r.window_hi) {
      sx += x;
      sy += log_abs;
      sxx += x * x;
      sxy += x * log_abs;
      ++count;
    }
  }
  if (count >= 2) {
    const double det = count * sxx - sx * sx;
    r.slope = (count * sxy - sx * sy) / det;
    r.intercept = (sy - r.slope * sx) / count;
  }
  return r;
}

std::vector<ModularitySample> verify_modularity(int D, int samples, int n_max, double tol, std::uint64_t seed,
                                                double im_lo, double im_hi) {
  const EtaEvaluator eta(D);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re_dist(-eta.sqrtD() / 2, eta.sqrtD() / 2);
  std::uniform_real_distribution<double> im_dist(im_lo, im_hi);
  std::vector<ModularitySample> out;
  for (int i = 0; i < samples; ++i) {
    const double re = re_dist(rng);
    const HalfPlanePoint z(re, im_dist(rng));
    out.push_back({z, check_inversion(eta, z, n_max, tol), check_translation(eta, z, n_max, tol)});
  }
  return out;
}

std::vector<GridRow> eta_grid(int D, double re_min, double re_max, double im_min, double im_max, int nx, int ny,
                              int n_max) {
  if (nx < 1 || ny < 1) throw Error("grid dimensions must be positive");
  const EtaEvaluator eta(D);
  std::vector<GridRow> rows;
  rows.reserve(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    const double im = ny == 1 ? im_min : im_min + (im_max - im_min) * j / (ny - 1);
    for (int i = 0; i < nx; ++i) {
      const double re = nx == 1 ? re_min : re_min + (re_max - re_min) * i / (nx - 1);
      const HalfPlanePoint z(re, im);
      rows.push_back({re, im, eta.eta(z, n_max), eta.eta(z.inverted(), n_max)});
    }
  }
  return rows;
}

}  // namespace heckeeta
