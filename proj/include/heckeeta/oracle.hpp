#pragma once

#include <vector>

#include "heckeeta/cyclotomic.hpp"
#include "heckeeta/quad_ring.hpp"

namespace heckeeta {

/// Truncated power series in q with coefficients in Z[x]/(x^D - 1).
struct CycSeries {
  int D = 0;
  std::vector<CycPoly> coeffs;  // coeffs[n] multiplies q^n, n = 0..prec

  CycSeries(int D, int prec) : D(D), coeffs(static_cast<std::size_t>(prec) + 1, CycPoly(D)) {}
  int prec() const { return static_cast<int>(coeffs.size()) - 1; }
};

CycSeries cyc_series_mul(const CycSeries& f, const CycSeries& g);

/// a_D(0..N) recomputed from the partition decomposition
///   F_NR(q)^2 F_e(q, 1) F_0(q) prod_{a QR} F_e(q, zeta^a) prod_{b NR} F_ord(q, zeta^b),
/// where F_0 counts partitions into parts n with chi_D(n) = 0 (F_ord(q^D, 1) for prime D),
/// assembled in Z[x]/(x^D - 1) and projected to O_D coefficientwise.
/// Shares no code path with eta_series beyond the character table and the projection.
std::vector<RingElem> a_via_convolution(int D, int N);

/// Largest order accepted by a_via_convolution.
constexpr int kMaxOracleOrder = 400;

}  // namespace heckeeta
