#pragma once

#include <cstdint>
#include <span>

namespace heckeeta {

/// A published coefficient (a + b*sqrt(D))/2 at index N.
struct GoldenEntry {
  int D;
  int N;
  std::int64_t a;
  std::int64_t b;
};

/// a_D(N) for D in {5, 13, 17} and 1 <= N <= 25 (75 entries).
std::span<const GoldenEntry> golden_eta_table();

/// tau_5(N) for 1 <= N <= 6, the coefficients of Delta_5 = eta_5^5.
std::span<const GoldenEntry> golden_tau5();

}  // namespace heckeeta
