#include "heckeeta/partitions.hpp"

#include <algorithm>

#include "heckeeta/errors.hpp"

namespace heckeeta {

std::vector<BigInt> p_table(int N) {
  if (N < 0) throw Error("p_table: order must be non-negative");
  std::vector<BigInt> p(static_cast<std::size_t>(N) + 1);
  p[0] = 1;
  for (long long k = 1; k <= N; ++k) {
    BigInt acc = 0;
    for (long long j = 1;; ++j) {
      const long long g1 = j * (3 * j - 1) / 2;  // g(j)
      if (g1 > k) break;
      const long long g2 = j * (3 * j + 1) / 2;  // g(-j)
      BigInt term = p[k - g1];
      if (g2 <= k) term += p[k - g2];
      if (j % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    p[k] = std::move(acc);
  }
  return p;
}

std::vector<PentagonalTerm> pentagonal_terms(long long K) {
  std::vector<PentagonalTerm> terms;
  if (K < 0) return terms;
  terms.push_back({0, 0, 1, 0});
  for (long long k = 1;; ++k) {
    const long long g_pos = k * (3 * k - 1) / 2;
    if (g_pos > K) break;
    const int sign = k % 2 == 0 ? 1 : -1;
    terms.push_back({k, g_pos, sign, 3 * k - 1});
    const long long g_neg = k * (3 * k + 1) / 2;  // g(-k)
    if (g_neg <= K) terms.push_back({-k, g_neg, sign, 3 * k});
  }
  return terms;
}

std::vector<BigInt> p_nr_table(const CharTable& ct, int N) {
  if (N < 0) throw Error("p_nr_table: order must be non-negative");
  std::vector<BigInt> p(static_cast<std::size_t>(N) + 1);
  p[0] = 1;
  for (int part = 1; part <= N; ++part) {
    if (ct(part) != -1) continue;
    for (int k = part; k <= N; ++k) p[k] += p[k - part];
  }
  return p;
}

LengthTable length_distribution(int D, int N) {
  if (D < 1 || N < 0) throw Error("length_distribution: bad arguments");
  LengthTable c(static_cast<std::size_t>(N) + 1, std::vector<BigInt>(static_cast<std::size_t>(D)));
  c[0][0] = 1;
  // Each copy of a part multiplies by t q^part, t tracked mod D.
  for (int part = 1; part <= N; ++part) {
    for (int k = part; k <= N; ++k) {
      const auto& src = c[k - part];
      auto& dst = c[k];
      for (int r = 0; r < D; ++r) {
        const BigInt& v = src[r];
        if (!v.is_zero()) dst[r + 1 == D ? 0 : r + 1] += v;
      }
    }
  }
  return c;
}

LengthTable distinct_length_distribution(int D, int N) {
  if (D < 1 || N < 0) throw Error("distinct_length_distribution: bad arguments");
  LengthTable e(static_cast<std::size_t>(N) + 1, std::vector<BigInt>(static_cast<std::size_t>(D)));
  e[0][0] = 1;
  // Multiply by (1 - t q^part); descending k uses each part at most once.
  for (int part = 1; part <= N; ++part) {
    for (int k = N; k >= part; --k) {
      const auto& src = e[k - part];
      auto& dst = e[k];
      for (int r = 0; r < D; ++r) {
        const BigInt& v = src[r];
        if (!v.is_zero()) dst[r + 1 == D ? 0 : r + 1] -= v;
      }
    }
  }
  return e;
}

PartitionTables build_partition_tables(const CharTable& ct, int N) {
  PartitionTables t;
  t.N_max = N;
  t.D = ct.D;
  t.p = p_table(N);
  t.p_nr = p_nr_table(ct, N);
  t.c = length_distribution(ct.D, N);
  for (int k = 0; k <= N; ++k) {
    BigInt row = 0;
    for (const auto& v : t.c[k]) row += v;
    if (row != t.p[k]) throw CorruptionError("length distribution row does not sum to p(k)");
  }
  return t;
}

}  // namespace heckeeta
