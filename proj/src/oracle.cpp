#include "heckeeta/oracle.hpp"

#include <string>

#include "heckeeta/characters.hpp"
#include "heckeeta/errors.hpp"
#include "heckeeta/partitions.hpp"

namespace heckeeta {

namespace {

std::vector<BigInt> int_series_mul(const std::vector<BigInt>& f, const std::vector<BigInt>& g) {
  std::vector<BigInt> h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < h.size(); ++j) h[i + j] += f[i] * g[j];
  }
  return h;
}

// sum_k sum_r table[k][r] zeta^{twist * r} q^k
CycSeries twisted_series(const LengthTable& table, int D, int twist) {
  const int N = static_cast<int>(table.size()) - 1;
  CycSeries s(D, N);
  for (int k = 0; k <= N; ++k)
    for (int r = 0; r < D; ++r)
      if (!table[k][r].is_zero())
        s.coeffs[k].add_monomial(static_cast<long long>(twist) * r, table[k][r]);
  return s;
}

// Partitions of 0..N into parts n with chi_D(n) = 0; for prime D this is F_ord(q^D, 1).
std::vector<BigInt> p_zero_table(const CharTable& ct, int N) {
  std::vector<BigInt> t(static_cast<std::size_t>(N) + 1);
  t[0] = 1;
  for (int n = 1; n <= N; ++n) {
    if (ct(n) != 0) continue;
    for (int k = n; k <= N; ++k) t[k] += t[k - n];
  }
  return t;
}

}  // namespace

CycSeries cyc_series_mul(const CycSeries& f, const CycSeries& g) {
  if (f.D != g.D || f.prec() != g.prec()) throw ContextMismatch("cyc_series_mul: shape mismatch");
  const int N = f.prec();
  CycSeries h(f.D, N);
  for (int i = 0; i <= N; ++i) {
    if (f.coeffs[i].is_zero()) continue;
    for (int j = 0; i + j <= N; ++j) {
      if (g.coeffs[j].is_zero()) continue;
      h.coeffs[i + j] += cyc_mul(f.coeffs[i], g.coeffs[j]);
    }
  }
  return h;
}

std::vector<RingElem> a_via_convolution(int D, int N) {
  if (N < 0) throw Error("a_via_convolution: order must be non-negative");
  if (N > kMaxOracleOrder)
    throw CapacityError("oracle order " + std::to_string(N) + " exceeds limit " +
                        std::to_string(kMaxOracleOrder));
  const CharTable ct = build_char_table(D);
  const auto size = static_cast<std::size_t>(N) + 1;

  // Rational part: F_NR(q)^2 * F_e(q, 1) * prod_{chi(n) = 0} (1 - q^n)^{-1}.
  const std::vector<BigInt> p_nr = p_nr_table(ct, N);
  std::vector<BigInt> rational = int_series_mul(p_nr, p_nr);

  std::vector<BigInt> euler(size);
  for (const auto& t : pentagonal_terms(N)) euler[t.exponent] += t.sign;
  rational = int_series_mul(rational, euler);

  rational = int_series_mul(rational, p_zero_table(ct, N));

  CycSeries product(D, N);
  for (int k = 0; k <= N; ++k) product.coeffs[k].add_monomial(0, rational[k]);

  const LengthTable distinct = distinct_length_distribution(D, N);
  for (int a : ct.qr) product = cyc_series_mul(product, twisted_series(distinct, D, a));

  const LengthTable lengths = length_distribution(D, N);
  for (int b : ct.nr) product = cyc_series_mul(product, twisted_series(lengths, D, b));

  std::vector<RingElem> out;
  out.reserve(size);
  for (const auto& c : product.coeffs) out.push_back(project_to_quad(c, ct));
  return out;
}

}  // namespace heckeeta
