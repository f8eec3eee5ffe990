#include <vector>

#include "doctest.h"
#include "heckeeta/characters.hpp"
#include "heckeeta/cyclotomic.hpp"
#include "heckeeta/errors.hpp"
#include "heckeeta/oracle.hpp"
#include "heckeeta/partitions.hpp"
#include "heckeeta/qseries.hpp"

using namespace heckeeta;

TEST_CASE("oracle examples") {
  const auto a5 = a_via_convolution(5, 3);
  CHECK(a5[1] == RingElem(-2, -2));
  CHECK(a5[3] == RingElem(0, -4));
  CHECK(a_via_convolution(13, 3)[3] == RingElem(-4, -8));
  for (int D : {5, 13, 17}) {
    const auto a0 = a_via_convolution(D, 0);
    REQUIRE(a0.size() == 1);
    CHECK(a0[0] == RingElem::from_int(1));
  }
}

TEST_CASE("oracle rejects bad input") {
  CHECK_THROWS_AS(a_via_convolution(9, 3), InvalidDiscriminant);
  CHECK_THROWS_AS(a_via_convolution(5, kMaxOracleOrder + 1), CapacityError);
  CHECK_THROWS_AS(a_via_convolution(5, -1), Error);
}

TEST_CASE("oracle equals the product expansion, including composite D") {
  for (auto [D, N] : {std::pair{5, 30}, {13, 25}, {17, 20}, {21, 15}, {29, 10}}) {
    const QSeries f = eta_series(D, N);
    const auto oracle = a_via_convolution(D, N);
    for (int n = 0; n <= N; ++n) CHECK_MESSAGE(oracle[n] == f[n], "D=" << D << " n=" << n);
  }
}

TEST_CASE("cyc_series_mul rejects mismatched shapes") {
  CHECK_THROWS_AS(cyc_series_mul(CycSeries(5, 3), CycSeries(13, 3)), ContextMismatch);
  CHECK_THROWS_AS(cyc_series_mul(CycSeries(5, 3), CycSeries(5, 4)), ContextMismatch);
}

TEST_CASE("theta-power pentagonal display is exact only at theta = 1") {
  // prod (1 - theta q^n) is the signed distinct-part series; the display
  // sum sign theta^{theta_power} q^{g(k)} agrees with it only when theta = 1.
  const int D = 5, N = 12;
  const LengthTable e = distinct_length_distribution(D, N);
  std::vector<CycPoly> product(N + 1, CycPoly(D)), display(N + 1, CycPoly(D));
  for (int k = 0; k <= N; ++k)
    for (int r = 0; r < D; ++r) product[k].add_monomial(r, e[k][r]);
  for (const auto& t : pentagonal_terms(N)) display[t.exponent].add_monomial(t.theta_power, BigInt(t.sign));
  CHECK(product[1] == display[1] + CycPoly::monomial(D, 1, -1) - CycPoly::monomial(D, 2, -1));
  bool all_equal = true;
  for (int k = 0; k <= N; ++k) all_equal = all_equal && product[k] == display[k];
  CHECK_FALSE(all_equal);
}
