#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "heckeeta/analytic.hpp"
#include "heckeeta/characters.hpp"
#include "heckeeta/errors.hpp"
#include "heckeeta/qseries.hpp"
#include "test_support.hpp"

using namespace heckeeta;
using heckeeta::testing::uniform;
using CL = std::complex<long double>;

namespace {

constexpr long double kPiL = std::numbers::pi_v<long double>;

// Plain product in long double, no logarithms and no reduction of Re z.
CL eta_by_direct_product(int D, CL z, int n_max) {
  const CharTable ct = build_char_table(D);
  const long double sqrtD = std::sqrt(static_cast<long double>(D));
  const CL two_pi_i(0, 2 * kPiL);
  const CL q = std::exp(two_pi_i * z / sqrtD);
  const long double m = -0.5L * (-1.0L / (2 * D)) * [&] {
    long double s = 0;
    for (int n = 1; n <= D; ++n) s += static_cast<long double>(n) * n * ct(n);
    return s;
  }();
  CL prod = std::exp(two_pi_i * m * z / sqrtD);
  CL qn = 1;
  for (int n = 1; n <= n_max; ++n) {
    qn *= q;
    if (ct(n) == 1) prod *= 1.0L - qn;
    if (ct(n) == -1) prod /= 1.0L - qn;
    for (int a = 1; a < D; ++a) {
      const CL zeta = std::polar(1.0L, 2 * kPiL * a / D);
      if (ct(a) == 1) prod *= 1.0L - zeta * qn;
      if (ct(a) == -1) prod /= 1.0L - zeta * qn;
    }
  }
  return prod;
}

std::vector<long long> random_word(int max_len, int k_range) {
  std::vector<long long> ks(static_cast<std::size_t>(uniform(1, max_len)));
  for (auto& k : ks) k = uniform(-k_range, k_range);
  return ks;
}

}  // namespace

TEST_CASE("half-plane points") {
  CHECK_THROWS_AS(HalfPlanePoint(0.0, 0.0), Error);
  CHECK_THROWS_AS(HalfPlanePoint(1.0, -0.5), Error);
  CHECK_THROWS_AS(HalfPlanePoint(0.0, std::numeric_limits<double>::quiet_NaN()), Error);
  const HalfPlanePoint z(0.0, 2.0);
  CHECK(z.inverted().im() == doctest::Approx(0.5));
  CHECK(z.translated(1.5).re() == doctest::Approx(1.5));
  CHECK_THROWS_AS(eval_eta_numeric(5, HalfPlanePoint(0.3, 1.0), 0), Error);
}

TEST_CASE("numeric eta agrees with a direct long double product") {
  for (int D : {5, 13, 17, 21}) {
    for (auto z : {std::complex<double>(0.2, 0.9), {-0.7, 0.6}, {3.1, 1.4}}) {
      const std::complex<double> fast = eval_eta_numeric(D, HalfPlanePoint(z), 300);
      const CL slow = eta_by_direct_product(D, CL(z.real(), z.imag()), 300);
      CHECK_MESSAGE(std::abs(CL(fast.real(), fast.imag()) - slow) < 1e-12L * (1 + std::abs(slow)), "D=" << D);
    }
  }
}

TEST_CASE("modularity examples") {
  const EtaEvaluator e5(5);
  const HalfPlanePoint z(0.2, 0.9);
  CHECK(check_inversion(e5, z, 300).residual < 1e-6);
  const ResidualReport t5 = check_translation(e5, z, 300);
  CHECK(t5.residual < 1e-8);
  CHECK(t5.passed);
  const ResidualReport t17 = check_translation(EtaEvaluator(17), HalfPlanePoint(-0.4, 1.5), 300);
  CHECK(t17.residual < 1e-10);
  CHECK(check_inversion(EtaEvaluator(13), HalfPlanePoint(0.4, 0.7), 300).residual < 1e-6);
}

TEST_CASE("translation without the root of unity fails for D = 5") {
  const EtaEvaluator e5(5);
  const HalfPlanePoint z(0.2, 0.9);
  const auto lhs = e5.eta(z.translated(e5.sqrtD()), 300);
  CHECK(std::abs(lhs - e5.eta(z, 300)) > 1e-3);
}

TEST_CASE("Phi-dual inversion identity") {
  CHECK(theorem21_check(5, 1.0, 400).residual < 1e-8);
  CHECK(theorem21_check(13, 1.3, 400).residual < 1e-8);
  // y and 1/y are the same identity with the roles of the two products exchanged.
  CHECK(theorem21_check(5, 2.0, 400).residual < 1e-8);
  CHECK(theorem21_check(5, 0.5, 400).residual < 1e-8);
  CHECK_THROWS_AS(theorem21_check(5, 0.0, 400), Error);
}

TEST_CASE("word matrices") {
  const std::vector<long long> tst{1, 1};
  const GroupWord w = word_matrix(tst, 5);
  CHECK(w.m[0] == RingElem(0, 2));
  CHECK(w.m[1] == RingElem::from_int(4));
  CHECK(w.m[2] == RingElem::from_int(1));
  CHECK(w.m[3] == RingElem(0, 2));
  CHECK(predicted_u(w) == 2);

  // A one-letter word is a pure translation; S itself is the word (0, 0).
  const GroupWord id = word_matrix(std::vector<long long>{0}, 5);
  CHECK(id.m[0] == RingElem::from_int(1));
  CHECK(id.m[1].is_zero());
  CHECK(predicted_u(id) == 0);
  const GroupWord S = word_matrix(std::vector<long long>{0, 0}, 5);
  CHECK(predicted_u(S) == 0);
  const HalfPlanePoint z(0.3, 1.1);
  CHECK(std::abs(S.act(z).z() - z.inverted().z()) < 1e-15);

  CHECK_THROWS_AS(word_matrix(std::vector<long long>{}, 5), Error);
  CHECK_THROWS_AS(predicted_u(word_matrix(tst, 13)), Error);
}

TEST_CASE("u_gamma examples") {
  const std::vector<long long> ks{2, -1, 1};
  const GroupWord w = word_matrix(ks, 5);
  CHECK(predicted_u(w) == 2);
  const UGammaReport r = check_u_gamma(w, balanced_point(w, 0.1));
  CHECK(r.exponent_sum_matches);
  CHECK(r.residual < 1e-4);
  CHECK(r.passed);
  const UGammaReport rs = check_u_gamma(word_matrix(std::vector<long long>{0, 0}, 5), HalfPlanePoint(0.1, 1.0));
  CHECK(rs.residual < 1e-4);
  CHECK_THROWS_AS(check_u_gamma(w, HalfPlanePoint(0.0, 1e-6)), ConditioningError);
}

TEST_CASE("property: determinant one and the exponent-sum law on 1000 random words") {
  for (int i = 0; i < 1000; ++i) {
    const std::vector<long long> ks = random_word(8, 4);
    const GroupWord w = word_matrix(ks, 5);  // throws unless det = 1
    long long sum = 0;
    for (long long k : ks) sum += k;
    CHECK(predicted_u(w) == ((sum % 5) + 5) % 5);
  }
  for (int D : {13, 17}) {
    for (int i = 0; i < 100; ++i) CHECK_NOTHROW(word_matrix(random_word(6, 3), D));
  }
}

TEST_CASE("property: doubling n_max changes eta by less than 1e-12 for im z >= 0.5") {
  for (int D : {5, 13, 17}) {
    const EtaEvaluator eta(D);
    for (int i = 0; i < 10; ++i) {
      const HalfPlanePoint z(uniform(-1000, 1000) / 1000.0, 0.5 + uniform(0, 1000) / 1000.0);
      CHECK(std::abs(eta.eta(z, 300) - eta.eta(z, 600)) < 1e-12);
    }
  }
}

TEST_CASE("bound envelope constants") {
  const EnvelopeReport r = bound_envelope(5, 100);
  CHECK(r.c0 == doctest::Approx(std::numbers::pi * std::sqrt(2.0 / 3.0)));
  CHECK(r.c_tilde == doctest::Approx(std::numbers::pi * std::sqrt(2.0)));
  REQUIRE(r.c_remark.has_value());
  CHECK(*r.c_remark == doctest::Approx(std::numbers::pi * std::sqrt(10.0)));
  CHECK(r.c_used == *r.c_remark);
  CHECK(r.phi == 4);

  const EnvelopeReport z = bound_envelope(5, 0);
  CHECK(std::isfinite(z.value));
  CHECK(z.value == 0);

  const EnvelopeReport c = bound_envelope(21, 10);
  CHECK_FALSE(c.c_remark.has_value());
  CHECK(c.cD == c.c0);
  CHECK(c.c_used == c.c_tilde);
  CHECK_THROWS_AS(bound_envelope(9, 10), InvalidDiscriminant);
}

TEST_CASE("coefficients stay under the envelope") {
  for (int D : {5, 13, 17, 21}) {
    const QSeries f = eta_series(D, 150);
    const RingCtx& ctx = f.ctx();
    for (int n = 1; n <= 150; ++n) {
      const double lhs = std::log(std::abs(ctx.embed_double(f[n])) + 1e-300);
      CHECK_MESSAGE(lhs <= bound_envelope(D, n).log_value, "D=" << D << " N=" << n);
    }
  }
}
