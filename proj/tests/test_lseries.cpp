#include <cmath>
#include <cstdlib>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "doctest.h"
#include "heckeeta/analytic.hpp"
#include "heckeeta/characters.hpp"
#include "heckeeta/errors.hpp"
#include "heckeeta/lseries.hpp"

using namespace heckeeta;

namespace {

// L(1, chi) summed over whole periods; block k contributes O(k^-3) because
// chi is even with vanishing sum, so the tail after K blocks is O(K^-2).
double l_one_by_blocks(const CharTable& ct, long long blocks) {
  double total = 0;
  for (long long k = blocks - 1; k >= 0; --k) {
    double block = 0;
    for (int a = 1; a < ct.D; ++a)
      if (ct.values[a] != 0) block += ct.values[a] / static_cast<double>(k * ct.D + a);
    total += block;
  }
  return total;
}

// L(1, chi) = -(1/sqrt D) sum chi(a) log sin(pi a / D) for even primitive chi.
Real l_one_by_log_sine(const CharTable& ct) {
  const Real pi = boost::math::constants::pi<Real>();
  Real acc = 0;
  for (int a = 1; a < ct.D; ++a)
    if (ct.values[a] != 0) acc += ct.values[a] * log(sin(pi * a / ct.D));
  return -acc / sqrt(Real(ct.D));
}

}  // namespace

TEST_CASE("L(-1) examples") {
  const LValueRecord r5 = l_minus_one(build_char_table(5));
  CHECK(r5.s_chi == 4);
  CHECK(r5.l_minus_one == Rational(-2, 5));
  CHECK(r5.m_exponent == Rational(1, 5));
  const LValueRecord r13 = l_minus_one(build_char_table(13));
  CHECK(r13.s_chi == 52);
  CHECK(r13.l_minus_one == -2);
  CHECK(r13.m_exponent == 1);
  const LValueRecord r17 = l_minus_one(build_char_table(17));
  CHECK(r17.s_chi == 136);
  CHECK(r17.l_minus_one == -4);
  CHECK(r17.m_exponent == 2);
}

TEST_CASE("L(-1) for every fundamental D <= 1000 matches the Bernoulli form") {
  for (int D : fundamental_discriminants(1000)) {
    const CharTable ct = build_char_table(D);
    const LValueRecord r = l_minus_one(ct);
    // L(-1, chi) = -B_{2,chi}/2 with B_{2,chi} = D sum chi(a) B_2(a/D), B_2(x) = x^2 - x + 1/6
    Rational b2 = 0;
    for (int a = 1; a <= D; ++a) {
      const Rational x(a, D);
      b2 += ct(a) * (x * x - x + Rational(1, 6));
    }
    b2 *= D;
    CHECK_MESSAGE(r.l_minus_one == -b2 / 2, "D=" << D);
    CHECK(r.m_exponent > 0);
    if (D > 5) {
      CHECK(denominator(r.l_minus_one) == 1);
      CHECK(numerator(r.l_minus_one) % 2 == 0);
      CHECK(r.s_chi % (4 * D) == 0);
    }
  }
}

TEST_CASE("L'(0) equals log of the fundamental unit for class number one fields") {
  // L'(0, chi_D) = h log(eps) with h = 1 for these D.
  const Real tol("1e-45");
  CHECK(abs(Real(l_prime_zero(build_char_table(5))) - log((1 + sqrt(Real(5))) / 2)) < tol);
  CHECK(abs(Real(l_prime_zero(build_char_table(13))) - log((3 + sqrt(Real(13))) / 2)) < tol);
  CHECK(abs(Real(l_prime_zero(build_char_table(17))) - log(4 + sqrt(Real(17)))) < tol);
}

TEST_CASE("L'(0) agrees with sqrt(D)/2 L(1) from the Dirichlet series") {
  for (int D : {5, 13, 17, 21, 29, 105, 229}) {
    const CharTable ct = build_char_table(D);
    const Real lp = Real(l_prime_zero(ct));
    CHECK_MESSAGE(abs(lp - sqrt(Real(D)) / 2 * l_one_by_log_sine(ct)) < Real("1e-45"), "D=" << D);
    const double series = std::sqrt(static_cast<double>(D)) / 2 * l_one_by_blocks(ct, 200000);
    CHECK_MESSAGE(std::abs(lp.convert_to<double>() - series) < 1e-8, "D=" << D);
  }
}

TEST_CASE("L'(0) precision follows the requested digits") {
  const CharTable ct = build_char_table(13);
  const VarReal lo = l_prime_zero(ct, 20);
  const VarReal hi = l_prime_zero(ct, 200);
  CHECK(hi.precision() >= 200);
  CHECK(abs(Real(hi) - log((3 + sqrt(Real(13))) / 2)) < Real("1e-95"));
  CHECK(abs(lo.convert_to<double>() - hi.convert_to<double>()) < 1e-15);
}

TEST_CASE("L'(0) rejects the trivial and odd characters") {
  const std::vector<int> trivial(5, 1);
  CHECK_THROWS_AS(l_prime_zero(trivial), Error);
  std::vector<int> odd(7);  // chi_{-7}
  for (int a = 0; a < 7; ++a) odd[a] = jacobi(a, 7);
  CHECK_THROWS_AS(l_prime_zero(odd), Error);
}

TEST_CASE("L'(0) makes the Phi-dual inversion identity hold at y = 1 for D = 5") {
  const ResidualReport r = theorem21_check(5, 1.0, 400);
  CHECK(r.residual < 1e-10);
  CHECK(r.passed);
}

TEST_CASE("default digits honour the environment") {
  ::unsetenv("HECKEETA_DIGITS");
  CHECK(default_digits() == 50);
  ::setenv("HECKEETA_DIGITS", "120", 1);
  CHECK(default_digits() == 120);
  ::setenv("HECKEETA_DIGITS", "nonsense", 1);
  CHECK(default_digits() == 50);
  ::setenv("HECKEETA_DIGITS", "3", 1);
  CHECK(default_digits() == 50);
  ::unsetenv("HECKEETA_DIGITS");
}
