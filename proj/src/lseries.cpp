#include "heckeeta/lseries.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <cstdlib>
#include <string>

#include "heckeeta/errors.hpp"

namespace heckeeta {

LValueRecord l_minus_one(const CharTable& ct) {
  LValueRecord rec;
  rec.D = ct.D;
  rec.s_chi = 0;
  for (long long n = 1; n <= ct.D; ++n) rec.s_chi += BigInt(n * n * ct(n));
  rec.l_minus_one = Rational(-rec.s_chi, BigInt(2 * ct.D));
  rec.m_exponent = -rec.l_minus_one / 2;

  if (ct.D > 5) {
    const bool even_negative_integer = denominator(rec.l_minus_one) == 1 &&
                                       numerator(rec.l_minus_one) < 0 &&
                                       numerator(rec.l_minus_one) % 2 == 0;
    if (!even_negative_integer || rec.s_chi % (4 * ct.D) != 0)
      throw CorruptionError("L(-1, chi_" + std::to_string(ct.D) + ") = " + rec.l_minus_one.str() +
                            " is not a negative even integer");
  }
  return rec;
}

VarReal l_prime_zero(std::span<const int> values, unsigned digits) {
  const std::size_t D = values.size();
  if (D < 2) throw Error("l_prime_zero: empty character");
  long long sum = 0;
  for (int v : values) sum += v;
  bool even = true;
  for (std::size_t a = 1; a < D; ++a) even = even && values[a] == values[D - a];
  if (sum != 0 || !even)
    throw Error("l_prime_zero: requires an even nontrivial character (sum of values must vanish)");

  const PrecisionGuard precision(digits);
  VarReal acc(0, digits);
  for (std::size_t a = 1; a < D; ++a) {
    if (values[a] == 0) continue;
    VarReal x(VarReal(static_cast<long>(a), digits) / static_cast<long>(D), digits);
    acc += values[a] * boost::math::lgamma(x);
  }
  return acc;
}

VarReal l_prime_zero(const CharTable& ct, unsigned digits) {
  return l_prime_zero(std::span<const int>(ct.values), digits);
}

unsigned default_digits() {
  if (const char* env = std::getenv("HECKEETA_DIGITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 15 && v <= 10000) return static_cast<unsigned>(v);
  }
  return 50;
}

}  // namespace heckeeta
