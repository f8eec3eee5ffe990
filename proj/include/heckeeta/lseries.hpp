#pragma once

#include <span>

#include "heckeeta/characters.hpp"
#include "heckeeta/types.hpp"

namespace heckeeta {

/// L(-1, chi_D) and the valuation exponent m = -L(-1, chi_D)/2 of eta_D.
struct LValueRecord {
  int D = 0;
  BigInt s_chi;          // sum_{n=1}^{D} n^2 chi_D(n)
  Rational l_minus_one;  // -s_chi / (2D)
  Rational m_exponent;   // -l_minus_one / 2
};

/// Exact L(-1, chi_D) from the finite second-moment sum. For D > 5 throws
/// CorruptionError unless the value is a negative even integer with 4D | s_chi.
LValueRecord l_minus_one(const CharTable& ct);

/// L'(0, chi_D) = sum_{a=1}^{D-1} chi_D(a) log Gamma(a/D), valid for even
/// primitive characters, evaluated with `digits` decimal digits.
VarReal l_prime_zero(const CharTable& ct, unsigned digits = 50);

/// Same formula over raw character values (values[a] = chi(a), length D).
/// Throws Error unless the values sum to zero and are even, which excludes
/// the trivial character.
VarReal l_prime_zero(std::span<const int> values, unsigned digits = 50);

/// Default working precision: $HECKEETA_DIGITS if set and valid, else 50.
unsigned default_digits();

}  // namespace heckeeta
