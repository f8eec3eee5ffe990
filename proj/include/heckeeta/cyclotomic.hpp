#pragma once

#include <vector>

#include "heckeeta/characters.hpp"
#include "heckeeta/quad_ring.hpp"

namespace heckeeta {

/// Element of Z[x]/(x^D - 1). Coefficient k stands for zeta_D^k under the
/// evaluation map x -> exp(2 pi i / D).
class CycPoly {
 public:
  explicit CycPoly(int D) : coeffs_(static_cast<std::size_t>(D)) {}

  static CycPoly one(int D) { return monomial(D, 0); }
  static CycPoly monomial(int D, long long k, const BigInt& c = BigInt(1));

  int D() const noexcept { return static_cast<int>(coeffs_.size()); }
  const BigInt& operator[](int k) const { return coeffs_[k]; }
  BigInt& operator[](int k) { return coeffs_[k]; }
  bool is_zero() const;

  CycPoly& operator+=(const CycPoly& v);
  CycPoly& operator-=(const CycPoly& v);
  CycPoly& operator*=(const BigInt& c);
  /// Multiplies by x^k (a cyclic rotation).
  CycPoly rotated(long long k) const;
  /// Adds c * x^k.
  void add_monomial(long long k, const BigInt& c);

  friend bool operator==(const CycPoly&, const CycPoly&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Cyclic convolution. Throws ContextMismatch if the lengths differ.
CycPoly cyc_mul(const CycPoly& u, const CycPoly& v);
CycPoly operator+(CycPoly u, const CycPoly& v);
CycPoly operator-(CycPoly u, const CycPoly& v);

/// Trace from Q(zeta_D) to Q of zeta_D^k, for squarefree D:
/// mu(D/g) * phi(D) / phi(D/g), g = gcd(k, D).
BigInt trace_of_power(int D, long long k);

/// The trace extended linearly to Z[x]/(x^D - 1).
BigInt trace(const CycPoly& u);

/// Sum over a of chi_D(a) x^a. Evaluates to +sqrt(D).
CycPoly gauss_element(const CharTable& ct);

/// Writes an element of the fixed field of the residue subgroup as
/// (a + b*sqrt(D))/2 using a = 2 Tr(u)/phi and b = 2 Tr(u g)/(D phi).
/// Throws NotInQuadraticField if a division is inexact or, when
/// `verify` is set, if u differs from the reconstructed element.
RingElem project_to_quad(const CycPoly& u, const CharTable& ct, bool verify = true);

/// Prod over residues a of (1 - zeta^a x) and the same over non-residues,
/// as polynomials in x with coefficients in O_D. Index j holds the x^j coefficient.
struct PeriodPair {
  std::vector<RingElem> plus;
  std::vector<RingElem> minus;
};

/// Throws CorruptionError if the constant terms are not 1 or the pair is not
/// swapped by conjugation.
PeriodPair period_polynomials(const CharTable& ct);

}  // namespace heckeeta
