#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "heckeeta/characters.hpp"
#include "heckeeta/quad_ring.hpp"

namespace heckeeta {

using Complex = std::complex<double>;

/// A point of the upper half-plane. Construction throws Error unless im > 0.
class HalfPlanePoint {
 public:
  HalfPlanePoint(double re, double im);
  explicit HalfPlanePoint(Complex z) : HalfPlanePoint(z.real(), z.imag()) {}

  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }
  Complex z() const noexcept { return {re_, im_}; }

  /// -1/z
  HalfPlanePoint inverted() const;
  HalfPlanePoint translated(double t) const { return {re_ + t, im_}; }

 private:
  double re_;
  double im_;
};

/// Floating-point evaluation of the truncated products defining eta_D.
/// Holds the character data for one D; cheap to copy.
class EtaEvaluator {
 public:
  explicit EtaEvaluator(int D);

  int D() const noexcept { return ct_.D; }
  double sqrtD() const noexcept { return sqrtD_; }
  /// -L(-1, chi_D)/2 as a double.
  double valuation() const noexcept { return valuation_; }
  double l_minus_one() const noexcept { return -2 * valuation_; }

  /// log eta_D(z) modulo 2 pi i, product over n <= n_max. Terms below
  /// 1e-20 in modulus are dropped.
  Complex log_eta(const HalfPlanePoint& z, int n_max) const;
  Complex eta(const HalfPlanePoint& z, int n_max) const;

  /// prod_{n <= n_max} (1 - q^n)^chi(n).
  Complex phi(const HalfPlanePoint& z, int n_max) const;
  /// prod_{n <= n_max} prod_a (1 - zeta^a q^n)^chi(a).
  Complex phi_dual(const HalfPlanePoint& z, int n_max) const;

 private:
  Complex log_phi(const HalfPlanePoint& z, int n_max) const;
  Complex log_phi_dual(const HalfPlanePoint& z, int n_max) const;
  Complex q_log(const HalfPlanePoint& z) const;

  CharTable ct_;
  double sqrtD_;
  double valuation_;
  std::vector<std::pair<Complex, int>> roots_;  // (zeta^a, chi(a)) for chi(a) != 0
};

Complex eval_eta_numeric(int D, const HalfPlanePoint& z, int n_max);

struct ResidualReport {
  double residual = 0;  // |lhs - rhs|
  Complex lhs;
  Complex rhs;
  bool passed = false;  // residual < tol
};

/// |eta(-1/z) - eta(z)|.
ResidualReport check_inversion(const EtaEvaluator& eta, const HalfPlanePoint& z, int n_max,
                               double tol = 1e-6);
/// |eta(z + sqrt D) - u eta(z)|, u = exp(2 pi i/5) for D = 5 and 1 for D > 5.
ResidualReport check_translation(const EtaEvaluator& eta, const HalfPlanePoint& z, int n_max,
                                 double tol = 1e-6);

/// |Phi#(i/y) - exp(L'(0) + y pi L(-1)/sqrt D) Phi(iy)|, L-values from lseries.
ResidualReport theorem21_check(int D, double y, int n_max, unsigned digits = 50,
                               double tol = 1e-8);

/// T^{k_1} S T^{k_2} S ... S T^{k_l} in H(sqrt D). Entries are exact elements of Z[sqrt D].
struct GroupWord {
  int D = 0;
  std::vector<long long> ks;
  std::array<RingElem, 4> m;  // a, b, c, d

  /// Entries embedded in R.
  std::array<double, 4> numeric() const;
  HalfPlanePoint act(const HalfPlanePoint& z) const;
};

/// Throws Error for an empty word, CorruptionError if det != 1.
GroupWord word_matrix(std::span<const long long> ks, int D);

/// Exponent u in {0..4} with eta_5(gamma z) = exp(2 pi i u / 5) eta_5(z):
/// c(a + d) for words of even length, a(b - c) for odd length, read off the
/// integer coordinates of the entries. Throws Error if D != 5.
int predicted_u(const GroupWord& w);

struct UGammaReport {
  int predicted = 0;         // predicted_u
  int exponent_sum = 0;      // sum k_i mod 5
  bool exponent_sum_matches = false;
  Complex ratio;             // eta_5(gamma z)/eta_5(z)
  double residual = 0;       // |ratio - exp(2 pi i predicted / 5)|
  double image_im = 0;       // Im(gamma z)
  int n_max = 0;
  bool passed = false;
};

/// Compares predicted_u with the numeric ratio. n_max = 0 picks a truncation
/// from min(Im z, Im gamma z). Throws ConditioningError if either point is
/// closer than 1e-5 to the real axis.
UGammaReport check_u_gamma(const GroupWord& w, const HalfPlanePoint& z, int n_max = 0,
                           double tol = 1e-4);

/// A point where z and gamma z stay equally far from the real axis:
/// -d/c + (jitter + i)/|c| for c != 0, else i + jitter.
HalfPlanePoint balanced_point(const GroupWord& w, double jitter);

struct EnvelopeReport {
  int D = 0;
  long long N = 0;
  int phi = 0;
  double c0 = 0;                   // pi sqrt(2/3)
  double cD = 0;                   // (pi/sqrt 3) sqrt((D-1)/D) for prime D, else c0
  double c_tilde = 0;              // (2 cD^2 + c0^2 (phi/2 + 1/5))^{1/2}
  std::optional<double> c_remark;  // pi/sqrt(3D) (5D^2 + 7D - 10)^{1/2}, prime D only
  double c_used = 0;               // larger of the two
  double log_value = 0;            // -inf at N = 0
  double value = 0;
};

/// exp(C sqrt N) N^{phi/4 + 1} log(N + 2)^{phi/2 + 1} with implied constant 1.
EnvelopeReport bound_envelope(int D, long long N);

}  // namespace heckeeta
