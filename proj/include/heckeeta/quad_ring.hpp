#pragma once

#include <string>

#include "heckeeta/types.hpp"

namespace heckeeta {

/// Element (a + b*sqrt(D))/2 of the ring of integers of Q(sqrt(D)),
/// D = 1 mod 4. Stored over the fixed denominator 2 with a = b (mod 2).
/// D itself lives in RingCtx; addition, negation and conjugation do not need it.
class RingElem {
 public:
  RingElem() = default;
  /// Numerator pair over denominator 2. Throws Error on a parity violation.
  RingElem(BigInt a, BigInt b);

  static RingElem from_int(const BigInt& n) { return RingElem(2 * n, BigInt(0)); }

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  /// True when the sqrt(D) part vanishes.
  bool is_rational() const { return b_.is_zero(); }

  RingElem operator-() const { return unchecked(-a_, -b_); }
  RingElem& operator+=(const RingElem& y);
  RingElem& operator-=(const RingElem& y);
  friend RingElem operator+(RingElem x, const RingElem& y) { return x += y; }
  friend RingElem operator-(RingElem x, const RingElem& y) { return x -= y; }
  RingElem& operator*=(long long k);

  friend bool operator==(const RingElem&, const RingElem&) = default;

 private:
  friend class RingCtx;
  static RingElem unchecked(BigInt a, BigInt b) {
    RingElem r;
    r.a_ = std::move(a);
    r.b_ = std::move(b);
    return r;
  }
  BigInt a_{0};
  BigInt b_{0};
};

/// sqrt(D) -> -sqrt(D).
RingElem conj(const RingElem& x);

/// The ambient ring O_D. Multiplication, the real embedding and the textual
/// form need D, so they live here.
class RingCtx {
 public:
  /// Throws InvalidDiscriminant unless D is fundamental and = 1 mod 4.
  explicit RingCtx(long long D);

  long long D() const noexcept { return D_; }
  const Real& sqrtD() const noexcept { return sqrtD_; }

  RingElem mul(const RingElem& x, const RingElem& y) const;
  /// x * x^sigma, a rational integer.
  BigInt norm(const RingElem& x) const;
  /// (a + b*sqrtD)/2 with the positive root, 100 significant digits.
  Real embed(const RingElem& x) const;
  double embed_double(const RingElem& x) const;
  /// Canonical form "(a+b*sqrt(D))/2".
  std::string to_string(const RingElem& x) const;

  friend bool operator==(const RingCtx& x, const RingCtx& y) { return x.D_ == y.D_; }

 private:
  long long D_;
  Real sqrtD_;
};

/// Throws ContextMismatch if the two contexts differ.
void require_same_ring(const RingCtx& x, const RingCtx& y);

}  // namespace heckeeta
