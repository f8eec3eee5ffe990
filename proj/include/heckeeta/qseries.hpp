#pragma once

#include <vector>

#include "heckeeta/quad_ring.hpp"

namespace heckeeta {

/// q^valuation * sum_{n=0}^{prec} coeffs[n] q^n over O_D, q = exp(2 pi i z / sqrt(D)).
/// The valuation is bookkeeping only; it is never folded into the coefficients.
class QSeries {
 public:
  QSeries(RingCtx ctx, int prec, Rational valuation = Rational(0));

  /// 1 + O(q^{prec+1}).
  static QSeries one(const RingCtx& ctx, int prec);

  const RingCtx& ctx() const noexcept { return ctx_; }
  int prec() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& valuation() const noexcept { return valuation_; }
  void set_valuation(Rational v) { valuation_ = std::move(v); }

  const RingElem& operator[](int n) const { return coeffs_[n]; }
  RingElem& operator[](int n) { return coeffs_[n]; }
  const std::vector<RingElem>& coeffs() const noexcept { return coeffs_; }

 private:
  RingCtx ctx_;
  std::vector<RingElem> coeffs_;
  Rational valuation_;
};

/// Truncated product; valuations add. Throws ContextMismatch on different D or precision.
QSeries series_mul(const QSeries& f, const QSeries& g);
/// Requires f[0] = +-1; throws Error otherwise. Valuation is negated.
QSeries series_inv(const QSeries& f);
QSeries series_pow(const QSeries& f, int k);

/// f * (1 - q^n) for e = +1, f / (1 - q^n) for e = -1, in O(prec) operations.
QSeries sparse_binomial_apply(const QSeries& f, int n, int e);

/// Coefficients a_D(0..N) of eta_D, with valuation -L(-1, chi_D)/2.
/// Throws InvalidDiscriminant for bad D.
QSeries eta_series(int D, int N);

/// tau_5(1..N+1) as the series eta_5^5, valuation 1: entry n is tau_5(n + 1).
QSeries delta5_series(int N);

/// Largest order accepted by eta_series/delta5_series.
constexpr int kMaxSeriesOrder = 20000;

}  // namespace heckeeta
