#include "heckeeta/qseries.hpp"

#include <string>

#include "heckeeta/characters.hpp"
#include "heckeeta/cyclotomic.hpp"
#include "heckeeta/errors.hpp"
#include "heckeeta/lseries.hpp"

namespace heckeeta {

namespace {

void require_compatible(const QSeries& f, const QSeries& g) {
  require_same_ring(f.ctx(), g.ctx());
  if (f.prec() != g.prec())
    throw ContextMismatch("series precision mismatch: " + std::to_string(f.prec()) + " vs " +
                          std::to_string(g.prec()));
}

// Multiplies f in place by poly(q^n), poly[0] = 1.
void mul_sparse_poly(QSeries& f, const std::vector<RingElem>& poly, int n) {
  const RingCtx& ctx = f.ctx();
  const int N = f.prec();
  const int deg = static_cast<int>(poly.size()) - 1;
  for (int k = N; k >= n; --k) {
    for (int j = 1; j <= deg && k - j * n >= 0; ++j) {
      if (poly[j].is_zero() || f[k - j * n].is_zero()) continue;
      f[k] += ctx.mul(poly[j], f[k - j * n]);
    }
  }
}

// Divides f in place by poly(q^n), poly[0] = 1. Exact because the constant term is a unit.
void div_sparse_poly(QSeries& f, const std::vector<RingElem>& poly, int n) {
  const RingCtx& ctx = f.ctx();
  const int N = f.prec();
  const int deg = static_cast<int>(poly.size()) - 1;
  for (int k = n; k <= N; ++k) {
    for (int j = 1; j <= deg && k - j * n >= 0; ++j) {
      if (poly[j].is_zero() || f[k - j * n].is_zero()) continue;
      f[k] -= ctx.mul(poly[j], f[k - j * n]);
    }
  }
}

void check_order(int N) {
  if (N < 0) throw Error("series order must be non-negative");
  if (N > kMaxSeriesOrder)
    throw CapacityError("series order " + std::to_string(N) + " exceeds limit " +
                        std::to_string(kMaxSeriesOrder));
}

}  // namespace

QSeries::QSeries(RingCtx ctx, int prec, Rational valuation)
    : ctx_(std::move(ctx)), coeffs_(static_cast<std::size_t>(prec) + 1), valuation_(std::move(valuation)) {
  if (prec < 0) throw Error("series precision must be non-negative");
}

QSeries QSeries::one(const RingCtx& ctx, int prec) {
  QSeries f(ctx, prec);
  f[0] = RingElem::from_int(1);
  return f;
}

QSeries series_mul(const QSeries& f, const QSeries& g) {
  require_compatible(f, g);
  const int N = f.prec();
  QSeries h(f.ctx(), N, f.valuation() + g.valuation());
  for (int i = 0; i <= N; ++i) {
    if (f[i].is_zero()) continue;
    for (int j = 0; i + j <= N; ++j) {
      if (g[j].is_zero()) continue;
      h[i + j] += f.ctx().mul(f[i], g[j]);
    }
  }
  return h;
}

QSeries series_inv(const QSeries& f) {
  const RingElem one = RingElem::from_int(1);
  int sign;
  if (f[0] == one) {
    sign = 1;
  } else if (f[0] == -one) {
    sign = -1;
  } else {
    throw Error("series_inv: constant term " + f.ctx().to_string(f[0]) + " is not +-1");
  }
  const int N = f.prec();
  QSeries g(f.ctx(), N, -f.valuation());
  g[0] = f[0];
  for (int n = 1; n <= N; ++n) {
    RingElem acc;
    for (int k = 1; k <= n; ++k) {
      if (f[k].is_zero() || g[n - k].is_zero()) continue;
      acc += f.ctx().mul(f[k], g[n - k]);
    }
    acc *= -sign;
    g[n] = std::move(acc);
  }
  return g;
}

QSeries series_pow(const QSeries& f, int k) {
  if (k < 1) throw Error("series_pow: exponent must be positive");
  QSeries result = f;
  QSeries base = f;
  int rest = k - 1;
  while (rest > 0) {
    if (rest & 1) result = series_mul(result, base);
    rest >>= 1;
    if (rest > 0) base = series_mul(base, base);
  }
  return result;
}

QSeries sparse_binomial_apply(const QSeries& f, int n, int e) {
  if (n < 1 || n > f.prec()) throw Error("sparse_binomial_apply: gap out of range");
  QSeries g = f;
  const int N = f.prec();
  if (e == 1) {
    for (int k = N; k >= n; --k) g[k] -= g[k - n];
  } else if (e == -1) {
    for (int k = n; k <= N; ++k) g[k] += g[k - n];
  } else {
    throw Error("sparse_binomial_apply: exponent must be +1 or -1");
  }
  return g;
}

QSeries eta_series(int D, int N) {
  check_order(N);
  const CharTable ct = build_char_table(D);
  const RingCtx ctx(D);
  const PeriodPair periods = period_polynomials(ct);
  const LValueRecord lv = l_minus_one(ct);

  QSeries f = QSeries::one(ctx, N);
  f.set_valuation(lv.m_exponent);
  for (int n = 1; n <= N; ++n) {
    const int chi = ct(n);
    if (chi == 1) {
      for (int k = N; k >= n; --k) f[k] -= f[k - n];
    } else if (chi == -1) {
      for (int k = n; k <= N; ++k) f[k] += f[k - n];
    }
    mul_sparse_poly(f, periods.plus, n);
    div_sparse_poly(f, periods.minus, n);
  }
  return f;
}

QSeries delta5_series(int N) { return series_pow(eta_series(5, N), 5); }

}  // namespace heckeeta
