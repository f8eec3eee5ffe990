#include "heckeeta/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "heckeeta/errors.hpp"
#include "heckeeta/lseries.hpp"

namespace heckeeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};
constexpr double kDropBelow = 1e-20;

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

int mod5(long long x) {
  const long long r = x % 5;
  return static_cast<int>(r < 0 ? r + 5 : r);
}

// Integer k with x = k, or with x = k sqrt(D); throws if x has the other shape.
long long rational_coord(const RingElem& x) {
  if (!x.b().is_zero() || bit_test(x.a(), 0)) throw CorruptionError("entry is not a rational integer");
  return static_cast<long long>(x.a() / 2);
}
long long surd_coord(const RingElem& x) {
  if (!x.a().is_zero() || bit_test(x.b(), 0)) throw CorruptionError("entry is not an integer multiple of sqrt(D)");
  return static_cast<long long>(x.b() / 2);
}

}  // namespace

HalfPlanePoint::HalfPlanePoint(double re, double im) : re_(re), im_(im) {
  if (!(im > 0) || !std::isfinite(re) || !std::isfinite(im))
    throw Error("point is not in the upper half-plane: im = " + std::to_string(im));
}

HalfPlanePoint HalfPlanePoint::inverted() const { return HalfPlanePoint(-1.0 / z()); }

EtaEvaluator::EtaEvaluator(int D) : ct_(build_char_table(D)), sqrtD_(std::sqrt(double(D))) {
  valuation_ = heckeeta::l_minus_one(ct_).m_exponent.convert_to<double>();
  for (int a = 1; a < D; ++a)
    if (ct_(a) != 0) roots_.emplace_back(std::polar(1.0, 2 * kPi * a / D), ct_(a));
}

Complex EtaEvaluator::q_log(const HalfPlanePoint& z) const {
  // q is periodic under z -> z + sqrt D; reducing keeps n * arg(q) small.
  const double re = z.re() - sqrtD_ * std::floor(z.re() / sqrtD_);
  return 2 * kPi * kI * Complex(re, z.im()) / sqrtD_;
}

Complex EtaEvaluator::log_phi(const HalfPlanePoint& z, int n_max) const {
  const Complex lq = q_log(z);
  Complex acc = 0;
  for (int n = 1; n <= n_max; ++n) {
    const Complex w = std::exp(double(n) * lq);
    if (std::abs(w) < kDropBelow) break;
    const int chi = ct_(n);
    if (chi != 0) acc += double(chi) * std::log(1.0 - w);
  }
  return acc;
}

Complex EtaEvaluator::log_phi_dual(const HalfPlanePoint& z, int n_max) const {
  const Complex lq = q_log(z);
  Complex acc = 0;
  for (int n = 1; n <= n_max; ++n) {
    const Complex w = std::exp(double(n) * lq);
    if (std::abs(w) < kDropBelow) break;
    for (const auto& [root, chi] : roots_) acc += double(chi) * std::log(1.0 - root * w);
  }
  return acc;
}

Complex EtaEvaluator::log_eta(const HalfPlanePoint& z, int n_max) const {
  if (n_max < 1) throw Error("n_max must be positive");
  // The fractional prefactor comes from z itself, not from a power of q.
  const Complex prefactor = 2 * kPi * kI * valuation_ * z.z() / sqrtD_;
  return prefactor + log_phi(z, n_max) + log_phi_dual(z, n_max);
}

Complex EtaEvaluator::eta(const HalfPlanePoint& z, int n_max) const { return std::exp(log_eta(z, n_max)); }

Complex EtaEvaluator::phi(const HalfPlanePoint& z, int n_max) const { return std::exp(log_phi(z, n_max)); }

Complex EtaEvaluator::phi_dual(const HalfPlanePoint& z, int n_max) const {
  return std::exp(log_phi_dual(z, n_max));
}

Complex eval_eta_numeric(int D, const HalfPlanePoint& z, int n_max) { return EtaEvaluator(D).eta(z, n_max); }

ResidualReport check_inversion(const EtaEvaluator& eta, const HalfPlanePoint& z, int n_max, double tol) {
  ResidualReport r;
  r.lhs = eta.eta(z.inverted(), n_max);
  r.rhs = eta.eta(z, n_max);
  r.residual = std::abs(r.lhs - r.rhs);
  r.passed = r.residual < tol;
  return r;
}

ResidualReport check_translation(const EtaEvaluator& eta, const HalfPlanePoint& z, int n_max, double tol) {
  const Complex u = eta.D() == 5 ? std::polar(1.0, 2 * kPi / 5) : Complex(1.0);
  ResidualReport r;
  r.lhs = eta.eta(z.translated(eta.sqrtD()), n_max);
  r.rhs = u * eta.eta(z, n_max);
  r.residual = std::abs(r.lhs - r.rhs);
  r.passed = r.residual < tol;
  return r;
}

ResidualReport theorem21_check(int D, double y, int n_max, unsigned digits, double tol) {
  if (!(y > 0)) throw Error("theorem21_check: y must be positive");
  const EtaEvaluator eta(D);
  const CharTable ct = build_char_table(D);
  const double lp0 = l_prime_zero(ct, digits).convert_to<double>();
  ResidualReport r;
  r.lhs = eta.phi_dual(HalfPlanePoint(0.0, 1.0 / y), n_max);
  r.rhs = std::exp(lp0 + y * kPi * eta.l_minus_one() / eta.sqrtD()) * eta.phi(HalfPlanePoint(0.0, y), n_max);
  r.residual = std::abs(r.lhs - r.rhs);
  r.passed = r.residual < tol;
  return r;
}

std::array<double, 4> GroupWord::numeric() const {
  const RingCtx ctx(D);
  return {ctx.embed_double(m[0]), ctx.embed_double(m[1]), ctx.embed_double(m[2]), ctx.embed_double(m[3])};
}

HalfPlanePoint GroupWord::act(const HalfPlanePoint& z) const {
  const auto [a, b, c, d] = numeric();
  return HalfPlanePoint((a * z.z() + b) / (c * z.z() + d));
}

GroupWord word_matrix(std::span<const long long> ks, int D) {
  if (ks.empty()) throw Error("word_matrix: empty word");
  const RingCtx ctx(D);
  const RingElem zero, one = RingElem::from_int(1);
  using Mat = std::array<RingElem, 4>;
  auto mul = [&ctx](const Mat& x, const Mat& y) -> Mat {
    return {ctx.mul(x[0], y[0]) + ctx.mul(x[1], y[2]), ctx.mul(x[0], y[1]) + ctx.mul(x[1], y[3]),
            ctx.mul(x[2], y[0]) + ctx.mul(x[3], y[2]), ctx.mul(x[2], y[1]) + ctx.mul(x[3], y[3])};
  };
  auto translation = [&](long long k) -> Mat { return {one, RingElem(BigInt(0), BigInt(2 * k)), zero, one}; };
  const Mat S{zero, -one, one, zero};

  Mat m = translation(ks[0]);
  for (std::size_t i = 1; i < ks.size(); ++i) m = mul(mul(m, S), translation(ks[i]));

  const RingElem det = ctx.mul(m[0], m[3]) - ctx.mul(m[1], m[2]);
  if (det != one) throw CorruptionError("word matrix determinant is " + ctx.to_string(det));
  return GroupWord{D, std::vector<long long>(ks.begin(), ks.end()), m};
}

int predicted_u(const GroupWord& w) {
  if (w.D != 5) throw Error("predicted_u: the root-of-unity law is only available for D = 5");
  if (w.ks.size() % 2 == 0) {
    // (a sqrt5, b; c, d sqrt5)
    const long long a = surd_coord(w.m[0]), c = rational_coord(w.m[2]), d = surd_coord(w.m[3]);
    rational_coord(w.m[1]);
    return mod5(mod5(c) * mod5(a + d));
  }
  // (a, b sqrt5; c sqrt5, d)
  const long long a = rational_coord(w.m[0]), b = surd_coord(w.m[1]), c = surd_coord(w.m[2]);
  rational_coord(w.m[3]);
  return mod5(mod5(a) * mod5(b - c));
}

UGammaReport check_u_gamma(const GroupWord& w, const HalfPlanePoint& z, int n_max, double tol) {
  UGammaReport r;
  r.predicted = predicted_u(w);
  long long sum = 0;
  for (long long k : w.ks) sum += k;
  r.exponent_sum = mod5(sum);
  r.exponent_sum_matches = r.exponent_sum == r.predicted;

  const HalfPlanePoint gz = w.act(z);
  r.image_im = gz.im();
  const double y = std::min(z.im(), gz.im());
  if (y < 1e-5) throw ConditioningError("check_u_gamma: Im(gamma z) = " + std::to_string(gz.im()) + " too small");
  if (n_max <= 0) {
    // |q|^n < 1e-20 with |q| = exp(-2 pi y / sqrt 5)
    const double n = std::ceil(20 * std::log(10.0) * std::sqrt(5.0) / (2 * kPi * y));
    n_max = static_cast<int>(std::min(n + 1, 5e7));
  }
  r.n_max = n_max;

  const EtaEvaluator eta(5);
  r.ratio = std::exp(eta.log_eta(gz, n_max) - eta.log_eta(z, n_max));
  r.residual = std::abs(r.ratio - std::polar(1.0, 2 * kPi * r.predicted / 5));
  r.passed = r.exponent_sum_matches && r.residual < tol;
  return r;
}

HalfPlanePoint balanced_point(const GroupWord& w, double jitter) {
  const auto [a, b, c, d] = w.numeric();
  if (std::abs(c) < 1e-12) return {jitter, 1.0};
  return {-d / c + jitter / std::abs(c), 1.0 / std::abs(c)};
}

EnvelopeReport bound_envelope(int D, long long N) {
  if (!is_fundamental(D)) throw InvalidDiscriminant(D);
  if (N < 0) throw Error("bound_envelope: N must be non-negative");
  EnvelopeReport r;
  r.D = D;
  r.N = N;
  r.phi = static_cast<int>(euler_phi(D));
  r.c0 = kPi * std::sqrt(2.0 / 3.0);
  const bool prime = is_prime(D);
  r.cD = prime ? kPi / std::sqrt(3.0) * std::sqrt((D - 1.0) / D) : r.c0;
  r.c_tilde = std::sqrt(2 * r.cD * r.cD + r.c0 * r.c0 * (r.phi / 2.0 + 0.2));
  if (prime) r.c_remark = kPi / std::sqrt(3.0 * D) * std::sqrt(5.0 * D * D + 7.0 * D - 10.0);
  r.c_used = std::max(r.c_tilde, r.c_remark.value_or(0.0));

  const double n = static_cast<double>(N);
  r.log_value = N == 0 ? -std::numeric_limits<double>::infinity()
                       : r.c_used * std::sqrt(n) + (r.phi / 4.0 + 1) * std::log(n) +
                             (r.phi / 2.0 + 1) * std::log(std::log(n + 2));
  r.value = std::exp(r.log_value);
  return r;
}

}  // namespace heckeeta
