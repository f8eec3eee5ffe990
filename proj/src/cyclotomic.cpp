#include "heckeeta/cyclotomic.hpp"

#include <numeric>
#include <string>

#include "heckeeta/errors.hpp"

namespace heckeeta {

namespace {

int reduce(long long k, int D) {
  long long r = k % D;
  return static_cast<int>(r < 0 ? r + D : r);
}

void require_same_length(const CycPoly& u, const CycPoly& v) {
  if (u.D() != v.D())
    throw ContextMismatch("cyclotomic dimension mismatch: " + std::to_string(u.D()) + " vs " +
                          std::to_string(v.D()));
}

// T[k] = trace_of_power(D, k) for k = 0..D-1.
std::vector<BigInt> trace_table(int D) {
  std::vector<BigInt> t;
  t.reserve(static_cast<std::size_t>(D));
  for (int k = 0; k < D; ++k) t.push_back(trace_of_power(D, k));
  return t;
}

// Tr(u x^shift) from a precomputed table.
BigInt trace_shifted(const CycPoly& u, const std::vector<BigInt>& table, int shift) {
  const int D = u.D();
  BigInt t = 0;
  for (int k = 0; k < D; ++k) {
    if (u[k].is_zero()) continue;
    const int e = k + shift >= D ? k + shift - D : k + shift;
    t += u[k] * table[e];
  }
  return t;
}

}  // namespace

CycPoly CycPoly::monomial(int D, long long k, const BigInt& c) {
  CycPoly u(D);
  u[reduce(k, D)] = c;
  return u;
}

bool CycPoly::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

CycPoly& CycPoly::operator+=(const CycPoly& v) {
  require_same_length(*this, v);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += v.coeffs_[k];
  return *this;
}

CycPoly& CycPoly::operator-=(const CycPoly& v) {
  require_same_length(*this, v);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= v.coeffs_[k];
  return *this;
}

CycPoly& CycPoly::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

CycPoly CycPoly::rotated(long long k) const {
  const int D = this->D();
  CycPoly out(D);
  for (int i = 0; i < D; ++i) out.coeffs_[reduce(i + k, D)] = coeffs_[i];
  return out;
}

void CycPoly::add_monomial(long long k, const BigInt& c) { coeffs_[reduce(k, D())] += c; }

CycPoly cyc_mul(const CycPoly& u, const CycPoly& v) {
  require_same_length(u, v);
  const int D = u.D();
  CycPoly out(D);
  for (int i = 0; i < D; ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < D; ++j) {
      if (v[j].is_zero()) continue;
      const int k = i + j >= D ? i + j - D : i + j;
      out[k] += u[i] * v[j];
    }
  }
  return out;
}

CycPoly operator+(CycPoly u, const CycPoly& v) { return u += v; }
CycPoly operator-(CycPoly u, const CycPoly& v) { return u -= v; }

BigInt trace_of_power(int D, long long k) {
  const long long g = std::gcd(static_cast<long long>(reduce(k, D)), static_cast<long long>(D));
  const long long h = D / g;
  return BigInt(mobius(h) * (euler_phi(D) / euler_phi(h)));
}

BigInt trace(const CycPoly& u) { return trace_shifted(u, trace_table(u.D()), 0); }

CycPoly gauss_element(const CharTable& ct) {
  CycPoly g(ct.D);
  for (int a = 1; a <= ct.D; ++a) g.add_monomial(a, BigInt(ct(a)));
  return g;
}

RingElem project_to_quad(const CycPoly& u, const CharTable& ct, bool verify) {
  if (u.D() != ct.D) throw ContextMismatch("project_to_quad: dimension mismatch");
  const long long phi = ct.phi();
  const CycPoly g = gauss_element(ct);
  const std::vector<BigInt> table = trace_table(ct.D);

  BigInt two_tr = 2 * trace_shifted(u, table, 0);
  BigInt two_tr_g = 2 * trace_shifted(cyc_mul(u, g), table, 0);
  const BigInt den_b = BigInt(ct.D) * phi;
  if (two_tr % phi != 0 || two_tr_g % den_b != 0)
    throw NotInQuadraticField("element not in Q(sqrt(" + std::to_string(ct.D) +
                              ")): inexact trace division");
  BigInt a = two_tr / phi;
  BigInt b = two_tr_g / den_b;
  if (bit_test(a, 0) != bit_test(b, 0))
    throw NotInQuadraticField("projection is not an algebraic integer");

  if (verify) {
    // 2u - a - b g must vanish in Q(zeta_D); the trace form is nondegenerate,
    // so it suffices that Tr(w x^j) = 0 for every j.
    CycPoly w = u;
    w *= BigInt(2);
    w.add_monomial(0, -a);
    CycPoly bg = g;
    bg *= b;
    w -= bg;
    for (int j = 0; j < ct.D; ++j) {
      if (trace_shifted(w, table, j) != 0)
        throw NotInQuadraticField("element not in Q(sqrt(" + std::to_string(ct.D) +
                                  ")): residual has nonzero trace");
    }
  }
  return RingElem(std::move(a), std::move(b));
}

namespace {

std::vector<RingElem> expand_period(const std::vector<int>& classes, const CharTable& ct) {
  // Coefficients of prod (1 - x^a X) as a polynomial in X over Z[x]/(x^D - 1).
  std::vector<CycPoly> poly{CycPoly::one(ct.D)};
  for (int a : classes) {
    std::vector<CycPoly> next(poly.size() + 1, CycPoly(ct.D));
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j] += poly[j];
      next[j + 1] -= poly[j].rotated(a);
    }
    poly = std::move(next);
  }
  std::vector<RingElem> out;
  out.reserve(poly.size());
  for (const auto& c : poly) out.push_back(project_to_quad(c, ct));
  return out;
}

}  // namespace

PeriodPair period_polynomials(const CharTable& ct) {
  PeriodPair pp{expand_period(ct.qr, ct), expand_period(ct.nr, ct)};
  const RingElem one = RingElem::from_int(1);
  if (pp.plus.front() != one || pp.minus.front() != one)
    throw CorruptionError("period polynomial constant term is not 1");
  if (pp.plus.size() != pp.minus.size()) throw CorruptionError("period polynomial degrees differ");
  for (std::size_t j = 0; j < pp.plus.size(); ++j)
    if (conj(pp.plus[j]) != pp.minus[j])
      throw CorruptionError("conjugation does not swap the period polynomials");
  return pp;
}

}  // namespace heckeeta
