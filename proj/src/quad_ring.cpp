#include "heckeeta/quad_ring.hpp"

#include "heckeeta/characters.hpp"
#include "heckeeta/errors.hpp"

namespace heckeeta {

namespace {

bool is_odd(const BigInt& x) { return bit_test(x, 0); }

}  // namespace

RingElem::RingElem(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {
  if (is_odd(a_) != is_odd(b_))
    throw Error("(" + a_.str() + ", " + b_.str() + ")/2 is not an algebraic integer: parity differs");
}

RingElem& RingElem::operator+=(const RingElem& y) {
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& y) {
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

RingElem& RingElem::operator*=(long long k) {
  a_ *= k;
  b_ *= k;
  return *this;
}

RingElem conj(const RingElem& x) { return RingElem(x.a(), -x.b()); }

RingCtx::RingCtx(long long D) : D_(D) {
  if (!is_fundamental(D)) throw InvalidDiscriminant(D);
  sqrtD_ = sqrt(Real(D));
}

RingElem RingCtx::mul(const RingElem& x, const RingElem& y) const {
  // ((a + b r)/2)((c + d r)/2) = ((ac + bdD) + (ad + bc) r)/4
  BigInt ra = x.a_ * y.a_ + x.b_ * y.b_ * D_;
  BigInt rb = x.a_ * y.b_ + x.b_ * y.a_;
  if (is_odd(ra) || is_odd(rb)) throw CorruptionError("ring_mul: numerator not divisible by 2");
  ra >>= 1;
  rb >>= 1;
  if (is_odd(ra) != is_odd(rb)) throw CorruptionError("ring_mul: parity lost after renormalization");
  return RingElem::unchecked(std::move(ra), std::move(rb));
}

BigInt RingCtx::norm(const RingElem& x) const {
  const RingElem n = mul(x, conj(x));
  if (!n.b_.is_zero()) throw CorruptionError("norm has a nonzero sqrt(D) part");
  return n.a_ / 2;
}

Real RingCtx::embed(const RingElem& x) const { return (Real(x.a_) + Real(x.b_) * sqrtD_) / 2; }

double RingCtx::embed_double(const RingElem& x) const { return embed(x).convert_to<double>(); }

std::string RingCtx::to_string(const RingElem& x) const {
  std::string s = "(" + x.a_.str();
  s += x.b_.sign() < 0 ? "-" : "+";
  s += abs(x.b_).str() + "*sqrt(" + std::to_string(D_) + "))/2";
  return s;
}

void require_same_ring(const RingCtx& x, const RingCtx& y) {
  if (!(x == y))
    throw ContextMismatch("ring context mismatch: D = " + std::to_string(x.D()) + " vs D = " +
                          std::to_string(y.D()));
}

}  // namespace heckeeta
