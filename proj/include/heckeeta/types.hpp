#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace heckeeta {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

// Fixed 100 decimal digits; used for real embeddings of exact values.
using Real = boost::multiprecision::mpfr_float_100;

// Runtime-selectable precision.
using VarReal = boost::multiprecision::mpfr_float;

/// Sets the thread-local default precision of VarReal for its lifetime.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits) : saved_(VarReal::default_precision()) {
    VarReal::default_precision(digits);
  }
  ~PrecisionGuard() { VarReal::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

}  // namespace heckeeta
