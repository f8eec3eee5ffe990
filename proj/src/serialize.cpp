#include "heckeeta/serialize.hpp"

#include <cstdint>
#include <cstdio>
#include <limits>

#include "heckeeta/errors.hpp"

namespace heckeeta {

nlohmann::json bigint_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error("expected an integer, got " + j.dump());
}

nlohmann::json ring_json(const RingElem& x) {
  nlohmann::json j;
  j["a"] = bigint_json(x.a());
  j["b"] = bigint_json(x.b());
  j["den"] = 2;
  return j;
}

RingElem ring_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("den", 0) != 2) throw Error("ring element JSON must have den = 2");
  return RingElem(bigint_from_json(j.at("a")), bigint_from_json(j.at("b")));
}

nlohmann::json coeff_record(const RingCtx& ctx, int N, const RingElem& x) {
  nlohmann::json j;
  j["D"] = ctx.D();
  j["N"] = N;
  j["a"] = bigint_json(x.a());
  j["b"] = bigint_json(x.b());
  j["den"] = 2;
  j["real"] = ctx.embed_double(x);
  return j;
}

std::string coeff_csv_header() { return "D,N,num_a,num_b,real"; }

std::string coeff_csv_row(const RingCtx& ctx, int N, const RingElem& x) {
  return std::to_string(ctx.D()) + "," + std::to_string(N) + "," + x.a().str() + "," + x.b().str() + "," +
         format_real(ctx.embed_double(x));
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace heckeeta
