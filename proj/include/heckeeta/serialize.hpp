#pragma once

#include <string>

#include "json.hpp"
#include "heckeeta/quad_ring.hpp"

namespace heckeeta {

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::json bigint_json(const BigInt& x);
/// Inverse of bigint_json. Throws Error on anything else.
BigInt bigint_from_json(const nlohmann::json& j);

/// {"a": ..., "b": ..., "den": 2}
nlohmann::json ring_json(const RingElem& x);
RingElem ring_from_json(const nlohmann::json& j);

/// {"D", "N", "a", "b", "den": 2, "real"}
nlohmann::json coeff_record(const RingCtx& ctx, int N, const RingElem& x);

/// "D,N,num_a,num_b,real"
std::string coeff_csv_header();
std::string coeff_csv_row(const RingCtx& ctx, int N, const RingElem& x);

/// 17 significant digits, "%.17g".
std::string format_real(double x);

}  // namespace heckeeta
