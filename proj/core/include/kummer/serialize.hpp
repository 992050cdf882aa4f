#pragma once

#include <nlohmann/json.hpp>

#include "kummer/codes.hpp"
#include "kummer/function.hpp"
#include "kummer/lcp.hpp"
#include "kummer/nonspecial.hpp"

namespace kummer::json {

using nlohmann::json;

json to_json(const Field& F);
/// {"p", "e"}; a "modulus" entry, when present, must match. Throws ParseError.
Field field_from_json(const json& j);

/// {"field", "m", "leading", "roots": [{"a", "lambda"}]}
json to_json(const KummerCurve& curve);
/// Accepts "roots" or "f" (coefficients low to high, must split).
KummerCurve curve_from_json(const json& j);

json to_json(const Divisor& D);
/// Places are validated against the curve. Throws ParseError, InvalidPlace.
Divisor divisor_from_json(const KummerCurve& curve, const json& j);

json to_json(const CurveFunction& fn);
json to_json(const LinearCode& code);
Matrix matrix_from_json(const Field& F, const json& rows);
json to_json(const GMinus1Family& fam, int m);
json to_json(const LcpReport& r);
json to_json(const Thm35Report& r);
json to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);
json to_json(const KummerCurve& curve, const LcpConstructionResult& r);

/// Throws ParseError with a readable message on malformed input.
json parse(const std::string& text);

}  // namespace kummer::json
