#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "kummer/codes.hpp"

namespace kummer {

enum class Construction { T1, T2, TR };

std::string_view construction_name(Construction c) noexcept;  // "1", "2", "R"
/// Throws ParseError.
Construction parse_construction(std::string_view s);

struct LcpConstructionResult {
  Construction construction = Construction::T1;
  long s = 0;
  std::vector<Field::Elem> eval_x;
  std::vector<Place> D;
  Divisor G;
  Divisor H;
  Certificate certificate;
  LinearCode code_g;
  LinearCode code_h;
  LcpReport report;
  Thm35Report thm35;
  std::size_t expected_k1 = 0;
  std::size_t expected_k2 = 0;
  /// TR only: set when evaluation at R_1 is identically zero on L(H + R_1).
  bool degenerate_functional = false;
};

/// Inclusive integer range of admissible s; empty when first > second.
using SRange = std::pair<long, long>;

/// (g - 1) / deg f < s < (N + 1 - g) / deg f
SRange s_range_t1(const KummerCurve& curve, long N);
/// (g - 1) / n < s < (N - m - g + 2) / n
SRange s_range_tr(const KummerCurve& curve, long N);
/// All s meeting conditions i)-iii) of the second construction.
std::vector<long> admissible_s_t2(const KummerCurve& curve, const Divisor& E1, const Divisor& E2, long N);

/// eval_x defaults to every split x-value.
LcpConstructionResult teocodes1(const KummerCurve& curve, const Divisor& E, long s,
                                std::optional<std::vector<Field::Elem>> eval_x = std::nullopt);
LcpConstructionResult teocodes2(const KummerCurve& curve, const Divisor& E1, const Divisor& E2, long s,
                                std::optional<std::vector<Field::Elem>> eval_x = std::nullopt);
LcpConstructionResult teocodesR(const KummerCurve& curve, const Divisor& E, long s,
                                std::optional<std::vector<Field::Elem>> eval_x = std::nullopt);

}  // namespace kummer
