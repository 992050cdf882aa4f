#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kummer/curve.hpp"

namespace kummer::cli {

/// Named test curves: h2, h3, z, gk2, w.
std::optional<KummerCurve> builtin_curve(const std::string& name);
std::vector<std::string> builtin_curve_names();

}  // namespace kummer::cli
