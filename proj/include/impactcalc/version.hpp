#pragma once

#include <string_view>

namespace impactcalc {

inline constexpr std::string_view kEngineVersion = "1.0.0";

}  // namespace impactcalc
