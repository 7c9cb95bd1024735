#pragma once

#include <string>

#include <fmt/format.h>

namespace spinframe {

/// 15 significant digits; negative zero printed as 0.
[[nodiscard]] inline std::string format_real(double v) {
    if (v == 0.0) {
        v = 0.0;
    }
    return fmt::format("{:.15g}", v);
}

/// "+1" / "-1".
[[nodiscard]] inline std::string format_sign(int s) {
    return s >= 0 ? "+" + std::to_string(s) : std::to_string(s);
}

}  // namespace spinframe
