#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace snacap {

/// Shortest decimal text that parses back to exactly `x`.
inline std::string format_double(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{}) return "nan";
    return std::string(buf, end);
}

/// Half-up rounding to two decimals, rendered with both digits.
inline std::string format_2dp(double x) {
    const double r = std::floor(x * 100.0 + 0.5 + 1e-9) / 100.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", r);
    return buf;
}

} // namespace snacap
