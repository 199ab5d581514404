#include "cascade/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace cascade {

std::string format_full(double value) {
    if (value == 0.0) value = 0.0;  // drop the sign of -0
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return {buf.data(), res.ptr};
}

std::string format_rounded(double value, int digits) {
    if (value == 0.0) value = 0.0;
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::general, digits);
    return {buf.data(), res.ptr};
}

}  // namespace cascade
