#pragma once

#include <string>

namespace cascade {

/// Shortest decimal text that round-trips to the same double ('.' separator,
/// locale independent). Negative zero prints as "0".
std::string format_full(double value);

/// `digits` significant digits in %g style, for human-facing output.
std::string format_rounded(double value, int digits = 6);

}  // namespace cascade
