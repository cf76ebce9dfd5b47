#pragma once

#include <string>

namespace sfg {

// 12 significant digits, round-half-even on the binary value, always carrying
// a decimal point or exponent ("1.0", "0.25", "1.5e-07").
std::string format_real(double value);

// Shortest decimal string that parses back to the same double.
std::string format_roundtrip(double value);

}  // namespace sfg
