#include "sfg/format.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace sfg {

std::string format_real(double value) {
  std::array<char, 64> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%.12g", value);
  std::string out(buf.data(), static_cast<std::size_t>(n));
  if (out.find_first_of(".eEn") == std::string::npos) out += ".0";
  return out;
}

std::string format_roundtrip(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  (void)ec;
  std::string out(buf.data(), ptr);
  if (out.find_first_of(".eEn") == std::string::npos) out += ".0";
  return out;
}

}  // namespace sfg
