#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace sfg::detail {

struct UnitSplit {
  double unit = 1.0;
  std::vector<std::size_t> counts;  // masses[i] == counts[i] * unit
  std::size_t total = 0;
};

// Finds a unit u such that every mass is an integer multiple of u (relative
// tolerance 1e-9). Tries the smallest mass first, then 1/q for q = 1..1024.
inline std::optional<UnitSplit> split_into_units(std::span<const double> masses) {
  auto try_unit = [&](double unit) -> std::optional<UnitSplit> {
    if (!(unit > 0.0)) return std::nullopt;
    UnitSplit split{unit, {}, 0};
    split.counts.reserve(masses.size());
    for (double m : masses) {
      const double ratio = m / unit;
      const double rounded = std::round(ratio);
      if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio)) {
        return std::nullopt;
      }
      split.counts.push_back(static_cast<std::size_t>(rounded));
      split.total += split.counts.back();
    }
    return split;
  };

  if (masses.empty()) return UnitSplit{};
  double smallest = masses.front();
  for (double m : masses) smallest = std::min(smallest, m);
  if (auto s = try_unit(smallest)) return s;
  for (int q = 1; q <= 1024; ++q) {
    if (auto s = try_unit(1.0 / q)) return s;
  }
  return std::nullopt;
}

}  // namespace sfg::detail
