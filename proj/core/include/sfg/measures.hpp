#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

namespace sfg {

inline constexpr double kSqrt2 = 1.41421356237309504880;

// A point (birth, death) of the open half-plane birth < death.
struct PlanePoint {
  double birth = 0.0;
  double death = 0.0;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

// Euclidean distance from the point to the diagonal, (death - birth) / sqrt(2).
inline double diagonal_distance(const PlanePoint& z) noexcept {
  return (z.death - z.birth) / kSqrt2;
}

struct WeightedPoint {
  PlanePoint point;
  double mass = 1.0;

  friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
};

/// Finite weighted point measure on the open half-plane.
///
/// A persistence diagram is the special case of integer masses; nothing here
/// distinguishes the two. Duplicate points are kept as separate entries.
/// Immutable after construction.
class PersistenceMeasure {
 public:
  PersistenceMeasure() = default;

  /// Validates every entry; throws ValidationError on a non-finite
  /// coordinate, birth >= death, or a mass that is not finite and positive.
  explicit PersistenceMeasure(std::vector<WeightedPoint> points);

  /// Unit masses.
  static PersistenceMeasure from_points(std::span<const PlanePoint> points);

  std::span<const WeightedPoint> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const WeightedPoint& operator[](std::size_t i) const { return points_[i]; }

  double total_mass() const noexcept;

  // Every mass multiplied by factor (> 0).
  PersistenceMeasure scaled(double factor) const;

  // Disjoint union (concatenation of entries).
  friend PersistenceMeasure join(const PersistenceMeasure& a, const PersistenceMeasure& b);

  friend bool operator==(const PersistenceMeasure&, const PersistenceMeasure&) = default;

 private:
  std::vector<WeightedPoint> points_;
};

// (sum_i mass_i * d(x_i, diagonal)^p)^(1/p). Throws InvalidParameter for p < 1.
double pers(const PersistenceMeasure& m, double p);

// max_i d(x_i, diagonal); 0 for the empty measure.
double pers_infty(const PersistenceMeasure& m);

// Same points with mass_i replaced by mass_i / d(x_i, diagonal).
PersistenceMeasure normalize(const PersistenceMeasure& m);

// Text format: one `birth,death[,mass]` per line, '#' comments and blank lines
// ignored, mass defaults to 1.
PersistenceMeasure read_measure(std::istream& in);
void write_measure(std::ostream& out, const PersistenceMeasure& m);

PersistenceMeasure load_measure(const std::filesystem::path& path);
void save_measure(const PersistenceMeasure& m, const std::filesystem::path& path);

}  // namespace sfg
