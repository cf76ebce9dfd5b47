#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sfg/matrix.hpp"
#include "sfg/measures.hpp"
#include "sfg/projection.hpp"

namespace sfg {

enum class Mode { exact, approx };

enum class Sampling {
  uniform_midpoint,  // deterministic midpoint rule on a uniform k-grid
  uniform_random,    // k i.i.d. uniform times, Riemann sum over the sorted draws
  kde,               // draws from a Gaussian KDE on event values, same accumulation
};

std::string_view to_string(Mode m) noexcept;
std::string_view to_string(Sampling s) noexcept;
Mode parse_mode(std::string_view name);
Sampling parse_sampling(std::string_view name);

struct TimeRange {
  double min;
  double max;
};

struct SfgConfig {
  double p = 1.0;
  Projection variant = Projection::orthogonal;
  Mode mode = Mode::exact;
  int samples = 100;
  Sampling sampling = Sampling::uniform_midpoint;
  std::uint64_t seed = 0;
  std::optional<TimeRange> range;

  // Throws InvalidParameter on p < 1, k < 1 in approx mode, or an empty range.
  void validate() const;
};

/// Quadrature nodes for the outer integral over t: the integral of f is
/// estimated by sum_i weights[i] * f(times[i]). Weights are non-negative, so
/// sharing one grid across every pair of a list keeps the estimated
/// SFG_p^p conditionally negative definite.
struct SampleGrid {
  std::vector<double> times;
  std::vector<double> weights;
};

// [min birth, max death] over all measures, or nullopt when all are empty.
std::optional<TimeRange> support_range(std::span<const PersistenceMeasure> measures);

// Builds the grid for cfg over the given measures (the override range wins).
// Returns an empty grid when every measure is empty and no range is set.
SampleGrid make_sample_grid(std::span<const PersistenceMeasure> measures, const SfgConfig& cfg);

// FG_p^p between the normalized projections on the geodesic with parameter t.
double slice_cost(const PersistenceMeasure& a, const PersistenceMeasure& b, double t, double p,
                  Projection variant);

// Exact value of int_R slice_cost(a, b, t) dt by a sweep over events.
double sliced_integral_exact(const PersistenceMeasure& a, const PersistenceMeasure& b, double p,
                             Projection variant);

// SFG_p^p: the sliced integral with the variant's prefactor, 2^-1/2 for the
// orthogonal projection and (p + 1) 2^-1/2 for the continuous one. Both place
// the prefactor inside the 1/p root so that SFG_p(m, empty) = Pers_p(m).
double sfg_exact_power(const PersistenceMeasure& a, const PersistenceMeasure& b, double p,
                       Projection variant);
double sfg_exact(const PersistenceMeasure& a, const PersistenceMeasure& b, double p,
                 Projection variant);

// Sampled estimate; the grid is built from a and b unless one is supplied.
double sfg_approx_power(const PersistenceMeasure& a, const PersistenceMeasure& b,
                        const SfgConfig& cfg, const SampleGrid& grid);
double sfg_approx(const PersistenceMeasure& a, const PersistenceMeasure& b, const SfgConfig& cfg);

// Dispatch on cfg.mode.
double sfg_power(const PersistenceMeasure& a, const PersistenceMeasure& b, const SfgConfig& cfg);
double sfg(const PersistenceMeasure& a, const PersistenceMeasure& b, const SfgConfig& cfg);

/// Pairwise SFG_p^p over a list. In approx mode one grid is built up front
/// from the whole list and shared by every pair. The upper triangle is split
/// across `threads` workers (0 = hardware concurrency); the result does not
/// depend on the thread count.
Matrix sfg_power_matrix(std::span<const PersistenceMeasure> measures, const SfgConfig& cfg,
                        unsigned threads = 0, SampleGrid* grid_used = nullptr);

// Same with the 1/p root applied entrywise.
Matrix sfg_distance_matrix(std::span<const PersistenceMeasure> measures, const SfgConfig& cfg,
                           unsigned threads = 0);

}  // namespace sfg
