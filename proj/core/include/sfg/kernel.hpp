#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sfg/matrix.hpp"
#include "sfg/measures.hpp"
#include "sfg/sfg.hpp"

namespace sfg {

/// Symmetric matrix of pairwise values over a list of measures, with the
/// settings that produced it.
///
/// Distance-power matrices hold SFG_p^p and have a zero diagonal; kernel
/// matrices hold exp(-SFG_p^p / sigma^2) and have a unit diagonal.
struct GramMatrix {
  Matrix values;
  SfgConfig config;
  SampleGrid grid;  // empty in exact mode
  std::optional<double> sigma;  // set for kernel matrices

  bool is_kernel() const noexcept { return sigma.has_value(); }
};

// exp(-SFG_p^p(a, b) / sigma^2). Requires 1 <= p <= 2 and sigma > 0
// (InvalidParameter otherwise).
double sfg_kernel(const PersistenceMeasure& a, const PersistenceMeasure& b, double sigma,
                  const SfgConfig& cfg);

// SFG_p^p over the list (shared grid in approx mode).
GramMatrix distance_power_gram(std::span<const PersistenceMeasure> measures, const SfgConfig& cfg,
                               unsigned threads = 0);

// Entrywise kernel transform of a distance-power matrix.
GramMatrix kernelize(const GramMatrix& distances, double sigma);

// Kernel Gram matrix; same preconditions as sfg_kernel.
GramMatrix gram(std::span<const PersistenceMeasure> measures, double sigma, const SfgConfig& cfg,
                unsigned threads = 0);

// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi
// rotations run until the off-diagonal Frobenius norm is <= 1e-12 * ||A||_F.
// Throws ValidationError if |a_ij - a_ji| > 1e-9 * max(1, max |a_ij|).
std::vector<double> symmetric_eigenvalues(const Matrix& a);

// (smallest, largest) eigenvalue.
std::pair<double, double> eigcheck(const Matrix& a);
inline std::pair<double, double> eigcheck(const GramMatrix& g) { return eigcheck(g.values); }

/// Candidate bandwidths from a distance-power matrix: the 10%, 50% and 90%
/// quantiles of the strict upper triangle (linear interpolation) times
/// {0.01, 0.1, 1, 10, 100}, each mapped to sigma = sqrt(value) so that
/// SFG^p / sigma^2 is of order one at the unscaled quantile. Sorted ascending
/// with duplicates and non-positive values removed. Refusal when n < 2.
std::vector<double> suggest_sigmas(const GramMatrix& distances);

// Linear-interpolation quantile (q in [0, 1]) of unsorted values.
double quantile(std::vector<double> values, double q);

}  // namespace sfg
