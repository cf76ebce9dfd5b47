#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sfg/measures.hpp"

namespace sfg {

/// Optimal partial transport plan between two finite measures where the
/// diagonal supplies or absorbs any amount of mass.
struct Matching {
  struct Pair {
    std::optional<std::size_t> source;  // index in the first measure, nullopt = diagonal
    std::optional<std::size_t> target;  // index in the second measure, nullopt = diagonal
    double mass;
  };

  std::vector<Pair> pairs;
  double total_cost_p = 0.0;  // sum of mass * cost^p

  // sum of mass * ||x - y|| over pairs between two off-diagonal points.
  double off_diagonal_displacement(const PersistenceMeasure& a, const PersistenceMeasure& b) const;
};

struct Fg2dResult {
  double distance;
  Matching matching;
};

// Largest unit-atom expansion (both sides combined) fg2d accepts.
inline constexpr std::size_t kMaxExpandedAtoms = 4096;

/// Exact FG_p between finite measures.
///
/// Masses are expanded into atoms of a common unit and the
/// (n + m) x (n + m) diagonal-augmented assignment problem is solved with a
/// shortest augmenting path method: point-point cost ||x - y||^p,
/// point-diagonal cost d(x, diagonal)^p, diagonal-diagonal cost 0. Ties are
/// broken towards the lowest column index.
///
/// Throws InvalidParameter for p < 1 and Refusal when the masses have no
/// common unit or the expansion exceeds kMaxExpandedAtoms.
Fg2dResult fg2d(const PersistenceMeasure& a, const PersistenceMeasure& b, double p);

// Exhaustive minimum over all diagonal-augmented bijections; at most 4 unit
// atoms per side, otherwise Refusal. Returns the distance (1/p-th root).
double fg2d_bruteforce(const PersistenceMeasure& a, const PersistenceMeasure& b, double p);

}  // namespace sfg
