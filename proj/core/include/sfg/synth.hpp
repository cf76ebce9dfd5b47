#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "sfg/measures.hpp"
#include "sfg/rng.hpp"

namespace sfg {

struct Box {
  double lo = 0.0;
  double hi = 1.0;
};

// n unit-mass points with birth and death drawn uniformly in [box.lo, box.hi);
// a draw with birth >= death is discarded and both coordinates redrawn.
PersistenceMeasure gen_uniform(std::size_t n, Rng& rng, Box box = {});
PersistenceMeasure gen_uniform(std::size_t n, std::uint64_t seed, Box box = {});

// mu_n = delta at (-n, n), nu_n = delta at (-n - 1/ln n, n + 1/ln n).
// FG_p between them is sqrt2 / ln n while SFG_p grows without bound for p > 1.
// Requires n >= 2 (Refusal otherwise).
std::pair<PersistenceMeasure, PersistenceMeasure> gen_dirac_family(double n);

// Staggered grids with step h = sqrt2 / n and ceil(n^p) + 1 unit points each:
// mu = {(k h, (k+1) h)}, nu = {((k+1/2) h, (k+3/2) h)}, k = 0..ceil(n^p).
// Requires n >= 1.
std::pair<PersistenceMeasure, PersistenceMeasure> gen_grid_family(int n, double p);

struct OrbitParams {
  double r = 1.0;
  std::size_t n_points = 1000;
  std::uint64_t seed = 0;
};

// Linked twist map orbit from a uniform start (x0, y0) in [0,1)^2:
//   x' = x + r y (1 - y)   mod 1
//   y' = y + r x' (1 - x') mod 1   (uses the updated x)
// Returns n_points points starting with (x0, y0).
std::vector<std::array<double, 2>> gen_orbit(const OrbitParams& params);

}  // namespace sfg
