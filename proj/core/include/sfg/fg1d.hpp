#pragma once

#include <span>
#include <vector>

namespace sfg {

// Atom of a measure on the open half-line; `value` is the distance to the
// boundary point 0.
struct Atom {
  double value = 0.0;
  double mass = 0.0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite weighted measure on (0, +inf).
///
/// Atoms at value 0 are dropped on construction: the boundary absorbs mass
/// at no cost, so they never contribute. Remaining atoms must have finite
/// positive value and mass.
class Projected1DMeasure {
 public:
  Projected1DMeasure() = default;
  explicit Projected1DMeasure(std::vector<Atom> atoms);

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  bool empty() const noexcept { return atoms_.empty(); }
  double total_mass() const noexcept;

 private:
  std::vector<Atom> atoms_;
};

/// Right-tail mass function F(x) = mass([x, inf)) and its pseudo-inverse.
///
/// Stored as breakpoints sorted by value descending with strictly increasing
/// cumulative masses c_k; equal values are merged. The inverse is the step
/// function F^-1(s) = value_k on (c_{k-1}, c_k] and 0 for s > total mass.
class SurvivalFunction {
 public:
  struct Breakpoint {
    double value;
    double cumulative_mass;
  };

  explicit SurvivalFunction(const Projected1DMeasure& m);

  double operator()(double x) const;
  double inverse(double s) const;
  double total_mass() const noexcept;
  std::span<const Breakpoint> breakpoints() const noexcept { return breakpoints_; }

 private:
  std::vector<Breakpoint> breakpoints_;
};

// Returns FG_p^p(a, b) = int_0^inf |F_a^-1(s) - F_b^-1(s)|^p ds (the p-th
// power, not the root). Exact: the integrand is piecewise constant.
// Throws InvalidParameter for p < 1.
double fg1d(const Projected1DMeasure& a, const Projected1DMeasure& b, double p);

// Same quantity for atom lists already sorted by value descending. Equal
// values need not be merged. No validation; used on the sweep hot path.
double fg1d_sorted(std::span<const Atom> a_desc, std::span<const Atom> b_desc, double p);

struct BruteForce1D {
  double cost = 0.0;
  // Whether some optimal matching pairs off-boundary atoms monotonically
  // (x1 < x2 implies y1 <= y2).
  bool monotone_optimum = false;
};

// Exhaustive minimum over all boundary-augmented bijections of unit atoms.
// Masses must be integer multiples of a common unit; at most 8 units per side.
// Throws Refusal otherwise.
BruteForce1D fg1d_bruteforce(const Projected1DMeasure& a, const Projected1DMeasure& b, double p);

}  // namespace sfg
