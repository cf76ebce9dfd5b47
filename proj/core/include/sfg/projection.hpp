#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "sfg/fg1d.hpp"
#include "sfg/measures.hpp"

namespace sfg {

// How a point is carried onto the geodesic leaving the diagonal at (t, t).
enum class Projection {
  orthogonal,  // constant (z2 - z1)/sqrt2 on the window [z1, z2]
  continuous,  // tent sqrt2 * min(t - z1, z2 - t) on the same window
};

std::string_view to_string(Projection v) noexcept;
Projection parse_projection(std::string_view name);  // "orth" | "cont"

// Distance from the diagonal of the projection of z on the geodesic with
// parameter t. Zero means the point collapses onto the diagonal. The window
// is closed: t == z1 and t == z2 are active.
double project_orth(const PlanePoint& z, double t) noexcept;
double project_cont(const PlanePoint& z, double t) noexcept;
double project(Projection variant, const PlanePoint& z, double t) noexcept;

// Push-forward of the normalized measure (mass_i / d(x_i, diagonal)) onto
// the geodesic with parameter t. Collapsed points are dropped.
Projected1DMeasure project_measure(const PersistenceMeasure& m, double t, Projection variant);

enum class Side { first, second };

enum class ChangeKind {
  enter,  // t reaches z1
  peak,   // t reaches the midpoint; the tent switches from rising to falling
  leave,  // t reaches z2
};

struct PointChange {
  Side side;
  std::size_t index;
  ChangeKind kind;
};

/// One sweep event. Tent crossings carry no point changes: only the relative
/// order of projected values changes there.
struct Event {
  double time;
  std::vector<PointChange> changes;
};

using EventList = std::vector<Event>;

/// Event times of the sweep over t, sorted strictly ascending.
///
/// Orthogonal: every birth and death of both measures. Continuous: also every
/// midpoint and every time where the tents of two points cross (at most two
/// per pair, each solving a linear equation in the input coordinates). Times
/// closer than 1e-12 * (coordinate scale) are merged into a single event.
EventList events(const PersistenceMeasure& a, const PersistenceMeasure& b, Projection variant);

}  // namespace sfg
