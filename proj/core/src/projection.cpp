#include "sfg/projection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sfg/error.hpp"

namespace sfg {

std::string_view to_string(Projection v) noexcept {
  return v == Projection::orthogonal ? "orth" : "cont";
}

Projection parse_projection(std::string_view name) {
  if (name == "orth" || name == "orthogonal") return Projection::orthogonal;
  if (name == "cont" || name == "continuous") return Projection::continuous;
  throw InvalidParameter("unknown projection variant `" + std::string(name) + "`");
}

double project_orth(const PlanePoint& z, double t) noexcept {
  return (z.birth <= t && t <= z.death) ? diagonal_distance(z) : 0.0;
}

double project_cont(const PlanePoint& z, double t) noexcept {
  return kSqrt2 * std::max(0.0, std::min(t - z.birth, z.death - t));
}

double project(Projection variant, const PlanePoint& z, double t) noexcept {
  return variant == Projection::orthogonal ? project_orth(z, t) : project_cont(z, t);
}

Projected1DMeasure project_measure(const PersistenceMeasure& m, double t, Projection variant) {
  std::vector<Atom> atoms;
  for (const auto& wp : m.points()) {
    const double v = project(variant, wp.point, t);
    if (v > 0.0) atoms.push_back({v, wp.mass / diagonal_distance(wp.point)});
  }
  return Projected1DMeasure(std::move(atoms));
}

namespace {

struct RawEvent {
  double time;
  bool has_change;
  PointChange change;
};

double coordinate_scale(const PersistenceMeasure& a, const PersistenceMeasure& b) {
  double scale = 0.0;
  for (const auto* m : {&a, &b}) {
    for (const auto& wp : m->points()) {
      scale = std::max({scale, std::abs(wp.point.birth), std::abs(wp.point.death)});
    }
  }
  return scale > 0.0 ? scale : 1.0;
}

}  // namespace

EventList events(const PersistenceMeasure& a, const PersistenceMeasure& b, Projection variant) {
  std::vector<RawEvent> raw;
  const bool tents = variant == Projection::continuous;
  raw.reserve((a.size() + b.size()) * (tents ? 3 : 2));

  for (Side side : {Side::first, Side::second}) {
    const auto& m = side == Side::first ? a : b;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const auto& z = m[i].point;
      raw.push_back({z.birth, true, {side, i, ChangeKind::enter}});
      raw.push_back({z.death, true, {side, i, ChangeKind::leave}});
      if (tents) raw.push_back({0.5 * (z.birth + z.death), true, {side, i, ChangeKind::peak}});
    }
  }

  if (tents) {
    // Rising pieces are parallel to each other, as are falling pieces, so two
    // tents can only cross where one rises and the other falls:
    // t - x1 = y2 - t, i.e. t = (x1 + y2) / 2.
    std::vector<PlanePoint> all;
    all.reserve(a.size() + b.size());
    for (const auto& wp : a.points()) all.push_back(wp.point);
    for (const auto& wp : b.points()) all.push_back(wp.point);
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& x = all[i];
      const double x_mid = 0.5 * (x.birth + x.death);
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (i == j) continue;
        const auto& y = all[j];
        const double y_mid = 0.5 * (y.birth + y.death);
        const double t = 0.5 * (x.birth + y.death);
        if (t > std::max(x.birth, y_mid) && t < std::min(x_mid, y.death)) {
          raw.push_back({t, false, {}});
        }
      }
    }
  }

  std::sort(raw.begin(), raw.end(), [](const RawEvent& l, const RawEvent& r) { return l.time < r.time; });

  const double tol = 1e-12 * coordinate_scale(a, b);
  EventList out;
  for (const auto& r : raw) {
    if (out.empty() || r.time - out.back().time > tol) out.push_back({r.time, {}});
    if (r.has_change) out.back().changes.push_back(r.change);
  }
  return out;
}

}  // namespace sfg
