#include "sfg/sfg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sfg/error.hpp"
#include "sfg/fg1d.hpp"
#include "sfg/rng.hpp"

namespace sfg {

std::string_view to_string(Mode m) noexcept { return m == Mode::exact ? "exact" : "approx"; }

std::string_view to_string(Sampling s) noexcept {
  switch (s) {
    case Sampling::uniform_midpoint: return "uniform-midpoint";
    case Sampling::uniform_random: return "uniform-random";
    case Sampling::kde: return "kde";
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  if (name == "exact") return Mode::exact;
  if (name == "approx") return Mode::approx;
  throw InvalidParameter("unknown mode `" + std::string(name) + "`");
}

Sampling parse_sampling(std::string_view name) {
  if (name == "uniform-midpoint" || name == "uniform" || name == "midpoint") {
    return Sampling::uniform_midpoint;
  }
  if (name == "uniform-random" || name == "random") return Sampling::uniform_random;
  if (name == "kde") return Sampling::kde;
  throw InvalidParameter("unknown sampling `" + std::string(name) + "`");
}

void SfgConfig::validate() const {
  if (!(p >= 1.0) || !std::isfinite(p)) throw InvalidParameter("p must be a finite real >= 1");
  if (mode == Mode::approx && samples < 1) throw InvalidParameter("samples must be >= 1");
  if (range && !(range->min < range->max)) throw InvalidParameter("range requires t_min < t_max");
}

namespace {

void check_order(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw InvalidParameter("p must be a finite real >= 1");
}

inline double power(double x, double p) {
  if (p == 1.0) return x;
  if (p == 2.0) return x * x;
  return std::pow(x, p);
}

double prefactor(Projection variant, double p) {
  const double base = 1.0 / kSqrt2;
  return variant == Projection::orthogonal ? base : (p + 1.0) * base;
}

double root(double power_value, double p) {
  return power_value <= 0.0 ? 0.0 : std::pow(power_value, 1.0 / p);
}

// Atoms of one side of the orthogonal sweep, kept sorted by value descending.
class ActiveSet {
 public:
  void insert(std::size_t id, Atom atom) {
    auto pos = std::upper_bound(atoms_.begin(), atoms_.end(), atom.value,
                                [](double v, const Atom& a) { return v > a.value; });
    const auto offset = pos - atoms_.begin();
    atoms_.insert(pos, atom);
    ids_.insert(ids_.begin() + offset, id);
  }

  void erase(std::size_t id) {
    const auto it = std::find(ids_.begin(), ids_.end(), id);
    if (it == ids_.end()) return;
    const auto offset = it - ids_.begin();
    ids_.erase(it);
    atoms_.erase(atoms_.begin() + offset);
  }

  std::span<const Atom> atoms() const noexcept { return atoms_; }

 private:
  std::vector<Atom> atoms_;
  std::vector<std::size_t> ids_;
};

double sweep_orthogonal(const PersistenceMeasure& a, const PersistenceMeasure& b, double p) {
  const auto evs = events(a, b, Projection::orthogonal);
  ActiveSet active[2];
  const PersistenceMeasure* sides[2] = {&a, &b};
  double total = 0.0;
  for (std::size_t e = 0; e < evs.size(); ++e) {
    // Enter before leave so a point collapsed into a single event ends inactive.
    for (const auto& c : evs[e].changes) {
      if (c.kind != ChangeKind::enter) continue;
      const int s = c.side == Side::first ? 0 : 1;
      const auto& wp = (*sides[s])[c.index];
      const double d = diagonal_distance(wp.point);
      active[s].insert(c.index, {d, wp.mass / d});
    }
    for (const auto& c : evs[e].changes) {
      if (c.kind == ChangeKind::leave) active[c.side == Side::first ? 0 : 1].erase(c.index);
    }
    if (e + 1 < evs.size()) {
      const double width = evs[e + 1].time - evs[e].time;
      total += width * fg1d_sorted(active[0].atoms(), active[1].atoms(), p);
    }
  }
  return total;
}

// Tent value restricted to one linear piece: sqrt2 * (t - z1) while rising,
// sqrt2 * (z2 - t) while falling.
struct TentPiece {
  double value_mid;  // value at the interval midpoint, used for ordering
  double mass;
  double birth;
  double death;
  bool rising;

  double at(double t) const noexcept {
    return rising ? kSqrt2 * (t - birth) : kSqrt2 * (death - t);
  }
};

// int over an interval of length `width` of |u|^p where u is affine with end
// values u0 and u1.
double affine_abs_power_integral(double u0, double u1, double width, double p) {
  const double a = std::abs(u0);
  const double b = std::abs(u1);
  if (a == 0.0 && b == 0.0) return 0.0;
  if ((u0 < 0.0 && u1 > 0.0) || (u0 > 0.0 && u1 < 0.0)) {
    // Split at the root; each side integrates to length * |u_end|^p / (p + 1).
    return width * (power(a, p + 1.0) + power(b, p + 1.0)) / ((a + b) * (p + 1.0));
  }
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  if (hi - lo <= 1e-6 * hi) return width * 0.5 * (power(a, p) + power(b, p));
  return width * (power(hi, p + 1.0) - power(lo, p + 1.0)) / ((p + 1.0) * (hi - lo));
}

std::vector<TentPiece> active_tents(const PersistenceMeasure& m, double t_mid) {
  std::vector<TentPiece> out;
  for (const auto& wp : m.points()) {
    const auto& z = wp.point;
    if (!(z.birth < t_mid && t_mid < z.death)) continue;
    const bool rising = t_mid < 0.5 * (z.birth + z.death);
    TentPiece piece{0.0, wp.mass / diagonal_distance(z), z.birth, z.death, rising};
    piece.value_mid = piece.at(t_mid);
    out.push_back(piece);
  }
  std::sort(out.begin(), out.end(),
            [](const TentPiece& l, const TentPiece& r) { return l.value_mid > r.value_mid; });
  return out;
}

double sweep_continuous(const PersistenceMeasure& a, const PersistenceMeasure& b, double p) {
  const auto evs = events(a, b, Projection::continuous);
  double total = 0.0;
  for (std::size_t e = 0; e + 1 < evs.size(); ++e) {
    const double lo = evs[e].time;
    const double hi = evs[e + 1].time;
    const double width = hi - lo;
    if (!(width > 0.0)) continue;
    const double mid = 0.5 * (lo + hi);
    // No crossing, peak, entry or exit lies strictly inside (lo, hi), so the
    // quantile order at the midpoint holds on the whole interval and each
    // matched difference is affine in t.
    const auto ta = active_tents(a, mid);
    const auto tb = active_tents(b, mid);

    std::size_t i = 0, j = 0;
    double rem_a = ta.empty() ? 0.0 : ta[0].mass;
    double rem_b = tb.empty() ? 0.0 : tb[0].mass;
    while (i < ta.size() || j < tb.size()) {
      double step;
      double u0, u1;
      if (i < ta.size() && j < tb.size()) {
        step = std::min(rem_a, rem_b);
        u0 = ta[i].at(lo) - tb[j].at(lo);
        u1 = ta[i].at(hi) - tb[j].at(hi);
      } else if (i < ta.size()) {
        step = rem_a;
        u0 = ta[i].at(lo);
        u1 = ta[i].at(hi);
      } else {
        step = rem_b;
        u0 = tb[j].at(lo);
        u1 = tb[j].at(hi);
      }
      total += step * affine_abs_power_integral(u0, u1, width, p);
      if (i < ta.size()) rem_a -= step;
      if (j < tb.size()) rem_b -= step;
      if (i < ta.size() && rem_a <= 0.0 && ++i < ta.size()) rem_a = ta[i].mass;
      if (j < tb.size() && rem_b <= 0.0 && ++j < tb.size()) rem_b = tb[j].mass;
    }
  }
  return total;
}

}  // namespace

std::optional<TimeRange> support_range(std::span<const PersistenceMeasure> measures) {
  std::optional<TimeRange> range;
  for (const auto& m : measures) {
    for (const auto& wp : m.points()) {
      if (!range) {
        range = TimeRange{wp.point.birth, wp.point.death};
      } else {
        range->min = std::min(range->min, wp.point.birth);
        range->max = std::max(range->max, wp.point.death);
      }
    }
  }
  return range;
}

SampleGrid make_sample_grid(std::span<const PersistenceMeasure> measures, const SfgConfig& cfg) {
  cfg.validate();
  SampleGrid grid;
  const auto range = cfg.range ? cfg.range : support_range(measures);
  if (!range) return grid;
  const auto k = static_cast<std::size_t>(cfg.samples);
  const double span_len = range->max - range->min;
  grid.times.reserve(k);
  grid.weights.reserve(k);

  switch (cfg.sampling) {
    case Sampling::uniform_midpoint: {
      const double h = span_len / static_cast<double>(k);
      for (std::size_t i = 0; i < k; ++i) {
        grid.times.push_back(range->min + (static_cast<double>(i) + 0.5) * h);
        grid.weights.push_back(h);
      }
      break;
    }
    case Sampling::uniform_random: {
      Rng rng(cfg.seed);
      for (std::size_t i = 0; i < k; ++i) grid.times.push_back(rng.uniform(range->min, range->max));
      std::sort(grid.times.begin(), grid.times.end());
      double previous = range->min;
      for (double t : grid.times) {
        grid.weights.push_back(t - previous);
        previous = t;
      }
      break;
    }
    case Sampling::kde: {
      std::vector<double> centers;
      for (const auto& m : measures) {
        for (const auto& wp : m.points()) {
          centers.push_back(wp.point.birth);
          centers.push_back(wp.point.death);
          if (cfg.variant == Projection::continuous) {
            centers.push_back(0.5 * (wp.point.birth + wp.point.death));
          }
        }
      }
      if (centers.empty()) {
        // Only an override range is known: fall back to its endpoints.
        centers = {range->min, range->max};
      }
      const auto n = static_cast<double>(centers.size());
      double mean = 0.0;
      for (double c : centers) mean += c;
      mean /= n;
      double var = 0.0;
      for (double c : centers) var += (c - mean) * (c - mean);
      var /= std::max(1.0, n - 1.0);
      // Scott's rule in one dimension.
      double bandwidth = std::sqrt(var) * std::pow(n, -0.2);
      if (!(bandwidth > 0.0)) bandwidth = span_len * std::pow(n, -0.2);

      // Draws from the KDE restricted to the range (by rejection), then the
      // same sorted-gap accumulation as uniform-random. Sparse draws in the
      // tails make this scheme biased low.
      Rng rng(cfg.seed);
      const std::size_t max_attempts = 10000 * k;
      std::size_t attempts = 0;
      while (grid.times.size() < k && attempts++ < max_attempts) {
        const double t = centers[rng.below(centers.size())] + bandwidth * rng.normal();
        if (t >= range->min && t <= range->max) grid.times.push_back(t);
      }
      // An override range far from every event: top up uniformly.
      while (grid.times.size() < k) grid.times.push_back(rng.uniform(range->min, range->max));
      std::sort(grid.times.begin(), grid.times.end());
      double previous = range->min;
      for (double t : grid.times) {
        grid.weights.push_back(t - previous);
        previous = t;
      }
      break;
    }
  }
  return grid;
}

double slice_cost(const PersistenceMeasure& a, const PersistenceMeasure& b, double t, double p,
                  Projection variant) {
  return fg1d(project_measure(a, t, variant), project_measure(b, t, variant), p);
}

double sliced_integral_exact(const PersistenceMeasure& a, const PersistenceMeasure& b, double p,
                             Projection variant) {
  check_order(p);
  return variant == Projection::orthogonal ? sweep_orthogonal(a, b, p) : sweep_continuous(a, b, p);
}

double sfg_exact_power(const PersistenceMeasure& a, const PersistenceMeasure& b, double p,
                       Projection variant) {
  return prefactor(variant, p) * sliced_integral_exact(a, b, p, variant);
}

double sfg_exact(const PersistenceMeasure& a, const PersistenceMeasure& b, double p,
                 Projection variant) {
  return root(sfg_exact_power(a, b, p, variant), p);
}

double sfg_approx_power(const PersistenceMeasure& a, const PersistenceMeasure& b,
                        const SfgConfig& cfg, const SampleGrid& grid) {
  cfg.validate();
  double total = 0.0;
  for (std::size_t i = 0; i < grid.times.size(); ++i) {
    if (grid.weights[i] == 0.0) continue;
    total += grid.weights[i] * slice_cost(a, b, grid.times[i], cfg.p, cfg.variant);
  }
  return prefactor(cfg.variant, cfg.p) * total;
}

double sfg_approx(const PersistenceMeasure& a, const PersistenceMeasure& b, const SfgConfig& cfg) {
  const PersistenceMeasure pair[2] = {a, b};
  const auto grid = make_sample_grid(pair, cfg);
  return root(sfg_approx_power(a, b, cfg, grid), cfg.p);
}

double sfg_power(const PersistenceMeasure& a, const PersistenceMeasure& b, const SfgConfig& cfg) {
  cfg.validate();
  if (cfg.mode == Mode::exact) return sfg_exact_power(a, b, cfg.p, cfg.variant);
  const PersistenceMeasure pair[2] = {a, b};
  return sfg_approx_power(a, b, cfg, make_sample_grid(pair, cfg));
}

double sfg(const PersistenceMeasure& a, const PersistenceMeasure& b, const SfgConfig& cfg) {
  return root(sfg_power(a, b, cfg), cfg.p);
}

Matrix sfg_power_matrix(std::span<const PersistenceMeasure> measures, const SfgConfig& cfg,
                        unsigned threads, SampleGrid* grid_used) {
  cfg.validate();
  const std::size_t n = measures.size();
  SampleGrid grid;
  if (cfg.mode == Mode::approx) grid = make_sample_grid(measures, cfg);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }

  Matrix out(n);
  parallel_for(pairs.size(), threads, [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    const double v = cfg.mode == Mode::exact
                         ? sfg_exact_power(measures[i], measures[j], cfg.p, cfg.variant)
                         : sfg_approx_power(measures[i], measures[j], cfg, grid);
    out(i, j) = v;
    out(j, i) = v;
  });
  if (grid_used) *grid_used = std::move(grid);
  return out;
}

Matrix sfg_distance_matrix(std::span<const PersistenceMeasure> measures, const SfgConfig& cfg,
                           unsigned threads) {
  Matrix m = sfg_power_matrix(measures, cfg, threads);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) m(i, j) = root(m(i, j), cfg.p);
  }
  return m;
}

}  // namespace sfg
