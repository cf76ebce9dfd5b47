#include "sfg/fg1d.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "sfg/error.hpp"
#include "units.hpp"

namespace sfg {
namespace {

void check_order(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw InvalidParameter("p must be a finite real >= 1");
}

inline double power(double x, double p) {
  if (p == 1.0) return x;
  if (p == 2.0) return x * x;
  return std::pow(x, p);
}

std::vector<Atom> sorted_desc(std::span<const Atom> atoms) {
  std::vector<Atom> out(atoms.begin(), atoms.end());
  std::sort(out.begin(), out.end(), [](const Atom& l, const Atom& r) { return l.value > r.value; });
  return out;
}

}  // namespace

Projected1DMeasure::Projected1DMeasure(std::vector<Atom> atoms) {
  atoms_.reserve(atoms.size());
  for (const auto& a : atoms) {
    if (!std::isfinite(a.value) || a.value < 0.0) {
      throw ValidationError("atom values must be finite and non-negative");
    }
    if (!std::isfinite(a.mass) || !(a.mass > 0.0)) {
      throw ValidationError("atom masses must be finite and strictly positive");
    }
    if (a.value > 0.0) atoms_.push_back(a);
  }
}

double Projected1DMeasure::total_mass() const noexcept {
  double total = 0.0;
  for (const auto& a : atoms_) total += a.mass;
  return total;
}

SurvivalFunction::SurvivalFunction(const Projected1DMeasure& m) {
  const auto atoms = sorted_desc(m.atoms());
  double cumulative = 0.0;
  for (const auto& a : atoms) {
    cumulative += a.mass;
    if (!breakpoints_.empty() && breakpoints_.back().value == a.value) {
      breakpoints_.back().cumulative_mass = cumulative;
    } else {
      breakpoints_.push_back({a.value, cumulative});
    }
  }
}

double SurvivalFunction::operator()(double x) const {
  double mass = 0.0;
  for (const auto& bp : breakpoints_) {
    if (bp.value < x) break;
    mass = bp.cumulative_mass;
  }
  return mass;
}

double SurvivalFunction::inverse(double s) const {
  if (s <= 0.0) return breakpoints_.empty() ? 0.0 : breakpoints_.front().value;
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), s,
                             [](const Breakpoint& bp, double v) { return bp.cumulative_mass < v; });
  return it == breakpoints_.end() ? 0.0 : it->value;
}

double SurvivalFunction::total_mass() const noexcept {
  return breakpoints_.empty() ? 0.0 : breakpoints_.back().cumulative_mass;
}

double fg1d_sorted(std::span<const Atom> a_desc, std::span<const Atom> b_desc, double p) {
  // Two-pointer walk over both quantile functions; each step consumes the
  // smaller remaining block, over which both inverses are constant.
  double total = 0.0;
  std::size_t i = 0, j = 0;
  double rem_a = i < a_desc.size() ? a_desc[0].mass : 0.0;
  double rem_b = j < b_desc.size() ? b_desc[0].mass : 0.0;
  while (i < a_desc.size() && j < b_desc.size()) {
    const double step = std::min(rem_a, rem_b);
    total += step * power(std::abs(a_desc[i].value - b_desc[j].value), p);
    rem_a -= step;
    rem_b -= step;
    if (rem_a <= 0.0 && ++i < a_desc.size()) rem_a = a_desc[i].mass;
    if (rem_b <= 0.0 && ++j < b_desc.size()) rem_b = b_desc[j].mass;
  }
  for (; i < a_desc.size(); ++i) {
    total += rem_a * power(a_desc[i].value, p);
    if (i + 1 < a_desc.size()) rem_a = a_desc[i + 1].mass;
  }
  for (; j < b_desc.size(); ++j) {
    total += rem_b * power(b_desc[j].value, p);
    if (j + 1 < b_desc.size()) rem_b = b_desc[j + 1].mass;
  }
  return total;
}

double fg1d(const Projected1DMeasure& a, const Projected1DMeasure& b, double p) {
  check_order(p);
  const auto sa = sorted_desc(a.atoms());
  const auto sb = sorted_desc(b.atoms());
  return fg1d_sorted(sa, sb, p);
}

BruteForce1D fg1d_bruteforce(const Projected1DMeasure& a, const Projected1DMeasure& b, double p) {
  check_order(p);
  std::vector<double> masses;
  for (const auto& x : a.atoms()) masses.push_back(x.mass);
  for (const auto& y : b.atoms()) masses.push_back(y.mass);
  const auto split = detail::split_into_units(masses);
  if (!split) throw Refusal("fg1d_bruteforce: masses are not multiples of a common unit");

  std::vector<double> xs, ys;
  const std::size_t na = a.atoms().size();
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const double v = i < na ? a.atoms()[i].value : b.atoms()[i - na].value;
    auto& side = i < na ? xs : ys;
    side.insert(side.end(), split->counts[i], v);
  }
  constexpr std::size_t kMaxUnits = 8;
  if (xs.size() > kMaxUnits || ys.size() > kMaxUnits) {
    throw Refusal("fg1d_bruteforce: " + std::to_string(xs.size()) + "+" +
                  std::to_string(ys.size()) + " unit atoms exceeds 8 per side");
  }

  // match[i] = index into ys, or -1 for the boundary.
  std::vector<int> match(xs.size(), -1);
  std::vector<bool> used(ys.size(), false);

  auto evaluate = [&] {
    double cost = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      cost += match[i] < 0 ? power(xs[i], p) : power(std::abs(xs[i] - ys[match[i]]), p);
    }
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (!used[j]) cost += power(ys[j], p);
    }
    return cost;
  };
  auto is_monotone = [&] {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (match[i] < 0) continue;
      for (std::size_t k = 0; k < xs.size(); ++k) {
        if (match[k] < 0 || !(xs[i] < xs[k])) continue;
        if (ys[match[i]] > ys[match[k]]) return false;
      }
    }
    return true;
  };

  double best = std::numeric_limits<double>::infinity();
  bool monotone = false;
  bool second_pass = false;
  std::function<void(std::size_t)> recurse = [&](std::size_t i) {
    if (i == xs.size()) {
      const double cost = evaluate();
      if (!second_pass) {
        best = std::min(best, cost);
      } else if (!monotone && cost <= best + 1e-12 * std::max(1.0, best)) {
        monotone = is_monotone();
      }
      return;
    }
    match[i] = -1;
    recurse(i + 1);
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      match[i] = static_cast<int>(j);
      recurse(i + 1);
      used[j] = false;
      match[i] = -1;
    }
  };
  recurse(0);
  second_pass = true;
  recurse(0);
  return {split->unit * best, monotone};
}

}  // namespace sfg
