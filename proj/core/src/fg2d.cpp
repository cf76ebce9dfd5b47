#include "sfg/fg2d.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
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

double euclidean(const PlanePoint& x, const PlanePoint& y) {
  return std::hypot(x.birth - y.birth, x.death - y.death);
}

struct UnitAtom {
  PlanePoint point;
  std::size_t source;
};

struct Expansion {
  double unit = 1.0;
  std::vector<UnitAtom> first;
  std::vector<UnitAtom> second;
};

Expansion expand(const PersistenceMeasure& a, const PersistenceMeasure& b, std::size_t limit,
                 const char* who) {
  std::vector<double> masses;
  masses.reserve(a.size() + b.size());
  for (const auto& wp : a.points()) masses.push_back(wp.mass);
  for (const auto& wp : b.points()) masses.push_back(wp.mass);
  const auto split = detail::split_into_units(masses);
  if (!split) {
    throw Refusal(std::string(who) + ": masses are not integer multiples of a common unit");
  }
  if (split->total > limit) {
    throw Refusal(std::string(who) + ": expansion to " + std::to_string(split->total) +
                  " unit atoms exceeds the limit of " + std::to_string(limit));
  }
  Expansion out;
  out.unit = split->unit;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const bool first = i < a.size();
    const std::size_t index = first ? i : i - a.size();
    const auto& z = first ? a[index].point : b[index].point;
    auto& side = first ? out.first : out.second;
    for (std::size_t c = 0; c < split->counts[i]; ++c) side.push_back({z, index});
  }
  return out;
}

// Minimum-cost perfect assignment on an n x n matrix given by cost(i, j),
// shortest augmenting paths with row/column potentials. Returns the column
// assigned to each row.
std::vector<std::size_t> solve_assignment(std::size_t n,
                                          const std::function<double(std::size_t, std::size_t)>& cost) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based internally; column 0 is the virtual root of each search.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<std::size_t> row_of(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);

  for (std::size_t i = 1; i <= n; ++i) {
    row_of[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = row_of[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double reduced = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (reduced < minv[j]) {
          minv[j] = reduced;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> col_of_row(n, 0);
  for (std::size_t j = 1; j <= n; ++j) col_of_row[row_of[j] - 1] = j - 1;
  return col_of_row;
}

}  // namespace

double Matching::off_diagonal_displacement(const PersistenceMeasure& a,
                                           const PersistenceMeasure& b) const {
  double total = 0.0;
  for (const auto& pr : pairs) {
    if (pr.source && pr.target) total += pr.mass * euclidean(a[*pr.source].point, b[*pr.target].point);
  }
  return total;
}

Fg2dResult fg2d(const PersistenceMeasure& a, const PersistenceMeasure& b, double p) {
  check_order(p);
  const auto ex = expand(a, b, kMaxExpandedAtoms, "fg2d");
  const std::size_t na = ex.first.size();
  const std::size_t nb = ex.second.size();
  const std::size_t n = na + nb;

  // Rows: first-side atoms, then nb diagonal slots. Columns: second-side
  // atoms, then na diagonal slots.
  auto raw_cost = [&](std::size_t i, std::size_t j) -> double {
    if (i < na && j < nb) return power(euclidean(ex.first[i].point, ex.second[j].point), p);
    if (i < na) return power(diagonal_distance(ex.first[i].point), p);
    if (j < nb) return power(diagonal_distance(ex.second[j].point), p);
    return 0.0;
  };

  std::vector<std::size_t> assignment;
  if (n <= 2048) {
    std::vector<double> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) table[i * n + j] = raw_cost(i, j);
    }
    assignment = solve_assignment(n, [&](std::size_t i, std::size_t j) { return table[i * n + j]; });
  } else {
    assignment = solve_assignment(n, raw_cost);
  }

  std::map<std::pair<std::size_t, std::size_t>, double> moved;  // diagonal encoded as SIZE_MAX
  constexpr auto kDiag = std::numeric_limits<std::size_t>::max();
  std::vector<double> costs;
  costs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = assignment[i];
    if (i >= na && j >= nb) continue;
    costs.push_back(raw_cost(i, j));
    const std::size_t src = i < na ? ex.first[i].source : kDiag;
    const std::size_t dst = j < nb ? ex.second[j].source : kDiag;
    moved[{src, dst}] += ex.unit;
  }

  // Summing in sorted order makes the result independent of which measure
  // came first, so fg2d(a, b) == fg2d(b, a) bit for bit.
  std::sort(costs.begin(), costs.end());
  double total = 0.0;
  for (double c : costs) total += c;

  Fg2dResult result{0.0, {}};
  for (const auto& [key, mass] : moved) {
    Matching::Pair pr{std::nullopt, std::nullopt, mass};
    if (key.first != kDiag) pr.source = key.first;
    if (key.second != kDiag) pr.target = key.second;
    result.matching.pairs.push_back(pr);
  }
  result.matching.total_cost_p = ex.unit * total;
  result.distance = result.matching.total_cost_p > 0.0
                        ? std::pow(result.matching.total_cost_p, 1.0 / p)
                        : 0.0;
  return result;
}

double fg2d_bruteforce(const PersistenceMeasure& a, const PersistenceMeasure& b, double p) {
  check_order(p);
  const auto ex = expand(a, b, std::numeric_limits<std::size_t>::max(), "fg2d_bruteforce");
  if (ex.first.size() > 4 || ex.second.size() > 4) {
    throw Refusal("fg2d_bruteforce: at most 4 unit atoms per side (got " +
                  std::to_string(ex.first.size()) + " and " + std::to_string(ex.second.size()) + ")");
  }

  const auto& xs = ex.first;
  const auto& ys = ex.second;
  std::vector<bool> used(ys.size(), false);
  double best = std::numeric_limits<double>::infinity();

  // Each first-side atom goes to the diagonal or to an unused second-side
  // atom; leftover second-side atoms come from the diagonal.
  std::function<void(std::size_t, double)> recurse = [&](std::size_t i, double acc) {
    if (i == xs.size()) {
      for (std::size_t j = 0; j < ys.size(); ++j) {
        if (!used[j]) acc += power(diagonal_distance(ys[j].point), p);
      }
      best = std::min(best, acc);
      return;
    }
    recurse(i + 1, acc + power(diagonal_distance(xs[i].point), p));
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      recurse(i + 1, acc + power(euclidean(xs[i].point, ys[j].point), p));
      used[j] = false;
    }
  };
  recurse(0, 0.0);
  const double total = ex.unit * best;
  return total > 0.0 ? std::pow(total, 1.0 / p) : 0.0;
}

}  // namespace sfg
