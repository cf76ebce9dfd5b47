#include "sfg/synth.hpp"

#include <cmath>

#include "sfg/error.hpp"

namespace sfg {
namespace {

double wrap_unit(double x) {
  double r = x - std::floor(x);
  return r >= 1.0 ? 0.0 : r;
}

}  // namespace

PersistenceMeasure gen_uniform(std::size_t n, Rng& rng, Box box) {
  if (!(box.lo < box.hi)) throw InvalidParameter("box requires lo < hi");
  std::vector<WeightedPoint> points;
  points.reserve(n);
  while (points.size() < n) {
    const double birth = rng.uniform(box.lo, box.hi);
    const double death = rng.uniform(box.lo, box.hi);
    if (birth < death) points.push_back({{birth, death}, 1.0});
  }
  return PersistenceMeasure(std::move(points));
}

PersistenceMeasure gen_uniform(std::size_t n, std::uint64_t seed, Box box) {
  Rng rng(seed);
  return gen_uniform(n, rng, box);
}

std::pair<PersistenceMeasure, PersistenceMeasure> gen_dirac_family(double n) {
  if (!(n >= 2.0) || !std::isfinite(n)) throw Refusal("dirac family needs n >= 2");
  const double eps = 1.0 / std::log(n);
  return {PersistenceMeasure({{{-n, n}, 1.0}}), PersistenceMeasure({{{-n - eps, n + eps}, 1.0}})};
}

std::pair<PersistenceMeasure, PersistenceMeasure> gen_grid_family(int n, double p) {
  if (n < 1) throw InvalidParameter("grid family needs n >= 1");
  if (!(p >= 1.0)) throw InvalidParameter("p must be >= 1");
  const double h = kSqrt2 / n;
  const auto last = static_cast<long>(std::ceil(std::pow(static_cast<double>(n), p)));
  std::vector<WeightedPoint> mu, nu;
  for (long k = 0; k <= last; ++k) {
    const double kd = static_cast<double>(k);
    mu.push_back({{kd * h, (kd + 1.0) * h}, 1.0});
    nu.push_back({{(kd + 0.5) * h, (kd + 1.5) * h}, 1.0});
  }
  return {PersistenceMeasure(std::move(mu)), PersistenceMeasure(std::move(nu))};
}

std::vector<std::array<double, 2>> gen_orbit(const OrbitParams& params) {
  if (!(params.r >= 0.0) || !std::isfinite(params.r)) throw InvalidParameter("r must be >= 0");
  Rng rng(params.seed);
  double x = rng.uniform01();
  double y = rng.uniform01();
  std::vector<std::array<double, 2>> out;
  out.reserve(params.n_points);
  for (std::size_t i = 0; i < params.n_points; ++i) {
    out.push_back({x, y});
    x = wrap_unit(x + params.r * y * (1.0 - y));
    y = wrap_unit(y + params.r * x * (1.0 - x));
  }
  return out;
}

}  // namespace sfg
