#include "sfg/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "sfg/error.hpp"

namespace sfg {
namespace {

void check_kernel_params(double sigma, const SfgConfig& cfg) {
  if (!(cfg.p >= 1.0 && cfg.p <= 2.0)) {
    throw InvalidParameter("the SFG kernel is positive definite only for 1 <= p <= 2");
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidParameter("sigma must be > 0");
}

}  // namespace

double sfg_kernel(const PersistenceMeasure& a, const PersistenceMeasure& b, double sigma,
                  const SfgConfig& cfg) {
  check_kernel_params(sigma, cfg);
  return std::exp(-sfg_power(a, b, cfg) / (sigma * sigma));
}

GramMatrix distance_power_gram(std::span<const PersistenceMeasure> measures, const SfgConfig& cfg,
                               unsigned threads) {
  GramMatrix g;
  g.config = cfg;
  g.values = sfg_power_matrix(measures, cfg, threads, &g.grid);
  return g;
}

GramMatrix kernelize(const GramMatrix& distances, double sigma) {
  if (distances.is_kernel()) throw InvalidParameter("matrix is already a kernel matrix");
  check_kernel_params(sigma, distances.config);
  GramMatrix g = distances;
  g.sigma = sigma;
  const double inv = 1.0 / (sigma * sigma);
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    for (std::size_t j = 0; j < g.values.size(); ++j) {
      g.values(i, j) = i == j ? 1.0 : std::exp(-distances.values(i, j) * inv);
    }
  }
  return g;
}

GramMatrix gram(std::span<const PersistenceMeasure> measures, double sigma, const SfgConfig& cfg,
                unsigned threads) {
  check_kernel_params(sigma, cfg);
  return kernelize(distance_power_gram(measures, cfg, threads), sigma);
}

std::vector<double> symmetric_eigenvalues(const Matrix& input) {
  const std::size_t n = input.size();
  double max_abs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) max_abs = std::max(max_abs, std::abs(input(i, j)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(input(i, j) - input(j, i)) > 1e-9 * std::max(1.0, max_abs)) {
        throw ValidationError("matrix is not symmetric");
      }
    }
  }

  Matrix a = input;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (a(i, j) + a(j, i));
  }
  double frobenius = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) frobenius += a(i, j) * a(i, j);
  }
  frobenius = std::sqrt(frobenius);
  const double target = 1e-12 * frobenius;

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    }
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::pair<double, double> eigcheck(const Matrix& a) {
  if (a.size() == 0) throw InvalidParameter("eigcheck of an empty matrix");
  const auto eig = symmetric_eigenvalues(a);
  return {eig.front(), eig.back()};
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw InvalidParameter("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] + frac * (values[hi] - values[lo]);
}

std::vector<double> suggest_sigmas(const GramMatrix& distances) {
  if (distances.is_kernel()) throw InvalidParameter("suggest_sigmas expects a distance-power matrix");
  const std::size_t n = distances.values.size();
  if (n < 2) throw Refusal("suggest_sigmas needs at least two measures");

  std::vector<double> upper;
  upper.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) upper.push_back(distances.values(i, j));
  }

  std::vector<double> sigmas;
  for (double q : {0.1, 0.5, 0.9}) {
    const double base = quantile(upper, q);
    for (double factor : {0.01, 0.1, 1.0, 10.0, 100.0}) {
      const double scale = base * factor;
      if (scale > 0.0 && std::isfinite(scale)) sigmas.push_back(std::sqrt(scale));
    }
  }
  std::sort(sigmas.begin(), sigmas.end());
  sigmas.erase(std::unique(sigmas.begin(), sigmas.end(),
                           [](double l, double r) { return std::abs(l - r) <= 1e-12 * std::max(l, r); }),
               sigmas.end());
  return sigmas;
}

}  // namespace sfg
