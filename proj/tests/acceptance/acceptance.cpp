// Acceptance checks: prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sfg/fg1d.hpp"
#include "sfg/fg2d.hpp"
#include "sfg/kernel.hpp"
#include "sfg/measures.hpp"
#include "sfg/rng.hpp"
#include "sfg/sfg.hpp"
#include "sfg/synth.hpp"
#include "test_util.hpp"

namespace {

using namespace sfg;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

constexpr Projection kVariants[] = {Projection::orthogonal, Projection::continuous};

double rel(double actual, double expected) { return testing::rel_err(actual, expected); }

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// 1. SFG against the empty diagram equals Pers_p for both variants.
Outcome pers_identity() {
  Rng rng(101);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto m = testing::random_diagram(rng, 1, 100);
    for (double p : {1.0, 1.5, 2.0}) {
      const double expect = pers(m, p);
      for (auto v : kVariants) worst = std::max(worst, rel(sfg_exact(m, PersistenceMeasure{}, p, v), expect));
    }
  }
  return {worst <= 1e-9, fmt("max rel err %.2e", worst)};
}

// 2. Staggered grids: SFG_p^p = 1/n^p.
Outcome grid_value() {
  double worst = 0.0;
  for (int n : {2, 4, 8}) {
    for (double p : {1.0, 2.0}) {
      const auto [mu, nu] = gen_grid_family(n, p);
      worst = std::max(worst, rel(sfg_exact_power(mu, nu, p, Projection::orthogonal), 1.0 / std::pow(n, p)));
    }
  }
  return {worst <= 1e-9, fmt("max rel err %.2e", worst)};
}

// 3. Dirac pair: FG_p = sqrt2 / ln n, SFG_2 grows while FG_2 shrinks.
Outcome dirac_family() {
  double worst = 0.0;
  std::vector<double> s2, f2;
  for (double n : {8.0, 32.0, 128.0}) {
    const auto [mu, nu] = gen_dirac_family(n);
    for (double p : {1.0, 2.0}) {
      worst = std::max(worst, std::abs(fg2d(mu, nu, p).distance - std::sqrt(2.0) / std::log(n)));
    }
    s2.push_back(sfg_exact(mu, nu, 2.0, Projection::orthogonal));
    f2.push_back(fg2d(mu, nu, 2.0).distance);
  }
  const bool trend = s2[0] < s2[1] && s2[1] < s2[2] && f2[0] > f2[1] && f2[1] > f2[2];
  return {worst <= 1e-10 && trend,
          fmt("max abs err %.2e; ", worst) + fmt("sfg_2 %.4g -> ", s2[0]) + fmt("%.4g, fg_2 ", s2[2]) +
              fmt("%.4g -> %.4g", f2[0], f2[2])};
}

// 4. fg1d against exhaustive enumeration.
Outcome fg1d_oracle() {
  Rng rng(404);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto a = testing::random_unit_atoms(rng, 5);
    const auto b = testing::random_unit_atoms(rng, 5);
    for (double p : {1.0, 1.5, 2.0}) {
      worst = std::max(worst, std::abs(fg1d(a, b, p) - fg1d_bruteforce(a, b, p).cost));
    }
  }
  return {worst <= 1e-12, fmt("max abs err %.2e", worst)};
}

// 5. fg2d against exhaustive enumeration.
Outcome fg2d_oracle() {
  Rng rng(505);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const auto a = testing::random_diagram(rng, 0, 4);
    const auto b = testing::random_diagram(rng, 0, 4);
    for (double p : {1.0, 2.0}) {
      worst = std::max(worst, std::abs(fg2d(a, b, p).distance - fg2d_bruteforce(a, b, p)));
    }
  }
  return {worst <= 1e-10, fmt("max abs err %.2e", worst)};
}

// 6. Stability bounds.
Outcome stability() {
  Rng rng(606);
  int violations = 0;
  double worst_orth = 0.0, worst_cont = 0.0;
  for (int i = 0; i < 500; ++i) {
    const auto a = testing::random_diagram(rng, 1, 50);
    const auto b = testing::random_diagram(rng, 1, 50);
    const double fg = fg2d(a, b, 1.0).distance;
    const double orth = sfg_exact(a, b, 1.0, Projection::orthogonal);
    const double cont = sfg_exact(a, b, 1.0, Projection::continuous);
    worst_orth = std::max(worst_orth, orth / (3.0 * fg));
    worst_cont = std::max(worst_cont, cont / ((3.0 * std::sqrt(2.0) + 1.0) * fg));
    violations += orth > 3.0 * fg;
    violations += cont > (3.0 * std::sqrt(2.0) + 1.0) * fg;
  }
  double worst_general = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto a = testing::random_diagram(rng, 1, 50);
    const auto b = testing::random_diagram(rng, 1, 50);
    const double m = std::max(pers_infty(a), pers_infty(b));
    for (double p : {1.5, 2.0}) {
      const auto fg = fg2d(a, b, p);
      const double rhs = fg.matching.total_cost_p +
                         2.0 * std::pow(m, p - 1.0) * fg.matching.off_diagonal_displacement(a, b);
      const double lhs = sfg_exact_power(a, b, p, Projection::orthogonal);
      worst_general = std::max(worst_general, lhs / rhs);
      violations += lhs > rhs;
    }
  }
  return {violations == 0, std::to_string(violations) + " violations; max ratios orth " +
                               fmt("%.3f, cont %.3f", worst_orth, worst_cont) +
                               fmt(", general-p %.3f", worst_general)};
}

// 7. Bulk of sfg / (3 fg) on uniform 100-point pairs.
Outcome bound_tightness() {
  Rng rng(707);
  std::vector<double> ratios;
  for (int i = 0; i < 200; ++i) {
    const auto a = gen_uniform(100, rng);
    const auto b = gen_uniform(100, rng);
    ratios.push_back(sfg_exact(a, b, 1.0, Projection::orthogonal) / (3.0 * fg2d(a, b, 1.0).distance));
  }
  const double q1 = quantile(ratios, 0.25);
  const double q3 = quantile(ratios, 0.75);
  return {q1 >= 0.15 && q3 <= 0.45, fmt("IQR [%.3f, %.3f]", q1, q3)};
}

// 8. Symmetry and triangle inequality.
Outcome metric_axioms() {
  Rng rng(808);
  int asym = 0, triangle = 0;
  for (int i = 0; i < 200; ++i) {
    const auto a = testing::random_diagram(rng, 0, 20);
    const auto b = testing::random_diagram(rng, 0, 20);
    const auto c = testing::random_diagram(rng, 0, 20);
    for (double p : {1.0, 2.0}) {
      std::vector<std::function<double(const PersistenceMeasure&, const PersistenceMeasure&)>> dists{
          [p](const auto& x, const auto& y) { return sfg_exact(x, y, p, Projection::orthogonal); },
          [p](const auto& x, const auto& y) { return sfg_exact(x, y, p, Projection::continuous); },
          [p](const auto& x, const auto& y) { return fg2d(x, y, p).distance; },
      };
      for (const auto& d : dists) {
        const double ab = d(a, b), bc = d(b, c), ac = d(a, c);
        asym += ab != d(b, a);
        triangle += ac > ab + bc + 1e-9;
      }
    }
  }
  return {asym == 0 && triangle == 0,
          std::to_string(asym) + " asymmetric pairs, " + std::to_string(triangle) + " triangle violations"};
}

// 9. Exact sweep against a fine midpoint rule built on an independent slice cost.
Outcome quadrature_cross_check() {
  Rng rng(909);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto a = gen_uniform(20, rng);
    const auto b = gen_uniform(20, rng);
    const std::vector<PersistenceMeasure> pair{a, b};
    const auto range = *support_range(pair);
    for (double p : {1.0, 2.0}) {
      constexpr int n = 100000;
      const double h = (range.max - range.min) / n;
      double sum = 0.0;
      for (int j = 0; j < n; ++j) {
        sum += testing::reference_slice_cost(a, b, range.min + (j + 0.5) * h, p, false);
      }
      const double reference = std::pow(h * sum / std::sqrt(2.0), 1.0 / p);
      worst = std::max(worst, rel(sfg_exact(a, b, p, Projection::orthogonal), reference));
    }
  }
  return {worst <= 1e-3, fmt("max rel err %.2e", worst)};
}

// 10. Sampled estimates: accuracy at k = 1000 and KDE bias at k = 100.
Outcome approximation() {
  std::uint64_t state = 1010;
  std::vector<double> err1000, uni100, kde100;
  for (int t = 0; t < 100; ++t) {
    Rng rng(splitmix64(state));
    const auto a = gen_uniform(100, rng);
    const auto b = gen_uniform(100, rng);
    const double exact = sfg_exact(a, b, 1.0, Projection::orthogonal);
    SfgConfig cfg;
    cfg.mode = Mode::approx;
    cfg.seed = splitmix64(state);
    cfg.sampling = Sampling::uniform_midpoint;
    cfg.samples = 1000;
    err1000.push_back(std::abs(sfg::sfg(a, b, cfg) - exact) / exact);
    cfg.samples = 100;
    uni100.push_back(sfg::sfg(a, b, cfg) / exact);
    cfg.sampling = Sampling::kde;
    kde100.push_back(sfg::sfg(a, b, cfg) / exact);
  }
  const double e = median(err1000), u = median(uni100), k = median(kde100);
  return {e <= 0.02 && k < u,
          fmt("median rel err at k=1000 %.2e; ", e) + fmt("median ratio at k=100 kde %.4f vs uniform %.4f", k, u)};
}

// 11. Gram matrices are PSD (exact, and approx with a shared grid).
Outcome kernel_psd() {
  Rng rng(1111);
  std::vector<PersistenceMeasure> corpus;
  for (int i = 0; i < 20; ++i) corpus.push_back(gen_uniform(50, rng));
  double worst_exact = -1.0, worst_approx = -1.0;  // largest -min/max eigenvalue ratio
  for (double p : {1.0, 2.0}) {
    for (auto mode : {Mode::exact, Mode::approx}) {
      for (auto sampling : {Sampling::uniform_midpoint, Sampling::uniform_random, Sampling::kde}) {
        if (mode == Mode::exact && sampling != Sampling::uniform_midpoint) continue;
        SfgConfig cfg;
        cfg.p = p;
        cfg.mode = mode;
        cfg.samples = 200;
        cfg.sampling = sampling;
        cfg.seed = 11;
        const auto dist = distance_power_gram(corpus, cfg);
        for (double sigma : suggest_sigmas(dist)) {
          const auto [lo, hi] = eigcheck(kernelize(dist, sigma));
          double& worst = mode == Mode::exact ? worst_exact : worst_approx;
          worst = std::max(worst, -lo / hi);
        }
      }
    }
  }
  return {worst_exact <= 1e-8 && worst_approx <= 1e-6,
          fmt("smallest min/max eigenvalue ratio exact %.2e, approx %.2e", -worst_exact, -worst_approx)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*check)();
    double time_limit;  // seconds, 0 = none
  };
  const std::vector<Criterion> criteria{
      {"Pers identity", pers_identity, 10.0},
      {"grid family value", grid_value, 5.0},
      {"Dirac family", dirac_family, 0.0},
      {"1D oracle equivalence", fg1d_oracle, 30.0},
      {"2D oracle equivalence", fg2d_oracle, 0.0},
      {"stability bounds", stability, 0.0},
      {"bound tightness", bound_tightness, 300.0},
      {"metric axioms", metric_axioms, 0.0},
      {"exact vs quadrature", quadrature_cross_check, 0.0},
      {"approximation convergence", approximation, 0.0},
      {"kernel PSD", kernel_psd, 0.0},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = criteria[i].check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (criteria[i].time_limit > 0.0 && secs > criteria[i].time_limit) {
      outcome.pass = false;
      outcome.detail += fmt("; exceeded %.0fs limit", criteria[i].time_limit);
    }
    failures += !outcome.pass;
    std::printf("%s criterion %zu (%s): %s [%.2fs]\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, outcome.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
