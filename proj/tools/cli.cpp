#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "sfg/error.hpp"
#include "sfg/fg2d.hpp"
#include "sfg/format.hpp"
#include "sfg/kernel.hpp"
#include "sfg/measures.hpp"
#include "sfg/rng.hpp"
#include "sfg/sfg.hpp"
#include "sfg/synth.hpp"

namespace sfg::cli {
namespace {

namespace fs = std::filesystem;

// Flags shared by every command that evaluates SFG.
struct DistanceFlags {
  double p = 1.0;
  std::string variant = "orth";
  std::string mode = "exact";
  int k = 100;
  std::string sampling = "uniform-midpoint";
  std::uint64_t seed = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p", p, "Order p >= 1")->capture_default_str();
    cmd->add_option("--variant", variant, "Projection: orth or cont")->capture_default_str();
    cmd->add_option("--mode", mode, "exact or approx")->capture_default_str();
    cmd->add_option("--k", k, "Number of samples in approx mode")->capture_default_str();
    cmd->add_option("--sampling", sampling, "uniform-midpoint, uniform-random or kde")
        ->capture_default_str();
    cmd->add_option("--seed", seed, "Seed for random sampling")->capture_default_str();
  }

  SfgConfig config() const {
    SfgConfig cfg;
    cfg.p = p;
    cfg.variant = parse_projection(variant);
    cfg.mode = parse_mode(mode);
    cfg.samples = k;
    cfg.sampling = parse_sampling(sampling);
    cfg.seed = seed;
    cfg.validate();
    return cfg;
  }
};

PersistenceMeasure load(const std::string& path) {
  try {
    return load_measure(path);
  } catch (const ParseError& e) {
    throw ValidationError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

// Expands directories into their *.csv files (sorted by name).
std::vector<std::string> collect_inputs(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& arg : args) {
    if (fs::is_directory(arg)) {
      std::vector<std::string> files;
      for (const auto& entry : fs::directory_iterator(arg)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv") {
          files.push_back(entry.path().string());
        }
      }
      std::sort(files.begin(), files.end());
      out.insert(out.end(), files.begin(), files.end());
    } else {
      out.push_back(arg);
    }
  }
  if (out.empty()) throw ValidationError("no diagram files found");
  return out;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot write " + path.string());
  return file;
}

// Writes to `path`, or to `fallback` when path is empty.
template <typename Writer>
void emit(const std::string& path, std::ostream& fallback, Writer write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  auto file = open_output(path);
  write(file);
  if (!file) throw ValidationError("write failed for " + path);
}

void write_matrix(std::ostream& out, const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out << ',';
      out << format_real(m(i, j));
    }
    out << '\n';
  }
}

// Output prefix with a trailing ".csv" removed.
std::string stem_of(const std::string& out) {
  if (out.size() > 4 && out.ends_with(".csv")) return out.substr(0, out.size() - 4);
  return out;
}

// Independent per-item seeds derived from one base seed.
std::vector<std::uint64_t> derive_seeds(std::uint64_t seed, std::size_t count) {
  std::vector<std::uint64_t> seeds(count);
  for (auto& s : seeds) s = splitmix64(seed);
  return seeds;
}

// ---------------------------------------------------------------- dist

struct DistCommand {
  std::string a, b;
  DistanceFlags flags;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("dist", "Print the SFG distance between two diagram files");
    cmd->add_option("a", a, "First diagram CSV")->required();
    cmd->add_option("b", b, "Second diagram CSV")->required();
    flags.attach(cmd);
  }

  void run(std::ostream& out) const {
    const auto cfg = flags.config();
    out << format_real(sfg(load(a), load(b), cfg)) << '\n';
  }
};

// ---------------------------------------------------------------- gram

struct GramCommand {
  std::vector<std::string> inputs;
  DistanceFlags flags;
  std::string sigma = "1";
  bool distances = false;
  std::string out_path;
  unsigned threads = 0;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("gram", "Write the pairwise kernel or distance matrix of a corpus");
    cmd->add_option("inputs", inputs, "Diagram CSV files or directories")->required();
    flags.attach(cmd);
    cmd->add_option("--sigma", sigma, "Kernel bandwidth, or `auto` for a sweep")->capture_default_str();
    cmd->add_flag("--distances", distances, "Write SFG_p^p instead of the kernel");
    cmd->add_option("--out", out_path, "Output CSV (prefix for --sigma auto)");
    cmd->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
  }

  void run(std::ostream& out) const {
    const auto cfg = flags.config();
    std::vector<PersistenceMeasure> measures;
    for (const auto& path : collect_inputs(inputs)) measures.push_back(load(path));

    if (distances) {
      const auto g = distance_power_gram(measures, cfg, threads);
      emit(out_path, out, [&](std::ostream& os) { write_matrix(os, g.values); });
      return;
    }
    if (sigma != "auto") {
      const double s = parse_sigma(sigma);
      const auto g = gram(measures, s, cfg, threads);
      emit(out_path, out, [&](std::ostream& os) { write_matrix(os, g.values); });
      return;
    }

    if (out_path.empty()) throw InvalidParameter("--sigma auto requires --out");
    if (cfg.p > 2.0) throw InvalidParameter("the kernel requires 1 <= p <= 2");
    const auto dist = distance_power_gram(measures, cfg, threads);
    const auto sigmas = suggest_sigmas(dist);
    const std::string stem = stem_of(out_path);
    auto manifest = open_output(stem + "_manifest.csv");
    manifest << "index,sigma,file\n";
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
      const std::string file = stem + "_sigma_" + std::to_string(i) + ".csv";
      auto os = open_output(file);
      write_matrix(os, kernelize(dist, sigmas[i]).values);
      manifest << i << ',' << format_real(sigmas[i]) << ',' << fs::path(file).filename().string() << '\n';
    }
    out << stem << "_manifest.csv\n";
  }

  static double parse_sigma(const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size()) throw InvalidParameter("--sigma expects a number or `auto`");
    return v;
  }
};

// ---------------------------------------------------------------- study-bounds

struct BoundsCommand {
  std::vector<double> ps{1.0};
  int pairs = 200;
  std::string generator = "uniform";
  std::size_t points = 100;
  std::string variant = "orth";
  std::uint64_t seed = 0;
  std::string out_path;
  unsigned threads = 0;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("study-bounds", "Compare SFG with its stability bound on random pairs");
    cmd->add_option("--p", ps, "Orders p to study")->delimiter(',')->capture_default_str();
    cmd->add_option("--pairs", pairs, "Pairs per order")->capture_default_str();
    cmd->add_option("--generator", generator, "uniform, grid or dirac")->capture_default_str();
    cmd->add_option("--points", points, "Points per uniform diagram")->capture_default_str();
    cmd->add_option("--variant", variant, "Projection: orth or cont (cont needs p = 1)")
        ->capture_default_str();
    cmd->add_option("--seed", seed, "Base seed")->capture_default_str();
    cmd->add_option("--out", out_path, "Output CSV (stdout if omitted)");
    cmd->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
  }

  std::pair<PersistenceMeasure, PersistenceMeasure> make_pair(std::size_t i, std::uint64_t pair_seed,
                                                              double p) const {
    if (generator == "uniform") {
      Rng rng(pair_seed);
      auto a = gen_uniform(points, rng);
      auto b = gen_uniform(points, rng);
      return {std::move(a), std::move(b)};
    }
    if (generator == "grid") return gen_grid_family(1 + static_cast<int>(i % 6), p);
    return gen_dirac_family(8.0 * std::pow(2.0, static_cast<double>(i % 8)));
  }

  void run(std::ostream& out) const {
    if (generator != "uniform" && generator != "grid" && generator != "dirac") {
      throw InvalidParameter("unknown generator `" + generator + "`");
    }
    if (pairs < 0) throw InvalidParameter("--pairs must be >= 0");
    const auto proj = parse_projection(variant);
    for (double p : ps) {
      if (!(p >= 1.0) || !std::isfinite(p)) throw InvalidParameter("p must be a finite real >= 1");
      if (proj == Projection::continuous && p != 1.0) {
        throw InvalidParameter("the continuous variant has a bound only at p = 1");
      }
    }

    const auto n_pairs = static_cast<std::size_t>(pairs);
    const auto seeds = derive_seeds(seed, n_pairs);
    std::vector<std::string> rows(ps.size() * n_pairs);
    parallel_for(rows.size(), threads, [&](std::size_t job) {
      const double p = ps[job / n_pairs];
      const std::size_t i = job % n_pairs;
      const auto [a, b] = make_pair(i, seeds[i], p);
      const auto fg = fg2d(a, b, p);
      const double s = sfg_exact(a, b, p, proj);
      double bound;
      if (p == 1.0) {
        bound = (proj == Projection::orthogonal ? 3.0 : 3.0 * kSqrt2 + 1.0) * fg.distance;
      } else {
        const double m = std::max(pers_infty(a), pers_infty(b));
        const double w = fg.matching.off_diagonal_displacement(a, b);
        bound = std::pow(fg.matching.total_cost_p + 2.0 * std::pow(m, p - 1.0) * w, 1.0 / p);
      }
      const double ratio = bound > 0.0 ? s / bound : 0.0;
      std::ostringstream row;
      row << i << ',' << format_real(p) << ',' << format_real(s) << ',' << format_real(fg.distance)
          << ',' << format_real(bound) << ',' << format_real(ratio) << '\n';
      rows[job] = row.str();
    });

    emit(out_path, out, [&](std::ostream& os) {
      os << "pair,p,sfg,fg,bound,ratio\n";
      for (const auto& r : rows) os << r;
    });
  }
};

// ---------------------------------------------------------------- study-convergence

struct ConvergenceCommand {
  std::vector<int> ks{10, 100, 1000};
  std::vector<std::string> samplings{"uniform-midpoint", "uniform-random", "kde"};
  int trials = 100;
  std::size_t points = 100;
  double p = 1.0;
  std::string variant = "orth";
  std::uint64_t seed = 0;
  std::string out_path;
  unsigned threads = 0;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("study-convergence",
                                   "Ratio of sampled to exact SFG over sample counts and schemes");
    cmd->add_option("--k", ks, "Sample counts")->delimiter(',')->capture_default_str();
    cmd->add_option("--sampling", samplings, "Sampling schemes")->delimiter(',')->capture_default_str();
    cmd->add_option("--trials", trials, "Random pairs")->capture_default_str();
    cmd->add_option("--points", points, "Points per diagram")->capture_default_str();
    cmd->add_option("--p", p, "Order p >= 1")->capture_default_str();
    cmd->add_option("--variant", variant, "Projection: orth or cont")->capture_default_str();
    cmd->add_option("--seed", seed, "Base seed")->capture_default_str();
    cmd->add_option("--out", out_path, "Output CSV (stdout if omitted)");
    cmd->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
  }

  void run(std::ostream& out) const {
    if (trials < 0) throw InvalidParameter("--trials must be >= 0");
    std::vector<SfgConfig> configs;
    for (const auto& name : samplings) {
      for (int k : ks) {
        SfgConfig cfg;
        cfg.p = p;
        cfg.variant = parse_projection(variant);
        cfg.mode = Mode::approx;
        cfg.samples = k;
        cfg.sampling = parse_sampling(name);
        cfg.validate();
        configs.push_back(cfg);
      }
    }

    const auto n_trials = static_cast<std::size_t>(trials);
    // Two seeds per trial: one for the diagrams, one for the sampler.
    const auto seeds = derive_seeds(seed, 2 * n_trials);
    std::vector<std::string> rows(n_trials);
    parallel_for(n_trials, threads, [&](std::size_t t) {
      Rng rng(seeds[2 * t]);
      const auto a = gen_uniform(points, rng);
      const auto b = gen_uniform(points, rng);
      const double exact = sfg_exact(a, b, p, parse_projection(variant));
      std::ostringstream block;
      for (auto cfg : configs) {
        cfg.seed = seeds[2 * t + 1];
        const double approx = sfg_approx(a, b, cfg);
        const double ratio = exact > 0.0 ? approx / exact : 0.0;
        block << t << ',' << to_string(cfg.sampling) << ',' << cfg.samples << ','
              << format_real(approx) << ',' << format_real(exact) << ',' << format_real(ratio) << '\n';
      }
      rows[t] = block.str();
    });

    emit(out_path, out, [&](std::ostream& os) {
      os << "trial,sampling,k,approx,exact,ratio\n";
      for (const auto& r : rows) os << r;
    });
  }
};

// ---------------------------------------------------------------- gen

struct GenCommand {
  CLI::App* uniform = nullptr;
  CLI::App* grid = nullptr;
  CLI::App* dirac = nullptr;
  CLI::App* orbit = nullptr;

  std::size_t uniform_n = 100;
  double lo = 0.0, hi = 1.0;
  int grid_n = 4;
  double grid_p = 1.0;
  double dirac_n = 8.0;
  double r = 1.0;
  std::size_t orbit_n = 1000;
  std::uint64_t seed = 0;
  std::string out_path;

  void attach(CLI::App& app) {
    auto* cmd = app.add_subcommand("gen", "Generate synthetic diagrams or orbits");
    cmd->require_subcommand(1);

    uniform = cmd->add_subcommand("uniform", "n unit points uniform in a box");
    uniform->add_option("--n", uniform_n, "Number of points")->capture_default_str();
    uniform->add_option("--lo", lo, "Lower corner of the box")->capture_default_str();
    uniform->add_option("--hi", hi, "Upper corner of the box")->capture_default_str();
    uniform->add_option("--seed", seed, "Seed")->capture_default_str();
    uniform->add_option("--out", out_path, "Output CSV (stdout if omitted)");

    grid = cmd->add_subcommand("grid", "Staggered grid pair, written to <out>_a.csv and <out>_b.csv");
    grid->add_option("--n", grid_n, "Grid resolution n >= 1")->capture_default_str();
    grid->add_option("--p", grid_p, "Order p controlling the point count")->capture_default_str();
    grid->add_option("--out", out_path, "Output prefix")->required();

    dirac = cmd->add_subcommand("dirac", "Dirac pair, written to <out>_a.csv and <out>_b.csv");
    dirac->add_option("--n", dirac_n, "Parameter n >= 2")->capture_default_str();
    dirac->add_option("--out", out_path, "Output prefix")->required();

    orbit = cmd->add_subcommand("orbit", "Linked twist map orbit as x,y CSV");
    orbit->add_option("--r", r, "Map parameter r >= 0")->capture_default_str();
    orbit->add_option("--n", orbit_n, "Number of points")->capture_default_str();
    orbit->add_option("--seed", seed, "Seed")->capture_default_str();
    orbit->add_option("--out", out_path, "Output CSV (stdout if omitted)");
  }

  void write_pair(const std::pair<PersistenceMeasure, PersistenceMeasure>& pair,
                  std::ostream& out) const {
    const std::string stem = stem_of(out_path);
    save_measure(pair.first, stem + "_a.csv");
    save_measure(pair.second, stem + "_b.csv");
    out << stem << "_a.csv\n" << stem << "_b.csv\n";
  }

  void run(std::ostream& out) const {
    if (uniform->parsed()) {
      const auto m = gen_uniform(uniform_n, seed, Box{lo, hi});
      emit(out_path, out, [&](std::ostream& os) { write_measure(os, m); });
    } else if (grid->parsed()) {
      write_pair(gen_grid_family(grid_n, grid_p), out);
    } else if (dirac->parsed()) {
      write_pair(gen_dirac_family(dirac_n), out);
    } else {
      const auto pts = gen_orbit({r, orbit_n, seed});
      emit(out_path, out, [&](std::ostream& os) {
        os << "x,y\n";
        for (const auto& q : pts) os << format_roundtrip(q[0]) << ',' << format_roundtrip(q[1]) << '\n';
      });
    }
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sliced Figalli-Gigli distances between persistence diagrams", "sfg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "sfg 0.1.0");

  DistCommand dist;
  GramCommand gram_cmd;
  BoundsCommand bounds;
  ConvergenceCommand convergence;
  GenCommand gen;
  dist.attach(app);
  gram_cmd.attach(app);
  bounds.attach(app);
  convergence.attach(app);
  gen.attach(app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (app.got_subcommand("dist")) {
      dist.run(out);
    } else if (app.got_subcommand("gram")) {
      gram_cmd.run(out);
    } else if (app.got_subcommand("study-bounds")) {
      bounds.run(out);
    } else if (app.got_subcommand("study-convergence")) {
      convergence.run(out);
    } else {
      gen.run(out);
    }
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Refusal& e) {
    err << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kSuccess;
}

}  // namespace sfg::cli
