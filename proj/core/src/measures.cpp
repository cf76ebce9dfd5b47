#include "sfg/measures.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "sfg/error.hpp"
#include "sfg/format.hpp"

namespace sfg {
namespace {

void validate_entry(const WeightedPoint& wp) {
  const auto& z = wp.point;
  if (!std::isfinite(z.birth) || !std::isfinite(z.death)) {
    throw ValidationError("coordinates must be finite");
  }
  if (!(z.birth < z.death)) {
    throw ValidationError("birth must be strictly less than death");
  }
  if (!std::isfinite(wp.mass) || !(wp.mass > 0.0)) {
    throw ValidationError("mass must be finite and strictly positive");
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view field, double& out) {
  field = trim(field);
  if (field.empty()) return false;
  if (field.front() == '+') field.remove_prefix(1);
  const char* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

PersistenceMeasure::PersistenceMeasure(std::vector<WeightedPoint> points)
    : points_(std::move(points)) {
  for (const auto& wp : points_) validate_entry(wp);
}

PersistenceMeasure PersistenceMeasure::from_points(std::span<const PlanePoint> points) {
  std::vector<WeightedPoint> entries;
  entries.reserve(points.size());
  for (const auto& z : points) entries.push_back({z, 1.0});
  return PersistenceMeasure(std::move(entries));
}

double PersistenceMeasure::total_mass() const noexcept {
  double total = 0.0;
  for (const auto& wp : points_) total += wp.mass;
  return total;
}

PersistenceMeasure PersistenceMeasure::scaled(double factor) const {
  std::vector<WeightedPoint> entries(points_);
  for (auto& wp : entries) wp.mass *= factor;
  return PersistenceMeasure(std::move(entries));
}

PersistenceMeasure join(const PersistenceMeasure& a, const PersistenceMeasure& b) {
  PersistenceMeasure out;
  out.points_.reserve(a.size() + b.size());
  out.points_.insert(out.points_.end(), a.points_.begin(), a.points_.end());
  out.points_.insert(out.points_.end(), b.points_.begin(), b.points_.end());
  return out;
}

double pers(const PersistenceMeasure& m, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw InvalidParameter("p must be a finite real >= 1");
  }
  double sum = 0.0;
  for (const auto& wp : m.points()) {
    sum += wp.mass * std::pow(diagonal_distance(wp.point), p);
  }
  if (!std::isfinite(sum)) throw ValidationError("Pers_p is not finite");
  return std::pow(sum, 1.0 / p);
}

double pers_infty(const PersistenceMeasure& m) {
  double best = 0.0;
  for (const auto& wp : m.points()) best = std::max(best, diagonal_distance(wp.point));
  return best;
}

PersistenceMeasure normalize(const PersistenceMeasure& m) {
  std::vector<WeightedPoint> entries(m.points().begin(), m.points().end());
  for (auto& wp : entries) wp.mass /= diagonal_distance(wp.point);
  return PersistenceMeasure(std::move(entries));
}

PersistenceMeasure read_measure(std::istream& in) {
  std::vector<WeightedPoint> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      fields.push_back(body.substr(start, comma == std::string_view::npos ? comma : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(lineno, "expected `birth,death[,mass]`");
    }
    double values[3] = {0.0, 0.0, 1.0};
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (!parse_double(fields[i], values[i])) {
        throw ParseError(lineno, "malformed number `" + std::string(trim(fields[i])) + "`");
      }
    }
    WeightedPoint wp{{values[0], values[1]}, values[2]};
    try {
      validate_entry(wp);
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(lineno) + ": " + e.what());
    }
    entries.push_back(wp);
  }
  return PersistenceMeasure(std::move(entries));
}

void write_measure(std::ostream& out, const PersistenceMeasure& m) {
  out << "# birth,death,mass\n";
  for (const auto& wp : m.points()) {
    out << format_roundtrip(wp.point.birth) << ',' << format_roundtrip(wp.point.death) << ','
        << format_roundtrip(wp.mass) << '\n';
  }
}

PersistenceMeasure load_measure(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  return read_measure(in);
}

void save_measure(const PersistenceMeasure& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  write_measure(out, m);
  if (!out) throw ValidationError("write failed for " + path.string());
}

}  // namespace sfg
