#include "fabric/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fabric {

const char* to_string(Orientation o) {
  return o == Orientation::vertical ? "vertical" : "horizontal";
}

const char* to_string(SymmetryGroup g) {
  switch (g) {
    case SymmetryGroup::D4: return "D4";
    case SymmetryGroup::D2: return "D2";
    case SymmetryGroup::D1: return "D1";
    case SymmetryGroup::C1: return "C1";
  }
  return "?";
}

GridSpec GridSpec::make(double d, double ax, double ay, double r) {
  if (!(d > 0.0) || !std::isfinite(d)) throw std::invalid_argument("GridSpec: d must be > 0");
  if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("GridSpec: r must be > 0");
  if (!std::isfinite(ax) || !std::isfinite(ay))
    throw std::invalid_argument("GridSpec: offsets must be finite");
  auto reduce = [d](double a) {
    double m = std::fmod(a, d);
    if (m < 0.0) m += d;
    if (m >= d) m = 0.0;  // fmod rounding at the upper edge
    return m;
  };
  return GridSpec{d, reduce(ax), reduce(ay), r};
}

GeneralizedCircle grid_line(const GridSpec& spec, Orientation o, int index) {
  if (o == Orientation::vertical)
    return GeneralizedCircle::line(Point{1.0, 0.0}, index * spec.d - spec.ax);
  return GeneralizedCircle::line(Point{0.0, 1.0}, index * spec.d - spec.ay);
}

GeneralizedCircle cell_circle(const GridSpec& spec, int k, int m) {
  const Point center{(k + 0.5) * spec.d - spec.ax, (m + 0.5) * spec.d - spec.ay};
  return GeneralizedCircle::circle(center, 0.5 * spec.d);
}

SymmetryGroup classify_symmetry(const GridSpec& spec, double tol) {
  // Work in cell units; the carrier sits at (u, v) within its cell.
  const double t = tol / spec.d;
  const double u = spec.ax / spec.d;
  const double v = spec.ay / spec.d;
  auto frac = [](double x) { return std::abs(x - std::round(x)); };  // distance to nearest integer

  const bool u_on_line = frac(u) <= t;
  const bool v_on_line = frac(v) <= t;
  const bool u_mid = frac(u - 0.5) <= t;
  const bool v_mid = frac(v - 0.5) <= t;

  if ((u_on_line && v_on_line) || (u_mid && v_mid)) return SymmetryGroup::D4;
  if ((u_on_line && v_mid) || (u_mid && v_on_line)) return SymmetryGroup::D2;
  // diagonal lines of the cells: u - v or u + v integral; perpendicular
  // distance to those lines scales membership by sqrt(2)
  const double td = t * std::numbers::sqrt2;
  if (u_on_line || v_on_line || frac(u - v) <= td || frac(u + v) <= td)
    return SymmetryGroup::D1;
  return SymmetryGroup::C1;
}

SymmetryGroup classify_symmetry(const GridSpec& spec) {
  return classify_symmetry(spec, 1e-9 * spec.d);
}

std::string to_config(const GridSpec& spec) {
  std::ostringstream out;
  out.precision(17);
  out << "d=" << spec.d << "\n"
      << "ax=" << spec.ax << "\n"
      << "ay=" << spec.ay << "\n"
      << "r=" << spec.r << "\n";
  return out.str();
}

GridSpec grid_spec_from_config(const std::string& text) {
  double d = 1.0, ax = 0.0, ay = 0.0, r = 1.0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = line.substr(0, eq);
    const double value = std::stod(line.substr(eq + 1));
    if (key == "d") d = value;
    else if (key == "ax") ax = value;
    else if (key == "ay") ay = value;
    else if (key == "r") r = value;
    else throw std::invalid_argument("grid config: unknown key '" + key + "'");
  }
  return GridSpec::make(d, ax, ay, r);
}

}  // namespace fabric
