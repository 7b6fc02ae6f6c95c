#include "fabric/sangaku.hpp"

#include <cmath>
#include <sstream>

namespace fabric {

namespace {

void finish(SangakuReport& report) {
  report.residual = report.lhs - report.rhs;
  const double tol = 1e-9 * std::max({1.0, std::abs(report.lhs), std::abs(report.rhs)});
  report.pass = report.precondition_ok && std::abs(report.residual) <= tol;
}

}  // namespace

std::string SangakuReport::to_text() const {
  std::ostringstream out;
  out.precision(15);
  out << "problem: " << problem << "\n";
  for (const auto& [name, value] : quantities) out << "  " << name << " = " << value << "\n";
  out << "  lhs = " << lhs << ", rhs = " << rhs << ", residual = " << residual << "\n";
  if (!diagnostic.empty()) out << "  note: " << diagnostic << "\n";
  out << (pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string SangakuReport::csv_header() {
  return "problem,pass,lhs,rhs,residual,quantities";
}

std::string SangakuReport::to_csv_row() const {
  std::ostringstream out;
  out.precision(15);
  out << problem << "," << (pass ? "true" : "false") << "," << lhs << "," << rhs << ","
      << residual << ",\"";
  for (size_t i = 0; i < quantities.size(); ++i) {
    if (i) out << ";";
    out << quantities[i].first << "=" << quantities[i].second;
  }
  out << "\"";
  return out.str();
}

SangakuReport verify_gumma(double kappa0, double kappa1, double delta) {
  SangakuReport report;
  report.problem = "gumma-1814";
  const double d1 = kappa1 - kappa0;
  const double k1 = chain_closed_form(kappa0, kappa1, delta, 1);
  const double k4 = chain_closed_form(kappa0, kappa1, delta, 4);
  const double k7 = chain_closed_form(kappa0, kappa1, delta, 7);
  report.quantities = {{"kappa0", kappa0}, {"kappa1", k1}, {"kappa4", k4},
                       {"kappa7", k7},     {"delta", delta}, {"D", d1}};
  report.lhs = 7.0 * k4;
  report.rhs = 2.0 * k7 + 5.0 * k1;
  if (std::abs(d1) > 1e-9 * std::max(1.0, std::abs(kappa0))) {
    report.precondition_ok = false;
    report.diagnostic =
        "identity needs a pair of touching congruent circles (D = 0); residual is 9D";
  }
  finish(report);
  return report;
}

SangakuReport verify_gumma(double kappa0, double delta) {
  return verify_gumma(kappa0, kappa0, delta);
}

SangakuReport verify_menuma(double r) {
  if (!(r > 0.0)) throw std::invalid_argument("verify_menuma: r must be > 0");
  SangakuReport report;
  report.problem = "menuma-1828";
  const double a = 1.0 / (3.0 * r);  // outer bounding bend
  const double b = 1.0 / (2.0 * r);  // inner bounding bend
  const double delta = std::abs(b - a);
  const double kappa1 = 1.0 / r;
  // congruent neighbors of the largest circle: 2*kappa0 = 2(-a + b + kappa1)
  const double kappa0 = -a + b + kappa1;
  const double d1 = kappa1 - kappa0;
  const double kappa7 = chain_closed_form(kappa0, kappa1, delta, 7);
  report.quantities = {{"r", r},        {"a", a},         {"b", b},
                       {"delta", delta}, {"D", d1},       {"kappa0", kappa0},
                       {"kappa7", kappa7}, {"r7", 1.0 / kappa7}};
  report.lhs = kappa7;
  report.rhs = 7.0 / r;
  finish(report);
  return report;
}

Chain construct_menuma_geometry(double r, int count) {
  if (!(r > 0.0)) throw std::invalid_argument("construct_menuma_geometry: r must be > 0");
  if (count < 8) throw std::invalid_argument("construct_menuma_geometry: count must be >= 8");

  // Rectify the two bounding circles (radii 3r, 2r, internally tangent at
  // the carrier) to the parallel lines x = -1/(4r) and x = -1/(6r) of a
  // grid with spacing d = 1/(12r). Those are the lines k = -3 and k = -2,
  // and the inscribed circles of strip -3 invert onto the chain. Cell row
  // m = 0 is centered on the axis of symmetry, so member n maps to row
  // n - 1 (member 1 is the largest circle, radius r).
  const double d = 1.0 / (12.0 * r);
  const GridSpec spec = GridSpec::make(d, 0.0, 0.5 * d, 1.0);
  const Inversion inv = spec.inversion();
  const int strip = -3;

  Chain chain;
  chain.orientation = Orientation::vertical;
  chain.strip = strip;
  chain.n_min = 2 - count;
  chain.n_max = count;
  for (int n = chain.n_min; n <= chain.n_max; ++n) {
    chain.members.push_back(invert_gcircle(inv, cell_circle(spec, strip, n - 1), spec.d));
    chain.kappas.push_back(curvature(chain.members.back()));
  }
  chain.bounding = {invert_gcircle(inv, grid_line(spec, Orientation::vertical, strip), spec.d),
                    invert_gcircle(inv, grid_line(spec, Orientation::vertical, strip + 1), spec.d)};
  return chain;
}

}  // namespace fabric
