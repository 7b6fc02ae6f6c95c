#include "fabric/engine.hpp"

#include <algorithm>
#include <cmath>

namespace fabric {

const GeneralizedCircle& Chain::member(int n) const {
  if (!has(n)) throw WindowMissError("chain member " + std::to_string(n) + " outside window");
  return members[static_cast<size_t>(n - n_min)];
}

double Chain::kappa(int n) const {
  if (!has(n)) throw WindowMissError("chain member " + std::to_string(n) + " outside window");
  return kappas[static_cast<size_t>(n - n_min)];
}

double Chain::bend(int n) const {
  const GeneralizedCircle& g = member(n);
  if (g.is_line()) return 0.0;
  const Circle& c = g.as_circle();
  const bool encloses_carrier = norm(c.center) < c.radius;
  return encloses_carrier ? -kappa(n) : kappa(n);
}

const FrameCircle& Fabric::frame(Orientation o, int index) const {
  const auto& frames = o == Orientation::vertical ? v_frame : h_frame;
  if (index < window.lo || index > window.hi)
    throw WindowMissError("frame index " + std::to_string(index) + " outside window");
  return frames[static_cast<size_t>(index - window.lo)];
}

const Chain& Fabric::chain(Orientation o, int strip) const {
  const auto& chains = o == Orientation::vertical ? v_chains : h_chains;
  if (strip < window.lo || strip >= window.hi)
    throw WindowMissError("chain strip " + std::to_string(strip) + " outside window");
  return chains[static_cast<size_t>(strip - window.lo)];
}

double frame_delta(const GridSpec& spec) { return 2.0 * spec.d / (spec.r * spec.r); }

double frame_kappa(const GridSpec& spec, Orientation o, int index) {
  const double c = index * spec.d - (o == Orientation::vertical ? spec.ax : spec.ay);
  return 2.0 * c / (spec.r * spec.r);
}

Fabric build_fabric(const GridSpec& raw, Window window) {
  if (window.empty()) throw std::invalid_argument("build_fabric: empty window");
  const GridSpec spec = GridSpec::make(raw.d, raw.ax, raw.ay, raw.r);

  Fabric fabric;
  fabric.spec = spec;
  fabric.window = window;
  fabric.delta = frame_delta(spec);
  const Inversion inv = spec.inversion();

  for (Orientation o : {Orientation::vertical, Orientation::horizontal}) {
    auto& frames = o == Orientation::vertical ? fabric.v_frame : fabric.h_frame;
    frames.reserve(static_cast<size_t>(window.count()));
    for (int k = window.lo; k <= window.hi; ++k) {
      frames.push_back(FrameCircle{o, k, invert_gcircle(inv, grid_line(spec, o, k), spec.d),
                                   frame_kappa(spec, o, k)});
    }
  }

  auto build_chain = [&](Orientation o, int strip) {
    Chain chain;
    chain.orientation = o;
    chain.strip = strip;
    chain.n_min = window.lo;
    chain.n_max = window.hi;
    chain.members.reserve(static_cast<size_t>(window.count()));
    for (int n = window.lo; n <= window.hi; ++n) {
      const GeneralizedCircle source = o == Orientation::vertical
                                           ? cell_circle(spec, strip, n)
                                           : cell_circle(spec, n, strip);
      chain.members.push_back(invert_gcircle(inv, source, spec.d));
      chain.kappas.push_back(curvature(chain.members.back()));
    }
    chain.bounding = {fabric.frame(o, strip).shape, fabric.frame(o, strip + 1).shape};
    return chain;
  };

  for (int strip = window.lo; strip < window.hi; ++strip) {
    fabric.v_chains.push_back(build_chain(Orientation::vertical, strip));
    fabric.h_chains.push_back(build_chain(Orientation::horizontal, strip));
  }
  return fabric;
}

double chain_closed_form(double kappa0, double kappa1, double delta, long long n) {
  const double x = static_cast<double>(n);
  return kappa0 + (kappa1 - kappa0) * x + delta * x * (x - 1.0);
}

double chain_recurrence_step(double kappa_prev, double kappa_cur, double delta) {
  return 2.0 * (kappa_cur + delta) - kappa_prev;
}

std::pair<double, double> descartes_fourth(double k1, double k2, double k3, double tol) {
  const double sum = k1 + k2 + k3;
  double disc = k1 * k2 + k2 * k3 + k3 * k1;
  if (disc < 0.0) {
    if (disc < -tol * std::max(1.0, k1 * k1 + k2 * k2 + k3 * k3))
      throw ComplexRootsError("descartes_fourth: no real tangent circle for these bends");
    disc = 0.0;
  }
  const double root = 2.0 * std::sqrt(disc);
  return {sum - root, sum + root};
}

double descartes_residual(const std::array<double, 4>& bends) {
  const double sum = bends[0] + bends[1] + bends[2] + bends[3];
  const double sq = bends[0] * bends[0] + bends[1] * bends[1] + bends[2] * bends[2] +
                    bends[3] * bends[3];
  return sum * sum - 2.0 * sq;
}

namespace {

bool contains(const Circle& outer, const GeneralizedCircle& g, double tol) {
  if (g.is_line()) return false;  // no circle contains a line
  const Circle& c = g.as_circle();
  return distance(outer.center, c.center) + c.radius <= outer.radius + tol;
}

}  // namespace

DescartesQuad region_bends(const Chain& chain, int n, double tol) {
  const std::array<const GeneralizedCircle*, 4> objects = {
      &chain.bounding[0], &chain.bounding[1], &chain.member(n), &chain.member(n + 1)};

  DescartesQuad quad;
  double scale = 1.0;
  for (size_t i = 0; i < 4; ++i) {
    quad.bends[i] = curvature(*objects[i]);
    scale = std::max(scale, scale_of(*objects[i]));
  }
  // outermost-circle rule: the one circle containing the other three (if
  // any) enters with the opposite sign
  for (size_t i = 0; i < 4; ++i) {
    if (!objects[i]->is_circle()) continue;
    const Circle& candidate = objects[i]->as_circle();
    bool contains_rest = true;
    for (size_t j = 0; j < 4 && contains_rest; ++j)
      if (j != i) contains_rest = contains(candidate, *objects[j], tol * scale);
    if (contains_rest) quad.bends[i] = -quad.bends[i];
  }
  quad.residual = descartes_residual(quad.bends);
  return quad;
}

DescartesQuad region_bends(const Fabric& fabric, const Chain& chain, int n) {
  (void)fabric;
  return region_bends(chain, n);
}

bool check_integral_premise(const std::array<double, 6>& kappas, double tol) {
  return std::all_of(kappas.begin(), kappas.end(), [tol](double k) {
    return std::abs(k - std::round(k)) <= tol;
  });
}

std::array<double, 6> premise_kappas(const Fabric& fabric) {
  const Window w = fabric.window;
  if (w.count() < 3)
    throw WindowMissError("premise_kappas: window too small for the six premise circles");
  const int s = std::clamp(0, w.lo, w.hi - 1);      // vertical strip of Psi
  const int n = std::clamp(0, w.lo, w.hi - 2);      // members gamma_0 = (s, n), gamma_1 = (s, n+1)
  const Chain& psi = fabric.chain(Orientation::vertical, s);
  const Chain& ortho0 = fabric.chain(Orientation::horizontal, n);
  const Chain& ortho1 = fabric.chain(Orientation::horizontal, n + 1);
  return {fabric.frame(Orientation::vertical, s).kappa,
          fabric.frame(Orientation::vertical, s + 1).kappa,
          psi.kappa(n),
          psi.kappa(n + 1),
          ortho0.kappa(s + 1),   // alpha: neighbor of gamma_0 in its horizontal chain
          ortho1.kappa(s + 1)};  // beta: neighbor of gamma_1
}

IntegralityReport verify_integral(const Fabric& fabric, double tol) {
  IntegralityReport report;
  report.tol = tol;
  auto push = [&report](std::string family, Orientation o, int strip, int index, double kappa) {
    const double deviation = std::abs(kappa - std::round(kappa));
    report.max_deviation = std::max(report.max_deviation, deviation);
    report.entries.push_back({std::move(family), o, strip, index, kappa, deviation});
  };
  for (const auto* frames : {&fabric.v_frame, &fabric.h_frame})
    for (const FrameCircle& f : *frames) push("frame", f.orientation, f.index, f.index, f.kappa);
  for (const auto* chains : {&fabric.v_chains, &fabric.h_chains})
    for (const Chain& c : *chains)
      for (int n = c.n_min; n <= c.n_max; ++n)
        push("chain", c.orientation, c.strip, n, c.kappa(n));
  report.integral = report.max_deviation <= tol;
  return report;
}

std::vector<Point> chain_tangency_points(const Chain& chain, double tol) {
  std::vector<Point> points;
  for (int n = chain.n_min; n < chain.n_max; ++n) {
    const GeneralizedCircle& a = chain.member(n);
    const GeneralizedCircle& b = chain.member(n + 1);
    const double scale = std::max({1.0, scale_of(a), scale_of(b)});
    const Tangency t = tangent(a, b, tol * scale);
    if (t) points.push_back(t.point);  // parallel lines touch at infinity only
  }
  return points;
}

GeneralizedCircle tangency_circle(const Chain& chain) {
  const std::vector<Point> points = chain_tangency_points(chain);
  if (points.size() < 3)
    throw std::invalid_argument("tangency_circle: need at least 3 tangency points");
  return through_three_points(points[0], points[1], points[2]);
}

GeneralizedCircle shared_circle(const Chain& v_chain, const Chain& h_chain) {
  if (v_chain.orientation != Orientation::vertical ||
      h_chain.orientation != Orientation::horizontal)
    throw std::invalid_argument("shared_circle: expects a (vertical, horizontal) pair");
  if (!v_chain.has(h_chain.strip) || !h_chain.has(v_chain.strip))
    throw WindowMissError("shared_circle: shared cell outside a chain window");

  const GeneralizedCircle& a = v_chain.member(h_chain.strip);
  const GeneralizedCircle& b = h_chain.member(v_chain.strip);
  const double tol = 1e-10 * std::max({1.0, scale_of(a), scale_of(b)});
  bool same = a.is_line() == b.is_line();
  if (same && a.is_line()) {
    same = std::abs(cross(a.as_line().normal, b.as_line().normal)) <= tol &&
           std::abs(a.as_line().offset - b.as_line().offset) <= tol;
  } else if (same) {
    same = distance(a.as_circle().center, b.as_circle().center) <= tol &&
           std::abs(a.as_circle().radius - b.as_circle().radius) <= tol;
  }
  if (!same)
    throw std::logic_error("shared_circle: chains disagree on the shared member");
  return a;
}

}  // namespace fabric
