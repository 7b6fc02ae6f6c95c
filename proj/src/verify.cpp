#include "fabric/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fabric {

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const CheckResult& c : checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " (worst " << c.worst
        << " of tolerance)";
    if (!c.detail.empty()) out << " -- " << c.detail;
    out << "\n";
  }
  return out.str();
}

namespace {

// Accumulates residual-to-tolerance ratios for one named check.
class Gauge {
 public:
  explicit Gauge(std::string name) : result_{std::move(name), true, 0.0, {}} {}

  void ratio(double value, const std::string& where) {
    if (value > result_.worst) {
      result_.worst = value;
      result_.detail = where;
    }
    if (value > 1.0) result_.pass = false;
  }

  void residual(double value, double tolerance, const std::string& where) {
    ratio(std::abs(value) / tolerance, where);
  }

  void expect(bool ok, const std::string& where) {
    if (ok) return;
    result_.pass = false;
    result_.worst = std::max(result_.worst, 2.0);
    if (result_.detail.empty()) result_.detail = where;
  }

  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string chain_id(const Chain& c, int n) {
  std::ostringstream out;
  out << (c.orientation == Orientation::vertical ? "v" : "h") << " strip " << c.strip
      << " n=" << n;
  return out.str();
}

double pair_tol(const GeneralizedCircle& a, const GeneralizedCircle& b, double rel) {
  return rel * std::max({1.0, scale_of(a), scale_of(b)});
}

// Closed form anchored at member index m instead of 0.
double anchored_form(double bend_m, double bend_m1, double delta, int m, int n) {
  return chain_closed_form(bend_m, bend_m1, delta, n - m);
}

void check_frames(const Fabric& f, const VerifyTolerances& tol,
                  std::vector<CheckResult>& out) {
  Gauge delta_gauge("frame-delta-arithmetic");
  Gauge ortho_gauge("frame-orthogonality");
  Gauge carrier_gauge("frame-through-carrier");
  Gauge kappa_gauge("frame-kappa-shape");

  for (const auto* frames : {&f.v_frame, &f.h_frame}) {
    for (size_t i = 0; i + 1 < frames->size(); ++i) {
      const double diff = (*frames)[i + 1].kappa - (*frames)[i].kappa;
      delta_gauge.residual(diff - f.delta, tol.delta_rel * f.delta,
                           to_string((*frames)[i].orientation) + std::string(" k=") +
                               std::to_string((*frames)[i].index));
    }
    for (const FrameCircle& fc : *frames) {
      const double scale = std::max(1.0, scale_of(fc.shape));
      carrier_gauge.residual(distance(fc.shape, Point{0.0, 0.0}), tol.geometry * scale,
                             to_string(fc.orientation) + std::string(" ") +
                                 std::to_string(fc.index));
      kappa_gauge.residual(std::abs(fc.kappa) - curvature(fc.shape),
                           1e-12 * std::max(1.0, std::abs(fc.kappa)),
                           std::to_string(fc.index));
    }
  }
  for (const FrameCircle& v : f.v_frame)
    for (const FrameCircle& h : f.h_frame)
      ortho_gauge.expect(orthogonal(v.shape, h.shape, pair_tol(v.shape, h.shape, tol.geometry)),
                         "v " + std::to_string(v.index) + " x h " + std::to_string(h.index));

  out.push_back(delta_gauge.take());
  out.push_back(ortho_gauge.take());
  out.push_back(carrier_gauge.take());
  out.push_back(kappa_gauge.take());
}

void check_chains(const Fabric& f, const VerifyTolerances& tol,
                  std::vector<CheckResult>& out) {
  Gauge law_gauge("chain-quadratic-law");
  Gauge rec_gauge("chain-recurrence");
  Gauge anchor_gauge("chain-anchor-independence");
  Gauge desc_gauge("descartes-residual");
  Gauge tang_gauge("chain-tangency");
  Gauge off_gauge("chain-members-off-carrier");
  Gauge cyc_gauge("tangency-points-concyclic");

  for (const auto* chains : {&f.v_chains, &f.h_chains}) {
    for (const Chain& c : *chains) {
      const int a0 = (c.has(0) && c.has(1)) ? 0 : c.n_min;
      const double b0 = c.bend(a0);
      const double b1 = c.bend(a0 + 1);

      for (int n = c.n_min; n <= c.n_max; ++n) {
        const double geometric = c.bend(n);
        const double predicted = anchored_form(b0, b1, f.delta, a0, n);
        law_gauge.residual(geometric - predicted,
                           tol.law_rel * std::max(1.0, std::abs(predicted)), chain_id(c, n));

        if (n > c.n_min && n < c.n_max) {
          const double expected = chain_recurrence_step(c.bend(n - 1), c.bend(n), f.delta);
          rec_gauge.residual(c.bend(n + 1) - expected,
                             tol.recurrence * std::max(1.0, std::abs(expected)),
                             chain_id(c, n));
        }
        if (n < c.n_max) {
          const double bm = c.bend(n);
          const double bm1 = c.bend(n + 1);
          for (int j = c.n_min; j <= c.n_max; ++j) {
            anchor_gauge.residual(anchored_form(bm, bm1, f.delta, n, j) - c.bend(j),
                                  tol.anchor_rel * std::max(1.0, std::abs(c.bend(j))),
                                  chain_id(c, j));
          }
        }

        // tangency to neighbors and to both bounding circles; pairs of
        // parallel lines touch at infinity, which counts
        if (n < c.n_max) {
          const auto& g1 = c.member(n);
          const auto& g2 = c.member(n + 1);
          const Tangency t = tangent(g1, g2, pair_tol(g1, g2, tol.geometry));
          tang_gauge.expect(t.kind != TangencyKind::none, chain_id(c, n) + " ~ n+1");
        }
        for (const GeneralizedCircle& bound : c.bounding) {
          const auto& g = c.member(n);
          const Tangency t = tangent(g, bound, pair_tol(g, bound, tol.geometry));
          tang_gauge.expect(t.kind != TangencyKind::none, chain_id(c, n) + " ~ bound");
        }
        if (c.member(n).is_circle()) {
          const double scale = std::max(1.0, scale_of(c.member(n)));
          off_gauge.expect(distance(c.member(n), Point{0.0, 0.0}) > tol.geometry * scale,
                           chain_id(c, n));
        }

        if (n < c.n_max) {
          const DescartesQuad quad = region_bends(c, n);
          const double magnitude = std::abs(quad.bends[0]) + std::abs(quad.bends[1]) +
                                   std::abs(quad.bends[2]) + std::abs(quad.bends[3]);
          desc_gauge.residual(quad.residual, tol.descartes_rel * magnitude * magnitude,
                              chain_id(c, n));
        }
      }

      const std::vector<Point> touch = chain_tangency_points(c);
      if (touch.size() >= 3) {
        const GeneralizedCircle fit = tangency_circle(c);
        const double scale = std::max(1.0, scale_of(fit));
        for (const Point& p : touch)
          cyc_gauge.residual(distance(fit, p), tol.geometry * scale, chain_id(c, 0));
        cyc_gauge.residual(distance(fit, Point{0.0, 0.0}), tol.geometry * scale,
                           chain_id(c, 0) + " carrier");
      }
    }
  }

  out.push_back(law_gauge.take());
  out.push_back(rec_gauge.take());
  out.push_back(anchor_gauge.take());
  out.push_back(desc_gauge.take());
  out.push_back(tang_gauge.take());
  out.push_back(off_gauge.take());
  out.push_back(cyc_gauge.take());
}

void check_shared(const Fabric& f, const VerifyTolerances& tol,
                  std::vector<CheckResult>& out) {
  Gauge gauge("shared-circles");
  const Inversion inv = f.spec.inversion();
  for (const Chain& v : f.v_chains) {
    for (const Chain& h : f.h_chains) {
      std::string where = "v " + std::to_string(v.strip) + " x h " + std::to_string(h.strip);
      try {
        const GeneralizedCircle shared = shared_circle(v, h);
        const GeneralizedCircle direct =
            invert_gcircle(inv, cell_circle(f.spec, v.strip, h.strip), f.spec.d);
        const double t = pair_tol(shared, direct, tol.shared_rel);
        if (shared.is_line() != direct.is_line()) {
          gauge.expect(false, where);
        } else if (shared.is_line()) {
          gauge.residual(std::abs(shared.as_line().offset - direct.as_line().offset), t, where);
        } else {
          gauge.residual(distance(shared.as_circle().center, direct.as_circle().center), t, where);
          gauge.residual(shared.as_circle().radius - direct.as_circle().radius, t, where);
        }
      } catch (const std::exception&) {
        gauge.expect(false, where);
      }
    }
  }
  out.push_back(gauge.take());
}

}  // namespace

VerificationReport verify_fabric(const Fabric& fabric, const VerifyTolerances& tol) {
  VerificationReport report;
  check_frames(fabric, tol, report.checks);
  check_chains(fabric, tol, report.checks);
  check_shared(fabric, tol, report.checks);
  return report;
}

}  // namespace fabric
