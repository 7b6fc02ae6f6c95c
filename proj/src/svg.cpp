#include "fabric/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "fabric/format.hpp"

namespace fabric {

RenderStyle RenderStyle::for_spec(const GridSpec& spec) {
  RenderStyle style;
  style.viewport = Viewport{-2.0 * spec.r, -2.0 * spec.r, 2.0 * spec.r, 2.0 * spec.r};
  return style;
}

namespace {

struct Segment {
  Point a;
  Point b;
};

// Clips the infinite line to the viewport rectangle (Liang-Barsky on the
// parametric form around the point of the line closest to the viewport
// center).
std::optional<Segment> clip_line(const Line& line, const Viewport& vp) {
  const Point center{0.5 * (vp.x0 + vp.x1), 0.5 * (vp.y0 + vp.y1)};
  const Point p0 = center + (line.offset - dot(line.normal, center)) * line.normal;
  const Point dir = perp(line.normal);

  double t_lo = -std::numeric_limits<double>::infinity();
  double t_hi = std::numeric_limits<double>::infinity();
  auto slab = [&](double origin, double velocity, double lo, double hi) {
    if (std::abs(velocity) < 1e-300) return origin >= lo && origin <= hi;
    double t0 = (lo - origin) / velocity;
    double t1 = (hi - origin) / velocity;
    if (t0 > t1) std::swap(t0, t1);
    t_lo = std::max(t_lo, t0);
    t_hi = std::min(t_hi, t1);
    return t_lo <= t_hi;
  };
  if (!slab(p0.x, dir.x, vp.x0, vp.x1)) return std::nullopt;
  if (!slab(p0.y, dir.y, vp.y0, vp.y1)) return std::nullopt;
  if (!(t_lo <= t_hi) || !std::isfinite(t_lo) || !std::isfinite(t_hi)) return std::nullopt;
  return Segment{p0 + t_lo * dir, p0 + t_hi * dir};
}

bool bbox_intersects(const Circle& c, const Viewport& vp) {
  return c.center.x + c.radius >= vp.x0 && c.center.x - c.radius <= vp.x1 &&
         c.center.y + c.radius >= vp.y0 && c.center.y - c.radius <= vp.y1;
}

class SvgWriter {
 public:
  SvgWriter(std::ostringstream& out, const Viewport& vp) : out_(out), vp_(vp) {}

  void element(const GeneralizedCircle& g) {
    if (g.is_circle()) {
      const Circle& c = g.as_circle();
      if (!bbox_intersects(c, vp_)) return;
      out_ << "    <circle cx=\"" << format_double(c.center.x) << "\" cy=\""
           << format_double(c.center.y) << "\" r=\"" << format_double(c.radius) << "\"/>\n";
      return;
    }
    const auto segment = clip_line(g.as_line(), vp_);
    if (!segment) return;
    out_ << "    <line x1=\"" << format_double(segment->a.x) << "\" y1=\""
         << format_double(segment->a.y) << "\" x2=\"" << format_double(segment->b.x)
         << "\" y2=\"" << format_double(segment->b.y) << "\"/>\n";
  }

 private:
  std::ostringstream& out_;
  const Viewport& vp_;
};

}  // namespace

std::string render_svg(const Fabric& fabric, const RenderStyle& style) {
  const Viewport& vp = style.viewport;
  if (!(vp.width() > 0.0) || !(vp.height() > 0.0))
    throw std::invalid_argument("render_svg: viewport must have positive area");
  if (style.width_px <= 0 || style.height_px <= 0)
    throw std::invalid_argument("render_svg: pixel dimensions must be positive");
  const double stroke = style.stroke_width > 0.0
                            ? style.stroke_width
                            : std::min(vp.width(), vp.height()) / 400.0;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << style.width_px
      << "\" height=\"" << style.height_px << "\" viewBox=\"" << format_double(vp.x0) << " "
      << format_double(-vp.y1) << " " << format_double(vp.width()) << " "
      << format_double(vp.height()) << "\">\n";
  // plane coordinates inside, y up
  out << "  <g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\""
      << format_double(stroke) << "\">\n";

  SvgWriter writer(out, vp);

  out << "  <g stroke=\"" << style.frame_color << "\">\n";
  for (const auto* frames : {&fabric.v_frame, &fabric.h_frame})
    for (const FrameCircle& f : *frames) writer.element(f.shape);
  out << "  </g>\n";

  out << "  <g stroke=\"" << style.chain_color << "\">\n";
  for (const auto* chains : {&fabric.v_chains, &fabric.h_chains})
    for (const Chain& c : *chains)
      for (int n = c.n_min; n <= c.n_max; ++n) writer.element(c.member(n));
  out << "  </g>\n";

  out << "  <g stroke=\"" << style.reference_color << "\">\n";
  writer.element(GeneralizedCircle::circle(Point{0.0, 0.0}, fabric.spec.r));
  out << "    <circle cx=\"0\" cy=\"0\" r=\"" << format_double(2.0 * stroke) << "\" fill=\""
      << style.reference_color << "\" stroke=\"none\"/>\n";  // carrier dot
  out << "  </g>\n";

  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace fabric
