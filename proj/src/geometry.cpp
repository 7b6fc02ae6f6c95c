#include "fabric/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace fabric {

double norm(Point p) { return std::hypot(p.x, p.y); }

double distance(Point a, Point b) { return norm(a - b); }

bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

GeneralizedCircle GeneralizedCircle::line(Point normal, double offset) {
  if (!is_finite(normal) || !std::isfinite(offset))
    throw std::invalid_argument("line: non-finite parameters");
  const double len = norm(normal);
  if (len == 0.0) throw std::invalid_argument("line: zero normal");
  return GeneralizedCircle(Line{(1.0 / len) * normal, offset});
}

GeneralizedCircle GeneralizedCircle::circle(Point center, double radius) {
  if (!is_finite(center) || !std::isfinite(radius))
    throw std::invalid_argument("circle: non-finite parameters");
  if (radius <= 0.0) throw std::invalid_argument("circle: radius must be > 0");
  return GeneralizedCircle(Circle{center, radius});
}

double GeneralizedCircle::curvature() const {
  return is_line() ? 0.0 : 1.0 / as_circle().radius;
}

double curvature(const GeneralizedCircle& g) { return g.curvature(); }

double distance(const GeneralizedCircle& g, Point p) {
  if (g.is_line()) {
    const Line& l = g.as_line();
    return std::abs(dot(l.normal, p) - l.offset);
  }
  const Circle& c = g.as_circle();
  return std::abs(distance(c.center, p) - c.radius);
}

double scale_of(const GeneralizedCircle& g) {
  if (g.is_line()) return std::abs(g.as_line().offset);
  const Circle& c = g.as_circle();
  return norm(c.center) + c.radius;
}

Point point_at(const GeneralizedCircle& g, double t) {
  if (g.is_line()) {
    const Line& l = g.as_line();
    return l.offset * l.normal + t * perp(l.normal);
  }
  const Circle& c = g.as_circle();
  return c.center + c.radius * Point{std::cos(t), std::sin(t)};
}

Point invert_point(const Inversion& inv, Point p, double scale) {
  const Point v = p - inv.center;
  const double d2 = dot(v, v);
  const double eps = kCarrierEps * scale;
  if (d2 <= eps * eps)
    throw CarrierPointError("invert_point: point coincides with the carrier");
  return inv.center + (inv.radius * inv.radius / d2) * v;
}

GeneralizedCircle invert_gcircle(const Inversion& inv, const GeneralizedCircle& g,
                                 double scale) {
  const double r2 = inv.radius * inv.radius;
  const double eps = kCarrierEps * scale;
  if (g.is_line()) {
    const Line& l = g.as_line();
    // signed distance of the line from the carrier, along the normal
    const double c = l.offset - dot(l.normal, inv.center);
    if (std::abs(c) <= eps) return g;  // line through the carrier is fixed as a set
    const Point center = inv.center + (r2 / (2.0 * c)) * l.normal;
    return GeneralizedCircle::circle(center, r2 / (2.0 * std::abs(c)));
  }
  const Circle& c = g.as_circle();
  const Point m = c.center - inv.center;
  const double dist = norm(m);
  if (std::abs(dist - c.radius) <= eps) {
    // circle through the carrier: image is the line through the inverse of
    // the far intersection point, perpendicular to the center ray
    const Point n = (1.0 / dist) * m;
    return GeneralizedCircle::line(n, dot(n, inv.center) + r2 / (dist + c.radius));
  }
  const double power = dist * dist - c.radius * c.radius;  // power of the carrier
  const double s = r2 / power;
  return GeneralizedCircle::circle(inv.center + s * m, std::abs(s) * c.radius);
}

namespace {

Tangency tangent_circle_circle(const Circle& a, const Circle& b, double tol) {
  const double d = distance(a.center, b.center);
  if (std::abs(d - (a.radius + b.radius)) < tol) {
    const Point u = (1.0 / d) * (b.center - a.center);
    return {TangencyKind::at_point, a.center + a.radius * u};
  }
  if (d > tol && std::abs(d - std::abs(a.radius - b.radius)) < tol) {
    const Point u = (1.0 / d) * (b.center - a.center);
    const Point at = a.radius >= b.radius ? a.center + a.radius * u
                                          : a.center - a.radius * u;
    return {TangencyKind::at_point, at};
  }
  return {};
}

Tangency tangent_line_circle(const Line& l, const Circle& c, double tol) {
  const double signed_dist = dot(l.normal, c.center) - l.offset;
  if (std::abs(std::abs(signed_dist) - c.radius) >= tol) return {};
  return {TangencyKind::at_point, c.center - signed_dist * l.normal};
}

}  // namespace

Tangency tangent(const GeneralizedCircle& g1, const GeneralizedCircle& g2,
                 double tol) {
  if (g1.is_line() && g2.is_line()) {
    const bool parallel =
        std::abs(cross(g1.as_line().normal, g2.as_line().normal)) < tol;
    return parallel ? Tangency{TangencyKind::parallel, {}} : Tangency{};
  }
  if (g1.is_line()) return tangent_line_circle(g1.as_line(), g2.as_circle(), tol);
  if (g2.is_line()) return tangent_line_circle(g2.as_line(), g1.as_circle(), tol);
  return tangent_circle_circle(g1.as_circle(), g2.as_circle(), tol);
}

bool orthogonal(const GeneralizedCircle& g1, const GeneralizedCircle& g2,
                double tol) {
  if (g1.is_line() && g2.is_line())
    return std::abs(dot(g1.as_line().normal, g2.as_line().normal)) < tol;
  if (g1.is_line() || g2.is_line()) {
    const Line& l = (g1.is_line() ? g1 : g2).as_line();
    const Circle& c = (g1.is_line() ? g2 : g1).as_circle();
    return std::abs(dot(l.normal, c.center) - l.offset) < tol;
  }
  const Circle& a = g1.as_circle();
  const Circle& b = g2.as_circle();
  const Point v = b.center - a.center;
  const double d2 = dot(v, v);
  return std::abs(d2 - (a.radius * a.radius + b.radius * b.radius)) <
         tol * std::max(1.0, d2);
}

GeneralizedCircle through_three_points(Point a, Point b, Point c, double tol) {
  const Point ab = b - a;
  const Point ac = c - a;
  const double extent = std::max({norm(ab), norm(ac), norm(c - b)});
  if (std::abs(cross(ab, ac)) <= tol * extent * extent) {
    // collinear: return the line through the two farthest-apart points
    Point dir = norm(ab) >= norm(ac) ? ab : ac;
    if (norm(c - b) > std::max(norm(ab), norm(ac))) dir = c - b;
    const Point n = (1.0 / norm(perp(dir))) * perp(dir);
    return GeneralizedCircle::line(n, dot(n, a));
  }
  const double den = 2.0 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
  const double a2 = dot(a, a);
  const double b2 = dot(b, b);
  const double c2 = dot(c, c);
  const Point center{(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / den,
                     (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / den};
  const double radius = (distance(center, a) + distance(center, b) + distance(center, c)) / 3.0;
  return GeneralizedCircle::circle(center, radius);
}

}  // namespace fabric
