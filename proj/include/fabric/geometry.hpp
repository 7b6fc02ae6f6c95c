#pragma once

// Plane inversive geometry: points, generalized circles (circle-or-line),
// the inversion map, and the tangency/orthogonality predicates everything
// else in the library is built on. All types are immutable values and all
// operations are pure.

#include <stdexcept>
#include <variant>

namespace fabric {

/// Single default tolerance reused by every predicate in the library.
inline constexpr double kDefaultTol = 1e-9;

/// Objects whose distance from the inversion center is below
/// kCarrierEps * scale are treated as passing through it. `scale` is the
/// grid spacing when a grid provides context, 1.0 otherwise.
inline constexpr double kCarrierEps = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline Point operator-(Point p) { return {-p.x, -p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
/// Counterclockwise quarter turn.
inline Point perp(Point p) { return {-p.y, p.x}; }

double norm(Point p);
double distance(Point a, Point b);
bool is_finite(Point p);

/// The straight line { p : dot(normal, p) == offset }. The normal is kept
/// at unit length; its orientation is chosen by whoever produced the line
/// and carries sign information (grid lines orient normals along +x / +y).
struct Line {
  Point normal;
  double offset = 0.0;
};

struct Circle {
  Point center;
  double radius = 0.0;  // > 0
};

/// A circle or a straight line -- the object class closed under inversion.
class GeneralizedCircle {
 public:
  /// Builds a line, normalizing `normal` to unit length.
  /// Throws std::invalid_argument on a zero or non-finite normal.
  static GeneralizedCircle line(Point normal, double offset);
  /// Throws std::invalid_argument unless radius > 0 and everything is finite.
  static GeneralizedCircle circle(Point center, double radius);

  bool is_line() const { return std::holds_alternative<Line>(rep_); }
  bool is_circle() const { return std::holds_alternative<Circle>(rep_); }
  const Line& as_line() const { return std::get<Line>(rep_); }
  const Circle& as_circle() const { return std::get<Circle>(rep_); }

  /// 0 for lines, 1/radius for circles.
  double curvature() const;

 private:
  explicit GeneralizedCircle(Line l) : rep_(l) {}
  explicit GeneralizedCircle(Circle c) : rep_(c) {}
  std::variant<Line, Circle> rep_;
};

double curvature(const GeneralizedCircle& g);

/// Unsigned distance from p to the point set of g.
double distance(const GeneralizedCircle& g, Point p);

/// Magnitude of g, used to scale relative tolerances: |offset| for a line,
/// |center| + radius for a circle.
double scale_of(const GeneralizedCircle& g);

/// A point of g: t is an angle for circles and an arclength parameter
/// (relative to the foot of the origin perpendicular) for lines.
Point point_at(const GeneralizedCircle& g, double t);

/// Raised when a point to invert coincides with the inversion center.
struct CarrierPointError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The inversion map defined by a reference circle centered at the carrier.
struct Inversion {
  Point center;
  double radius = 1.0;
};

/// q on the ray from the center through p with |center-p|*|center-q| = r^2.
/// Throws CarrierPointError when |p - center| <= kCarrierEps * scale.
Point invert_point(const Inversion& inv, Point p, double scale = 1.0);

/// Image of a generalized circle. Case analysis: a line through the center
/// maps to itself, a line off the center to a circle through it (curvature
/// 2|c|/r^2 for signed line distance c), a circle through the center to a
/// line, any other circle to a circle of curvature ||m|^2 - rho^2|/(r^2 rho).
GeneralizedCircle invert_gcircle(const Inversion& inv, const GeneralizedCircle& g,
                                 double scale = 1.0);

enum class TangencyKind { none, at_point, parallel };

/// Result of the tangency test. `parallel` flags two parallel lines, which
/// touch only at infinity and so carry no finite point.
struct Tangency {
  TangencyKind kind = TangencyKind::none;
  Point point;  // valid only when kind == at_point
  explicit operator bool() const { return kind == TangencyKind::at_point; }
};

Tangency tangent(const GeneralizedCircle& g1, const GeneralizedCircle& g2,
                 double tol = kDefaultTol);

/// Circle-circle: | |c1-c2|^2 - (r1^2+r2^2) | < tol * max(1, |c1-c2|^2).
/// Line-circle: the line passes through the circle center within tol.
/// Line-line: normals perpendicular within tol.
bool orthogonal(const GeneralizedCircle& g1, const GeneralizedCircle& g2,
                double tol = kDefaultTol);

/// Circle through three points; a line when they are collinear within tol
/// (relative to the triangle's extent).
GeneralizedCircle through_three_points(Point a, Point b, Point c,
                                       double tol = kDefaultTol);

}  // namespace fabric
