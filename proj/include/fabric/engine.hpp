#pragma once

// Frames and chains of a fabric of kissing circles, and the curvature laws
// that govern them:
//
//   * signed frame curvatures form an arithmetic bi-sequence with common
//     difference Delta = 2d/r^2;
//   * chain curvatures form a quadratic bi-sequence
//     kappa_n = kappa_0 + D*n + Delta*n*(n-1) with D = kappa_1 - kappa_0;
//   * every region quad satisfies the Descartes relation
//     (sum of bends)^2 = 2 * (sum of squared bends);
//   * six integer curvatures in the right places make every curvature in
//     the fabric an integer.

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fabric/grid.hpp"

namespace fabric {

/// Raised when an index lies outside the materialized window.
struct WindowMissError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Raised by descartes_fourth when the three bends admit no real solution.
struct ComplexRootsError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Inclusive index range over which the doubly infinite fabric is realized.
struct Window {
  int lo = -6;
  int hi = 6;
  bool empty() const { return lo > hi; }
  int count() const { return empty() ? 0 : hi - lo + 1; }
};

/// Image of one grid line: a circle through the carrier (or a line, when
/// the source line passes through the carrier). kappa is the signed
/// curvature 2c/r^2, c being the signed offset of the source line; its sign
/// matches the side of the carrier the circle lies on.
struct FrameCircle {
  Orientation orientation = Orientation::vertical;
  int index = 0;
  GeneralizedCircle shape = GeneralizedCircle::line(Point{1.0, 0.0}, 0.0);
  double kappa = 0.0;
};

/// Image of one strip's column (or row) of inscribed circles: each member
/// tangent to its two neighbors and to the two bounding frame circles.
/// Member n is the image of the cell circle with in-strip grid index n.
struct Chain {
  Orientation orientation = Orientation::vertical;
  int strip = 0;
  int n_min = 0;
  int n_max = -1;
  std::vector<GeneralizedCircle> members;
  std::vector<double> kappas;  // unsigned curvatures, one per member
  std::array<GeneralizedCircle, 2> bounding = {
      GeneralizedCircle::line(Point{1.0, 0.0}, 0.0),
      GeneralizedCircle::line(Point{1.0, 0.0}, 0.0)};

  bool has(int n) const { return n >= n_min && n <= n_max; }
  const GeneralizedCircle& member(int n) const;
  double kappa(int n) const;

  /// Curvature with the region sign: negative iff the member is a circle
  /// that strictly encloses the carrier (and with it the rest of the
  /// fabric). The bend sequence, not the unsigned one, is the quadratic
  /// bi-sequence.
  double bend(int n) const;
};

struct Fabric {
  GridSpec spec;
  Window window;
  std::vector<FrameCircle> v_frame;
  std::vector<FrameCircle> h_frame;
  std::vector<Chain> v_chains;  // strips window.lo .. window.hi-1
  std::vector<Chain> h_chains;
  double delta = 0.0;  // 2d/r^2

  const FrameCircle& frame(Orientation o, int index) const;
  const Chain& chain(Orientation o, int strip) const;
};

/// Frames over window indices, chains over strips [lo, hi-1] with member
/// indices over the window. A carrier sitting exactly on a grid line or
/// cell circle is not an error; the affected image is emitted as a line.
Fabric build_fabric(const GridSpec& spec, Window window);

/// Common difference of the frame curvature bi-sequence: 2d/r^2.
double frame_delta(const GridSpec& spec);

/// Signed frame curvature 2c/r^2 with c = index*d - ax (vertical) or
/// index*d - ay (horizontal); 0 when the source line passes through the
/// carrier.
double frame_kappa(const GridSpec& spec, Orientation o, int index);

/// kappa_0 + (kappa_1 - kappa_0)*n + delta*n*(n-1), for any integer n.
double chain_closed_form(double kappa0, double kappa1, double delta, long long n);

/// Next term of the chain recurrence: 2*(kappa_cur + delta) - kappa_prev.
double chain_recurrence_step(double kappa_prev, double kappa_cur, double delta);

/// Both curvatures completing three mutually tangent bends to a Descartes
/// quad: (k1+k2+k3) -+ 2*sqrt(k1 k2 + k2 k3 + k3 k1), ascending. Their sum
/// is 2(k1+k2+k3). A slightly negative discriminant is clamped to zero;
/// below -tol*max(1, k1^2+k2^2+k3^2) throws ComplexRootsError.
std::pair<double, double> descartes_fourth(double k1, double k2, double k3,
                                           double tol = kDefaultTol);

/// Four signed bends of a Descartes configuration and the residual of the
/// Descartes relation, (sum)^2 - 2*(sum of squares), evaluated as written.
struct DescartesQuad {
  std::array<double, 4> bends{};  // (bounding lo, bounding hi, member n, member n+1)
  double residual = 0.0;
};

double descartes_residual(const std::array<double, 4>& bends);

/// Bends of the region quad around members n and n+1. Lines contribute 0;
/// a circle that geometrically contains the other three enters with its
/// sign flipped (containment: |c_B - c| + r <= r_B + tol*scale).
DescartesQuad region_bends(const Chain& chain, int n, double tol = kDefaultTol);
DescartesQuad region_bends(const Fabric& fabric, const Chain& chain, int n);

/// True iff all six curvatures (of s', t', gamma_0, gamma_1, alpha, beta in
/// the integrality condition) are integers within tol.
bool check_integral_premise(const std::array<double, 6>& kappas, double tol);

/// The six premise curvatures read off a fabric: bounding frames of the
/// vertical chain at strip s (s = 0 clamped into the window), its members
/// n and n+1, and the next members of the two orthogonal horizontal chains.
std::array<double, 6> premise_kappas(const Fabric& fabric);

struct IntegralityEntry {
  std::string family;  // "frame" | "chain"
  Orientation orientation = Orientation::vertical;
  int strip = 0;   // line index for frames
  int index = 0;   // member index for chains, == strip for frames
  double kappa = 0.0;
  double deviation = 0.0;  // distance to the nearest integer
};

struct IntegralityReport {
  std::vector<IntegralityEntry> entries;
  double tol = 0.0;
  double max_deviation = 0.0;
  bool integral = false;
};

/// Every frame and chain curvature in the window with its distance to the
/// nearest integer; integral iff all distances are <= tol.
IntegralityReport verify_integral(const Fabric& fabric, double tol = 1e-6);

/// Finite tangency points between consecutive members, in member order.
/// Parallel-line pairs (touching at infinity) contribute no point.
std::vector<Point> chain_tangency_points(const Chain& chain, double tol = kDefaultTol);

/// The circle through the chain's tangency points (fitted through the first
/// three); in a fabric it passes through the carrier. Collinear points
/// yield a line.
GeneralizedCircle tangency_circle(const Chain& chain);

/// The member shared by a vertical and a horizontal chain of one fabric:
/// the image of cell (v.strip, h.strip). Throws WindowMissError when the
/// shared index is outside either window.
GeneralizedCircle shared_circle(const Chain& v_chain, const Chain& h_chain);

}  // namespace fabric
