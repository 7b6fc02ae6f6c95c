#pragma once

// The source square grid filled with inscribed circles, and the symmetry
// class of the fabric it produces under inversion.
//
// Coordinate convention used throughout the library: the carrier A is the
// origin. Vertical grid lines sit at x = k*d - ax, horizontal ones at
// y = m*d - ay (k, m integers), so the cell C(k, m) spans
// [k*d - ax, (k+1)*d - ax] x [m*d - ay, (m+1)*d - ay] and its inscribed
// circle has center ((k + 1/2)*d - ax, (m + 1/2)*d - ay) and radius d/2.
// Increasing k moves in +x, increasing m in +y.

#include <string>

#include "fabric/geometry.hpp"

namespace fabric {

enum class Orientation { vertical, horizontal };
const char* to_string(Orientation o);

/// Point groups a fabric can have, by the carrier position in the grid:
/// D4 at a cell vertex or center, D2 at the midpoint of a cell side, D1
/// elsewhere on a side or diagonal line, C1 otherwise.
enum class SymmetryGroup { D4, D2, D1, C1 };
const char* to_string(SymmetryGroup g);

struct GridSpec {
  double d = 1.0;   // grid spacing
  double ax = 0.0;  // carrier offset within a cell, in [0, d)
  double ay = 0.0;
  double r = 1.0;   // reference-circle radius

  /// Validates d > 0, r > 0, finite offsets; reduces offsets mod d into [0, d).
  static GridSpec make(double d, double ax, double ay, double r);

  Inversion inversion() const { return Inversion{Point{0.0, 0.0}, r}; }
};

GeneralizedCircle grid_line(const GridSpec& spec, Orientation o, int index);
GeneralizedCircle cell_circle(const GridSpec& spec, int k, int m);

/// Classification tolerance is an absolute length; the default is 1e-9 * d.
SymmetryGroup classify_symmetry(const GridSpec& spec, double tol);
SymmetryGroup classify_symmetry(const GridSpec& spec);

/// Flat key=value form (d, ax, ay, r), one pair per line.
std::string to_config(const GridSpec& spec);
GridSpec grid_spec_from_config(const std::string& text);

}  // namespace fabric
