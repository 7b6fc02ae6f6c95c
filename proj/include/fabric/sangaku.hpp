#pragma once

// Executable checks for two classical sangaku chain problems:
//
//   * Gumma, 1814: a chain inscribed between two internally tangent
//     semicircles and their common central line satisfies
//     7/r_4 = 2/r_7 + 5/r_1.
//   * Menuma, 1828: with bounding circles of radii 3r and 2r and the
//     largest chain circle of radius r, the seventh circle has radius r/7.
//
// Both follow from the quadratic chain law; the Menuma check is also run
// against circles actually constructed by inversion.

#include <string>
#include <utility>
#include <vector>

#include "fabric/engine.hpp"

namespace fabric {

struct SangakuReport {
  std::string problem;
  std::vector<std::pair<std::string, double>> quantities;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;       // lhs - rhs
  bool precondition_ok = true;
  std::string diagnostic;
  bool pass = false;           // |lhs-rhs| <= 1e-9 * max(1, |lhs|, |rhs|), precondition held

  std::string to_text() const;
  static std::string csv_header();
  std::string to_csv_row() const;
};

/// Gumma identity 7*kappa_4 = 2*kappa_7 + 5*kappa_1 on the chain anchored
/// at (kappa0, kappa1). It holds exactly when D = kappa1 - kappa0 = 0 (the
/// chain contains a pair of touching congruent circles); otherwise the
/// report fails with residual 9D and a diagnostic.
SangakuReport verify_gumma(double kappa0, double kappa1, double delta);
/// Congruent-pair form: kappa1 = kappa0.
SangakuReport verify_gumma(double kappa0, double delta);

/// Menuma chain by the closed form: bends a = 1/(3r), b = 1/(2r) give
/// Delta = 1/(6r); symmetry makes D = -Delta and kappa_0 = 7/(6r); then
/// kappa_7 = 7/r.
SangakuReport verify_menuma(double r);

/// The same chain built from actual circle geometry: bounding circles of
/// radii 3r and 2r internally tangent at the carrier, rectified to a grid
/// strip whose inscribed circles invert onto the chain. Member 1 is the
/// largest circle (radius r, centered on the central line); members run
/// from 2-count to count.
Chain construct_menuma_geometry(double r, int count);

}  // namespace fabric
