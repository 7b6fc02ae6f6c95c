#pragma once

// SVG rendering of fabrics: frames black, chains purple, reference circle
// and carrier red. Lines are drawn as viewport-clipped segments; circles
// are emitted as circle elements regardless of size and left to the
// renderer's clipping. Output is a deterministic function of the inputs.

#include <string>

#include "fabric/engine.hpp"

namespace fabric {

struct Viewport {
  double x0 = -2.0;
  double y0 = -2.0;
  double x1 = 2.0;
  double y1 = 2.0;
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

struct RenderStyle {
  std::string frame_color = "black";
  std::string chain_color = "purple";
  std::string reference_color = "red";
  double stroke_width = 0.0;  // <= 0 selects min(viewport extent)/400
  Viewport viewport;
  int width_px = 800;
  int height_px = 800;

  /// Default styling for a spec: the disk of radius 2r around the carrier,
  /// squared off.
  static RenderStyle for_spec(const GridSpec& spec);
};

std::string render_svg(const Fabric& fabric, const RenderStyle& style);

}  // namespace fabric
