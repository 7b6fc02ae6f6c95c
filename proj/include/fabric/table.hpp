#pragma once

// Curvature-table export: one CSV row per fabric object. Numbers carry 12
// significant digits, '.' decimal separator, '\n' newlines, fixed header.
// Line-shaped objects report the foot of the carrier perpendicular as
// (cx, cy) and radius inf.

#include <string>
#include <vector>

#include "fabric/engine.hpp"

namespace fabric {

inline constexpr const char* kTableHeader =
    "family,orientation,strip,index,kappa_signed,kappa_unsigned,shape,cx,cy,radius";

std::string curvature_table_csv(const Fabric& fabric);

struct TableRow {
  std::string family;
  std::string orientation;
  int strip = 0;
  int index = 0;
  double kappa_signed = 0.0;
  double kappa_unsigned = 0.0;
  std::string shape;
  double cx = 0.0;
  double cy = 0.0;
  double radius = 0.0;
};

/// Parses text produced by curvature_table_csv. Throws std::invalid_argument
/// on a malformed table.
std::vector<TableRow> parse_curvature_table(const std::string& csv);

}  // namespace fabric
