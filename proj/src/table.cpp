#include "fabric/table.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fabric/format.hpp"

namespace fabric {

namespace {

constexpr int kDigits = 12;

void append_shape(std::ostringstream& out, const GeneralizedCircle& g) {
  if (g.is_line()) {
    const Line& l = g.as_line();
    const Point foot = l.offset * l.normal;
    out << "line," << format_double(foot.x, kDigits) << "," << format_double(foot.y, kDigits)
        << "," << format_double(std::numeric_limits<double>::infinity(), kDigits);
  } else {
    const Circle& c = g.as_circle();
    out << "circle," << format_double(c.center.x, kDigits) << ","
        << format_double(c.center.y, kDigits) << "," << format_double(c.radius, kDigits);
  }
}

void append_row(std::ostringstream& out, const char* family, Orientation o, int strip,
                int index, double kappa_signed, double kappa_unsigned,
                const GeneralizedCircle& shape) {
  out << family << "," << to_string(o) << "," << strip << "," << index << ","
      << format_double(kappa_signed, kDigits) << "," << format_double(kappa_unsigned, kDigits)
      << ",";
  append_shape(out, shape);
  out << "\n";
}

}  // namespace

std::string curvature_table_csv(const Fabric& fabric) {
  std::ostringstream out;
  out << kTableHeader << "\n";
  for (const auto* frames : {&fabric.v_frame, &fabric.h_frame})
    for (const FrameCircle& f : *frames)
      append_row(out, "frame", f.orientation, f.index, f.index, f.kappa, std::abs(f.kappa),
                 f.shape);
  for (const auto* chains : {&fabric.v_chains, &fabric.h_chains})
    for (const Chain& c : *chains)
      for (int n = c.n_min; n <= c.n_max; ++n)
        append_row(out, "chain", c.orientation, c.strip, n, c.kappa(n), c.kappa(n),
                   c.member(n));
  return out.str();
}

std::vector<TableRow> parse_curvature_table(const std::string& csv) {
  std::vector<TableRow> rows;
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != kTableHeader)
    throw std::invalid_argument("curvature table: bad header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream cells(line);
    std::string cell;
    std::vector<std::string> fields;
    while (std::getline(cells, cell, ',')) fields.push_back(cell);
    if (fields.size() != 10) throw std::invalid_argument("curvature table: bad row: " + line);
    TableRow row;
    row.family = fields[0];
    row.orientation = fields[1];
    row.strip = std::stoi(fields[2]);
    row.index = std::stoi(fields[3]);
    row.kappa_signed = std::stod(fields[4]);
    row.kappa_unsigned = std::stod(fields[5]);
    row.shape = fields[6];
    row.cx = std::stod(fields[7]);
    row.cy = std::stod(fields[8]);
    row.radius = std::stod(fields[9]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fabric
