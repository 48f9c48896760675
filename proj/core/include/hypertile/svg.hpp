#pragma once

#include <string>
#include <vector>

#include "hypertile/polygon.hpp"

namespace hypertile {

/// Geodesic between two Poincare-disk points in disk coordinates: either a
/// chord (diameters and near-degenerate pairs) or an arc of the circle
/// orthogonal to the unit circle.
struct DiskGeodesic {
  Vec2 from;
  Vec2 to;
  bool straight = true;
  Vec2 center;
  double radius = 0.0;
  /// Counterclockwise travel around `center` in disk coordinates.
  bool counterclockwise = false;
};

DiskGeodesic disk_geodesic(Vec2 a, Vec2 b);

struct SvgStyle {
  double size = 512.0;
  double margin = 8.0;
  std::string stroke = "#1f3a93";
  std::string fill = "#aac4f0";
  double fill_opacity = 0.5;
  double stroke_width = 1.5;
  bool draw_vertices = true;
};

/// SVG 1.1 document showing the unit disk and each polygon with geodesic
/// edges. Disk y points up; the document flips it.
std::string render_svg(const std::vector<Polygon>& polygons,
                       const SvgStyle& style = {});

}  // namespace hypertile
