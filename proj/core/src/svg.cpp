#include "hypertile/svg.hpp"

#include <cmath>
#include <sstream>

namespace hypertile {

namespace {

// Below this |a x b| the geodesic is drawn as a chord.
constexpr double kChordCross = 1e-12;

struct Canvas {
  double half;
  double scale;
  double x(const Vec2& p) const { return half + scale * p.x; }
  double y(const Vec2& p) const { return half - scale * p.y; }
};

}  // namespace

DiskGeodesic disk_geodesic(Vec2 a, Vec2 b) {
  DiskGeodesic g;
  g.from = a;
  g.to = b;
  double cross = a.x * b.y - a.y * b.x;
  if (std::abs(cross) < kChordCross) return g;
  // The orthogonal circle has centre c with c.a = (1 + |a|^2)/2 and likewise
  // for b.
  double ra = 0.5 * (1.0 + a.x * a.x + a.y * a.y);
  double rb = 0.5 * (1.0 + b.x * b.x + b.y * b.y);
  g.center = {(ra * b.y - rb * a.y) / cross, (a.x * rb - b.x * ra) / cross};
  g.radius = std::sqrt(g.center.x * g.center.x + g.center.y * g.center.y - 1.0);
  g.straight = false;
  // The centre lies beyond the chord, away from the origin, so travel is
  // clockwise about it exactly when the origin is on the left of a -> b.
  g.counterclockwise = cross < 0.0;
  return g;
}

std::string render_svg(const std::vector<Polygon>& polygons,
                       const SvgStyle& style) {
  Canvas c{style.size / 2.0, style.size / 2.0 - style.margin};
  std::ostringstream os;
  os.precision(10);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << style.size << "\" height=\"" << style.size << "\" viewBox=\"0 0 "
     << style.size << ' ' << style.size << "\">\n"
     << "  <circle cx=\"" << c.half << "\" cy=\"" << c.half << "\" r=\""
     << c.scale << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  for (const Polygon& p : polygons) {
    os << "  <path d=\"";
    for (std::size_t i = 0; i < p.size(); ++i) {
      Vec2 a = p.vertex(i).to_poincare();
      Vec2 b = p.vertex(i + 1).to_poincare();
      if (i == 0) os << "M " << c.x(a) << ' ' << c.y(a) << ' ';
      DiskGeodesic g = disk_geodesic(a, b);
      if (g.straight) {
        os << "L " << c.x(b) << ' ' << c.y(b) << ' ';
      } else {
        // Screen y is flipped, so counterclockwise in the disk is sweep 0.
        double r = c.scale * g.radius;
        os << "A " << r << ' ' << r << " 0 0 " << (g.counterclockwise ? 0 : 1)
           << ' ' << c.x(b) << ' ' << c.y(b) << ' ';
      }
    }
    os << "Z\" fill=\"" << style.fill << "\" fill-opacity=\""
       << style.fill_opacity << "\" stroke=\"" << style.stroke
       << "\" stroke-width=\"" << style.stroke_width << "\"/>\n";
    if (style.draw_vertices) {
      for (const HPoint& v : p.vertices()) {
        Vec2 d = v.to_poincare();
        os << "  <circle cx=\"" << c.x(d) << "\" cy=\"" << c.y(d)
           << "\" r=\"2\" fill=\"" << style.stroke << "\"/>\n";
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace hypertile
