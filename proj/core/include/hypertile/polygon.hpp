#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hypertile/hyperbolic.hpp"

namespace hypertile {

/// Closed geodesic polygon. Vertices are listed counterclockwise; side i
/// joins vertex i to vertex i+1 (cyclically). Side lengths and interior
/// angles are measured once at construction.
class Polygon {
 public:
  /// Throws DomainError for fewer than three vertices or coincident
  /// consecutive vertices.
  explicit Polygon(std::vector<HPoint> vertices);

  std::size_t size() const { return vertices_.size(); }
  const HPoint& vertex(std::size_t i) const { return vertices_[i % size()]; }
  const std::vector<HPoint>& vertices() const { return vertices_; }

  double side_length(std::size_t i) const { return sides_[i % size()]; }
  double interior_angle(std::size_t i) const { return angles_[i % size()]; }
  const std::vector<double>& side_lengths() const { return sides_; }
  const std::vector<double>& interior_angles() const { return angles_; }

  std::size_t next(std::size_t i) const { return (i + 1) % size(); }
  std::size_t prev(std::size_t i) const { return (i + size() - 1) % size(); }

 private:
  std::vector<HPoint> vertices_;
  std::vector<double> sides_;
  std::vector<double> angles_;
};

/// Open equilateral chain V_1 ... V_{n+1}.
struct Chain {
  std::vector<HPoint> vertices;
  double side = 0.0;
  /// Prescribed interior angles at V_2 ... V_n.
  std::vector<double> angles;
};

struct ClosureTolerance {
  double position = 1e-10;
  double heading = kEpsAngle;
};

/// Turtle-walk realization: side i runs from vertex i to vertex i+1 and
/// angles[i] is the interior angle at vertex i. Throws ClosureError when the
/// walk does not return to its starting pose.
Polygon from_side_angle_data(std::span<const double> sides,
                             std::span<const double> angles,
                             ClosureTolerance tol = {});

/// Gauss-Bonnet area (n-2)pi - sum of interior angles. Throws DomainError
/// for self-intersecting or clockwise polygons.
double area(const Polygon& p);

/// Signed area by a fan of geodesic triangles from vertex 0. Positive for
/// counterclockwise simple polygons; independent of the angle measurement.
double fan_area(const Polygon& p);

double perimeter(const Polygon& p);

/// True when the closed geodesic segments [a, b] and [c, d] share a point.
bool segments_intersect(const HPoint& a, const HPoint& b, const HPoint& c,
                        const HPoint& d);

/// No two non-adjacent edges meet; adjacent edges share only their common
/// vertex.
bool is_embedded(const Polygon& p);
bool is_embedded(const Chain& c);

/// Strict convexity up to kEpsAngle: every angle below pi.
bool is_convex(const Polygon& p);

struct ConcaveReport {
  /// Vertices with |angle - pi| <= kEpsAngle (count l1).
  std::vector<std::size_t> straight;
  /// Vertices with angle > pi + kEpsAngle (count l2).
  std::vector<std::size_t> reflex;
};

ConcaveReport concave_vertices(const Polygon& p);

/// Drops every vertex of measure pi. Throws DegeneracyError if fewer than
/// three would remain.
Polygon reduce_equivalent(const Polygon& p);

/// Hyperbolic convex hull, computed as a planar hull in the Klein model.
/// Collinear hull points are dropped.
Polygon convex_hull(const Polygon& p);

/// Replaces the boundary from vertex i_from forward to vertex i_to by the
/// geodesic between them. Retained vertices keep their relative order.
/// Throws GeometryError if the result self-intersects and DegeneracyError if
/// fewer than three vertices would remain.
Polygon flatten(const Polygon& p, std::size_t i_from, std::size_t i_to);

/// Flattens two complementary vertices (angles summing to 2pi with
/// congruent incident edges). Throws ContractError when the pair is not
/// complementary and GeometryError when the result self-intersects.
Polygon flatten_complementary_pair(const Polygon& p, std::size_t v,
                                   std::size_t w);

/// Inserts `count` equally spaced vertices of measure pi on side `edge`.
Polygon insert_degenerate_vertices(const Polygon& p, std::size_t edge,
                                   int count);

/// Inserts `count` equally spaced vertices on every side.
Polygon insert_degenerate_vertices_all(const Polygon& p, int count);

/// Same side and angle sequences up to cyclic relabeling, within tol.
bool congruent(const Polygon& a, const Polygon& b, double tol);

}  // namespace hypertile
