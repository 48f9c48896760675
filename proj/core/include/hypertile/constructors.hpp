#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hypertile/hyperbolic.hpp"
#include "hypertile/polygon.hpp"

namespace hypertile {

/// Parameter bundle for the equilateral even-gon tile of prescribed area.
struct TileParams {
  int n = 0;
  double area = 0.0;
  double sigma = 0.0;
  /// Either an integer or the fallback 4/(n-2).
  double m = 0.0;
  bool m_is_integer = false;
  Angle theta1;
  Angle theta;
  /// (n, A) = (6, 3pi): the regular hexagon with pi/6 angles is used and the
  /// sigma/m relations do not apply.
  bool regular_hexagon = false;
};

struct IsoTriangleParams {
  double area = 0.0;
  int k = 0;
  Angle theta1;  // apex
  Angle theta2;  // base angles, theta3 = theta2
};

struct IsoTriangleTile {
  Polygon triangle;
  IsoTriangleParams params;
};

struct ChainReport {
  Chain chain;
  /// Interior angles at V_1 and V_{n+1} of the closed-up (n+1)-gon.
  double first_angle = 0.0;
  double last_angle = 0.0;
  double endpoint_angle_sum = 0.0;
  bool embedded = false;
};

/// Equilateral chain with side `side` and interior angles at V_2 ... V_n.
/// Embeddedness of the closed-up polygon is reported, not required.
ChainReport build_chain(double side, std::span<const double> angles);

struct EvenGonResult {
  Polygon polygon;
  double side = 0.0;
  /// Distinct roots of the endpoint-angle equation seen during the scan.
  int roots_found = 0;
};

/// Convex equilateral 2n-gon with angles (t_1..t_n, t_1..t_n) for
/// 0 < t_i <= pi and sum t_i < (n-1)pi. The common side length is the
/// largest root of m(V_1) + m(V_{n+1}) = t_1 on the chain with angles
/// t_2..t_n. Throws DomainError, ConstructionError or GeometryError.
EvenGonResult equilateral_even_gon(std::span<const double> half_angles);

/// Regular n-gon centred at the origin with vertex 0 on the +x1 axis.
Polygon regular_polygon(int n, Angle theta);

/// Isosceles triangle tile of area A in (0, pi). With no k the smallest
/// integer k > pi / (2pi - 2A) giving theta1 < theta2 is used.
IsoTriangleTile isosceles_triangle_tile(double area,
                                        std::optional<int> k = std::nullopt);

/// Rhombus of area A in (0, 2pi): two isosceles tiles of area A/2 glued
/// along their base.
Polygon rhombic_tile(double area);

/// Parameters for even n >= 6 and (n-2)pi/2 < A < (n-2)pi.
TileParams equilateral_tile_params(int n, double area);

/// Strictly convex equilateral n-gon of area A built from the parameters.
Polygon equilateral_tile(int n, double area);

/// Angle list of the equilateral tile: theta1 at positions 0 and n/2.
std::vector<double> tile_angles(const TileParams& params);

}  // namespace hypertile
