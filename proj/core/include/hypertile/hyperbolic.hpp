#pragma once
/**
 * Hyperbolic-plane kernel.
 *
 * Points live on the upper sheet of the hyperboloid -x0^2 + x1^2 + x2^2 = -1
 * in Minkowski space R^{2,1}. Isometries are 3x3 matrices in SO+(2,1).
 * Poincare-disk and Klein coordinates are views only; nothing is stored in
 * them.
 */

#include <array>
#include <cstddef>

#include "hypertile/tolerances.hpp"

namespace hypertile {

/// Interior angle (radians) or signed turning angle.
class Angle {
 public:
  constexpr Angle() = default;
  constexpr explicit Angle(double radians) : radians_(radians) {}
  constexpr double radians() const { return radians_; }

 private:
  double radians_ = 0.0;
};

/// Hyperbolic length, curvature -1.
class Length {
 public:
  constexpr Length() = default;
  constexpr explicit Length(double value) : value_(value) {}
  constexpr double value() const { return value_; }

 private:
  double value_ = 0.0;
};

struct Vec3 {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

/// Minkowski bilinear form with signature (-,+,+).
constexpr double minkowski(const Vec3& a, const Vec3& b) {
  return -a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2;
}

/// Euclidean determinant of the matrix with columns a, b, c.
double det3(const Vec3& a, const Vec3& b, const Vec3& c);

class HPoint {
 public:
  /// The base point (1, 0, 0).
  constexpr HPoint() = default;

  /// Validates the hyperboloid constraint within kEpsPoint (relative to x0^2)
  /// and then renormalizes. Throws DomainError otherwise.
  static HPoint from_coords(double x0, double x1, double x2);

  /// Projects an arbitrary finite (x1, x2) onto the sheet by solving for x0.
  static HPoint lift(double x1, double x2);

  /// Point at hyperbolic distance r from the origin in direction phi.
  static HPoint from_polar(double r, double phi);

  static HPoint from_klein(Vec2 k);
  static HPoint from_poincare(Vec2 d);

  constexpr double x0() const { return v_.x0; }
  constexpr double x1() const { return v_.x1; }
  constexpr double x2() const { return v_.x2; }
  constexpr const Vec3& vec() const { return v_; }

  Vec2 to_klein() const;
  Vec2 to_poincare() const;

  /// |<p,p> + 1|; zero for an exact hyperboloid point.
  double constraint_residual() const;

  /// Recomputes x0 from (x1, x2).
  HPoint renormalized() const;

 private:
  friend class Isometry;
  constexpr explicit HPoint(Vec3 v) : v_(v) {}

  Vec3 v_{1.0, 0.0, 0.0};
};

/// Element of SO+(2,1) acting on hyperboloid coordinates.
class Isometry {
 public:
  using Matrix = std::array<std::array<double, 3>, 3>;

  constexpr Isometry() = default;
  explicit Isometry(const Matrix& m) : m_(m) {}

  /// Translation along the x1 axis through the origin.
  static Isometry translation(double distance);
  /// Rotation about the origin, counterclockwise.
  static Isometry rotation(double phi);
  /// Frame sending the origin to p and the +x1 direction toward q.
  static Isometry frame(const HPoint& p, const HPoint& q);
  /// Half-turn about p.
  static Isometry half_turn(const HPoint& p);
  /// Isometry with at(0) = a0, and a1 on the forward ray, mapped to b0 / ray b1.
  static Isometry aligning(const HPoint& a0, const HPoint& a1,
                           const HPoint& b0, const HPoint& b1);

  Isometry operator*(const Isometry& rhs) const;
  HPoint apply(const HPoint& p) const;
  Vec3 apply(const Vec3& v) const;
  Isometry inverse() const;

  /// Lorentz Gram-Schmidt on the columns.
  Isometry renormalized() const;

  /// max |M^T J M - J|.
  double orthogonality_residual() const;

  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
};

/// Reflection across the geodesic through a and b.
HPoint reflect_across(const HPoint& x, const HPoint& a, const HPoint& b);

/// Turtle for walks: a position and a heading measured in the canonical
/// frame at that position (the radial boost from the origin). Each step is
/// computed in local coordinates and re-lifted onto the sheet, so accuracy
/// does not degrade with the length of the walk or its distance from the
/// origin.
class Turtle {
 public:
  Turtle() = default;
  explicit Turtle(const Isometry& start);

  void advance(double distance);
  /// Positive turns are counterclockwise (to the left).
  void turn(double phi);

  const HPoint& position() const { return position_; }
  /// Heading in (-pi, pi].
  double heading() const { return heading_; }
  Isometry frame() const;

 private:
  HPoint position_;
  double heading_ = 0.0;
};

/// x after the radial isometry taking `center` to the origin. Accurate
/// however far either point is from the origin.
HPoint recenter(const HPoint& center, const HPoint& x);

/// Geodesic distance, computed after moving p to the origin.
Length dist(const HPoint& p, const HPoint& q);

/// Point at fraction t in [0, 1] along the geodesic from p to q.
HPoint geodesic_point(const HPoint& p, const HPoint& q, double t);

/// Point reached from p by walking `distance` toward q (and beyond).
HPoint point_toward(const HPoint& p, const HPoint& q, double distance);

/// Geodesic midpoint.
HPoint midpoint(const HPoint& p, const HPoint& q);

/// Counterclockwise angle at `vertex` from the direction toward `from` to the
/// direction toward `to`, in [0, 2*pi).
double ccw_angle(const HPoint& vertex, const HPoint& from, const HPoint& to);

/// Interior angle at `vertex` of a counterclockwise polygon ... prev, vertex,
/// next ...; in (0, 2*pi), reflex when the boundary turns right.
double interior_angle(const HPoint& prev, const HPoint& vertex,
                      const HPoint& next);

/// Signed area of the geodesic triangle abc; positive when counterclockwise.
double signed_triangle_area(const HPoint& a, const HPoint& b, const HPoint& c);

/// Sign-carrying orientation of c relative to the directed geodesic a -> b.
/// Equal in sign to the planar orientation of the Klein images.
double orientation(const HPoint& a, const HPoint& b, const HPoint& c);

/// Side opposite theta3 in the triangle with angles theta1, theta2, theta3
/// (law of cosines for angles). Requires each angle in (0, pi) and the sum
/// below pi.
Length side_from_angles(Angle theta1, Angle theta2, Angle theta3);

struct RegularMetrics {
  int n = 0;
  Angle angle;
  double area = 0.0;
  double perimeter = 0.0;
  Length side;
  Length circumradius;
  Length inradius;
};

/// Metrics of the regular n-gon with interior angle theta,
/// 0 < theta < (n-2) pi / n.
RegularMetrics regular_metrics(int n, Angle theta);

/// Interior angle of the regular n-gon with the given area,
/// 0 < area < (n-2) pi.
Angle regular_angle_for_area(int n, double area);

}  // namespace hypertile
