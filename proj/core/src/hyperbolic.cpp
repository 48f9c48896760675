#include "hypertile/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "hypertile/errors.hpp"

namespace hypertile {

namespace {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.x1 * b.x2 - a.x2 * b.x1, a.x2 * b.x0 - a.x0 * b.x2,
          a.x0 * b.x1 - a.x1 * b.x0};
}

// J (a x b): Minkowski-orthogonal to a and b, oriented so det(a, b, .) > 0.
Vec3 lorentz_cross(const Vec3& a, const Vec3& b) {
  Vec3 w = cross(a, b);
  return {-w.x0, w.x1, w.x2};
}

Vec3 scaled(const Vec3& v, double s) { return {v.x0 * s, v.x1 * s, v.x2 * s}; }

Vec3 plus(const Vec3& a, const Vec3& b) {
  return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2};
}

bool finite(const Vec3& v) {
  return std::isfinite(v.x0) && std::isfinite(v.x1) && std::isfinite(v.x2);
}

Vec3 rotated(const Vec3& x, double c, double s) {
  return {x.x0, c * x.x1 - s * x.x2, s * x.x1 + c * x.x2};
}

// Boost along x1 by rapidity r, given r and e^r. Works in light-cone
// coordinates u = x0 + x1, v = x0 - x1, where the boost is a pair of
// scalings; the smaller of u, v is recovered from u v = 1 + x2^2 so no
// cancellation occurs however far the point is. When the image is close to
// the x0 axis u - v cancels, so x1 comes from the rapidity instead.
Vec3 boosted(const Vec3& x, double r, double er) {
  double q = 1.0 + x.x2 * x.x2;
  double u = 0.0;
  double v = 0.0;
  if (x.x1 >= 0.0) {
    u = x.x0 + x.x1;
    v = q / u;
  } else {
    v = x.x0 - x.x1;
    u = q / v;
  }
  u *= er;
  v /= er;
  double x1 = 0.5 * (u - v);
  if (u < 2.0 * v && v < 2.0 * u) {
    double w = std::sqrt(q);
    x1 = w * std::sinh(std::asinh(x.x1 / w) + r);
  }
  return {0.5 * (u + v), x1, x.x2};
}

// Canonical frame at p: rotate to the x1 axis, boost out, rotate back.
struct LocalFrame {
  double c = 1.0;
  double s = 0.0;
  double r = 0.0;
  double er = 1.0;

  explicit LocalFrame(const HPoint& p) {
    double rho = std::hypot(p.x1(), p.x2());
    if (rho > 0.0) {
      c = p.x1() / rho;
      s = p.x2() / rho;
    }
    r = std::asinh(rho);
    er = p.x0() + rho;
  }

  Vec3 to_local(const Vec3& x) const {
    return rotated(boosted(rotated(x, c, -s), -r, 1.0 / er), c, s);
  }

  Vec3 from_local(const Vec3& y) const {
    return rotated(boosted(rotated(y, c, -s), r, er), c, s);
  }
};

HPoint on_sheet(const Vec3& v) { return HPoint::lift(v.x1, v.x2); }

Vec3 polar_vec(double r, double phi) {
  double sh = std::sinh(r);
  return {std::cosh(r), sh * std::cos(phi), sh * std::sin(phi)};
}

// Direction of q seen from p, in the canonical frame at p.
double direction(const HPoint& p, const HPoint& q) {
  Vec3 y = LocalFrame(p).to_local(q.vec());
  if (y.x1 == 0.0 && y.x2 == 0.0) {
    throw DomainError("direction undefined for coincident points");
  }
  return std::atan2(y.x2, y.x1);
}

Isometry::Matrix matmul(const Isometry::Matrix& a, const Isometry::Matrix& b) {
  Isometry::Matrix out{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += a[r][k] * b[k][c];
      out[r][c] = acc;
    }
  }
  return out;
}

// Matrix of the canonical frame at p.
Isometry canonical(const HPoint& p) {
  LocalFrame f(p);
  double ch = p.x0();
  double sh = std::hypot(p.x1(), p.x2());
  Isometry::Matrix rot{{{1.0, 0.0, 0.0}, {0.0, f.c, -f.s}, {0.0, f.s, f.c}}};
  Isometry::Matrix unrot{{{1.0, 0.0, 0.0}, {0.0, f.c, f.s}, {0.0, -f.s, f.c}}};
  Isometry::Matrix boost{{{ch, sh, 0.0}, {sh, ch, 0.0}, {0.0, 0.0, 1.0}}};
  return Isometry(matmul(rot, matmul(boost, unrot)));
}

Vec3 column(const Isometry::Matrix& m, int c) {
  return {m[0][c], m[1][c], m[2][c]};
}

Isometry from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  Isometry::Matrix m{{{c0.x0, c1.x0, c2.x0},
                      {c0.x1, c1.x1, c2.x1},
                      {c0.x2, c1.x2, c2.x2}}};
  return Isometry(m);
}

std::string fmt_angles(double a, double b, double c) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

double det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a.x0 * (b.x1 * c.x2 - b.x2 * c.x1) -
         b.x0 * (a.x1 * c.x2 - a.x2 * c.x1) +
         c.x0 * (a.x1 * b.x2 - a.x2 * b.x1);
}

// ---------------------------------------------------------------- HPoint

HPoint HPoint::from_coords(double x0, double x1, double x2) {
  Vec3 v{x0, x1, x2};
  if (!finite(v)) throw DomainError("non-finite hyperboloid coordinates");
  if (x0 < 1.0 - kEpsPoint) {
    throw DomainError("hyperboloid point must have x0 >= 1");
  }
  double residual = std::abs(minkowski(v, v) + 1.0);
  if (residual > kEpsPoint * std::max(1.0, x0 * x0)) {
    std::ostringstream os;
    os << "point off the hyperboloid (residual " << residual << ")";
    throw DomainError(os.str());
  }
  return lift(x1, x2);
}

HPoint HPoint::lift(double x1, double x2) {
  if (!std::isfinite(x1) || !std::isfinite(x2)) {
    throw DomainError("non-finite hyperboloid coordinates");
  }
  double r = std::hypot(x1, x2);
  return HPoint(Vec3{std::sqrt(1.0 + r * r), x1, x2});
}

HPoint HPoint::from_polar(double r, double phi) {
  double s = std::sinh(r);
  return HPoint(Vec3{std::cosh(r), s * std::cos(phi), s * std::sin(phi)});
}

HPoint HPoint::from_klein(Vec2 k) {
  double s = 1.0 - (k.x * k.x + k.y * k.y);
  if (!(s > 0.0)) throw DomainError("Klein point outside the unit disk");
  double x0 = 1.0 / std::sqrt(s);
  return lift(k.x * x0, k.y * x0);
}

HPoint HPoint::from_poincare(Vec2 d) {
  double r2 = d.x * d.x + d.y * d.y;
  if (!(r2 < 1.0)) throw DomainError("Poincare point outside the unit disk");
  double s = 2.0 / (1.0 - r2);
  return lift(d.x * s, d.y * s);
}

Vec2 HPoint::to_klein() const { return {v_.x1 / v_.x0, v_.x2 / v_.x0}; }

Vec2 HPoint::to_poincare() const {
  return {v_.x1 / (1.0 + v_.x0), v_.x2 / (1.0 + v_.x0)};
}

double HPoint::constraint_residual() const {
  return std::abs(minkowski(v_, v_) + 1.0);
}

HPoint HPoint::renormalized() const { return lift(v_.x1, v_.x2); }

// -------------------------------------------------------------- Isometry

Isometry Isometry::translation(double distance) {
  double c = std::cosh(distance);
  double s = std::sinh(distance);
  return Isometry(Matrix{{{c, s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}});
}

Isometry Isometry::rotation(double phi) {
  double c = std::cos(phi);
  double s = std::sin(phi);
  return Isometry(Matrix{{{1.0, 0.0, 0.0}, {0.0, c, -s}, {0.0, s, c}}});
}

Isometry Isometry::frame(const HPoint& p, const HPoint& q) {
  return canonical(p) * rotation(direction(p, q));
}

Isometry Isometry::half_turn(const HPoint& p) {
  Isometry f;
  if (p.x0() > 1.0 + kEpsPoint) {
    f = frame(p, HPoint());
  } else {
    f = Isometry::translation(0.0);
  }
  return f * rotation(kPi) * f.inverse();
}

Isometry Isometry::aligning(const HPoint& a0, const HPoint& a1,
                            const HPoint& b0, const HPoint& b1) {
  return frame(b0, b1) * frame(a0, a1).inverse();
}

Isometry Isometry::operator*(const Isometry& rhs) const {
  Matrix out{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += m_[r][k] * rhs.m_[k][c];
      out[r][c] = s;
    }
  }
  return Isometry(out);
}

Vec3 Isometry::apply(const Vec3& v) const {
  return {m_[0][0] * v.x0 + m_[0][1] * v.x1 + m_[0][2] * v.x2,
          m_[1][0] * v.x0 + m_[1][1] * v.x1 + m_[1][2] * v.x2,
          m_[2][0] * v.x0 + m_[2][1] * v.x1 + m_[2][2] * v.x2};
}

HPoint Isometry::apply(const HPoint& p) const {
  Vec3 v = apply(p.vec());
  return HPoint::lift(v.x1, v.x2);
}

Isometry Isometry::inverse() const {
  // M^{-1} = J M^T J with J = diag(-1, 1, 1).
  static constexpr std::array<double, 3> j{-1.0, 1.0, 1.0};
  Matrix out{};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) out[r][c] = j[r] * m_[c][r] * j[c];
  }
  return Isometry(out);
}

Isometry Isometry::renormalized() const {
  Vec3 c0 = column(m_, 0);
  Vec3 c1 = column(m_, 1);
  c0 = scaled(c0, 1.0 / std::sqrt(-minkowski(c0, c0)));
  c1 = plus(c1, scaled(c0, minkowski(c1, c0)));
  c1 = scaled(c1, 1.0 / std::sqrt(minkowski(c1, c1)));
  return from_columns(c0, c1, lorentz_cross(c0, c1));
}

double Isometry::orthogonality_residual() const {
  static constexpr std::array<double, 3> j{-1.0, 1.0, 1.0};
  double worst = 0.0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += m_[k][a] * j[k] * m_[k][b];
      double expect = a == b ? j[a] : 0.0;
      worst = std::max(worst, std::abs(s - expect));
    }
  }
  return worst;
}

HPoint reflect_across(const HPoint& x, const HPoint& a, const HPoint& b) {
  LocalFrame f(a);
  double phi = direction(a, b);
  Vec3 y = rotated(f.to_local(x.vec()), std::cos(phi), -std::sin(phi));
  y.x2 = -y.x2;
  return on_sheet(f.from_local(rotated(y, std::cos(phi), std::sin(phi))));
}

// ---------------------------------------------------------------- Turtle

Turtle::Turtle(const Isometry& start)
    : position_(start.apply(HPoint())),
      heading_(direction(position_, start.apply(HPoint::from_polar(1.0, 0.0)))) {}

void Turtle::advance(double distance) {
  if (distance == 0.0) return;
  HPoint next = on_sheet(LocalFrame(position_).from_local(
      polar_vec(distance, heading_)));
  heading_ = std::remainder(direction(next, position_) + kPi, kTwoPi);
  position_ = next;
}

void Turtle::turn(double phi) { heading_ = std::remainder(heading_ + phi, kTwoPi); }

Isometry Turtle::frame() const {
  return canonical(position_) * Isometry::rotation(heading_);
}

// ------------------------------------------------------------- measuring

HPoint recenter(const HPoint& center, const HPoint& x) {
  return on_sheet(LocalFrame(center).to_local(x.vec()));
}

Length dist(const HPoint& p, const HPoint& q) {
  if (!finite(p.vec()) || !finite(q.vec())) {
    throw DomainError("dist: non-finite input");
  }
  Vec3 y = LocalFrame(p).to_local(q.vec());
  return Length(std::asinh(std::hypot(y.x1, y.x2)));
}

HPoint geodesic_point(const HPoint& p, const HPoint& q, double t) {
  double d = dist(p, q).value();
  if (d == 0.0) return p;
  return point_toward(p, q, t * d);
}

HPoint point_toward(const HPoint& p, const HPoint& q, double distance) {
  return on_sheet(
      LocalFrame(p).from_local(polar_vec(distance, direction(p, q))));
}

// (p + q) normalised, |p + q| = 2 cosh(d/2). Walking half way from p instead
// would turn a direction error into sinh(d/2) times as much position error.
HPoint midpoint(const HPoint& p, const HPoint& q) {
  double n = 2.0 * std::cosh(0.5 * dist(p, q).value());
  return HPoint::lift((p.x1() + q.x1()) / n, (p.x2() + q.x2()) / n);
}

double ccw_angle(const HPoint& vertex, const HPoint& from, const HPoint& to) {
  LocalFrame f(vertex);
  Vec3 a = f.to_local(from.vec());
  Vec3 b = f.to_local(to.vec());
  if ((a.x1 == 0.0 && a.x2 == 0.0) || (b.x1 == 0.0 && b.x2 == 0.0)) {
    throw DomainError("angle undefined at a repeated point");
  }
  double phi = std::atan2(a.x1 * b.x2 - a.x2 * b.x1, a.x1 * b.x1 + a.x2 * b.x2);
  if (phi < 0.0) phi += kTwoPi;
  return phi;
}

double interior_angle(const HPoint& prev, const HPoint& vertex,
                      const HPoint& next) {
  return ccw_angle(vertex, next, prev);
}

double signed_triangle_area(const HPoint& a, const HPoint& b,
                            const HPoint& c) {
  // With a moved to the origin, 1 - <a,b> - <b,c> - <c,a> is a sum of
  // cosh terms and needs no cancellation.
  LocalFrame f(a);
  Vec3 lb = f.to_local(b.vec());
  Vec3 lc = f.to_local(c.vec());
  double num = lb.x1 * lc.x2 - lb.x2 * lc.x1;
  double den = 1.0 + lb.x0 + lc.x0 + std::cosh(dist(b, c).value());
  return 2.0 * std::atan2(num, den);
}

double orientation(const HPoint& a, const HPoint& b, const HPoint& c) {
  return det3(a.vec(), b.vec(), c.vec());
}

// ------------------------------------------------------- trigonometry

Length side_from_angles(Angle theta1, Angle theta2, Angle theta3) {
  double a = theta1.radians();
  double b = theta2.radians();
  double c = theta3.radians();
  for (double t : {a, b, c}) {
    if (!std::isfinite(t) || t <= 0.0 || t >= kPi) {
      throw DomainError("side_from_angles: angles must lie in (0, pi), got " +
                        fmt_angles(a, b, c));
    }
  }
  if (a + b + c >= kPi) {
    throw DomainError(
        "side_from_angles: angle sum must be below pi for a hyperbolic "
        "triangle, got " +
        fmt_angles(a, b, c));
  }
  double cosh_l = (std::cos(c) + std::cos(a) * std::cos(b)) /
                  (std::sin(a) * std::sin(b));
  return Length(std::acosh(std::max(1.0, cosh_l)));
}

RegularMetrics regular_metrics(int n, Angle theta) {
  if (n < 3) throw DomainError("regular_metrics: n must be at least 3");
  double t = theta.radians();
  double upper = (n - 2) * kPi / n;
  if (!std::isfinite(t) || t <= 0.0 || t >= upper) {
    throw DomainError("regular_metrics: angle outside (0, (n-2)pi/n)");
  }
  double half_center = kPi / n;
  double half_vertex = t / 2.0;

  RegularMetrics m;
  m.n = n;
  m.angle = theta;
  m.area = (n - 2) * kPi - n * t;
  // Right triangle with angles pi/2, pi/n (center), theta/2 (vertex).
  double half_side =
      std::acosh(std::cos(half_center) / std::sin(half_vertex));
  m.side = Length(2.0 * half_side);
  m.perimeter = 2.0 * n * half_side;
  m.circumradius = Length(std::acosh(1.0 / (std::tan(half_center) *
                                            std::tan(half_vertex))));
  m.inradius =
      Length(std::acosh(std::cos(half_vertex) / std::sin(half_center)));
  return m;
}

Angle regular_angle_for_area(int n, double area) {
  if (n < 3) throw DomainError("regular_angle_for_area: n must be at least 3");
  double upper = (n - 2) * kPi;
  if (!std::isfinite(area) || area <= 0.0 || area >= upper) {
    throw DomainError("regular_angle_for_area: area outside (0, (n-2)pi)");
  }
  return Angle((upper - area) / n);
}

}  // namespace hypertile
