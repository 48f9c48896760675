#include "hypertile/polygon.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "hypertile/errors.hpp"

namespace hypertile {

namespace {

// Planar predicates on Klein images; coordinates are bounded by 1.
constexpr double kOrientEps = 1e-14;

double orient2(Vec2 p, Vec2 q, Vec2 r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}


// Geodesic predicates. Each is evaluated in the local frame at a vertex,
// where geodesics through that vertex are straight lines through the origin,
// so they stay accurate for polygons far from the origin.
constexpr double kSideEps = 1e-12;

Vec2 seen_from(const HPoint& a, const HPoint& b) {
  HPoint l = recenter(a, b);
  return {l.x1(), l.x2()};
}

// Sine of the angle at a from b to c.
double sine_at(const HPoint& a, const HPoint& b, const HPoint& c) {
  Vec2 u = seen_from(a, b);
  Vec2 w = seen_from(a, c);
  double nu = std::hypot(u.x, u.y);
  double nw = std::hypot(w.x, w.y);
  if (nu == 0.0 || nw == 0.0) return 0.0;
  return (u.x * w.y - u.y * w.x) / (nu * nw);
}

// Positive when c is left of a -> b. The angle c subtends from an endpoint
// shrinks like 1/sinh of its distance, so look from the nearer endpoint.
double side(const HPoint& a, const HPoint& b, const HPoint& c) {
  if (dist(a, c).value() <= dist(b, c).value()) return sine_at(a, b, c);
  return -sine_at(b, a, c);
}

int side_sign(const HPoint& a, const HPoint& b, const HPoint& c) {
  double s = side(a, b, c);
  if (std::abs(s) <= kSideEps) return 0;
  return s > 0.0 ? 1 : -1;
}

// c on the geodesic through a, b: does it lie within the segment?
bool within(const HPoint& a, const HPoint& b, const HPoint& c) {
  Vec2 u = seen_from(a, b);
  Vec2 w = seen_from(a, c);
  double nw = std::hypot(w.x, w.y);
  if (nw <= kEpsPoint) return true;
  if (u.x * w.x + u.y * w.y <= 0.0) return false;
  double ab = dist(a, b).value();
  return dist(a, c).value() <= ab + kEpsPoint * std::max(1.0, ab);
}

bool geodesic_segments_intersect(const HPoint& a, const HPoint& b,
                                 const HPoint& c, const HPoint& d) {
  int o1 = side_sign(a, b, c);
  int o2 = side_sign(a, b, d);
  int o3 = side_sign(c, d, a);
  int o4 = side_sign(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && within(a, b, c)) return true;
  if (o2 == 0 && within(a, b, d)) return true;
  if (o3 == 0 && within(c, d, a)) return true;
  if (o4 == 0 && within(c, d, b)) return true;
  return false;
}

// Adjacent edges a-b and b-c overlap beyond b when c folds back onto a-b.
bool folds_back(const HPoint& a, const HPoint& b, const HPoint& c) {
  if (side_sign(b, a, c) != 0) return false;
  Vec2 u = seen_from(b, a);
  Vec2 w = seen_from(b, c);
  return u.x * w.x + u.y * w.y > 0.0;
}

// Klein images seen from the centroid of the plain images, which keeps
// moderately distant polygons away from the unit circle.
std::vector<Vec2> klein_images(const std::vector<HPoint>& pts) {
  std::vector<Vec2> out;
  out.reserve(pts.size());
  if (pts.empty()) return out;
  double x1 = 0.0;
  double x2 = 0.0;
  for (const auto& p : pts) {
    x1 += p.x1() / p.x0();
    x2 += p.x2() / p.x0();
  }
  // Average of the Klein images is inside the disk, hence a valid point.
  HPoint centre = HPoint::from_klein({x1 / pts.size(), x2 / pts.size()});
  for (const auto& p : pts) out.push_back(recenter(centre, p).to_klein());
  return out;
}

bool closed_chain_embedded(const std::vector<HPoint>& k) {
  std::size_t n = k.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (folds_back(k[(i + n - 1) % n], k[i], k[(i + 1) % n])) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (geodesic_segments_intersect(k[i], k[(i + 1) % n], k[j],
                                      k[(j + 1) % n])) {
        return false;
      }
    }
  }
  return true;
}

bool lengths_match(double a, double b) {
  return std::abs(a - b) <= kEpsPoint * std::max(1.0, std::max(a, b)) * 10.0;
}

}  // namespace

Polygon::Polygon(std::vector<HPoint> vertices) : vertices_(std::move(vertices)) {
  std::size_t n = vertices_.size();
  if (n < 3) throw DomainError("polygon needs at least three vertices");
  sides_.resize(n);
  angles_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    sides_[i] = dist(vertices_[i], vertices_[(i + 1) % n]).value();
    if (!(sides_[i] > kEpsPoint)) {
      std::ostringstream os;
      os << "consecutive vertices " << i << " and " << (i + 1) % n
         << " coincide";
      throw DomainError(os.str());
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    angles_[i] = hypertile::interior_angle(vertices_[(i + n - 1) % n],
                                           vertices_[i],
                                           vertices_[(i + 1) % n]);
  }
}

Polygon from_side_angle_data(std::span<const double> sides,
                             std::span<const double> angles,
                             ClosureTolerance tol) {
  std::size_t n = sides.size();
  if (n < 3 || angles.size() != n) {
    throw DomainError(
        "from_side_angle_data: need equal-length lists of at least three");
  }
  Turtle turtle;
  std::vector<HPoint> vertices;
  vertices.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    vertices.push_back(turtle.position());
    turtle.advance(sides[i]);
    turtle.turn(kPi - angles[(i + 1) % n]);
  }
  double position_residual = dist(turtle.position(), HPoint()).value();
  double heading_residual = std::abs(turtle.heading());
  if (position_residual > tol.position || heading_residual > tol.heading) {
    std::ostringstream os;
    os << "side/angle data does not close: position residual "
       << position_residual << ", heading residual " << heading_residual;
    throw ClosureError(os.str(), position_residual, heading_residual);
  }
  return Polygon(std::move(vertices));
}

double fan_area(const Polygon& p) {
  double total = 0.0;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    total += signed_triangle_area(p.vertex(0), p.vertex(i), p.vertex(i + 1));
  }
  return total;
}

double area(const Polygon& p) {
  if (!is_embedded(p)) {
    throw DomainError("area is undefined for a self-intersecting polygon");
  }
  if (fan_area(p) < 0.0) {
    throw DomainError("polygon is oriented clockwise");
  }
  const auto& a = p.interior_angles();
  double sum = std::accumulate(a.begin(), a.end(), 0.0);
  return static_cast<double>(p.size() - 2) * kPi - sum;
}

double perimeter(const Polygon& p) {
  const auto& s = p.side_lengths();
  return std::accumulate(s.begin(), s.end(), 0.0);
}

bool segments_intersect(const HPoint& a, const HPoint& b, const HPoint& c,
                        const HPoint& d) {
  return geodesic_segments_intersect(a, b, c, d);
}

bool is_embedded(const Polygon& p) {
  return closed_chain_embedded(p.vertices());
}

bool is_embedded(const Chain& c) {
  const auto& k = c.vertices;
  std::size_t m = k.size();
  if (m < 2) return true;
  std::size_t edges = m - 1;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    if (folds_back(k[i - 1], k[i], k[i + 1])) return false;
  }
  for (std::size_t i = 0; i < edges; ++i) {
    for (std::size_t j = i + 2; j < edges; ++j) {
      if (geodesic_segments_intersect(k[i], k[i + 1], k[j], k[j + 1])) {
        return false;
      }
    }
  }
  return true;
}

bool is_convex(const Polygon& p) {
  return std::all_of(p.interior_angles().begin(), p.interior_angles().end(),
                     [](double a) { return a < kPi - kEpsAngle; });
}

ConcaveReport concave_vertices(const Polygon& p) {
  ConcaveReport r;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double a = p.interior_angle(i);
    if (std::abs(a - kPi) <= kEpsAngle) {
      r.straight.push_back(i);
    } else if (a > kPi) {
      r.reflex.push_back(i);
    }
  }
  return r;
}

Polygon reduce_equivalent(const Polygon& p) {
  std::vector<HPoint> kept;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (std::abs(p.interior_angle(i) - kPi) > kEpsAngle) {
      kept.push_back(p.vertex(i));
    }
  }
  if (kept.size() < 3) {
    throw DegeneracyError("reduce_equivalent: fewer than three vertices left");
  }
  return Polygon(std::move(kept));
}

Polygon convex_hull(const Polygon& p) {
  auto k = klein_images(p.vertices());
  std::vector<std::size_t> idx(k.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return k[a].x < k[b].x || (k[a].x == k[b].x && k[a].y < k[b].y);
  });

  // Andrew's monotone chain; collinear points are popped.
  std::vector<std::size_t> hull(2 * idx.size());
  std::size_t h = 0;
  for (std::size_t i : idx) {
    while (h >= 2 && orient2(k[hull[h - 2]], k[hull[h - 1]], k[i]) <= kOrientEps) {
      --h;
    }
    hull[h++] = i;
  }
  for (std::size_t t = idx.size() - 1, lower = h + 1; t-- > 0;) {
    std::size_t i = idx[t];
    while (h >= lower &&
           orient2(k[hull[h - 2]], k[hull[h - 1]], k[i]) <= kOrientEps) {
      --h;
    }
    hull[h++] = i;
  }
  hull.resize(h - 1);

  // Start at the lowest original index so convex inputs come back unchanged.
  auto first = std::min_element(hull.begin(), hull.end());
  std::rotate(hull.begin(), first, hull.end());
  std::vector<HPoint> out;
  out.reserve(hull.size());
  for (std::size_t i : hull) out.push_back(p.vertex(i));
  return Polygon(std::move(out));
}

Polygon flatten(const Polygon& p, std::size_t i_from, std::size_t i_to) {
  std::size_t n = p.size();
  if (i_from >= n || i_to >= n || i_from == i_to) {
    throw DomainError("flatten: indices out of range or equal");
  }
  std::vector<bool> removed(n, false);
  std::size_t count = 0;
  for (std::size_t i = (i_from + 1) % n; i != i_to; i = (i + 1) % n) {
    removed[i] = true;
    ++count;
  }
  if (n - count < 3) {
    throw DegeneracyError("flatten: fewer than three vertices would remain");
  }
  std::vector<HPoint> kept;
  kept.reserve(n - count);
  for (std::size_t i = 0; i < n; ++i) {
    if (!removed[i]) kept.push_back(p.vertex(i));
  }
  Polygon out(std::move(kept));
  if (!is_embedded(out)) {
    throw GeometryError("flatten: result self-intersects");
  }
  return out;
}

Polygon flatten_complementary_pair(const Polygon& p, std::size_t v,
                                   std::size_t w) {
  std::size_t n = p.size();
  if (v >= n || w >= n || v == w) {
    throw ContractError("flatten_complementary_pair: need two distinct vertices");
  }
  double sum = p.interior_angle(v) + p.interior_angle(w);
  if (std::abs(sum - kTwoPi) > kEpsAngle) {
    std::ostringstream os;
    os.precision(17);
    os << "flatten_complementary_pair: angles sum to " << sum
       << ", not 2pi";
    throw ContractError(os.str());
  }
  std::array<double, 2> at_v{p.side_length(p.prev(v)), p.side_length(v)};
  std::array<double, 2> at_w{p.side_length(p.prev(w)), p.side_length(w)};
  std::sort(at_v.begin(), at_v.end());
  std::sort(at_w.begin(), at_w.end());
  if (!lengths_match(at_v[0], at_w[0]) || !lengths_match(at_v[1], at_w[1])) {
    throw ContractError(
        "flatten_complementary_pair: incident edges are not congruent");
  }
  if (n < 5) {
    throw DegeneracyError(
        "flatten_complementary_pair: fewer than three vertices would remain");
  }
  std::vector<HPoint> kept;
  kept.reserve(n - 2);
  for (std::size_t i = 0; i < n; ++i) {
    if (i != v && i != w) kept.push_back(p.vertex(i));
  }
  Polygon out(std::move(kept));
  if (!is_embedded(out)) {
    throw GeometryError("flatten_complementary_pair: result self-intersects");
  }
  return out;
}

Polygon insert_degenerate_vertices(const Polygon& p, std::size_t edge,
                                   int count) {
  if (count < 1) {
    throw DomainError("insert_degenerate_vertices: count must be positive");
  }
  if (edge >= p.size()) {
    throw DomainError("insert_degenerate_vertices: edge out of range");
  }
  const HPoint& a = p.vertex(edge);
  const HPoint& b = p.vertex(edge + 1);
  double len = p.side_length(edge);
  std::vector<HPoint> out;
  out.reserve(p.size() + static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.push_back(p.vertex(i));
    if (i == edge) {
      for (int j = 1; j <= count; ++j) {
        out.push_back(point_toward(a, b, len * j / (count + 1)));
      }
    }
  }
  return Polygon(std::move(out));
}

Polygon insert_degenerate_vertices_all(const Polygon& p, int count) {
  if (count < 1) {
    throw DomainError("insert_degenerate_vertices: count must be positive");
  }
  std::vector<HPoint> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const HPoint& a = p.vertex(i);
    const HPoint& b = p.vertex(i + 1);
    double len = p.side_length(i);
    out.push_back(a);
    for (int j = 1; j <= count; ++j) {
      out.push_back(point_toward(a, b, len * j / (count + 1)));
    }
  }
  return Polygon(std::move(out));
}

bool congruent(const Polygon& a, const Polygon& b, double tol) {
  std::size_t n = a.size();
  if (b.size() != n) return false;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      ok = std::abs(a.side_length(i) - b.side_length(i + shift)) <= tol &&
           std::abs(a.interior_angle(i) - b.interior_angle(i + shift)) <= tol;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace hypertile
