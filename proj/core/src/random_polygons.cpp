#include "hypertile/random_polygons.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hypertile/errors.hpp"

namespace hypertile {

namespace {

constexpr int kMaxAttempts = 10000;

// Point at distance h from the midpoint of [a, b], perpendicular to it,
// on the right of a -> b when h > 0.
HPoint offset_from_midpoint(const HPoint& a, const HPoint& b, double h) {
  Turtle t(Isometry::frame(a, b));
  t.advance(0.5 * dist(a, b).value());
  t.turn(-kPi / 2.0);
  t.advance(h);
  return t.position();
}

}  // namespace

Polygon random_star_polygon(Rng& rng, std::size_t n, double r_min,
                            double r_max) {
  if (n < 3) throw DomainError("random_star_polygon: n must be at least 3");
  if (!(r_min > 0.0) || !(r_max < 1.0) || !(r_min <= r_max)) {
    throw DomainError("random_star_polygon: need 0 < r_min <= r_max < 1");
  }
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> radius(r_min, r_max);
  const double min_gap = 0.05 * kTwoPi / static_cast<double>(n);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<double> phis(n);
    for (double& p : phis) p = angle(rng);
    std::sort(phis.begin(), phis.end());
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      double gap = i + 1 < n ? phis[i + 1] - phis[i]
                             : phis[0] + kTwoPi - phis[i];
      if (gap < min_gap || gap >= kPi) ok = false;
    }
    if (!ok) continue;
    std::vector<HPoint> vs;
    vs.reserve(n);
    for (double p : phis) {
      double r = radius(rng);
      vs.push_back(HPoint::from_klein({r * std::cos(p), r * std::sin(p)}));
    }
    return Polygon(std::move(vs));
  }
  throw ConstructionError("random_star_polygon: attempts exhausted");
}

Polygon random_convex_polygon(Rng& rng, std::size_t n,
                              std::size_t min_vertices) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Polygon hull = convex_hull(random_star_polygon(rng, n, 0.3, 0.7));
    if (hull.size() >= min_vertices && is_convex(hull)) return hull;
  }
  throw ConstructionError("random_convex_polygon: attempts exhausted");
}

std::optional<Polygon> scale_to_area(const Polygon& p, double target,
                                     double tol) {
  std::vector<Vec2> klein;
  double r_max = 0.0;
  for (const HPoint& v : p.vertices()) {
    Vec2 k = v.to_klein();
    klein.push_back(k);
    r_max = std::max(r_max, std::hypot(k.x, k.y));
  }
  auto scaled = [&](double s) {
    std::vector<HPoint> vs;
    vs.reserve(klein.size());
    for (const Vec2& k : klein) vs.push_back(HPoint::from_klein({s * k.x, s * k.y}));
    return Polygon(std::move(vs));
  };
  // Star-shaped about the origin, so area grows with the scale factor.
  double lo = 0.0;
  double hi = (1.0 - 1e-9) / r_max;
  if (area(scaled(hi)) < target) return std::nullopt;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    Polygon q = scaled(mid);
    double a = area(q);
    if (std::abs(a - target) <= tol) return q;
    (a < target ? lo : hi) = mid;
  }
  return std::nullopt;
}

ComplementaryInstance random_complementary_instance(Rng& rng, bool adjacent) {
  std::uniform_int_distribution<std::size_t> size(4, 8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Polygon base = random_convex_polygon(rng, size(rng));
    const std::size_t n = base.size();
    std::vector<HPoint> vs = base.vertices();

    if (adjacent) {
      std::size_t e = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      const HPoint& x = base.vertex(e);
      const HPoint& y = base.vertex(e + 1);
      double len = dist(x, y).value();
      // B outside the edge near X; B' is its image under the half-turn about
      // the edge midpoint.
      Turtle t(Isometry::frame(x, y));
      t.advance(len * (0.1 + 0.3 * unit(rng)));
      t.turn(-kPi / 2.0);
      t.advance(len * (0.05 + 0.3 * unit(rng)));
      HPoint b = t.position();
      HPoint b2 = Isometry::half_turn(midpoint(x, y)).apply(b);
      std::vector<HPoint> out(vs.begin(), vs.begin() + static_cast<long>(e) + 1);
      out.push_back(b);
      out.push_back(b2);
      out.insert(out.end(), vs.begin() + static_cast<long>(e) + 1, vs.end());
      Polygon p(std::move(out));
      if (!is_embedded(p)) continue;
      return {std::move(p), e + 1, e + 2, true, std::move(base)};
    }

    // Bump on the shortest edge, notch on the longest.
    std::size_t e_short = 0;
    std::size_t e_long = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (base.side_length(i) < base.side_length(e_short)) e_short = i;
      if (base.side_length(i) > base.side_length(e_long)) e_long = i;
    }
    double ls = base.side_length(e_short);
    double ll = base.side_length(e_long);
    if (e_short == e_long || ll < 1.2 * ls) continue;
    const HPoint& x = base.vertex(e_short);
    const HPoint& y = base.vertex(e_short + 1);
    HPoint z = offset_from_midpoint(x, y, ls * (0.05 + 0.4 * unit(rng)));
    const HPoint& u = base.vertex(e_long);
    const HPoint& v = base.vertex(e_long + 1);
    double start = (ll - ls) * (0.1 + 0.8 * unit(rng));
    HPoint x2 = point_toward(u, v, start);
    HPoint y2 = point_toward(u, v, start + ls);
    // Orientation-preserving map X -> Y', Y -> X' sends the outer side of
    // XY to the inner side of X'Y'.
    HPoint z2 = Isometry::aligning(x, y, y2, x2).apply(z);

    std::vector<HPoint> out;
    std::size_t iz = 0;
    std::size_t iz2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(vs[i]);
      if (i == e_short) {
        iz = out.size();
        out.push_back(z);
      } else if (i == e_long) {
        out.push_back(x2);
        iz2 = out.size();
        out.push_back(z2);
        out.push_back(y2);
      }
    }
    Polygon p(std::move(out));
    if (!is_embedded(p)) continue;
    return {std::move(p), iz, iz2, false, std::move(base)};
  }
  throw ConstructionError("random_complementary_instance: attempts exhausted");
}

}  // namespace hypertile
