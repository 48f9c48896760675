#include "hypertile/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>

#include "hypertile/errors.hpp"

namespace hypertile {

namespace {

// Root scan and bisection constants for the even-gon side length.
constexpr double kSmallestSide = 1e-6;
constexpr double kLargestSide = 1e3;
constexpr int kScanSamples = 1024;
constexpr double kBisectionTol = 1e-12;
// |f| at a bisection endpoint above this marks a wrap-around jump, not a root.
constexpr double kRootResidual = 1e-7;

constexpr double kAngleMatchTol = 1e-8;
// Relative slack when comparing the m interval ends to integers.
constexpr double kIntegerSlack = 1e-9;

struct EndpointAngles {
  double first = 0.0;
  double last = 0.0;
};

// NaN once the chain coordinates overflow.
// Vertices V_1 ... V_{n+1} walked outwards from the middle vertex, which
// sits at the origin. Rounding grows with the distance walked, so starting in
// the middle halves it for long chains.
std::vector<HPoint> chain_vertices(double side, std::span<const double> angles) {
  std::size_t m = angles.size() + 2;
  std::size_t mid = (m - 1) / 2;
  std::vector<HPoint> vs(m);
  Turtle forward;
  vs[mid] = forward.position();
  forward.advance(side);
  vs[mid + 1] = forward.position();
  for (std::size_t i = mid + 1; i + 1 < m; ++i) {
    forward.turn(kPi - angles[i - 1]);
    forward.advance(side);
    vs[i + 1] = forward.position();
  }
  if (mid > 0) {
    Turtle backward;
    backward.turn(angles[mid - 1]);
    backward.advance(side);
    vs[mid - 1] = backward.position();
    for (std::size_t i = mid - 1; i > 0; --i) {
      backward.turn(angles[i - 1] - kPi);
      backward.advance(side);
      vs[i - 1] = backward.position();
    }
  }
  return vs;
}

EndpointAngles endpoint_angles(double side, std::span<const double> angles) {
  try {
    std::vector<HPoint> vs = chain_vertices(side, angles);
    std::size_t m = vs.size();
    return {interior_angle(vs[m - 1], vs[0], vs[1]),
            interior_angle(vs[m - 2], vs[m - 1], vs[0])};
  } catch (const DomainError&) {
    double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan};
  }
}

double endpoint_residual(std::span<const double> internal, double target,
                         double side) {
  EndpointAngles e = endpoint_angles(side, internal);
  return e.first + e.last - target;
}

// Bisects a sign change of f on [a, b]; f(a) and f(b) have opposite signs.
// Runs to adjacent doubles: the junction angle moves by f' times the side
// error, and f' is large for thin tiles.
double bisect(std::span<const double> internal, double target, double a,
              double b) {
  bool rising = endpoint_residual(internal, target, a) <= 0.0;
  while (true) {
    double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    bool positive = endpoint_residual(internal, target, mid) > 0.0;
    if (positive == rising) {
      b = mid;
    } else {
      a = mid;
    }
  }
  return 0.5 * (a + b);
}

// Doubles the chain by the half-turn about the midpoint D of V_1 V_{n+1}.
// The result is built centred on D, where the half-turn is exact.
std::optional<Polygon> doubled_polygon(double side,
                                       std::span<const double> half_angles) {
  ChainReport chain = build_chain(side, half_angles.subspan(1));
  const auto& vs = chain.chain.vertices;
  if (dist(vs.front(), vs.back()).value() <= kEpsPoint) return std::nullopt;
  HPoint centre = midpoint(vs.front(), vs.back());
  std::vector<HPoint> vertices;
  vertices.reserve(2 * (vs.size() - 1));
  for (const HPoint& v : vs) vertices.push_back(recenter(centre, v));
  for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
    const HPoint& w = vertices[i];
    vertices.push_back(HPoint::lift(-w.x1(), -w.x2()));
  }
  try {
    Polygon polygon(std::move(vertices));
    if (!is_embedded(polygon)) return std::nullopt;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
      double expect = half_angles[i % half_angles.size()];
      if (std::abs(polygon.interior_angle(i) - expect) > kAngleMatchTol) {
        return std::nullopt;
      }
    }
    return polygon;
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

ChainReport build_chain(double side, std::span<const double> angles) {
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw DomainError("build_chain: side length must be positive");
  }
  for (double a : angles) {
    if (!(a > 0.0) || !(a <= kPi)) {
      throw DomainError("build_chain: internal angles must lie in (0, pi]");
    }
  }
  ChainReport report;
  report.chain.side = side;
  report.chain.angles.assign(angles.begin(), angles.end());

  auto& vs = report.chain.vertices;
  vs = chain_vertices(side, angles);

  if (dist(vs.front(), vs.back()).value() <= kEpsPoint) {
    report.first_angle = report.last_angle = report.endpoint_angle_sum =
        std::numeric_limits<double>::quiet_NaN();
    report.embedded = false;
    return report;
  }
  std::size_t m = vs.size();
  report.first_angle = interior_angle(vs[m - 1], vs[0], vs[1]);
  report.last_angle = interior_angle(vs[m - 2], vs[m - 1], vs[0]);
  report.endpoint_angle_sum = report.first_angle + report.last_angle;
  try {
    report.embedded = is_embedded(Polygon(vs));
  } catch (const Error&) {
    report.embedded = false;
  }
  return report;
}

EvenGonResult equilateral_even_gon(std::span<const double> half_angles) {
  std::size_t n = half_angles.size();
  if (n < 2) {
    throw DomainError("equilateral_even_gon: need at least two half-angles");
  }
  for (double t : half_angles) {
    if (!(t > 0.0) || !(t <= kPi)) {
      throw DomainError("equilateral_even_gon: angles must lie in (0, pi]");
    }
  }
  double sum = std::accumulate(half_angles.begin(), half_angles.end(), 0.0);
  if (!(sum < static_cast<double>(n - 1) * kPi)) {
    std::ostringstream os;
    os << "equilateral_even_gon: angle sum " << sum
       << " must be below (n-1)pi = " << (n - 1) * kPi;
    throw DomainError(os.str());
  }

  double target = half_angles[0];
  std::span<const double> internal = half_angles.subspan(1);
  auto f = [&](double side) {
    return endpoint_residual(internal, target, side);
  };

  // The closed-up chain of a convex solution is simple, and on a range of
  // side lengths where it stays simple the endpoint angles are continuous.
  // Wrap-around jumps of f only happen where simplicity is lost, so roots are
  // searched between sign changes inside each simple range, with the range
  // ends located by bisection.
  struct Sample {
    double side = 0.0;
    double f = 0.0;
    bool simple = false;
  };
  auto sample = [&](double side) {
    Sample out{side, std::numeric_limits<double>::quiet_NaN(), false};
    try {
      ChainReport c = build_chain(side, internal);
      out.f = c.endpoint_angle_sum - target;
      out.simple = c.embedded && std::isfinite(out.f);
    } catch (const Error&) {
    }
    return out;
  };
  // Innermost simple sample next to the simplicity change in [a, b].
  auto edge = [&](Sample a, Sample b) {
    while (b.side - a.side > kBisectionTol * std::max(1.0, a.side)) {
      Sample mid = sample(0.5 * (a.side + b.side));
      if (mid.simple == a.simple) {
        a = mid;
      } else {
        b = mid;
      }
    }
    return a.simple ? a : b;
  };

  std::vector<Sample> grid(kScanSamples + 1);
  double log_lo = std::log(kSmallestSide);
  double log_hi = std::log(kLargestSide);
  for (int i = 0; i <= kScanSamples; ++i) {
    grid[i] = sample(std::exp(log_lo + (log_hi - log_lo) * i / kScanSamples));
  }

  std::vector<double> roots;
  auto search = [&](const std::vector<Sample>& run) {
    for (std::size_t j = 1; j < run.size(); ++j) {
      double fa = run[j - 1].f;
      double fb = run[j].f;
      if ((fa > 0.0) == (fb > 0.0)) continue;
      double r = bisect(internal, target, run[j - 1].side, run[j].side);
      if (std::abs(f(r)) <= kRootResidual) roots.push_back(r);
    }
  };
  for (int i = 0; i <= kScanSamples;) {
    if (!grid[i].simple) {
      ++i;
      continue;
    }
    std::vector<Sample> run;
    if (i > 0) run.push_back(edge(grid[i - 1], grid[i]));
    int j = i;
    for (; j <= kScanSamples && grid[j].simple; ++j) run.push_back(grid[j]);
    if (j <= kScanSamples) run.push_back(edge(grid[j - 1], grid[j]));
    search(run);
    i = j;
  }
  std::sort(roots.rbegin(), roots.rend());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double x, double y) {
                            return std::abs(x - y) <= 1e-9 * std::max(1.0, x);
                          }),
              roots.end());
  if (roots.empty()) {
    std::ostringstream os;
    os << "equilateral_even_gon: the endpoint-angle equation has no root for "
          "side length in ["
       << kSmallestSide << ", " << kLargestSide << "]";
    throw ConstructionError(os.str());
  }
  // The largest root whose doubled polygon is simple with the prescribed
  // angles.
  for (double side : roots) {
    if (auto polygon = doubled_polygon(side, half_angles)) {
      return {std::move(*polygon), side, static_cast<int>(roots.size())};
    }
  }
  std::ostringstream os;
  os << "equilateral_even_gon: " << roots.size()
     << " root(s) found but none doubles to a simple polygon with the "
        "prescribed angles";
  throw GeometryError(os.str());
}

Polygon regular_polygon(int n, Angle theta) {
  RegularMetrics m = regular_metrics(n, theta);
  std::vector<HPoint> vertices;
  vertices.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    vertices.push_back(
        HPoint::from_polar(m.circumradius.value(), kTwoPi * k / n));
  }
  return Polygon(std::move(vertices));
}

IsoTriangleTile isosceles_triangle_tile(double area, std::optional<int> k) {
  if (!(area > 0.0) || !(area < kPi)) {
    throw DomainError("isosceles_triangle_tile: area must lie in (0, pi)");
  }
  auto angles_for = [area](int kk) {
    double t1 = area / (2.0 * kk - 1.0);
    return std::pair{t1, kPi / 2.0 - kk * t1};
  };

  int chosen = 0;
  if (k) {
    chosen = *k;
    if (chosen < 1 || !(angles_for(chosen).second > 0.0)) {
      throw DomainError(
          "isosceles_triangle_tile: k must be positive with a positive base "
          "angle");
    }
  } else {
    chosen = static_cast<int>(std::floor(kPi / (kTwoPi - 2.0 * area))) + 1;
    while (true) {
      auto [t1, t2] = angles_for(chosen);
      if (t2 > 0.0 && t1 < t2) break;
      ++chosen;
    }
  }
  auto [t1, t2] = angles_for(chosen);
  // Split along the altitude into right triangles with angles t1/2 and
  // t2 = pi/2 - k t1. Altitude h and half base b from the right-triangle
  // laws, written as products so small areas do not cancel. The altitude's
  // midpoint goes at the origin: for tiny A the legs run to log(1/A) and
  // a vertex that far out keeps only eps e^d of its angle.
  double kt = chosen * t1;
  double root = std::sqrt(std::sin(kt + t1 / 2.0) * std::sin(kt - t1 / 2.0));
  double h = std::asinh(root / std::sin(t1 / 2.0));
  double sb = root / std::cos(kt);
  double cb = std::sqrt(1.0 + sb * sb);
  double sh = std::sinh(h / 2.0);
  std::vector<HPoint> vertices{HPoint::lift(-sh, 0.0), HPoint::lift(sh * cb, -sb),
                               HPoint::lift(sh * cb, sb)};
  return {Polygon(std::move(vertices)),
          IsoTriangleParams{area, chosen, Angle(t1), Angle(t2)}};
}

Polygon rhombic_tile(double area) {
  if (!(area > 0.0) || !(area < kTwoPi)) {
    throw DomainError("rhombic_tile: area must lie in (0, 2pi)");
  }
  IsoTriangleTile tri = isosceles_triangle_tile(area / 2.0);
  const HPoint& apex = tri.triangle.vertex(0);
  const HPoint& b = tri.triangle.vertex(1);
  const HPoint& c = tri.triangle.vertex(2);
  return Polygon({apex, b, reflect_across(apex, b, c), c});
}

TileParams equilateral_tile_params(int n, double area) {
  if (n < 6 || n % 2 != 0) {
    throw DomainError("equilateral_tile_params: n must be even and >= 6");
  }
  double lo = (n - 2) * kPi / 2.0;
  double hi = (n - 2) * kPi;
  if (!(area > lo) || !(area < hi)) {
    std::ostringstream os;
    os << "equilateral_tile_params: area must lie in ((n-2)pi/2, (n-2)pi) = ("
       << lo << ", " << hi << ")";
    throw DomainError(os.str());
  }

  TileParams p;
  p.n = n;
  p.area = area;
  p.sigma = (n - 2) - area / kPi;
  if (n == 6 && std::abs(area - 3.0 * kPi) <= 1e-12) {
    p.regular_hexagon = true;
    p.m = 4.0 / (n - 2);
    p.theta1 = Angle(kPi / 6.0);
    p.theta = Angle(kPi / 6.0);
    return p;
  }

  double sigma = p.sigma;
  if (sigma < 2.0 * (n - 4) / (n - 2)) {
    double lower = 4.0 / ((n - 2) * sigma);
    double upper = 2.0 / sigma;
    // The bound is often an integer in exact arithmetic (A a multiple of
    // pi/4, say) and lands a rounding error below it; m must clear it.
    double m = std::floor(lower + kIntegerSlack * std::max(1.0, lower)) + 1.0;
    if (!(m < upper - kIntegerSlack * std::max(1.0, upper))) {
      throw ContractError(
          "equilateral_tile_params: no integer in the admissible m interval");
    }
    p.m = m;
    p.m_is_integer = true;
  } else {
    p.m = 4.0 / (n - 2);
  }
  double t1 = (kPi / (p.m * (n - 4))) * (2.0 - p.m * sigma);
  double t = kTwoPi / (p.m * (n - 2)) - t1;
  p.theta1 = Angle(t1);
  p.theta = Angle(t);
  if (!(t1 > 0.0 && t1 < kPi / 2.0 && t > 0.0 && t < kPi / 2.0)) {
    throw ContractError("equilateral_tile_params: angles outside (0, pi/2)");
  }
  return p;
}

std::vector<double> tile_angles(const TileParams& params) {
  std::vector<double> out(static_cast<std::size_t>(params.n),
                          params.theta.radians());
  out[0] = params.theta1.radians();
  out[static_cast<std::size_t>(params.n / 2)] = params.theta1.radians();
  return out;
}

Polygon equilateral_tile(int n, double area) {
  TileParams params = equilateral_tile_params(n, area);
  if (params.regular_hexagon) return regular_polygon(6, Angle(kPi / 6.0));
  std::vector<double> half(static_cast<std::size_t>(n / 2),
                           params.theta.radians());
  half[0] = params.theta1.radians();
  EvenGonResult result = equilateral_even_gon(half);
  if (!is_convex(result.polygon)) {
    throw GeometryError("equilateral_tile: result is not strictly convex");
  }
  return std::move(result.polygon);
}

}  // namespace hypertile
