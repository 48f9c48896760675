// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any
// fails. Each check recomputes its quantities from the public API with its
// own sampling, independent of the verify suites.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hypertile/constructors.hpp"
#include "hypertile/errors.hpp"
#include "hypertile/euclid_hex.hpp"
#include "hypertile/polygon.hpp"
#include "hypertile/random_polygons.hpp"
#include "hypertile/tiling_comb.hpp"

using namespace hypertile;

namespace {

// mpmath, 50 digits: 14 acosh(cos(pi/7) / sin(pi/3)).
constexpr double kHeptagonPerimeter = 3.9637941471472032663322908513576621207760109593392;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome heptagon_metrics() {
  Polygon r7 = regular_polygon(7, Angle(2 * kPi / 3));
  double area_err = std::abs(area(r7) - kPi / 3);
  double closed = regular_metrics(7, Angle(2 * kPi / 3)).perimeter;
  double perim_err = std::abs(perimeter(r7) - closed);
  double oracle_err = std::abs(closed - kHeptagonPerimeter) / kHeptagonPerimeter;
  return {area_err <= 1e-12 && perim_err <= 1e-10 && oracle_err <= 1e-12,
          fmt("area err %.2e", area_err) + fmt(", perimeter err %.2e", perim_err) +
              fmt(", oracle rel err %.2e", oracle_err)};
}

Outcome monotonicity() {
  bool ok = true;
  double prev = kInf;
  for (int n = 3; n <= 30; ++n) {
    double p = regular_metrics(n, regular_angle_for_area(n, kPi / 3)).perimeter;
    ok &= p < prev;
    prev = p;
  }
  prev = -kInf;
  int steps = 0;
  for (int j = 1; j <= 50; ++j) {
    double a = 0.1 * j * kPi / 3;
    if (!(a > 0 && a < 5 * kPi)) continue;
    double p = regular_metrics(7, regular_angle_for_area(7, a)).perimeter;
    ok &= p > prev;
    prev = p;
    ++steps;
  }
  return {ok && steps == 50, "n = 3..30 at pi/3, 50 areas at n = 7"};
}

Outcome even_gons() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> u(0.2, kPi - 0.2);
  int success = 0, total = 200;
  double worst_spread = 0, worst_angle = 0;
  bool embedded = true;
  for (int i = 0; i < total; ++i) {
    int n = 2 + i % 5;
    std::vector<double> half;
    do {
      half.assign(static_cast<std::size_t>(n), 0.0);
      for (double& t : half) t = u(rng);
    } while (!(std::accumulate(half.begin(), half.end(), 0.0) < (n - 1) * kPi - 0.1));
    try {
      Polygon p = equilateral_even_gon(half).polygon;
      auto [lo, hi] = std::minmax_element(p.side_lengths().begin(), p.side_lengths().end());
      worst_spread = std::max(worst_spread, *hi - *lo);
      for (std::size_t k = 0; k < p.size(); ++k) {
        worst_angle = std::max(worst_angle, std::abs(p.interior_angle(k) - half[k % n]));
      }
      embedded &= is_embedded(p);
      ++success;
    } catch (const Error&) {
    }
  }
  double worst_regular = 0;
  for (int n = 2; n <= 6; ++n) {
    for (double frac : {0.3, 0.6, 0.9}) {
      double t = frac * (n - 1) * kPi / n;
      std::vector<double> half(static_cast<std::size_t>(n), t);
      Polygon p = equilateral_even_gon(half).polygon;
      Polygon reg = regular_polygon(2 * n, Angle(t));
      double err = std::abs(p.side_length(0) - reg.side_length(0));
      for (std::size_t k = 0; k < p.size(); ++k) {
        err = std::max(err, std::abs(p.interior_angle(k) - t));
      }
      worst_regular = std::max(worst_regular, err);
    }
  }
  return {success == total && worst_spread < 1e-9 && worst_angle <= 1e-8 && embedded &&
              worst_regular <= 1e-8,
          std::to_string(success) + "/200 built" + fmt(", side spread %.2e", worst_spread) +
              fmt(", angle err %.2e", worst_angle) + fmt(", regular err %.2e", worst_regular)};
}

Outcome tile_params() {
  bool ok = true;
  double worst_area = 0, worst_inv = 0, worst_sum = 0;
  int built = 0;
  for (int n : {6, 8, 10, 12}) {
    double lo = (n - 2) * kPi / 2, hi = (n - 2) * kPi;
    for (int j = 0; j < 20; ++j) {
      double a = lo + (hi - lo) * (j + 0.5) / 20;
      try {
        TileParams tp = equilateral_tile_params(n, a);
        double sigma = (n - 2) - a / kPi;
        double t1 = tp.theta1.radians(), t = tp.theta.radians();
        worst_inv = std::max(worst_inv, std::abs(tp.sigma - sigma));
        worst_inv = std::max(worst_inv, std::abs((n - 2) * (t1 + t) - kTwoPi / tp.m));
        if (sigma < 2.0 * (n - 4) / (n - 2)) {
          ok &= tp.m == std::floor(tp.m) && tp.m > 4.0 / ((n - 2) * sigma) && tp.m < 2.0 / sigma;
        } else {
          ok &= tp.m == 4.0 / (n - 2);
        }
        ok &= t1 > 0 && t1 < kPi / 2 && t > 0 && t < kPi / 2;
        Polygon p = equilateral_tile(n, a);
        worst_area = std::max(worst_area, std::abs(area(p) - a));
        // The angle-sum relation (n-2)(theta1 + theta) = 2pi/m, with both
        // angles measured on the built polygon: theta1 at vertices 0 and n/2.
        std::vector<double> angs = p.interior_angles();
        double m1 = 0, m = 0;
        for (int i = 0; i < n; ++i) {
          ok &= angs[i] < kPi / 2;
          if (i == 0 || i == n / 2) {
            m1 += angs[i] / 2;
          } else {
            m += angs[i] / (n - 2);
          }
        }
        worst_sum = std::max(worst_sum, std::abs((n - 2) * (m1 + m) - kTwoPi / tp.m));
        ++built;
      } catch (const Error&) {
        ok = false;
      }
    }
  }
  TileParams f1 = equilateral_tile_params(12, 6 * kPi);
  TileParams f2 = equilateral_tile_params(12, 9.5 * kPi);
  bool fixtures = std::abs(f1.sigma - 4) <= 1e-15 && std::abs(f1.m - 0.4) <= 1e-15 &&
                  std::abs(f1.theta1.radians() - kPi / 8) <= 1e-15 &&
                  std::abs(f1.theta.radians() - 3 * kPi / 8) <= 1e-15 &&
                  std::abs(f2.sigma - 0.5) <= 1e-15 && f2.m == 1.0 &&
                  std::abs(f2.theta1.radians() - 3 * kPi / 16) <= 1e-15 &&
                  std::abs(f2.theta.radians() - kPi / 80) <= 1e-15;
  ok &= worst_inv <= 1e-12 && worst_area <= 1e-8 && worst_sum <= 1e-10 && fixtures && built == 80;
  return {ok, std::to_string(built) + "/80 built" + fmt(", invariant err %.2e", worst_inv) +
                  fmt(", area err %.2e", worst_area) + fmt(", angle-sum err %.2e", worst_sum) +
                  (fixtures ? ", fixtures exact" : ", fixtures differ")};
}

Outcome flattening() {
  Rng rng(777);
  double worst_area = 0, min_drop = kInf;
  bool ok = true;
  for (int i = 0; i < 500; ++i) {
    ComplementaryInstance c = random_complementary_instance(rng, i % 2 == 1);
    try {
      Polygon f = flatten_complementary_pair(c.polygon, c.v, c.w);
      worst_area = std::max(worst_area, std::abs(area(f) - area(c.polygon)));
      min_drop = std::min(min_drop, perimeter(c.polygon) - perimeter(f));
    } catch (const Error&) {
      ok = false;
    }
  }
  Polygon r7 = regular_polygon(7, Angle(2 * kPi / 3));
  Polygon padded = insert_degenerate_vertices(r7, 3, 1);
  Polygon flat = flatten(padded, 3, 5);
  double noop = std::max(std::abs(area(flat) - area(padded)),
                         std::abs(perimeter(flat) - perimeter(padded)));
  ok &= worst_area <= 1e-9 && min_drop > 0 && noop <= 1e-12;
  return {ok, fmt("area err %.2e", worst_area) + fmt(", min perimeter drop %.2e", min_drop) +
                  fmt(", pi-vertex change %.2e", noop)};
}

Outcome hull() {
  Rng rng(4242);
  double min_area_slack = kInf, min_perim_slack = kInf;
  double min_strict_area = kInf, min_strict_perim = kInf;
  int nonconvex = 0;
  for (int i = 0; i < 500; ++i) {
    Polygon p = random_star_polygon(rng, 4 + i % 9);
    Polygon h = convex_hull(p);
    double da = area(h) - area(p), dp = perimeter(p) - perimeter(h);
    min_area_slack = std::min(min_area_slack, da);
    min_perim_slack = std::min(min_perim_slack, dp);
    if (!concave_vertices(p).reflex.empty()) {
      ++nonconvex;
      min_strict_area = std::min(min_strict_area, da);
      min_strict_perim = std::min(min_strict_perim, dp);
    }
  }
  bool ok = min_area_slack >= -1e-10 && min_perim_slack >= -1e-10 && min_strict_area > 0 &&
            min_strict_perim > 0 && nonconvex > 0;
  return {ok, std::to_string(nonconvex) + " non-convex" +
                  fmt(", min area slack %.2e", min_area_slack) +
                  fmt(", min perimeter slack %.2e", min_perim_slack)};
}

Outcome combinatorics() {
  // Brute force over the box k_i <= 2pi / theta_i in integer units of pi/42.
  const int units[3] = {21, 14, 6};
  std::vector<std::vector<int>> brute;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 14; ++c)
        if (a * units[0] + b * units[1] + c * units[2] == 84) brute.push_back({a, b, c});
  std::vector<double> angles{kPi / 2, kPi / 3, kPi / 7};
  std::vector<std::vector<int>> got;
  for (const auto& s : angle_combinations(angles)) got.push_back(s.coefficients);
  bool combos = got == brute && got.size() == 6;

  auto gs = [](std::vector<int> k) {
    return gs_condition(std::vector<ComboSolution>{{std::move(k), 0.0}});
  };
  bool gs_ok = gs({2, 4, 6}) == true && gs({1, 3, 5}) == false && gs({2, 3, 4}) == false;

  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<int> c(0, 8);
  int rechecked = 0;
  while (rechecked < 50) {
    std::array<int, 3> k{c(rng), c(rng), c(rng)};
    if (*std::max_element(k.begin(), k.end()) < 3) continue;
    ScaleneWitnessOptions o;
    o.seed = 1000 + static_cast<std::uint64_t>(rechecked);
    bool ok = false;
    try {
      auto t = scalene_witness(k, o);
      auto sols = angle_combinations(t);
      ok = sols.size() == 1 && sols[0].coefficients == std::vector<int>{k[0], k[1], k[2]} &&
           std::abs(k[0] * t[0] + k[1] * t[1] + k[2] * t[2] - kTwoPi) <= 1e-12 &&
           t[0] + t[1] + t[2] < kPi && std::abs(t[0] - t[1]) > 1e-6 &&
           std::abs(t[1] - t[2]) > 1e-6 && std::abs(t[0] - t[2]) > 1e-6;
    } catch (const Error&) {
    }
    if (!ok) {
      return {false, "scalene witness failed recheck for (" + std::to_string(k[0]) + "," +
                         std::to_string(k[1]) + "," + std::to_string(k[2]) + ")"};
    }
    ++rechecked;
  }
  return {combos && gs_ok, std::to_string(got.size()) + " combinations" +
                               (gs_ok ? ", GS fixtures ok" : ", GS fixtures wrong") +
                               ", 50 witnesses rechecked"};
}

Outcome klein_quartic() {
  TilingGraph g = klein_quartic_graph();
  int f = static_cast<int>(g.faces.size());
  int sides = 0;
  bool heptagons = true;
  for (const auto& face : g.faces) {
    sides += face.sides;
    heptagons &= face.sides == 7;
  }
  int degree_sum = std::accumulate(g.vertex_degrees.begin(), g.vertex_degrees.end(), 0);
  bool cubic = std::all_of(g.vertex_degrees.begin(), g.vertex_degrees.end(),
                           [](int d) { return d == 3; });
  int e = sides / 2, v = static_cast<int>(g.vertex_degrees.size());
  DegreeAudit a = degree_audit(g, 7);
  bool ok = f == 24 && heptagons && cubic && e == 84 && g.edges == 84 && degree_sum == 2 * e &&
            v == 56 && f - e + v == -4 && g.chi == -4 && a.vbar == 7.0 && a.equality &&
            a.bound_satisfied;
  return {ok, "F=" + std::to_string(f) + " E=" + std::to_string(e) + " V=" + std::to_string(v) +
                  " chi=" + std::to_string(f - e + v) + fmt(" vbar=%.12g", a.vbar) +
                  (a.equality ? " equality" : " no equality")};
}

Outcome euclid_hexagons() {
  using namespace hypertile::euclid;
  double e4 = std::abs(A_of_n(4, 4) - 1), e6 = std::abs(A_of_n(6, 6) - 1.5 * std::sqrt(3.0));
  ConcavityReport r = concavity_report(2.1, 200, 1.0);
  bool halving = true;
  for (int i = 0; i <= 10000; ++i) halving &= halving_inequality(6 + (1e4 - 6) * i / 1e4, 1.0);
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<int> len(1, 10);
  std::uniform_int_distribution<int> sides(0, 12);
  int audited = 0;
  bool jensen = true;
  while (audited < 10000) {
    std::vector<double> n(static_cast<std::size_t>(len(rng)));
    for (double& x : n) x = sides(rng);
    if (std::accumulate(n.begin(), n.end(), 0.0) > 6.0 * n.size()) continue;
    JensenAudit a = jensen_audit(n, 1.0, 0.0);
    bool all6 = std::all_of(n.begin(), n.end(), [](double x) { return x == 6; });
    jensen &= a.hypothesis_ok && a.chain_holds && a.tight == all6;
    ++audited;
  }
  std::vector<double> sixes(5, 6.0);
  jensen &= jensen_audit(sixes, 1.0, 0.0).tight;
  bool ok = e4 <= 1e-12 && e6 <= 1e-12 && r.increasing && r.concave && halving && jensen;
  return {ok, fmt("A(4,4) err %.1e", e4) + fmt(", A(6,6) err %.1e", e6) +
                  (r.concave && r.increasing ? ", concave+increasing" : ", shape fails") +
                  (halving ? ", halving ok" : ", halving fails") +
                  (jensen ? ", 10^4 Jensen audits ok" : ", Jensen audit fails")};
}

// Star-shaped random n-gon with Poincare-disk vertices, rescaled radially in
// the Klein model until its area is pi/3. Area grows with the scale because
// the scaled regions are nested.
std::optional<Polygon> random_polygon_of_area(std::mt19937_64& rng, int n, double target) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> phi(static_cast<std::size_t>(n));
  for (double& x : phi) x = kTwoPi * u(rng);
  std::sort(phi.begin(), phi.end());
  for (int i = 0; i < n; ++i) {
    double gap = (i + 1 < n ? phi[i + 1] : phi[0] + kTwoPi) - phi[i];
    if (gap >= kPi) return std::nullopt;
  }
  std::vector<Vec2> base;
  double rmax = 0;
  for (double a : phi) {
    double r = 0.1 + 0.9 * u(rng);
    base.push_back({r * std::cos(a), r * std::sin(a)});
    rmax = std::max(rmax, r);
  }
  auto build = [&](double s) {
    std::vector<HPoint> v;
    for (const Vec2& b : base) v.push_back(HPoint::from_klein({s * b.x, s * b.y}));
    return Polygon(std::move(v));
  };
  double lo = 1e-6, hi = (1 - 1e-9) / rmax;
  Polygon top = build(hi);
  if (!is_embedded(top) || area(top) < target) return std::nullopt;
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    double mid = 0.5 * (lo + hi);
    (area(build(mid)) < target ? lo : hi) = mid;
  }
  return build(0.5 * (lo + hi));
}

Outcome reg_is_best() {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> pick(3, 10);
  const double target = kPi / 3;
  int cases = 0;
  double min_margin = kInf, worst_area = 0;
  while (cases < 10000) {
    int n = pick(rng);
    auto p = random_polygon_of_area(rng, n, target);
    if (!p) continue;
    double a = area(*p);
    worst_area = std::max(worst_area, std::abs(a - target));
    if (std::abs(a - target) > 1e-6) continue;
    double reg = regular_metrics(n, regular_angle_for_area(n, target)).perimeter;
    min_margin = std::min(min_margin, perimeter(*p) - reg);
    ++cases;
  }
  return {min_margin >= -1e-9 && worst_area <= 1e-6,
          std::to_string(cases) + " polygons" + fmt(", worst area err %.2e", worst_area) +
              fmt(", min perimeter margin %.4e", min_margin)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "heptagon metrics", heptagon_metrics},
      {2, "monotonicity", monotonicity},
      {3, "equilateral 2n-gons", even_gons},
      {4, "tile parameters", tile_params},
      {5, "flattening", flattening},
      {6, "convex hull", hull},
      {7, "combinatorics", combinatorics},
      {8, "Klein quartic audit", klein_quartic},
      {9, "Euclidean hexagons", euclid_hexagons},
      {10, "regular polygon sampling witness", reg_is_best},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::printf("%s %2d %s: %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
