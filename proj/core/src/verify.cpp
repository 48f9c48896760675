#include "hypertile/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hypertile/constructors.hpp"
#include "hypertile/errors.hpp"
#include "hypertile/euclid_hex.hpp"
#include "hypertile/polygon.hpp"
#include "hypertile/random_polygons.hpp"
#include "hypertile/tiling_comb.hpp"

namespace hypertile {

namespace {

using Pairs = std::vector<std::pair<std::string, double>>;

// Perimeter of the regular heptagon with 2pi/3 angles, 50 digits.
constexpr const char* kHeptagonPerimeter =
    "3.9637941471472032663322908513576621207760109593392";

constexpr double kInf = std::numeric_limits<double>::infinity();

class Suite {
 public:
  Suite(std::string name, std::uint64_t seed)
      : name_(std::move(name)), rng_(seed_for(name_, seed)) {}

  void add(const std::string& id, const std::string& description, bool passed,
           Pairs measured, Pairs tolerances = {}) {
    checks_.push_back({name_ + "." + id, description, passed,
                       std::move(measured), std::move(tolerances)});
  }

  Rng& rng() { return rng_; }
  std::vector<CheckRecord> take() { return std::move(checks_); }

 private:
  // Each suite draws from its own stream so "all" matches the single runs.
  static Rng seed_for(const std::string& name, std::uint64_t seed) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : name) h = (h ^ c) * 1099511628211ULL;
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h),
                      static_cast<std::uint32_t>(h >> 32)};
    return Rng(seq);
  }

  std::string name_;
  Rng rng_;
  std::vector<CheckRecord> checks_;
};

double max_side_spread(const Polygon& p) {
  auto [lo, hi] = std::minmax_element(p.side_lengths().begin(),
                                      p.side_lengths().end());
  return *hi - *lo;
}

double heptagon_closed_form() {
  return 14.0 * std::acosh(std::cos(kPi / 7.0) / std::sin(kPi / 3.0));
}

// ------------------------------------------------------------- suites

void heptagon(Suite& s) {
  constexpr double kAreaTol = 1e-12;
  constexpr double kPerimeterTol = 1e-10;
  constexpr double kOracleTol = 1e-12;
  Polygon r7 = regular_polygon(7, Angle(2.0 * kPi / 3.0));
  double a = area(r7);
  s.add("area", "Gauss-Bonnet area of R7 equals pi/3",
        std::abs(a - kPi / 3.0) <= kAreaTol,
        {{"area", a}, {"error", std::abs(a - kPi / 3.0)}},
        {{"abs", kAreaTol}});
  double fan = fan_area(r7);
  s.add("fan_area", "triangle-fan area of R7 equals pi/3",
        std::abs(fan - kPi / 3.0) <= kAreaTol,
        {{"fan_area", fan}, {"error", std::abs(fan - kPi / 3.0)}},
        {{"abs", kAreaTol}});
  double p = perimeter(r7);
  double closed = heptagon_closed_form();
  s.add("perimeter", "measured perimeter matches 2n acosh(cos(pi/n)/sin(theta/2))",
        std::abs(p - closed) <= kPerimeterTol,
        {{"perimeter", p}, {"closed_form", closed},
         {"error", std::abs(p - closed)}},
        {{"abs", kPerimeterTol}});
  double oracle = std::stod(kHeptagonPerimeter);
  double rel = std::abs(closed - oracle) / oracle;
  s.add("oracle", "closed-form perimeter matches the 50-digit reference",
        rel <= kOracleTol, {{"closed_form", closed}, {"relative_error", rel}},
        {{"relative", kOracleTol}});
  RegularMetrics m = regular_metrics(7, Angle(2.0 * kPi / 3.0));
  double spread = max_side_spread(r7);
  double side_err = std::abs(r7.side_length(0) - m.side.value());
  s.add("equilateral", "R7 sides agree with each other and the closed form",
        spread <= 1e-12 && side_err <= 1e-12,
        {{"spread", spread}, {"side_error", side_err}}, {{"abs", 1e-12}});
}

void monotonicity(Suite& s) {
  const double area = kPi / 3.0;
  double prev = kInf;
  double worst = kInf;
  bool decreasing = true;
  for (int n = 3; n <= 30; ++n) {
    double p = regular_metrics(n, regular_angle_for_area(n, area)).perimeter;
    worst = std::min(worst, prev - p);
    decreasing &= p < prev;
    prev = p;
  }
  s.add("in_n", "regular perimeter at area pi/3 strictly decreases for n = 3..30",
        decreasing, {{"min_decrease", worst}});

  prev = 0.0;
  worst = kInf;
  bool increasing = true;
  int samples = 0;
  for (int k = 1; k <= 50; ++k) {
    double a = 0.1 * k * kPi / 3.0;
    if (!(a > 0.0 && a < 5.0 * kPi)) continue;
    double p = regular_metrics(7, regular_angle_for_area(7, a)).perimeter;
    worst = std::min(worst, p - prev);
    increasing &= p > prev;
    prev = p;
    ++samples;
  }
  s.add("in_area", "heptagon perimeter strictly increases with area",
        increasing, {{"samples", samples}, {"min_increase", worst}});
}

void evengon(Suite& s) {
  constexpr int kCases = 200;
  constexpr double kSpreadTol = 1e-9;
  constexpr double kAngleTol = 1e-8;
  std::uniform_int_distribution<int> pick_n(2, 6);
  std::uniform_real_distribution<double> pick_angle(0.2, kPi - 0.2);
  int successes = 0;
  int embedded = 0;
  int multi_root = 0;
  double worst_spread = 0.0;
  double worst_angle = 0.0;
  for (int c = 0; c < kCases; ++c) {
    int n = pick_n(s.rng());
    std::vector<double> half(static_cast<std::size_t>(n));
    do {
      for (double& t : half) t = pick_angle(s.rng());
    } while (!(std::accumulate(half.begin(), half.end(), 0.0) <
               (n - 1) * kPi - 0.1));
    try {
      EvenGonResult r = equilateral_even_gon(half);
      ++successes;
      if (is_embedded(r.polygon)) ++embedded;
      if (r.roots_found > 1) ++multi_root;
      worst_spread = std::max(worst_spread, max_side_spread(r.polygon));
      for (std::size_t i = 0; i < r.polygon.size(); ++i) {
        worst_angle = std::max(worst_angle,
                               std::abs(r.polygon.interior_angle(i) -
                                        half[i % half.size()]));
      }
    } catch (const Error&) {
    }
  }
  s.add("success", "all random admissible half-angle vectors construct",
        successes == kCases,
        {{"cases", kCases}, {"successes", successes},
         {"multiple_roots", multi_root}});
  s.add("embedded", "every constructed polygon is simple",
        embedded == successes && successes == kCases, {{"embedded", embedded}});
  s.add("equilateral", "side length spread", worst_spread < kSpreadTol,
        {{"max_spread", worst_spread}}, {{"abs", kSpreadTol}});
  s.add("angles", "prescribed angles reproduced", worst_angle <= kAngleTol,
        {{"max_error", worst_angle}}, {{"abs", kAngleTol}});

  // Equal half-angles must give the regular 2n-gon.
  bool all_regular = true;
  int regular_cases = 0;
  for (int n = 2; n <= 6; ++n) {
    double upper = (n - 1) * kPi / n;
    for (double frac : {0.25, 0.5, 0.9}) {
      double t = frac * upper;
      std::vector<double> half(static_cast<std::size_t>(n), t);
      try {
        EvenGonResult r = equilateral_even_gon(half);
        all_regular &= congruent(r.polygon, regular_polygon(2 * n, Angle(t)),
                                 kAngleTol);
      } catch (const Error&) {
        all_regular = false;
      }
      ++regular_cases;
    }
  }
  s.add("regular", "equal angles reproduce the regular polygon up to isometry",
        all_regular, {{"cases", regular_cases}}, {{"abs", kAngleTol}});
}

void tileparams(Suite& s) {
  constexpr double kInvariantTol = 1e-12;
  constexpr double kAngleSumTol = 1e-10;
  constexpr double kAreaTol = 1e-8;
  constexpr int kAreas = 20;
  for (int n : {6, 8, 10, 12}) {
    double lo = (n - 2) * kPi / 2.0;
    double hi = (n - 2) * kPi;
    double worst_invariant = 0.0;
    double worst_sum = 0.0;
    double worst_area = 0.0;
    double max_angle = 0.0;
    double worst_measured = 0.0;
    int built = 0;
    for (int j = 0; j < kAreas; ++j) {
      double a = lo + (hi - lo) * (j + 1) / (kAreas + 1);
      TileParams p = equilateral_tile_params(n, a);
      double t1 = p.theta1.radians();
      double t = p.theta.radians();
      worst_invariant = std::max(
          {worst_invariant, std::abs(p.sigma - ((n - 2) - a / kPi)),
           std::abs(p.m * (n - 2) * (t1 + t) - kTwoPi),
           std::abs(p.m * (n - 4) * t1 - kPi * (2.0 - p.m * p.sigma))});
      worst_sum = std::max(worst_sum,
                           std::abs(2.0 * t1 + (n - 2) * t - ((n - 2) * kPi - a)));
      try {
        Polygon poly = equilateral_tile(n, a);
        ++built;
        worst_area = std::max(worst_area, std::abs(area(poly) - a));
        // (n-2)(theta1 + theta) = 2pi/m again, on the measured angles;
        // theta1 sits at vertices 0 and n/2.
        std::vector<double> angs = poly.interior_angles();
        double m1 = 0.0;
        double m0 = 0.0;
        for (int i = 0; i < n; ++i) {
          max_angle = std::max(max_angle, angs[i]);
          if (i == 0 || i == n / 2) {
            m1 += angs[i] / 2.0;
          } else {
            m0 += angs[i] / (n - 2);
          }
        }
        worst_measured =
            std::max(worst_measured, std::abs((n - 2) * (m1 + m0) - kTwoPi / p.m));
      } catch (const Error&) {
      }
    }
    std::string tag = "n" + std::to_string(n);
    s.add(tag + ".invariants", "sigma, m, theta1, theta relations",
          worst_invariant <= kInvariantTol, {{"max_error", worst_invariant}},
          {{"abs", kInvariantTol}});
    s.add(tag + ".angle_sum", "2 theta1 + (n-2) theta = (n-2)pi - A",
          worst_sum <= kAngleSumTol, {{"max_error", worst_sum}},
          {{"abs", kAngleSumTol}});
    s.add(tag + ".built", "every tile constructs", built == kAreas,
          {{"built", built}, {"areas", kAreas}});
    s.add(tag + ".area", "tile area matches the target",
          built == kAreas && worst_area <= kAreaTol,
          {{"max_error", worst_area}}, {{"abs", kAreaTol}});
    s.add(tag + ".measured_angle_sum", "(n-2)(theta1 + theta) = 2pi/m on the built tile",
          built == kAreas && worst_measured <= kAngleSumTol,
          {{"max_error", worst_measured}}, {{"abs", kAngleSumTol}});
    s.add(tag + ".acute", "all tile angles below pi/2",
          built == kAreas && max_angle < kPi / 2.0, {{"max_angle", max_angle}});
  }

  TileParams a = equilateral_tile_params(12, 6.0 * kPi);
  double err_a = std::max({std::abs(a.sigma - 4.0), std::abs(a.m - 0.4),
                           std::abs(a.theta1.radians() - kPi / 8.0),
                           std::abs(a.theta.radians() - 3.0 * kPi / 8.0)});
  s.add("fixture_12_6pi", "(12, 6pi) -> sigma 4, m 0.4, pi/8, 3pi/8",
        err_a <= kInvariantTol,
        {{"sigma", a.sigma}, {"m", a.m}, {"theta1", a.theta1.radians()},
         {"theta", a.theta.radians()}},
        {{"abs", kInvariantTol}});
  TileParams b = equilateral_tile_params(12, 9.5 * kPi);
  double err_b = std::max({std::abs(b.m - 1.0),
                           std::abs(b.theta1.radians() - 3.0 * kPi / 16.0),
                           std::abs(b.theta.radians() - kPi / 80.0)});
  s.add("fixture_12_9.5pi", "(12, 9.5pi) -> m 1, 3pi/16, pi/80",
        err_b <= kInvariantTol && b.m_is_integer,
        {{"sigma", b.sigma}, {"m", b.m}, {"theta1", b.theta1.radians()},
         {"theta", b.theta.radians()}},
        {{"abs", kInvariantTol}});
}

void flattening(Suite& s) {
  constexpr int kCases = 500;
  constexpr double kAreaTol = 1e-9;
  constexpr double kNoOpTol = 1e-12;
  double worst_area = 0.0;
  double min_gain = kInf;
  int congruent_count = 0;
  for (int c = 0; c < kCases; ++c) {
    ComplementaryInstance inst = random_complementary_instance(s.rng(), c % 2 == 0);
    Polygon flat = flatten_complementary_pair(inst.polygon, inst.v, inst.w);
    worst_area = std::max(worst_area, std::abs(area(flat) - area(inst.polygon)));
    min_gain = std::min(min_gain, perimeter(inst.polygon) - perimeter(flat));
    if (congruent(reduce_equivalent(flat), inst.base, 1e-8)) ++congruent_count;
  }
  s.add("area", "flattening a complementary pair preserves area",
        worst_area <= kAreaTol, {{"cases", kCases}, {"max_error", worst_area}},
        {{"abs", kAreaTol}});
  s.add("perimeter", "flattening a complementary pair shortens the boundary",
        min_gain > 0.0, {{"min_reduction", min_gain}});
  s.add("restores_base", "the flattened polygon is equivalent to the base",
        congruent_count == kCases, {{"congruent", congruent_count}},
        {{"abs", 1e-8}});

  double worst_noop = 0.0;
  std::uniform_int_distribution<int> count(1, 3);
  for (int c = 0; c < 100; ++c) {
    Polygon p = random_convex_polygon(s.rng(), 6, 3);
    std::size_t e = std::uniform_int_distribution<std::size_t>(0, p.size() - 1)(s.rng());
    int k = count(s.rng());
    Polygon q = insert_degenerate_vertices(p, e, k);
    Polygon back = flatten(q, e, (e + static_cast<std::size_t>(k) + 1) % q.size());
    double err = std::abs(area(back) - area(p)) +
                 std::abs(perimeter(back) - perimeter(p));
    if (back.size() != p.size()) {
      err = kInf;
    } else {
      for (std::size_t i = 0; i < p.size(); ++i) {
        err = std::max(err, dist(back.vertex(i), p.vertex(i)).value());
      }
    }
    worst_noop = std::max(worst_noop, err);
  }
  s.add("straight_noop", "flattening across pi-vertices changes nothing",
        worst_noop <= kNoOpTol, {{"max_error", worst_noop}},
        {{"abs", kNoOpTol}});
}

void hull(Suite& s) {
  constexpr int kCases = 500;
  constexpr double kSlack = -1e-10;
  std::uniform_int_distribution<std::size_t> pick_n(4, 10);
  double min_area_gain = kInf;
  double min_perimeter_gain = kInf;
  bool strict = true;
  int nonconvex = 0;
  for (int c = 0; c < kCases; ++c) {
    Polygon p = random_star_polygon(s.rng(), pick_n(s.rng()));
    Polygon h = convex_hull(p);
    double da = area(h) - area(p);
    double dp = perimeter(p) - perimeter(h);
    min_area_gain = std::min(min_area_gain, da);
    min_perimeter_gain = std::min(min_perimeter_gain, dp);
    if (!concave_vertices(p).reflex.empty()) {
      ++nonconvex;
      strict &= da > 0.0 && dp > 0.0;
    }
  }
  s.add("area", "hull area is at least the polygon area",
        min_area_gain >= kSlack, {{"min_slack", min_area_gain}},
        {{"slack", kSlack}});
  s.add("perimeter", "hull perimeter is at most the polygon perimeter",
        min_perimeter_gain >= kSlack, {{"min_slack", min_perimeter_gain}},
        {{"slack", kSlack}});
  s.add("strict", "both inequalities strict for non-convex polygons", strict,
        {{"nonconvex", nonconvex}});
}

void combinatorics(Suite& s) {
  std::vector<double> angles{kPi / 2.0, kPi / 3.0, kPi / 7.0};
  std::vector<std::vector<int>> expected{{0, 0, 14}, {0, 3, 7}, {0, 6, 0},
                                         {2, 0, 7},  {2, 3, 0}, {4, 0, 0}};
  std::vector<std::vector<int>> got;
  for (const auto& c : angle_combinations(angles)) got.push_back(c.coefficients);
  s.add("pi2_pi3_pi7", "combinations of pi/2, pi/3, pi/7", got == expected,
        {{"solutions", static_cast<double>(got.size())}}, {{"abs", 1e-9}});
  std::vector<PiRational> exact{{1, 2}, {1, 3}, {1, 7}};
  std::vector<std::vector<int>> got_exact;
  for (const auto& c : angle_combinations_exact(exact)) {
    got_exact.push_back(c.coefficients);
  }
  s.add("exact_mode", "exact enumeration agrees", got_exact == expected,
        {{"solutions", static_cast<double>(got_exact.size())}});

  auto one = [](std::vector<int> k) {
    return std::vector<ComboSolution>{{std::move(k), 0.0}};
  };
  bool gs_ok = gs_condition(one({2, 4, 6})) == std::optional<bool>(true) &&
               gs_condition(one({1, 3, 5})) == std::optional<bool>(false) &&
               gs_condition(one({2, 3, 4})) == std::optional<bool>(false) &&
               !gs_condition(angle_combinations(angles)).has_value();
  s.add("gs_fixtures", "Goodman-Strauss criterion fixtures", gs_ok, {});

  bool regular_ok = regular_tiles(2.0 * kPi / 3.0) && regular_tiles(kPi / 6.0) &&
                    !regular_tiles(kTwoPi / 7.5);
  s.add("regular_tiles", "regular polygon tiling criterion fixtures",
        regular_ok, {});

  std::vector<double> tile = tile_angles(equilateral_tile_params(12, 9.5 * kPi));
  std::vector<double> right(4, kPi / 2.0);
  std::vector<double> mixed{kPi / 2.0, kPi / 2.0, kPi / 2.0, 0.7};
  bool margulis_ok = margulis_check(tile) && margulis_check(right) &&
                     !margulis_check(mixed);
  s.add("margulis", "Margulis completion fixtures", margulis_ok, {});

  constexpr int kTriples = 50;
  std::uniform_int_distribution<int> pick_k(0, 7);
  int survived = 0;
  double worst = 0.0;
  for (int c = 0; c < kTriples; ++c) {
    std::array<int, 3> k{};
    do {
      k = {pick_k(s.rng()), pick_k(s.rng()), pick_k(s.rng())};
    } while (*std::max_element(k.begin(), k.end()) < 3);
    ScaleneWitnessOptions opts;
    opts.seed = s.rng()();
    try {
      std::array<double, 3> t = scalene_witness(k, opts);
      double residual = std::abs(k[0] * t[0] + k[1] * t[1] + k[2] * t[2] - kTwoPi);
      auto combos = angle_combinations(t);
      bool ok = residual <= 1e-12 && combos.size() == 1 &&
                combos[0].coefficients == std::vector<int>(k.begin(), k.end()) &&
                std::abs(t[0] - t[1]) > 1e-6 && std::abs(t[1] - t[2]) > 1e-6 &&
                std::abs(t[0] - t[2]) > 1e-6 && t[0] + t[1] + t[2] < kPi;
      worst = std::max(worst, residual);
      if (ok) ++survived;
    } catch (const Error&) {
    }
  }
  s.add("scalene_witness", "witnesses survive the enumeration recheck",
        survived == kTriples,
        {{"triples", kTriples}, {"survived", survived}, {"max_residual", worst}},
        {{"abs", 1e-12}});
}

void klein_quartic(Suite& s) {
  TilingGraph g = klein_quartic_graph();
  DegreeAudit a = degree_audit(g, 7);
  bool counts = g.faces.size() == 24 && g.edges == 84 &&
                g.vertex_degrees.size() == 56 && g.chi == -4;
  s.add("counts", "24 heptagons: E = 84, V = 56, chi = -4", counts,
        {{"F", 24.0}, {"E", g.edges},
         {"V", static_cast<double>(g.vertex_degrees.size())}, {"chi", g.chi}});
  s.add("vbar", "average degree-3 incidences per face equals 7",
        std::abs(a.vbar - 7.0) <= 1e-12 && a.bound_satisfied,
        {{"vbar", a.vbar}, {"k", a.k}}, {{"abs", 1e-12}});
  s.add("equality", "every vertex has degree two or three", a.equality,
        {{"implied_k", a.implied_k}});

  TilingGraph torus;
  torus.chi = 0;
  torus.edges = 2;
  torus.faces = {TilingFace{4, {}}};
  torus.vertex_degrees = {4};
  DegreeAudit t = degree_audit(torus, 6);
  s.add("flat_torus", "square torus: hyperbolic bound inapplicable, vbar <= 6",
        !t.applicable && t.euclidean && t.bound_satisfied,
        {{"vbar", t.vbar}, {"bound", t.bound}});
}

void euclid_hex(Suite& s) {
  using namespace euclid;
  double sq = A_of_n(4.0, 4.0);
  double hex = A_of_n(6.0, 6.0);
  s.add("fixtures", "A(4,4) = 1 and A(6,6) = 3sqrt(3)/2",
        std::abs(sq - 1.0) <= 1e-12 &&
            std::abs(hex - 1.5 * std::sqrt(3.0)) <= 1e-12,
        {{"A44", sq}, {"A66", hex}}, {{"abs", 1e-12}});

  ConcavityReport r1 = concavity_report(2.1, 200.0, 1.0);
  ConcavityReport r10 = concavity_report(2.1, 200.0, 10.0);
  s.add("concavity", "A increasing and concave on [2.1, 200]",
        r1.increasing && r1.concave && r1.closed_form_agrees &&
            r10.increasing && r10.concave,
        {{"samples", static_cast<double>(r1.samples.size())}});

  bool halving = true;
  int grid = 0;
  for (int i = 0; i <= 4000; ++i) {
    double n = 6.0 * std::pow(1e4 / 6.0, i / 4000.0);
    halving &= halving_inequality(n, 1.0) && halving_cosine_form(n);
    ++grid;
  }
  s.add("halving", "A(n) < 2A(n/2) on [6, 1e4]", halving, {{"grid", grid}});

  constexpr int kVectors = 10000;
  std::uniform_int_distribution<int> pick_len(1, 12);
  std::uniform_real_distribution<double> pick_real(0.0, 12.0);
  std::uniform_int_distribution<int> pick_int(0, 12);
  std::bernoulli_distribution integral(0.5);
  int violations = 0;
  int spurious_equality = 0;
  int repairs = 0;
  for (int c = 0; c < kVectors; ++c) {
    std::vector<double> ns;
    double mean = 0.0;
    do {
      ns.assign(static_cast<std::size_t>(pick_len(s.rng())), 0.0);
      bool ints = integral(s.rng());
      for (double& n : ns) {
        n = ints ? pick_int(s.rng()) : pick_real(s.rng());
      }
      mean = std::accumulate(ns.begin(), ns.end(), 0.0) / ns.size();
    } while (mean > 6.0);
    JensenAudit a = jensen_audit(ns, 1.0, 0.0);
    if (!a.chain_holds) ++violations;
    if (a.tight != a.all_hexagons) ++spurious_equality;
    if (a.repair_fired) ++repairs;
  }
  std::vector<double> six(4, 6.0);
  JensenAudit all_six = jensen_audit(six, 1.0, A_of_n(6.0, 1.0));
  s.add("jensen", "area chain holds for random side counts with mean <= 6",
        violations == 0,
        {{"vectors", kVectors}, {"violations", violations}, {"repairs", repairs}});
  s.add("jensen_equality", "the chain is tight exactly at all hexagons",
        spurious_equality == 0 && all_six.tight && all_six.all_hexagons,
        {{"mismatches", spurious_equality}});
}

void reg_is_best(Suite& s) {
  constexpr int kCases = 10000;
  constexpr double kAreaTol = 1e-6;
  constexpr double kBeatTol = 1e-9;
  const double target = kPi / 3.0;
  std::array<double, 11> regular{};
  for (int n = 3; n <= 10; ++n) {
    regular[n] = regular_metrics(n, regular_angle_for_area(n, target)).perimeter;
  }
  double min_margin = kInf;
  double worst_area = 0.0;
  int resamples = 0;
  for (int c = 0; c < kCases; ++c) {
    int n = 3 + c % 8;
    std::optional<Polygon> p;
    while (!p) {
      p = scale_to_area(random_star_polygon(s.rng(), static_cast<std::size_t>(n)),
                        target);
      if (!p) ++resamples;
    }
    worst_area = std::max(worst_area, std::abs(area(*p) - target));
    min_margin = std::min(min_margin, perimeter(*p) - regular[n]);
  }
  s.add("area", "sampled polygons have area pi/3", worst_area <= kAreaTol,
        {{"max_error", worst_area}, {"resamples", resamples}},
        {{"abs", kAreaTol}});
  s.add("perimeter", "no sample beats the regular polygon's perimeter",
        min_margin >= -kBeatTol, {{"cases", kCases}, {"min_margin", min_margin}},
        {{"abs", kBeatTol}});
}

const std::map<std::string, std::function<void(Suite&)>>& registry() {
  static const std::map<std::string, std::function<void(Suite&)>> r{
      {"heptagon", heptagon},       {"monotonicity", monotonicity},
      {"evengon", evengon},         {"tileparams", tileparams},
      {"flattening", flattening},   {"hull", hull},
      {"combinatorics", combinatorics}, {"klein-quartic", klein_quartic},
      {"euclid-hex", euclid_hex},   {"reg-is-best", reg_is_best},
  };
  return r;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "heptagon", "monotonicity",  "evengon",       "tileparams",
      "flattening", "hull",        "combinatorics", "klein-quartic",
      "euclid-hex", "reg-is-best"};
  return names;
}

bool is_known_suite(const std::string& name) {
  return name == "all" || registry().count(name) > 0;
}

VerificationReport run_suite(const std::string& name, std::uint64_t seed) {
  if (!is_known_suite(name)) throw DomainError("unknown suite '" + name + "'");
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = name;
  report.seed = seed;
  std::vector<std::string> names =
      name == "all" ? suite_names() : std::vector<std::string>{name};
  for (const auto& n : names) {
    Suite suite(n, seed);
    try {
      registry().at(n)(suite);
    } catch (const std::exception& e) {
      suite.add("error", std::string("suite aborted: ") + e.what(), false, {});
    }
    for (auto& c : suite.take()) report.checks.push_back(std::move(c));
  }
  report.runtime_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::string report_to_json(const VerificationReport& report,
                           bool include_runtime) {
  using ojson = nlohmann::ordered_json;
  ojson j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["passed"] = report.passed();
  j["checks"] = ojson::array();
  for (const auto& c : report.checks) {
    ojson measured = ojson::object();
    for (const auto& [k, v] : c.measured) measured[k] = v;
    ojson tolerances = ojson::object();
    for (const auto& [k, v] : c.tolerances) tolerances[k] = v;
    j["checks"].push_back({{"id", c.id},
                           {"description", c.description},
                           {"status", c.passed ? "pass" : "fail"},
                           {"measured", measured},
                           {"tolerances", tolerances}});
  }
  if (include_runtime) j["runtime_ms"] = report.runtime_ms;
  return j.dump(2);
}

}  // namespace hypertile
