#include "hypertile/tiling_comb.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <regex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hypertile/errors.hpp"
#include "hypertile/tolerances.hpp"

namespace hypertile {

namespace {

using json = nlohmann::json;

// Depth-first enumeration over `order` (largest angles first so the
// directly solved last coordinate has the largest range).
void enumerate(std::span<const double> angles,
               const std::vector<std::size_t>& order, double tol,
               std::size_t depth, double partial, std::vector<int>& coeffs,
               std::vector<ComboSolution>& out) {
  std::size_t idx = order[depth];
  double theta = angles[idx];
  if (depth + 1 == order.size()) {
    double need = (kTwoPi - partial) / theta;
    long long centre = std::llround(need);
    for (long long k = centre - 1; k <= centre + 1; ++k) {
      if (k < 0) continue;
      double residual = partial + static_cast<double>(k) * theta - kTwoPi;
      if (std::abs(residual) > tol) continue;
      coeffs[idx] = static_cast<int>(k);
      bool nonzero = std::any_of(coeffs.begin(), coeffs.end(),
                                 [](int c) { return c != 0; });
      if (nonzero) out.push_back({coeffs, residual});
    }
    coeffs[idx] = 0;
    return;
  }
  int bound = static_cast<int>(std::floor((kTwoPi + tol - partial) / theta));
  for (int k = 0; k <= bound; ++k) {
    coeffs[idx] = k;
    enumerate(angles, order, tol, depth + 1, partial + k * theta, coeffs, out);
  }
  coeffs[idx] = 0;
}

bool has_combination(std::span<const double> angles, double target,
                     double tol, std::size_t depth, double partial,
                     bool used) {
  if (std::abs(partial - target) <= tol && used) return true;
  if (depth == angles.size()) return false;
  double theta = angles[depth];
  int bound = static_cast<int>(std::floor((target + tol - partial) / theta));
  for (int k = 0; k <= bound; ++k) {
    if (has_combination(angles, target, tol, depth + 1, partial + k * theta,
                        used || k > 0)) {
      return true;
    }
  }
  return false;
}

std::vector<double> distinct_values(std::span<const double> angles) {
  std::vector<double> v(angles.begin(), angles.end());
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double a : v) {
    if (out.empty() || a - out.back() > 1e-12) out.push_back(a);
  }
  return out;
}

AngleClass parse_label(const std::string& s) {
  if (s == "convex") return AngleClass::kConvex;
  if (s == "straight" || s == "pi") return AngleClass::kStraight;
  if (s == "reflex") return AngleClass::kReflex;
  throw DataError("unknown angle label '" + s + "'");
}

const char* label_name(AngleClass c) {
  switch (c) {
    case AngleClass::kConvex:
      return "convex";
    case AngleClass::kStraight:
      return "straight";
    case AngleClass::kReflex:
      return "reflex";
  }
  return "convex";
}

}  // namespace

std::vector<ComboSolution> angle_combinations(std::span<const double> angles,
                                              double tolerance) {
  if (!(tolerance > 0.0)) {
    throw DomainError("angle_combinations: tolerance must be positive");
  }
  if (angles.empty()) return {};
  for (double a : angles) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw DomainError("angle_combinations: angles must be positive");
    }
  }
  std::vector<std::size_t> order(angles.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return angles[a] > angles[b];
  });
  std::vector<int> coeffs(angles.size(), 0);
  std::vector<ComboSolution> out;
  enumerate(angles, order, tolerance, 0, 0.0, coeffs, out);
  std::sort(out.begin(), out.end(),
            [](const ComboSolution& a, const ComboSolution& b) {
              return a.coefficients < b.coefficients;
            });
  return out;
}

double PiRational::radians() const {
  return static_cast<double>(num) * kPi / static_cast<double>(den);
}

std::optional<PiRational> parse_pi_rational(const std::string& text) {
  static const std::regex re(
      R"(^\s*([0-9]+(?:\.([0-9]+))?)?\s*\*?\s*pi\s*(?:/\s*([0-9]+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) return std::nullopt;
  std::int64_t num = 1;
  std::int64_t den = 1;
  if (m[1].matched) {
    std::string digits = m[1].str();
    std::size_t dot = digits.find('.');
    if (dot != std::string::npos) {
      std::size_t frac = digits.size() - dot - 1;
      digits.erase(dot, 1);
      for (std::size_t i = 0; i < frac; ++i) den *= 10;
    }
    num = std::stoll(digits);
  }
  if (m[3].matched) den *= std::stoll(m[3].str());
  if (den == 0) throw DomainError("zero denominator in '" + text + "'");
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return PiRational{num, den};
}

double parse_angle(const std::string& text) {
  if (auto r = parse_pi_rational(text)) return r->radians();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw DomainError("cannot parse angle '" + text + "'");
  }
  if (used != text.size()) throw DomainError("cannot parse angle '" + text + "'");
  return v;
}

std::vector<ComboSolution> angle_combinations_exact(
    std::span<const PiRational> angles) {
  std::int64_t l = 1;
  for (const auto& a : angles) {
    if (a.num <= 0 || a.den <= 0) {
      throw DomainError("angle_combinations_exact: angles must be positive");
    }
    l = std::lcm(l, a.den);
  }
  std::vector<std::int64_t> units;
  for (const auto& a : angles) units.push_back(a.num * (l / a.den));
  const std::int64_t target = 2 * l;

  std::vector<ComboSolution> out;
  std::vector<int> coeffs(angles.size(), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i,
                                                           std::int64_t s) {
    if (i == units.size()) {
      if (s == target) out.push_back({coeffs, 0.0});
      return;
    }
    for (std::int64_t k = 0; s + k * units[i] <= target; ++k) {
      coeffs[i] = static_cast<int>(k);
      rec(i + 1, s + k * units[i]);
    }
    coeffs[i] = 0;
  };
  if (!units.empty()) rec(0, 0);
  return out;
}

std::optional<bool> gs_condition(std::span<const ComboSolution> solutions) {
  if (solutions.size() != 1) return std::nullopt;
  const auto& k = solutions[0].coefficients;
  if (k.empty()) return std::nullopt;
  bool at_least_two =
      std::all_of(k.begin(), k.end(), [](int c) { return c >= 2; });
  bool same_parity = std::all_of(k.begin(), k.end(), [&](int c) {
    return c % 2 == k.front() % 2;
  });
  return at_least_two && same_parity;
}

bool regular_tiles(double theta) {
  if (!(theta > 0.0) || !(theta < kPi)) {
    throw DomainError("regular_tiles: angle must lie in (0, pi)");
  }
  double q = kTwoPi / theta;
  return std::abs(q - std::round(q)) <= 1e-9 * q;
}

bool margulis_check(std::span<const double> angles) {
  if (angles.size() < 4) return false;
  for (double a : angles) {
    if (!(a > 0.0) || a > kPi / 2.0 + kEpsAngle) return false;
  }
  constexpr double kTol = 1e-9;
  std::vector<double> values = distinct_values(angles);
  std::size_t m = values.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      for (std::size_t l = j; l < m; ++l) {
        double rest = kTwoPi - (values[i] + values[j] + values[l]);
        if (!has_combination(values, rest, kTol, 0, 0.0, false)) return false;
      }
    }
  }
  return true;
}

bool quadrilateral_candidate(std::span<const double> angles) {
  if (angles.size() != 4) return false;
  if (distinct_values(angles).size() != 4) return false;
  for (const auto& s : angle_combinations(angles)) {
    const auto& k = s.coefficients;
    bool positive = std::all_of(k.begin(), k.end(), [](int c) { return c > 0; });
    if (!positive) continue;
    bool parity = std::all_of(k.begin(), k.end(),
                              [&](int c) { return c % 2 == k[0] % 2; });
    int ones = static_cast<int>(std::count(k.begin(), k.end(), 1));
    if (parity && (ones == 0 || ones == 4)) return true;
  }
  return false;
}

std::array<double, 3> scalene_witness(const std::array<int, 3>& k,
                                      const ScaleneWitnessOptions& opts) {
  if (std::any_of(k.begin(), k.end(), [](int c) { return c < 0; })) {
    throw DomainError("scalene_witness: coefficients must be nonnegative");
  }
  // On {theta_i > 0, sum < pi} the form sum k_i theta_i ranges over
  // (0, pi * max k), so the plane meets the region iff max k >= 3.
  if (*std::max_element(k.begin(), k.end()) < 3) {
    throw DomainError(
        "scalene_witness: the plane sum k_i theta_i = 2pi misses the "
        "hyperbolic triangle region");
  }
  // Angles below this make the enumeration recheck needlessly expensive.
  constexpr double kMinAngle = 1e-3;

  std::mt19937_64 rng(opts.seed);
  std::exponential_distribution<double> expo(1.0);
  const std::vector<int> wanted(k.begin(), k.end());
  for (int attempt = 0; attempt < opts.budget; ++attempt) {
    std::array<double, 4> e{expo(rng), expo(rng), expo(rng), expo(rng)};
    double total = e[0] + e[1] + e[2] + e[3];
    std::array<double, 3> x{kPi * e[0] / total, kPi * e[1] / total,
                            kPi * e[2] / total};
    double dot = k[0] * x[0] + k[1] * x[1] + k[2] * x[2];
    if (!(dot > 0.0)) continue;
    double s = kTwoPi / dot;
    std::array<double, 3> t{s * x[0], s * x[1], s * x[2]};
    if (!(t[0] + t[1] + t[2] < kPi)) continue;
    if (*std::min_element(t.begin(), t.end()) < kMinAngle) continue;
    if (std::abs(t[0] - t[1]) <= opts.min_gap ||
        std::abs(t[1] - t[2]) <= opts.min_gap ||
        std::abs(t[0] - t[2]) <= opts.min_gap) {
      continue;
    }
    auto combos = angle_combinations(t, opts.tolerance);
    if (combos.size() == 1 && combos[0].coefficients == wanted) return t;
  }
  throw ConstructionError("scalene_witness: sampling budget exhausted");
}

// ------------------------------------------------------------------ graphs

void TilingGraph::validate() const {
  if (faces.empty()) throw DataError("tiling graph has no faces");
  if (edges <= 0) throw DataError("tiling graph has no edges");
  long long side_sum = 0;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& f = faces[i];
    if (f.sides < 1) throw DataError("face with no sides");
    if (!f.angle_labels.empty() &&
        static_cast<int>(f.angle_labels.size()) != f.sides) {
      std::ostringstream os;
      os << "face " << i << " has " << f.angle_labels.size()
         << " angle labels for " << f.sides << " sides";
      throw DataError(os.str());
    }
    side_sum += f.sides;
  }
  long long degree_sum = 0;
  for (int d : vertex_degrees) {
    if (d < 2) throw DataError("tiling vertex of degree below two");
    degree_sum += d;
  }
  if (side_sum != 2LL * edges) {
    std::ostringstream os;
    os << "sum of face sides " << side_sum << " != 2E = " << 2LL * edges;
    throw DataError(os.str());
  }
  if (degree_sum != 2LL * edges) {
    std::ostringstream os;
    os << "sum of vertex degrees " << degree_sum << " != 2E = " << 2LL * edges;
    throw DataError(os.str());
  }
  long long euler = static_cast<long long>(faces.size()) - edges +
                    static_cast<long long>(vertex_degrees.size());
  if (euler != chi) {
    std::ostringstream os;
    os << "F - E + V = " << euler << " but chi = " << chi;
    throw DataError(os.str());
  }
}

DegreeAudit degree_audit(const TilingGraph& g, int k) {
  g.validate();
  DegreeAudit a;
  a.k = k;
  double f = static_cast<double>(g.faces.size());
  long long incidences = 0;
  for (int d : g.vertex_degrees) {
    if (d >= 3) incidences += d;
  }
  a.vbar = static_cast<double>(incidences) / f;
  a.hyperbolic = g.chi < 0;
  a.euclidean = g.chi == 0;
  a.applicable = a.hyperbolic;
  a.bound = a.hyperbolic ? static_cast<double>(k) : 6.0;
  a.bound_satisfied =
      (a.hyperbolic || a.euclidean) && a.vbar <= a.bound + 1e-12;
  a.equality = std::all_of(g.vertex_degrees.begin(), g.vertex_degrees.end(),
                           [](int d) { return d == 2 || d == 3; });
  a.implied_k = 6.0 - 6.0 * g.chi / f;

  a.concavity_bound_satisfied = true;
  for (const auto& face : g.faces) {
    FaceConcavity fc;
    fc.sides = face.sides;
    fc.straight = static_cast<int>(std::count(face.angle_labels.begin(),
                                              face.angle_labels.end(),
                                              AngleClass::kStraight));
    fc.reflex = static_cast<int>(std::count(face.angle_labels.begin(),
                                            face.angle_labels.end(),
                                            AngleClass::kReflex));
    fc.bound_satisfied =
        fc.straight + 2 * fc.reflex >= face.sides - static_cast<int>(a.bound);
    a.concavity_bound_satisfied &= fc.bound_satisfied;
    a.faces.push_back(fc);
  }
  return a;
}

TilingGraph klein_quartic_graph() {
  TilingGraph g;
  g.chi = -4;
  g.edges = 84;
  g.faces.assign(24, TilingFace{7, std::vector<AngleClass>(7, AngleClass::kConvex)});
  g.vertex_degrees.assign(56, 3);
  return g;
}

TilingGraph tiling_graph_from_json(const std::string& text) {
  TilingGraph g;
  try {
    json j = json::parse(text);
    g.chi = j.at("chi").get<int>();
    g.edges = j.at("edges").get<int>();
    for (const auto& f : j.at("faces")) {
      TilingFace face;
      face.sides = f.at("sides").get<int>();
      if (f.contains("angle_labels")) {
        for (const auto& l : f.at("angle_labels")) {
          face.angle_labels.push_back(parse_label(l.get<std::string>()));
        }
      }
      g.faces.push_back(std::move(face));
    }
    for (const auto& v : j.at("vertices")) {
      g.vertex_degrees.push_back(v.at("degree").get<int>());
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed tiling graph JSON: ") + e.what());
  }
  g.validate();
  return g;
}

std::string tiling_graph_to_json(const TilingGraph& g) {
  json j;
  j["chi"] = g.chi;
  j["edges"] = g.edges;
  j["faces"] = json::array();
  for (const auto& f : g.faces) {
    json labels = json::array();
    for (auto l : f.angle_labels) labels.push_back(label_name(l));
    j["faces"].push_back({{"sides", f.sides}, {"angle_labels", labels}});
  }
  j["vertices"] = json::array();
  for (int d : g.vertex_degrees) j["vertices"].push_back({{"degree", d}});
  return j.dump(2);
}

}  // namespace hypertile
