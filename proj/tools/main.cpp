// hypertile: construct hyperbolic tiles, render them, run verification
// suites.
//
// Exit codes: 0 success, 1 malformed request or input, 2 domain error,
// 3 construction failure, 4 verification checks failed.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypertile/constructors.hpp"
#include "hypertile/errors.hpp"
#include "hypertile/polygon.hpp"
#include "hypertile/polygon_io.hpp"
#include "hypertile/svg.hpp"
#include "hypertile/tiling_comb.hpp"
#include "hypertile/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace hypertile;

enum ExitCode { kOk = 0, kMalformed = 1, kDomain = 2, kConstruction = 3, kFailed = 4 };

struct ConstructOptions {
  std::string kind;
  int n = 0;
  std::string angle;
  std::string area;
  std::vector<std::string> angles;
  std::optional<int> k;
  double side = 0.0;
  std::string out;
  std::string svg;
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw DataError("cannot write '" + path + "'");
  f << text << '\n';
}

std::string read_text(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DataError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// An unreadable literal is a malformed request, not a domain error.
double literal(const std::string& text) {
  try {
    return parse_angle(text);
  } catch (const DomainError& e) {
    throw DataError(e.what());
  }
}

double require_angle(const std::string& text, const char* flag) {
  if (text.empty()) throw DataError(std::string("missing ") + flag);
  return literal(text);
}

std::vector<double> parse_angles(const std::vector<std::string>& texts) {
  if (texts.empty()) throw DataError("missing --angles");
  std::vector<double> out;
  for (const auto& t : texts) out.push_back(literal(t));
  return out;
}

json metrics(const Polygon& p) {
  json m;
  m["n"] = p.size();
  m["perimeter"] = perimeter(p);
  m["embedded"] = is_embedded(p);
  if (m["embedded"].get<bool>() && fan_area(p) > 0.0) m["area"] = area(p);
  m["sides"] = p.side_lengths();
  m["angles"] = p.interior_angles();
  return m;
}

json polygon_document(const Polygon& p) {
  json doc = json::parse(polygon_to_json(p));
  doc["metrics"] = metrics(p);
  return doc;
}

int construct(const ConstructOptions& o) {
  std::optional<Polygon> polygon;
  json extra;
  if (o.kind == "regular") {
    if (o.n < 3) throw DataError("--n must be at least 3");
    double theta = require_angle(o.angle, "--angle");
    polygon = regular_polygon(o.n, Angle(theta));
  } else if (o.kind == "iso-triangle") {
    IsoTriangleTile t = isosceles_triangle_tile(require_angle(o.area, "--area"), o.k);
    extra["params"] = {{"area", t.params.area},
                       {"k", t.params.k},
                       {"theta1", t.params.theta1.radians()},
                       {"theta2", t.params.theta2.radians()}};
    polygon = std::move(t.triangle);
  } else if (o.kind == "rhombus") {
    polygon = rhombic_tile(require_angle(o.area, "--area"));
  } else if (o.kind == "equilateral-even") {
    std::vector<double> half = parse_angles(o.angles);
    EvenGonResult r = equilateral_even_gon(half);
    extra["side"] = r.side;
    extra["roots_found"] = r.roots_found;
    polygon = std::move(r.polygon);
  } else if (o.kind == "equilateral-tile") {
    double a = require_angle(o.area, "--area");
    TileParams p = equilateral_tile_params(o.n, a);
    extra["params"] = {{"n", p.n},
                       {"area", p.area},
                       {"sigma", p.sigma},
                       {"m", p.m},
                       {"m_is_integer", p.m_is_integer},
                       {"theta1", p.theta1.radians()},
                       {"theta", p.theta.radians()},
                       {"regular_hexagon", p.regular_hexagon}};
    polygon = equilateral_tile(o.n, a);
  } else if (o.kind == "chain") {
    if (!(o.side > 0.0)) throw DataError("--side must be positive");
    ChainReport r = build_chain(o.side, parse_angles(o.angles));
    json doc;
    doc["model"] = "hyperboloid";
    doc["vertices"] = json::array();
    for (const HPoint& v : r.chain.vertices) {
      doc["vertices"].push_back({v.x0(), v.x1(), v.x2()});
    }
    doc["chain"] = {{"side", r.chain.side},
                    {"angles", r.chain.angles},
                    {"first_angle", r.first_angle},
                    {"last_angle", r.last_angle},
                    {"endpoint_angle_sum", r.endpoint_angle_sum},
                    {"embedded", r.embedded}};
    write_text(o.out, doc.dump(2));
    if (!o.svg.empty() && r.chain.vertices.size() >= 3) {
      write_text(o.svg, render_svg({Polygon(r.chain.vertices)}));
    }
    return kOk;
  } else {
    throw DataError("unknown constructor '" + o.kind + "'");
  }

  json doc = polygon_document(*polygon);
  for (auto& [key, value] : extra.items()) doc[key] = value;
  write_text(o.out, doc.dump(2));
  if (!o.svg.empty()) write_text(o.svg, render_svg({*polygon}));
  return kOk;
}

int verify(const std::string& suite, std::uint64_t seed, const std::string& out,
           bool with_runtime) {
  if (!is_known_suite(suite)) throw DataError("unknown suite '" + suite + "'");
  VerificationReport r = run_suite(suite, seed);
  write_text(out, report_to_json(r, with_runtime));
  for (const auto& c : r.checks) {
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.id << '\n';
  }
  return r.passed() ? kOk : kFailed;
}

int audit(const std::string& path, int k, const std::string& out) {
  TilingGraph g = tiling_graph_from_json(read_text(path));
  DegreeAudit a = degree_audit(g, k);
  json doc;
  doc["vbar"] = a.vbar;
  doc["k"] = a.k;
  doc["hyperbolic"] = a.hyperbolic;
  doc["euclidean"] = a.euclidean;
  doc["applicable"] = a.applicable;
  doc["bound"] = a.bound;
  doc["bound_satisfied"] = a.bound_satisfied;
  doc["equality"] = a.equality;
  doc["implied_k"] = a.implied_k;
  doc["concavity_bound_satisfied"] = a.concavity_bound_satisfied;
  doc["faces"] = json::array();
  for (const auto& f : a.faces) {
    doc["faces"].push_back({{"sides", f.sides},
                            {"straight", f.straight},
                            {"reflex", f.reflex},
                            {"bound_satisfied", f.bound_satisfied}});
  }
  write_text(out, doc.dump(2));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic tiles: construction, rendering and verification"};
  app.require_subcommand(1);

  ConstructOptions co;
  auto* construct_cmd = app.add_subcommand("construct", "build a polygon");
  construct_cmd
      ->add_option("kind", co.kind,
                   "regular | iso-triangle | rhombus | equilateral-even | "
                   "equilateral-tile | chain")
      ->required()
      ->check(CLI::IsMember({"regular", "iso-triangle", "rhombus",
                             "equilateral-even", "equilateral-tile", "chain"}));
  construct_cmd->add_option("--n", co.n, "number of sides");
  construct_cmd->add_option("--angle", co.angle, "interior angle, e.g. 2pi/3");
  construct_cmd->add_option("--area", co.area, "target area, e.g. 6pi");
  construct_cmd->add_option("--angles", co.angles, "comma-separated angles")
      ->delimiter(',');
  construct_cmd->add_option("--k", co.k, "isosceles apex multiplier");
  construct_cmd->add_option("--side", co.side, "chain side length");
  construct_cmd->add_option("--out", co.out, "polygon JSON path (default stdout)");
  construct_cmd->add_option("--svg", co.svg, "Poincare-disk SVG path");

  std::string suite;
  std::uint64_t seed = 1;
  std::string verify_out;
  bool no_runtime = false;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "suite name or 'all'")->required();
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--out", verify_out, "report path (default stdout)");
  verify_cmd->add_flag("--no-runtime", no_runtime, "omit the runtime field");

  std::string graph_path;
  std::string audit_out;
  int audit_k = 7;
  auto* audit_cmd = app.add_subcommand("audit", "degree audit of a tiling graph");
  audit_cmd->add_option("graph", graph_path, "tiling graph JSON")->required();
  audit_cmd->add_option("--k", audit_k, "face area (k-6)pi/3");
  audit_cmd->add_option("--out", audit_out, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    if (*construct_cmd) return construct(co);
    if (*verify_cmd) return verify(suite, seed, verify_out, !no_runtime);
    if (*audit_cmd) return audit(graph_path, audit_k, audit_out);
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const Error& e) {
    std::cerr << "construction failed: " << e.what() << '\n';
    return kConstruction;
  }
  return kMalformed;
}
