#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hypertile {

/// Nonnegative integer coefficients k_i with sum k_i theta_i = 2pi.
struct ComboSolution {
  std::vector<int> coefficients;
  double residual = 0.0;

  friend bool operator==(const ComboSolution& a, const ComboSolution& b) {
    return a.coefficients == b.coefficients;
  }
};

/// All coefficient vectors whose combination is within `tolerance` of 2pi,
/// in lexicographic order. Throws DomainError for nonpositive angles or
/// tolerance.
std::vector<ComboSolution> angle_combinations(std::span<const double> angles,
                                              double tolerance = 1e-9);

/// Angle p/q * pi held exactly.
struct PiRational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double radians() const;
};

/// Parses "2pi/3", "pi/7", "3pi", "pi", "0.75" (plain numbers are radians
/// and yield std::nullopt here).
std::optional<PiRational> parse_pi_rational(const std::string& text);

/// Parses an angle literal: rational-pi syntax exactly, else a plain real.
/// Throws DomainError on malformed text.
double parse_angle(const std::string& text);

/// Exact enumeration for rational multiples of pi.
std::vector<ComboSolution> angle_combinations_exact(
    std::span<const PiRational> angles);

/// Goodman-Strauss criterion for a triangle with exactly one combination:
/// tiles iff every coefficient is >= 2 and all share parity. Returns
/// std::nullopt when the single-solution hypothesis fails.
std::optional<bool> gs_condition(std::span<const ComboSolution> solutions);

/// Regular polygon with interior angle theta tiles iff 2pi/theta is an
/// integer (1e-9 relative).
bool regular_tiles(double theta);

/// Every multiset of three angles extends, by further angles from the list,
/// to a sum of 2pi within 1e-9. False if fewer than four angles or any
/// angle exceeds pi/2.
bool margulis_check(std::span<const double> angles);

/// Candidate flag for the conjectural quadrilateral criterion: distinct
/// angles with a combination of positive coefficients sharing parity, none
/// or all equal to one. Conjectural; not a tiling decision.
bool quadrilateral_candidate(std::span<const double> angles);

struct ScaleneWitnessOptions {
  std::uint64_t seed = 1;
  int budget = 100000;
  double tolerance = 1e-9;
  double min_gap = 1e-6;
};

/// Scalene triangle angles satisfying sum k_i theta_i = 2pi and no other
/// bounded integer combination. Throws DomainError if the plane misses the
/// hyperbolic angle region, ConstructionError if the budget runs out.
std::array<double, 3> scalene_witness(const std::array<int, 3>& k,
                                      const ScaleneWitnessOptions& opts = {});

// ------------------------------------------------------------------ graphs

enum class AngleClass { kConvex, kStraight, kReflex };

struct TilingFace {
  int sides = 0;
  std::vector<AngleClass> angle_labels;
};

/// Combinatorial tiling of a closed surface.
struct TilingGraph {
  int chi = 0;
  int edges = 0;
  std::vector<TilingFace> faces;
  std::vector<int> vertex_degrees;

  /// Throws DataError if face sides, vertex degrees and Euler
  /// characteristic are inconsistent.
  void validate() const;
};

struct FaceConcavity {
  int sides = 0;
  int straight = 0;  // l1
  int reflex = 0;    // l2
  bool bound_satisfied = false;
};

struct DegreeAudit {
  /// Average number of degree >= 3 vertex incidences per face.
  double vbar = 0.0;
  int k = 0;
  bool hyperbolic = false;
  bool euclidean = false;
  /// The hyperbolic bound vbar <= k applies (chi < 0).
  bool applicable = false;
  /// k when chi < 0, the flat bound 6 when chi = 0.
  double bound = 0.0;
  bool bound_satisfied = false;
  /// Every vertex has degree two or three.
  bool equality = false;
  /// k implied by Gauss-Bonnet when each face has area (k-6)pi/3.
  double implied_k = 0.0;
  std::vector<FaceConcavity> faces;
  bool concavity_bound_satisfied = false;
};

DegreeAudit degree_audit(const TilingGraph& g, int k);

/// 24 heptagons, three per vertex, on the genus-3 surface.
TilingGraph klein_quartic_graph();

TilingGraph tiling_graph_from_json(const std::string& text);
std::string tiling_graph_to_json(const TilingGraph& g);

}  // namespace hypertile
