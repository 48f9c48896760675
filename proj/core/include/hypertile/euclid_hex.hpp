#pragma once

#include <span>
#include <vector>

namespace hypertile::euclid {

/// Area of the Euclidean regular n-gon of perimeter P, extended to real n:
/// zero on [0, 2], P^2 cot(pi/n) / (4n) above. Throws DomainError for
/// negative n or nonpositive P.
double A_of_n(double n, double P);

/// Closed-form A''(n) for n > 2.
double A_second_derivative(double n, double P);

struct ConcavitySample {
  double n = 0.0;
  double first_difference = 0.0;
  double second_difference = 0.0;
  double closed_form = 0.0;
};

struct ConcavityReport {
  double n_lo = 0.0;
  double n_hi = 0.0;
  double P = 0.0;
  std::vector<ConcavitySample> samples;
  bool increasing = false;
  bool concave = false;
  /// Sign of the finite difference agrees with the closed form everywhere.
  bool closed_form_agrees = false;
};

/// Central differences with step 1e-4 * n on `samples` evenly spaced points
/// of [n_lo, n_hi]. Requires 2 < n_lo < n_hi and samples >= 1000.
ConcavityReport concavity_report(double n_lo, double n_hi, double P,
                                 int samples = 1000);

/// A(n) < 2 A(n/2). Throws DomainError for n < 6.
bool halving_inequality(double n, double P);

/// The equivalent trigonometric form cos^2(pi/n) > 2/3.
bool halving_cosine_form(double n);

struct JensenAudit {
  std::vector<double> side_counts;
  /// Side counts after every n_i < 2 has been paired with a split n_j >= 6.
  std::vector<double> repaired;
  double P = 0.0;
  double target = 0.0;
  double mean = 0.0;
  bool hypothesis_ok = false;
  bool repair_fired = false;
  /// No n_j >= 6 was left for some n_i < 2; the direct bound is used.
  bool repair_exhausted = false;

  double sum_original = 0.0;   // sum A(n_i)
  double sum_repaired = 0.0;   // sum A over the repaired counts
  double jensen_bound = 0.0;   // N A(mean of repaired counts)
  double hexagon_bound = 0.0;  // N A(6)

  /// Slacks of N*target <= sum A(n_i) <= sum A(repaired) <= N A(mean) <=
  /// N A(6). Unused links are zero when the repair is exhausted.
  double target_slack = 0.0;
  double repair_slack = 0.0;
  double jensen_slack = 0.0;
  double mean_slack = 0.0;
  double direct_slack = 0.0;

  /// Every arithmetic link from sum A(n_i) to N A(6) holds.
  bool chain_holds = false;
  /// Every arithmetic link is tight.
  bool tight = false;
  /// All side counts equal 6.
  bool all_hexagons = false;
};

/// Evaluates the area chain for abstract side counts. A mean above 6 is
/// flagged through hypothesis_ok rather than thrown.
JensenAudit jensen_audit(std::span<const double> side_counts, double P,
                         double target);

}  // namespace hypertile::euclid
