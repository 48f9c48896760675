#include "hypertile/euclid_hex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hypertile/errors.hpp"
#include "hypertile/tolerances.hpp"

namespace hypertile::euclid {

namespace {

// Finite-difference step relative to n.
constexpr double kRelativeStep = 1e-4;
constexpr int kMinSamples = 1000;
// Relative slack allowed on each link of the Jensen chain.
constexpr double kChainSlack = 1e-12;

void check_perimeter(double P) {
  if (!(P > 0.0) || !std::isfinite(P)) {
    throw DomainError("perimeter must be positive");
  }
}

}  // namespace

double A_of_n(double n, double P) {
  check_perimeter(P);
  if (!(n >= 0.0) || !std::isfinite(n)) {
    throw DomainError("side count must be nonnegative");
  }
  if (n <= 2.0) return 0.0;
  double alpha = kPi / n;
  return P * P / (4.0 * n * std::tan(alpha));
}

double A_second_derivative(double n, double P) {
  check_perimeter(P);
  if (!(n > 2.0)) throw DomainError("A'' is defined for n > 2");
  double a = kPi / n;
  double s = std::sin(a);
  double csc2 = 1.0 / (s * s);
  double cot = std::cos(a) / s;
  double bracket = 2.0 * cot * (1.0 + a * a * csc2) - 4.0 * a * csc2;
  return P * P / 4.0 * bracket / (n * n * n);
}

ConcavityReport concavity_report(double n_lo, double n_hi, double P,
                                 int samples) {
  check_perimeter(P);
  if (!(n_lo > 2.0) || !(n_hi > n_lo)) {
    throw DomainError("concavity_report: need 2 < n_lo < n_hi");
  }
  if (samples < kMinSamples) {
    throw DomainError("concavity_report: at least 1000 samples required");
  }
  ConcavityReport r;
  r.n_lo = n_lo;
  r.n_hi = n_hi;
  r.P = P;
  r.increasing = r.concave = r.closed_form_agrees = true;
  r.samples.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    double n = n_lo + (n_hi - n_lo) * i / (samples - 1);
    double h = kRelativeStep * n;
    double lo = n - h;
    // Keep the stencil inside the region where A is smooth.
    if (lo <= 2.0) {
      h = 0.5 * (n - 2.0);
      lo = n - h;
    }
    double a_lo = A_of_n(lo, P);
    double a_mid = A_of_n(n, P);
    double a_hi = A_of_n(n + h, P);
    ConcavitySample s;
    s.n = n;
    s.first_difference = (a_hi - a_lo) / (2.0 * h);
    s.second_difference = (a_hi - 2.0 * a_mid + a_lo) / (h * h);
    s.closed_form = A_second_derivative(n, P);
    r.increasing &= s.first_difference > 0.0;
    r.concave &= s.second_difference < 0.0;
    r.closed_form_agrees &= (s.second_difference < 0.0) == (s.closed_form < 0.0);
    r.samples.push_back(s);
  }
  return r;
}

bool halving_inequality(double n, double P) {
  if (!(n >= 6.0)) throw DomainError("halving_inequality: requires n >= 6");
  return A_of_n(n, P) < 2.0 * A_of_n(n / 2.0, P);
}

bool halving_cosine_form(double n) {
  if (!(n > 4.0)) throw DomainError("halving_cosine_form: requires n > 4");
  double c = std::cos(kPi / n);
  return c * c > 2.0 / 3.0;
}

JensenAudit jensen_audit(std::span<const double> side_counts, double P,
                         double target) {
  check_perimeter(P);
  if (side_counts.empty()) throw DomainError("jensen_audit: no side counts");
  for (double n : side_counts) {
    if (!(n >= 0.0) || !std::isfinite(n)) {
      throw DomainError("jensen_audit: side counts must be nonnegative");
    }
  }
  JensenAudit a;
  a.side_counts.assign(side_counts.begin(), side_counts.end());
  a.P = P;
  a.target = target;
  const double count = static_cast<double>(side_counts.size());
  a.mean = std::accumulate(side_counts.begin(), side_counts.end(), 0.0) / count;
  a.hypothesis_ok = a.mean <= 6.0 + 1e-12;
  a.all_hexagons = std::all_of(side_counts.begin(), side_counts.end(),
                               [](double n) { return n == 6.0; });

  auto sum_area = [P](const std::vector<double>& ns) {
    double s = 0.0;
    for (double n : ns) s += A_of_n(n, P);
    return s;
  };
  a.sum_original = sum_area(a.side_counts);
  a.hexagon_bound = count * A_of_n(6.0, P);
  a.target_slack = a.sum_original - count * target;
  a.direct_slack = a.hexagon_bound - a.sum_original;
  const double tol = kChainSlack * std::max(1.0, a.hexagon_bound);

  // Pair each n_i < 2 with the largest n_j >= 6 and split n_j in half.
  std::vector<double> small;
  std::vector<double> rest;
  for (double n : side_counts) (n < 2.0 ? small : rest).push_back(n);
  for (std::size_t i = 0; i < small.size(); ++i) {
    a.repair_fired = true;
    auto big = std::max_element(rest.begin(), rest.end());
    if (big == rest.end() || *big < 6.0) {
      a.repair_exhausted = true;
      break;
    }
    double half = *big / 2.0;
    *big = half;
    rest.push_back(half);
  }

  if (a.repair_exhausted) {
    a.repaired = a.side_counts;
    a.sum_repaired = a.sum_original;
    a.chain_holds = a.direct_slack >= -tol;
    a.tight = std::abs(a.direct_slack) <= tol;
    return a;
  }

  a.repaired = rest;
  a.sum_repaired = sum_area(a.repaired);
  double repaired_mean =
      std::accumulate(a.repaired.begin(), a.repaired.end(), 0.0) / count;
  a.jensen_bound = count * A_of_n(repaired_mean, P);
  a.repair_slack = a.sum_repaired - a.sum_original;
  a.jensen_slack = a.jensen_bound - a.sum_repaired;
  a.mean_slack = a.hexagon_bound - a.jensen_bound;
  a.chain_holds = a.repair_slack >= -tol && a.jensen_slack >= -tol &&
                  a.mean_slack >= -tol;
  a.tight = std::abs(a.repair_slack) <= tol &&
            std::abs(a.jensen_slack) <= tol && std::abs(a.mean_slack) <= tol;
  return a;
}

}  // namespace hypertile::euclid
