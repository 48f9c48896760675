#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "hypertile/errors.hpp"
#include "hypertile/euclid_hex.hpp"
#include "hypertile/tolerances.hpp"

using namespace hypertile;
using namespace hypertile::euclid;

namespace {

// mpmath at 50 digits, P = 1.
constexpr double kSecondDerivativeAt6 = -0.0012901230199756826401907743504058220221592207797925;
constexpr double kFirstDerivativeAt6 = 0.0025162798251688763804234901436143256193655625863867;
// The report's central differences at n = 6, step 6e-4, same precision.
constexpr double kFirstDifferenceAt6 = 0.0025162798784246715643904294856189987029152348986714;
constexpr double kSecondDifferenceAt6 = -0.0012901230430221762085218611083389525361729388035581;

}  // namespace

TEST(AOfN, Fixtures) {
  EXPECT_NEAR(A_of_n(4, 4), 1.0, 1e-12);
  EXPECT_NEAR(A_of_n(6, 6), 1.5 * std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(A_of_n(3, 3), std::sqrt(3.0) / 4, 1e-12);
  EXPECT_EQ(A_of_n(2, 5), 0.0);
  EXPECT_EQ(A_of_n(0, 5), 0.0);
  EXPECT_EQ(A_of_n(1.3, 5), 0.0);
}

TEST(AOfN, ContinuousAtTwo) {
  EXPECT_LT(std::abs(A_of_n(2 + 1e-9, 1.0) - A_of_n(2, 1.0)), 1e-6);
  EXPECT_LT(std::abs(A_of_n(2 - 1e-9, 1.0) - A_of_n(2, 1.0)), 1e-6);
}

TEST(AOfN, ApproachesTheDisk) {
  EXPECT_NEAR(A_of_n(1e6, 1.0), 1.0 / (4 * kPi), 1e-9);
}

TEST(AOfN, DomainErrors) {
  EXPECT_THROW(A_of_n(-1, 1), DomainError);
  EXPECT_THROW(A_of_n(6, 0), DomainError);
  EXPECT_THROW(A_of_n(6, -1), DomainError);
  EXPECT_THROW(A_of_n(std::nan(""), 1), DomainError);
}

TEST(ConcavityReport, IncreasingAndConcave) {
  ConcavityReport r = concavity_report(2.1, 200, 1.0);
  EXPECT_EQ(r.samples.size(), 1000u);
  EXPECT_TRUE(r.increasing);
  EXPECT_TRUE(r.concave);
  EXPECT_TRUE(r.closed_form_agrees);
}

TEST(ConcavityReport, ScalesWithPerimeterSquared) {
  ConcavityReport a = concavity_report(2.1, 200, 1.0);
  ConcavityReport b = concavity_report(2.1, 200, 10.0);
  EXPECT_EQ(a.increasing, b.increasing);
  EXPECT_EQ(a.concave, b.concave);
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    // A scales exactly but each difference carries rounding of order
    // eps * A / h, which is 1e-9 of the difference near n = 200.
    double noise = 1e-15 * A_of_n(a.samples[i].n, 10.0) / (1e-4 * a.samples[i].n);
    EXPECT_NEAR(b.samples[i].first_difference, 100 * a.samples[i].first_difference, noise);
    EXPECT_NEAR(b.samples[i].closed_form, 100 * a.samples[i].closed_form,
                1e-12 * std::abs(b.samples[i].closed_form));
  }
}

TEST(ConcavityReport, DerivativesAtSixMatchOracle) {
  EXPECT_NEAR(A_second_derivative(6, 1), kSecondDerivativeAt6, 1e-15);
  ConcavityReport r = concavity_report(6, 7, 1.0);
  EXPECT_DOUBLE_EQ(r.samples.front().n, 6.0);
  const auto& s = r.samples.front();
  // Rounding in A is about 4e-18, divided by the step or its square.
  EXPECT_NEAR(s.first_difference, kFirstDifferenceAt6, 2e-14);
  EXPECT_NEAR(s.second_difference, kSecondDifferenceAt6, 2e-10);
  // Truncation is of order h^2 times the next derivative, plus the
  // rounding above.
  EXPECT_NEAR(s.first_difference, kFirstDerivativeAt6, 6e-11);
  EXPECT_NEAR(s.second_difference, kSecondDerivativeAt6, 3e-11 + 2e-10);
}

TEST(ConcavityReport, ClosedFormAgreesWithDifferences) {
  ConcavityReport r = concavity_report(3, 50, 1.0);
  for (const auto& s : r.samples) {
    EXPECT_NEAR(s.second_difference, s.closed_form, 1e-6 * std::abs(s.closed_form) + 1e-9);
  }
}

TEST(ConcavityReport, Preconditions) {
  EXPECT_THROW(concavity_report(2.0, 10, 1.0), DomainError);
  EXPECT_THROW(concavity_report(5, 4, 1.0), DomainError);
  EXPECT_THROW(concavity_report(3, 4, 1.0, 10), DomainError);
}

TEST(HalvingInequality, Fixtures) {
  EXPECT_TRUE(halving_inequality(6, 1));
  EXPECT_TRUE(halving_cosine_form(6));
  EXPECT_NEAR(std::pow(std::cos(kPi / 6), 2), 0.75, 1e-15);
  EXPECT_TRUE(halving_inequality(1000, 1));
  EXPECT_THROW(halving_inequality(5, 1), DomainError);
}

TEST(HalvingInequality, GridAndCosineForm) {
  for (int i = 0; i <= 10000; ++i) {
    double n = 6 + (1e4 - 6) * i / 10000.0;
    ASSERT_TRUE(halving_inequality(n, 1.0)) << n;
    ASSERT_TRUE(halving_cosine_form(n)) << n;
  }
  // The two forms agree wherever A(n/2) is positive.
  for (double n = 4.5; n < 6; n += 0.01) {
    double direct = A_of_n(n, 1.0) < 2 * A_of_n(n / 2, 1.0);
    EXPECT_EQ(direct, halving_cosine_form(n)) << n;
  }
}

TEST(JensenAudit, AllHexagonsAreTight) {
  std::vector<double> n(4, 6.0);
  JensenAudit a = jensen_audit(n, 1.0, A_of_n(6, 1.0));
  EXPECT_TRUE(a.hypothesis_ok);
  EXPECT_TRUE(a.chain_holds);
  EXPECT_TRUE(a.tight);
  EXPECT_TRUE(a.all_hexagons);
  EXPECT_FALSE(a.repair_fired);
  EXPECT_NEAR(a.target_slack, 0.0, 1e-15);
}

TEST(JensenAudit, MixedCountsMakeJensenStrict) {
  std::vector<double> n{5, 7, 6, 6};
  JensenAudit a = jensen_audit(n, 1.0, 0.0);
  EXPECT_TRUE(a.hypothesis_ok);
  EXPECT_TRUE(a.chain_holds);
  EXPECT_FALSE(a.tight);
  EXPECT_GT(a.jensen_slack, 0.0);
  EXPECT_NEAR(a.mean_slack, 0.0, 1e-15);
}

TEST(JensenAudit, RepairRule) {
  std::vector<double> n{0, 12, 6, 6};
  JensenAudit a = jensen_audit(n, 1.0, 0.0);
  EXPECT_TRUE(a.repair_fired);
  EXPECT_FALSE(a.repair_exhausted);
  EXPECT_TRUE(a.chain_holds);
  std::vector<double> sorted = a.repaired;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<double>{6, 6, 6, 6}));
  EXPECT_GT(a.repair_slack, 0.0);
  EXPECT_TRUE(halving_inequality(12, 1.0));
}

TEST(JensenAudit, RepairExhausted) {
  std::vector<double> n{1, 1, 5, 5};
  JensenAudit a = jensen_audit(n, 1.0, 0.0);
  EXPECT_TRUE(a.repair_fired);
  EXPECT_TRUE(a.repair_exhausted);
  EXPECT_TRUE(a.chain_holds);
  EXPECT_GT(a.direct_slack, 0.0);
}

TEST(JensenAudit, MeanAboveSixIsFlagged) {
  std::vector<double> n{7, 7, 6};
  JensenAudit a = jensen_audit(n, 1.0, 0.0);
  EXPECT_FALSE(a.hypothesis_ok);
  EXPECT_LT(a.mean_slack, 0.0);
  EXPECT_FALSE(a.chain_holds);
}

TEST(JensenAudit, RandomVectorsWithMeanAtMostSix) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_real_distribution<double> count(0.0, 12.0);
  int tested = 0, repaired = 0;
  for (int trial = 0; tested < 10000; ++trial) {
    std::vector<double> n(static_cast<std::size_t>(len(rng)));
    for (double& x : n) {
      x = (trial % 2) ? std::round(count(rng)) : count(rng);
    }
    double mean = std::accumulate(n.begin(), n.end(), 0.0) / n.size();
    if (mean > 6.0) continue;
    ++tested;
    JensenAudit a = jensen_audit(n, 1.0, 0.0);
    ASSERT_TRUE(a.hypothesis_ok);
    ASSERT_TRUE(a.chain_holds);
    repaired += a.repair_fired;
    bool all6 = std::all_of(n.begin(), n.end(), [](double x) { return x == 6.0; });
    EXPECT_EQ(a.tight, all6);
  }
  EXPECT_GT(repaired, 1000);
  std::vector<double> sixes(7, 6.0);
  EXPECT_TRUE(jensen_audit(sixes, 1.0, 0.0).tight);
}

TEST(JensenAudit, DomainErrors) {
  std::vector<double> empty;
  EXPECT_THROW(jensen_audit(empty, 1.0, 0.0), DomainError);
  std::vector<double> negative{6, -1};
  EXPECT_THROW(jensen_audit(negative, 1.0, 0.0), DomainError);
}
