#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "pntlab/audit.hpp"
#include "pntlab/density.hpp"
#include "pntlab/errors.hpp"
#include "pntlab/explicit_formula.hpp"
#include "pntlab/regions.hpp"
#include "pntlab/zeros.hpp"

using namespace pntlab;

namespace {

const ZeroSet& real_table() {
  static const ZeroSet zs = load_ordinates(oracle::zero_table());
  return zs;
}

// sum over 0 < gamma <= T of 2 Re(x^rho / rho) in long double complex.
double zero_sum_reference(double x, const ZeroSet& zs, double t) {
  using C = std::complex<long double>;
  long double s = 0;
  const long double lx = std::log(static_cast<long double>(x));
  for (const auto& z : zs.entries()) {
    if (z.gamma > t) break;
    const C rho(z.beta, z.gamma);
    s += 2 * std::real(std::exp(rho * lx) / rho);
  }
  return static_cast<double>(s);
}

}  // namespace

TEST(ExplicitFormula, ZeroSumMatchesComplexReference) {
  for (double x : {2.5, 100.5, 1000.5, 123456.5}) {
    for (double t : {50.0, 1000.0, 74000.0}) {
      EXPECT_NEAR(zero_sum(x, real_table(), t), zero_sum_reference(x, real_table(), t),
                  1e-10 * std::sqrt(x) * std::log(t))
          << "x=" << x << " T=" << t;
    }
  }
}

TEST(ExplicitFormula, OneTermPairJustAboveFirstZero) {
  const double g1 = real_table().entries()[0].gamma;
  const double x = 10.5;
  const std::complex<double> rho(0.5, g1);
  const double one = 2 * std::real(std::exp(rho * std::log(x)) / rho);
  EXPECT_NEAR(zero_sum(x, real_table(), g1 + 1e-9), one, 1e-14);
  EXPECT_EQ(zero_sum(x, real_table(), g1 - 1e-9), 0.0);
}

TEST(ExplicitFormula, PsiAtHundredAndAHalf) {
  const double psi100 = oracle::psi_brute(100);
  EXPECT_NEAR(psi100, 94.0453, 1e-4);
  EXPECT_NEAR(truncated_psi(100.5, real_table(), 74000.0), psi100, 0.25);
}

TEST(ExplicitFormula, PsiAtTwoAndAHalf) {
  // The unit-constant envelope x (log x)^2 / T holds here only while T is
  // small; it shrinks below the measured residual from T = 50 on.
  for (double t : {15.0, 20.0, 30.0}) {
    const auto r = residual(2.5, real_table(), t, std::log(2.0));
    EXPECT_LE(r.residual, r.envelope) << "T=" << t;
  }
  EXPECT_GT(2.5 * std::pow(std::log(2.5), 2) / 2.0, 0.3);
  EXPECT_NEAR(truncated_psi(2.5, real_table(), 74000.0), std::log(2.0), 1e-3);
}

TEST(ExplicitFormula, ResidualAtThousandAndAHalf) {
  const double psi = oracle::psi_brute(1000);
  const auto r = residual(1000.5, real_table(), 74000.0, psi);
  EXPECT_LE(r.residual, 1.0);
  EXPECT_LE(r.residual, r.envelope);
  EXPECT_NEAR(r.envelope, 1000.5 * std::pow(std::log(1000.5), 2) / 74000.0, 1e-12);
  EXPECT_NEAR(r.envelope, 0.645, 1e-3);
  EXPECT_GT(residual(1000.5, real_table(), 100.0, psi).residual, r.residual);
  EXPECT_GT(residual(1000.5, real_table(), 500.0, psi).residual, r.residual);
}

TEST(ExplicitFormula, ResidualDecaysInTrend) {
  // The residual oscillates from one doubling to the next; its least-squares
  // slope in log-log coordinates over 500..64000 must still be negative.
  const double psi = oracle::psi_brute(1000);
  std::vector<double> lt, lr;
  for (double t = 500.0; t <= 64000.0; t *= 2) {
    lt.push_back(std::log(t));
    lr.push_back(std::log(residual(1000.5, real_table(), t, psi).residual));
  }
  const double n = static_cast<double>(lt.size());
  const double mt = std::accumulate(lt.begin(), lt.end(), 0.0) / n;
  const double mr = std::accumulate(lr.begin(), lr.end(), 0.0) / n;
  double num = 0, den = 0;
  for (std::size_t i = 0; i < lt.size(); ++i) {
    num += (lt[i] - mt) * (lr[i] - mr);
    den += (lt[i] - mt) * (lt[i] - mt);
  }
  EXPECT_LT(num / den, -0.5);
}

TEST(ExplicitFormula, WorkerCountDoesNotChangeBits) {
  ZeroSumOptions one, many, small_chunks;
  many.workers = 6;
  small_chunks.chunk_size = 100;
  small_chunks.workers = 3;
  ZeroSumOptions small_one = small_chunks;
  small_one.workers = 1;
  for (double x : {100.5, 1000.5, 1e6 + 0.5}) {
    EXPECT_EQ(zero_sum(x, real_table(), 74000.0, one), zero_sum(x, real_table(), 74000.0, many));
    EXPECT_EQ(zero_sum(x, real_table(), 74000.0, small_chunks),
              zero_sum(x, real_table(), 74000.0, small_one));
  }
}

TEST(ExplicitFormula, Errors) {
  EXPECT_THROW(truncated_psi(1000.0, real_table(), 1000.0), DomainError);
  EXPECT_THROW(truncated_psi(1.5, real_table(), 1000.0), DomainError);
  EXPECT_THROW(truncated_psi(1000.5, real_table(), 1e6), CoverageError);
}

TEST(SplitSums, RealTableHasOnlyFirstStrip) {
  const auto region = ZeroFreeRegion::classical(2.0);
  const auto s = split_sums(15.0, real_table(), region, DensityEstimate::jutila());
  EXPECT_EQ(s.s2, 0.0);
  EXPECT_EQ(s.s3, 0.0);
  EXPECT_EQ(s.count2 + s.count3, 0u);
  EXPECT_EQ(s.s1, s.total);
  EXPECT_GT(s.count1, 0u);
  EXPECT_NEAR(s.log_t, 2 * s.omega.omega, 1e-15);
  EXPECT_NEAR(s.sigma2, 1 - s.omega.omega / 15.0, 1e-15);
  const auto chain = check_s3_chain(s, real_table(), region, DensityEstimate::jutila());
  EXPECT_TRUE(chain.ok);
  EXPECT_TRUE(chain.violators.empty());
}

TEST(SplitSums, AllZerosInTopStrip) {
  const auto region = ZeroFreeRegion::classical(1.0);
  const ZeroSet zs({{0.85, 1000.0}, {0.85, 1e4}, {0.9, 1e6}}, ZeroSource::Synthetic, 1e20);
  const auto s = split_sums(100.0, zs, region, DensityEstimate::jutila());
  EXPECT_EQ(s.s1, 0.0);
  EXPECT_EQ(s.s2, 0.0);
  EXPECT_EQ(s.count3, 3u);
  EXPECT_EQ(s.s3, s.total);
  // Each term by hand: 2 x^{beta-1} / gamma.
  const double want = 2 * std::exp(-15.0) / 1000.0 + 2 * std::exp(-15.0) / 1e4 +
                      2 * std::exp(-10.0) / 1e6;
  EXPECT_LT(oracle::rel_err(s.s3, want), 1e-14);
}

TEST(SplitSums, Errors) {
  const auto region = ZeroFreeRegion::classical(1.0);
  EXPECT_THROW(split_sums(5.0, real_table(), region, DensityEstimate::jutila()), ConditionError);
  // T = e^40 lies far above the table.
  EXPECT_THROW(split_sums(100.0, real_table(), region, DensityEstimate::jutila()), CoverageError);
}

TEST(SplitSums, MiddleStripExistsForLargeX) {
  const auto region = ZeroFreeRegion::classical(1.0);
  const auto est = DensityEstimate::jutila();
  const double L = 1e4;  // omega = 200, sigma2 = 0.98 > sigma1
  const auto s0 = split_sums(L, ZeroSet({}, ZeroSource::Synthetic, 1e300), region, est);
  EXPECT_FALSE(s0.strips_collapsed);
  EXPECT_GT(s0.sigma2, s0.sigma1);
  const ZeroSet zs({{0.9, 1e10}, {0.99, 1e80}}, ZeroSource::Synthetic, s0.t);
  const auto s = split_sums(L, zs, region, est);
  EXPECT_EQ(s.count2, 1u);
  EXPECT_EQ(s.count3, 1u);
}

TEST(SplitSumsProperty, PartitionIdentityOnSyntheticSets) {
  std::mt19937_64 rng(4242);
  const auto est = DensityEstimate::jutila();
  for (int i = 0; i < 100; ++i) {
    const double R = oracle::uniform(rng, 0.5, 5.0);
    const double L = oracle::log_uniform(rng, 30.0, 2000.0);
    const auto region = ZeroFreeRegion::classical(R);
    const auto om = minimize_f(region, L);
    const auto syn = synthesize_zero_set(region, est, std::exp(2 * om.omega), rng());
    if (!om.conditions.all()) continue;
    const auto s = split_sums(L, syn.zeros, region, est);
    const double ref = unsplit_sum(L, syn.zeros, s.t);
    EXPECT_LE(std::abs(s.s1 + s.s2 + s.s3 - ref), 1e-12 * ref) << "R=" << R << " L=" << L;
    long double direct = 0;
    for (const auto& z : syn.zeros.entries()) {
      if (z.gamma > 1.0 && z.gamma <= s.t) direct += 2 * std::exp((z.beta - 1.0L) * L) / z.gamma;
    }
    EXPECT_LT(oracle::rel_err(s.total, static_cast<double>(direct)), 1e-12);
    EXPECT_EQ(s.count1 + s.count2 + s.count3,
              static_cast<std::size_t>(std::count_if(
                  syn.zeros.entries().begin(), syn.zeros.entries().end(),
                  [&](const Zero& z) { return z.gamma > 1.0 && z.gamma <= s.t; })));
  }
}

TEST(ChainProperty, SyntheticSetsPassPlantedFail) {
  std::mt19937_64 rng(99);
  const auto est = DensityEstimate::jutila();
  for (int i = 0; i < 30; ++i) {
    const auto region = i % 2 ? ZeroFreeRegion::classical(oracle::uniform(rng, 0.5, 3.0))
                              : ZeroFreeRegion::vinogradov_korobov(53.989);
    const double L = oracle::log_uniform(rng, 50.0, 1e4);
    const auto om = minimize_f(region, L);
    if (!om.conditions.all()) continue;
    const auto syn = synthesize_zero_set(region, est, std::exp(2 * om.omega), rng());
    const auto s = split_sums(L, syn.zeros, region, est);
    const auto good = check_s3_chain(s, syn.zeros, region, est);
    EXPECT_TRUE(good.ok) << region.describe() << " L=" << L;
    EXPECT_TRUE(good.violators.empty());

    Zero planted;
    const auto bad_set = plant_violator(syn.zeros, region, L, &planted);
    const auto bs = split_sums(L, bad_set, region, est);
    const auto bad = check_s3_chain(bs, bad_set, region, est);
    EXPECT_FALSE(bad.ok);
    ASSERT_EQ(bad.violators.size(), 1u);
    EXPECT_EQ(bad.violators[0].zero, planted);
    EXPECT_EQ(bad_set.entries()[bad.violators[0].index], planted);
  }
}
