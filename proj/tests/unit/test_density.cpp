#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pntlab/density.hpp"
#include "pntlab/errors.hpp"
#include "pntlab/zeros.hpp"

using namespace pntlab;

TEST(Density, Sigma1Values) {
  EXPECT_NEAR(sigma1(2.5, 0.8), 5.0 / 6.0, 1e-15);
  EXPECT_NEAR(sigma1(58.05, 0.9), 58.05 / 58.55, 1e-15);
  EXPECT_NEAR(sigma1(58.05, 0.9), 0.9914603, 1e-7);
  EXPECT_EQ(sigma1(0.5, 0.9), 0.9);
}

TEST(Density, Sigma1Domain) {
  EXPECT_THROW(sigma1(0.0, 0.8), DomainError);
  EXPECT_THROW(sigma1(2.5, 0.5), DomainError);
  EXPECT_THROW(sigma1(2.5, 1.0), DomainError);
}

TEST(Density, LogBoundValues) {
  const auto jut = DensityEstimate::jutila();
  EXPECT_NEAR(log_density_bound(jut, 0.8, 10.0), 5.0, 1e-14);
  const auto ford = DensityEstimate::ford();
  // 58.05 * 0.1^1.5 * 10 + 15 log 10
  const double want = 58.05 * std::pow(0.1, 1.5) * 10.0 + 15.0 * std::log(10.0);
  EXPECT_NEAR(log_density_bound(ford, 0.9, 10.0), want, 1e-12);
  EXPECT_NEAR(want, 52.8957, 1e-4);
  EXPECT_NEAR(log_density_bound(ford, 1.0, 10.0), 15.0 * std::log(10.0), 1e-14);
  EXPECT_EQ(log_density_bound(jut, 1.0, 50.0), 0.0);
}

TEST(Density, LogBoundDomain) {
  const auto jut = DensityEstimate::jutila();
  EXPECT_THROW(log_density_bound(jut, 0.7, 10.0), DomainError);
  EXPECT_THROW(log_density_bound(jut, 1.01, 10.0), DomainError);
  EXPECT_THROW(log_density_bound(jut, 0.9, 1.0), DomainError);
}

TEST(Density, Validate) {
  EXPECT_NO_THROW(DensityEstimate::jutila().validate());
  EXPECT_NO_THROW(DensityEstimate::ford().validate());
  EXPECT_THROW((DensityEstimate{0.0, 1.0, 0.0, 0.8, "x"}.validate()), ParameterError);
  EXPECT_THROW((DensityEstimate{1.0, 0.5, 0.0, 0.8, "x"}.validate()), ParameterError);
  EXPECT_THROW((DensityEstimate{1.0, 1.0, -1.0, 0.8, "x"}.validate()), ParameterError);
  EXPECT_THROW((DensityEstimate{1.0, 1.0, 0.0, 0.4, "x"}.validate()), ParameterError);
}

TEST(Density, EmpiricalCountOnSmallSet) {
  const ZeroSet one({{0.95, 50.0}}, ZeroSource::Synthetic, 100.0);
  EXPECT_EQ(empirical_count(one, 0.9, 100.0), 1);
  EXPECT_EQ(empirical_count(one, 0.96, 100.0), 0);
  // Strict on every side.
  EXPECT_EQ(empirical_count(one, 0.95, 100.0), 0);
  EXPECT_EQ(empirical_count(one, 0.9, 50.0), 0);
}

TEST(Density, EmpiricalCountOnRealTable) {
  const ZeroSet zs = load_ordinates(oracle::zero_table());
  EXPECT_EQ(empirical_count(zs, 0.6, 1e4), 0);
  EXPECT_EQ(empirical_count(zs, 0.4, 100.0), 29);
}

TEST(DensityProperty, Sigma1ExponentInUnitInterval) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    const double a = oracle::log_uniform(rng, 1e-3, 1e3);
    const double s0 = oracle::uniform(rng, 0.5 + 1e-9, 1.0 - 1e-9);
    const double e = sigma1_exponent(a, s0);
    EXPECT_GT(e, -1.0) << "A=" << a << " sigma0=" << s0;
    EXPECT_LT(e, 0.0) << "A=" << a << " sigma0=" << s0;
    EXPECT_NEAR(e, a - (a + 1) * sigma1(a, s0), 1e-12 * (a + 1));
  }
}

TEST(DensityProperty, CountMonotone) {
  std::mt19937_64 rng(9);
  std::vector<Zero> zs;
  double g = 10.0;
  for (int i = 0; i < 500; ++i) {
    g += oracle::uniform(rng, 0.01, 3.0);
    zs.push_back({oracle::uniform(rng, 0.5, 0.99), g});
  }
  const ZeroSet set(zs, ZeroSource::Synthetic, g);
  for (int i = 0; i < 300; ++i) {
    const double s = oracle::uniform(rng, 0.5, 1.0);
    const double t = oracle::uniform(rng, 10.0, g);
    const double ds = oracle::uniform(rng, 0.0, 0.1);
    const double dt = oracle::uniform(rng, 0.0, 100.0);
    EXPECT_GE(empirical_count(set, s, t), empirical_count(set, s + ds, t));
    EXPECT_LE(empirical_count(set, s, t), empirical_count(set, s, t + dt));
  }
}
