#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "pntlab/errors.hpp"
#include "pntlab/sieve.hpp"

using namespace pntlab;

namespace {

// Largest r with r^k <= x.
std::uint64_t iroot(std::uint64_t x, int k) {
  auto fits = [&](std::uint64_t r) {
    std::uint64_t p = 1;
    for (int i = 0; i < k; ++i) {
      if (p > x / r) return false;
      p *= r;
    }
    return true;
  };
  std::uint64_t r = 1;
  while (fits(r + 1)) ++r;
  return r;
}

}  // namespace

TEST(Sieve, TenByHand) {
  const auto t = build_tables(10, {10});
  const auto& c = t.at(10);
  EXPECT_EQ(c.pi, 4);
  EXPECT_NEAR(c.theta, std::log(210.0), 1e-14);
  const double psi10 = 3 * std::log(2.0) + 2 * std::log(3.0) + std::log(5.0) + std::log(7.0);
  EXPECT_NEAR(c.psi, psi10, 1e-14);
  EXPECT_NEAR(c.psi, 7.83201, 1e-5);
}

TEST(Sieve, BelowFirstPrime) {
  const auto t = build_tables(10, {1});
  EXPECT_EQ(t.at(1).pi, 0);
  EXPECT_EQ(t.at(1).psi, 0.0);
}

TEST(Sieve, SinglePrime) {
  const auto t = build_tables(2, {2});
  EXPECT_EQ(t.at(2).pi, 1);
  EXPECT_DOUBLE_EQ(t.at(2).theta, std::log(2.0));
  EXPECT_DOUBLE_EQ(t.at(2).psi, std::log(2.0));
}

TEST(Sieve, MillionAcrossSegmentSizes) {
  SieveOptions a, b;
  a.segment_size = 1 << 12;
  b.segment_size = 1 << 20;
  const auto ta = build_tables(1'000'000, {1'000'000}, a);
  const auto tb = build_tables(1'000'000, {1'000'000}, b);
  EXPECT_EQ(ta.at(1'000'000).pi, 78498);
  EXPECT_EQ(tb.at(1'000'000).pi, 78498);
  EXPECT_EQ(static_cast<std::int64_t>(oracle::primes_upto(1'000'000).size()), 78498);
}

TEST(Sieve, Errors) {
  EXPECT_THROW(build_tables(kSieveLimitCap + 1, {}), LimitError);
  EXPECT_THROW(build_tables(100, {200}), DomainError);
  const auto t = build_tables(100, {50});
  EXPECT_THROW(t.at(60), DomainError);
}

TEST(Sieve, BruteForceCheckpoints) {
  const auto cps = log_spaced_checkpoints(10'000, 40);
  const auto t = build_tables(10'000, cps);
  for (auto x : cps) {
    EXPECT_LT(oracle::rel_err(t.at(x).psi, oracle::psi_brute(x)), 1e-12) << x;
    EXPECT_LT(oracle::rel_err(t.at(x).theta, oracle::theta_brute(x)), 1e-12) << x;
    std::int64_t pi = 0;
    for (std::uint64_t n = 2; n <= x; ++n) pi += oracle::is_prime(n);
    EXPECT_EQ(t.at(x).pi, pi) << x;
  }
}

TEST(SieveProperty, SegmentSizeInvariance) {
  const auto cps = log_spaced_checkpoints(3'000'000, 25);
  SieveOptions a, b, c;
  a.segment_size = 1 << 16;
  b.segment_size = 1 << 20;
  c.segment_size = 1000;
  c.workers = 4;
  const auto ta = build_tables(3'000'000, cps, a);
  const auto tb = build_tables(3'000'000, cps, b);
  const auto tc = build_tables(3'000'000, cps, c);
  for (auto x : cps) {
    EXPECT_EQ(ta.at(x).psi, tb.at(x).psi) << x;
    EXPECT_EQ(ta.at(x).theta, tb.at(x).theta) << x;
    EXPECT_EQ(ta.at(x).pi, tb.at(x).pi) << x;
    EXPECT_EQ(ta.at(x).psi, tc.at(x).psi) << x;
    EXPECT_EQ(ta.at(x).pi, tc.at(x).pi) << x;
  }
}

TEST(SieveProperty, PsiMinusThetaIdentity) {
  // psi(x) - theta(x) = sum over k >= 2 of theta(x^{1/k}).
  const auto cps = log_spaced_checkpoints(1'000'000, 30);
  const auto t = build_tables(1'000'000, cps);
  for (auto x : cps) {
    double rhs = 0.0;
    for (int k = 2; std::pow(2.0, k) <= static_cast<double>(x); ++k) {
      const std::uint64_t r = iroot(x, k);
      rhs += oracle::theta_brute(r);
    }
    const double lhs = t.at(x).psi - t.at(x).theta;
    if (rhs == 0.0) {
      EXPECT_EQ(lhs, 0.0) << x;
    } else {
      EXPECT_LT(oracle::rel_err(lhs, rhs), 1e-9) << x;
    }
  }
}

TEST(Sieve, LiValues) {
  EXPECT_EQ(li(2.0), 0.0);
  EXPECT_NEAR(li(10.0), 5.12044, 1e-5);
  EXPECT_NEAR(li(10.0), oracle::li_expint(10.0), 1e-12);
  const double v4 = li(4.0);
  EXPECT_GT(v4, 2 / std::log(4.0));
  EXPECT_LT(v4, 2 / std::log(2.0));
  EXPECT_NEAR(v4, 1.92242, 1e-5);
  EXPECT_THROW(li(1.5), DomainError);
}

TEST(SieveProperty, LiMatchesExponentialIntegral) {
  for (double x = 2.5; x < 1e10; x *= 3.7) {
    EXPECT_LT(oracle::rel_err(li(x), oracle::li_expint(x)), 1e-12) << x;
  }
}

TEST(Sieve, Deltas) {
  const auto t = build_tables(1'000'000, {2, 3, 100, 1'000'000});
  EXPECT_NEAR(deltas(t, 100).d3, std::abs(oracle::psi_brute(100) - 100) / 100, 1e-15);
  EXPECT_NEAR(deltas(t, 100).d3, 0.05955, 1e-5);
  EXPECT_NEAR(deltas(t, 2).d2, std::abs(std::log(2.0) - 2) / 2, 1e-15);
  EXPECT_NEAR(deltas(t, 2).d2, 0.6534, 1e-4);
  EXPECT_EQ(deltas(t, 3).d2, deltas(t, 3).d3);
  EXPECT_LT(deltas(t, 1'000'000).d3, deltas(t, 100).d3);
  const double d1 = std::abs(25 - li(100.0)) * std::log(100.0) / 100;
  EXPECT_NEAR(deltas(t, 100).d1, d1, 1e-15);
}

TEST(Sieve, LogSpacedCheckpoints) {
  const auto cps = log_spaced_checkpoints(1'000'000, 10);
  EXPECT_EQ(cps.back(), 1'000'000u);
  EXPECT_GE(cps.front(), 2u);
  EXPECT_TRUE(std::is_sorted(cps.begin(), cps.end()));
  EXPECT_EQ(std::adjacent_find(cps.begin(), cps.end()), cps.end());
}
