#pragma once

#include "pntlab/density.hpp"
#include "pntlab/explicit_formula.hpp"
#include "pntlab/regions.hpp"
#include "pntlab/zeros.hpp"

namespace pntlab {

// Relative tolerance of the partition identity s1 + s2 + s3 = total.
inline constexpr double kPartitionTolerance = 1e-12;

/// End-to-end replay of the proof's bookkeeping on one zero set.
struct AuditReport {
  SplitSums split;
  ChainReport chain;

  // sum over 1 < gamma <= T of 2 / gamma and its ratio to (log T)^2.
  double reciprocal_sum = 0.0;
  double reciprocal_ratio = 0.0;

  // s1 <= x^{sigma1 - 1} * reciprocal_sum
  double s1_cap = 0.0;
  bool s1_ok = false;
  // s2 <= count2 * x^{sigma2 - 1} * 2
  double s2_cap = 0.0;
  bool s2_ok = false;

  double partition_error = 0.0;  // |s1 + s2 + s3 - unsplit| / unsplit
  bool partition_ok = false;

  bool passed() const { return chain.ok && s1_ok && s2_ok && partition_ok; }
};

/// Runs split_sums, check_s3_chain and the s1 / s2 / partition checks.
/// Propagates ConditionError and CoverageError from split_sums.
AuditReport audit_proof(const ZeroSet& zs, const ZeroFreeRegion& region,
                        const DensityEstimate& est, double log_x);

/// Copy of `zs` with one extra zero at gamma = t0 and
/// beta = 1 - eta(t0) / 2, which breaks the zero-free region and lands in
/// the top strip. Returns the planted zero through `planted` when non-null.
ZeroSet plant_violator(const ZeroSet& zs, const ZeroFreeRegion& region, double log_x,
                       Zero* planted = nullptr);

}  // namespace pntlab
