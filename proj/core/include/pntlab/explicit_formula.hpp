#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pntlab/density.hpp"
#include "pntlab/omega.hpp"
#include "pntlab/regions.hpp"
#include "pntlab/zeros.hpp"

namespace pntlab {

struct ZeroSumOptions {
  // Terms per reduction chunk. Chunk boundaries depend only on this value,
  // never on the worker count, so results are identical for any `workers`.
  std::size_t chunk_size = 8192;
  unsigned workers = 1;
};

/// sum over 0 < gamma <= T of 2 Re(x^rho / rho), with x^rho / rho evaluated as
/// x^beta (cos(gamma log x) + i sin(gamma log x)) / (beta + i gamma).
/// Accumulated in ascending-gamma order with compensated partial sums per
/// chunk, merged in chunk order.
double zero_sum(double x, const ZeroSet& zs, double t, const ZeroSumOptions& options = {});

/// Truncated explicit formula
///   x - sum_{|gamma| <= T} x^rho / rho - log(2 pi) - (1/2) log(1 - x^-2).
/// The two constant terms come from the untruncated formula; at desk scale
/// they dominate the residual if left out.
///
/// Requires x >= 2, x not an integer (half-integers avoid the jumps of psi),
/// and T <= zs.gamma_max (CoverageError otherwise).
double truncated_psi(double x, const ZeroSet& zs, double t, const ZeroSumOptions& options = {});

struct Residual {
  double residual = 0.0;   // |psi_true - truncated_psi|
  double envelope = 0.0;   // x (log x)^2 / T, unit implied constant
  double truncated = 0.0;  // truncated_psi(x, zs, T)
};

Residual residual(double x, const ZeroSet& zs, double t, double psi_true,
                  const ZeroSumOptions& options = {});

// The three-way split of sum x^{beta - 1} * 2 / gamma over 1 < gamma <= T.
struct SplitSums {
  double s1 = 0.0;  // beta <= sigma1
  double s2 = 0.0;  // sigma1 < beta <= sigma2
  double s3 = 0.0;  // beta > max(sigma1, sigma2), beta < 1
  double total = 0.0;
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  double log_x = 0.0;
  double log_t = 0.0;  // log T = 2 omega
  double t = 0.0;
  OmegaResult omega;
  std::size_t count1 = 0;
  std::size_t count2 = 0;
  std::size_t count3 = 0;
  // True when sigma2 <= sigma1, i.e. x is not yet large enough for the middle
  // strip to exist; s2 is then empty and s3 starts at sigma1.
  bool strips_collapsed = false;
  bool chain_ok = false;
};

/// Omega from minimize_f, T = exp(2 omega), sigma1 from the density estimate
/// and sigma2 = 1 - omega / log x, then the split sums and the s3 chain.
/// Throws ConditionError if the growth conditions on omega fail and
/// CoverageError if T exceeds zs.gamma_max.
SplitSums split_sums(double log_x, const ZeroSet& zs, const ZeroFreeRegion& region,
                     const DensityEstimate& est);

struct ChainViolation {
  std::size_t index = 0;  // position in zs.entries()
  Zero zero;
  double log_term = 0.0;       // log(x^{beta-1} / gamma)
  double log_region_cap = 0.0;  // -f_x(gamma), NaN when gamma < t_min
};

struct ChainReport {
  bool ok = false;
  bool termwise_ok = false;
  bool aggregate_ok = false;
  // min over strip-3 zeros of (-omega) - log(x^{beta-1} / gamma), in log space;
  // +inf when the strip is empty.
  double termwise_slack = 0.0;
  // log(2 N(sigma2, T) exp(-omega)) - log(s3); +inf when s3 = 0.
  double aggregate_slack = 0.0;
  std::int64_t strip_count = 0;
  std::vector<ChainViolation> violators;
};

// Relative tolerance for the log-space comparisons in the chain check.
inline constexpr double kChainTolerance = 1e-12;

/// Audits the s3 inequality chain: every zero in the top strip satisfies
/// x^{beta-1}/gamma <= exp(-f_x(gamma)) <= exp(-omega), and in aggregate
/// s3 <= 2 N(sigma2, T) exp(-omega).
ChainReport check_s3_chain(const SplitSums& split, const ZeroSet& zs, const ZeroFreeRegion& region,
                           const DensityEstimate& est);

/// The unsplit sum x^{beta-1} * 2 / gamma over 1 < gamma <= T, for the
/// partition identity.
double unsplit_sum(double log_x, const ZeroSet& zs, double t);

}  // namespace pntlab
