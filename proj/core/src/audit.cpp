#include "pntlab/audit.hpp"

#include <algorithm>
#include <cmath>

#include "pntlab/errors.hpp"
#include "pntlab/omega.hpp"

namespace pntlab {

AuditReport audit_proof(const ZeroSet& zs, const ZeroFreeRegion& region,
                        const DensityEstimate& est, double log_x) {
  AuditReport report;
  report.split = split_sums(log_x, zs, region, est);
  report.chain = check_s3_chain(report.split, zs, region, est);
  const SplitSums& s = report.split;

  report.reciprocal_sum = reciprocal_gamma_sum(zs, s.t);
  report.reciprocal_ratio = report.reciprocal_sum / (s.log_t * s.log_t);

  report.s1_cap = std::exp((s.sigma1 - 1.0) * log_x) * report.reciprocal_sum;
  report.s1_ok = s.s1 <= report.s1_cap * (1.0 + kPartitionTolerance);

  report.s2_cap = static_cast<double>(s.count2) * std::exp((s.sigma2 - 1.0) * log_x) * 2.0;
  report.s2_ok = s.s2 <= report.s2_cap * (1.0 + kPartitionTolerance);

  // Against a separate unsplit pass, not the total accumulated alongside the strips.
  const double whole = unsplit_sum(log_x, zs, s.t);
  const double parts = s.s1 + s.s2 + s.s3;
  report.partition_error = whole == 0.0 ? std::abs(parts) : std::abs(parts - whole) / whole;
  report.partition_ok = report.partition_error <= kPartitionTolerance;
  return report;
}

ZeroSet plant_violator(const ZeroSet& zs, const ZeroFreeRegion& region, double log_x,
                       Zero* planted) {
  const OmegaResult om = minimize_f(region, log_x);
  const double gamma = std::exp(om.log_t0);
  if (gamma > zs.gamma_max()) {
    throw CoverageError("violator height t0 lies above the zero set's coverage");
  }
  const Zero bad{1.0 - region.eta(gamma) / 2.0, gamma};
  std::vector<Zero> entries = zs.entries();
  const auto pos = std::upper_bound(entries.begin(), entries.end(), gamma,
                                    [](double g, const Zero& z) { return g < z.gamma; });
  entries.insert(pos, bad);
  if (planted != nullptr) *planted = bad;
  return ZeroSet(std::move(entries), ZeroSource::Synthetic, zs.gamma_max());
}

}  // namespace pntlab
