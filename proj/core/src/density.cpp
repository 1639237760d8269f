#include "pntlab/density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pntlab/errors.hpp"
#include "pntlab/zeros.hpp"

namespace pntlab {

void DensityEstimate::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) throw ParameterError("density estimate needs A > 0");
  if (!(b >= 1.0) || !std::isfinite(b)) throw ParameterError("density estimate needs B >= 1");
  if (!(c >= 0.0) || !std::isfinite(c)) throw ParameterError("density estimate needs C >= 0");
  if (!(sigma0 > 0.5 && sigma0 < 1.0)) {
    throw ParameterError("density estimate needs sigma0 in (1/2, 1)");
  }
}

DensityEstimate DensityEstimate::jutila() { return {2.5, 1.0, 0.0, 0.8, "jutila"}; }

DensityEstimate DensityEstimate::ford() { return {58.05, 1.5, 15.0, 0.9, "ford"}; }

double sigma1(double a, double sigma0) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("sigma1 needs A > 0");
  if (!(sigma0 > 0.5 && sigma0 < 1.0)) throw DomainError("sigma1 needs sigma0 in (1/2, 1)");
  return std::max(a / (a + 0.5), sigma0);
}

double sigma1_exponent(double a, double sigma0) { return a - (a + 1.0) * sigma1(a, sigma0); }

double log_density_bound(const DensityEstimate& est, double sigma, double log_t) {
  if (!(sigma >= est.sigma0 && sigma <= 1.0)) {
    std::ostringstream msg;
    msg << "sigma = " << sigma << " outside [" << est.sigma0 << ", 1] where the '" << est.label
        << "' bound is claimed";
    throw DomainError(msg.str());
  }
  if (!(log_t > 1.0)) {
    std::ostringstream msg;
    msg << "density bound needs log T > 1, got " << log_t;
    throw DomainError(msg.str());
  }
  const double first = est.a * std::pow(1.0 - sigma, est.b) * log_t;
  const double second = est.c == 0.0 ? 0.0 : est.c * std::log(log_t);
  return first + second;
}

std::int64_t empirical_count(const ZeroSet& zs, double sigma, double t) {
  const auto& entries = zs.entries();
  // Entries are sorted by gamma, so only the prefix below t matters.
  const auto end = std::lower_bound(entries.begin(), entries.end(), t,
                                    [](const Zero& z, double bound) { return z.gamma < bound; });
  std::int64_t count = 0;
  for (auto it = entries.begin(); it != end; ++it) {
    if (it->gamma > 0.0 && it->beta > sigma && it->beta < 1.0) ++count;
  }
  return count;
}

}  // namespace pntlab
