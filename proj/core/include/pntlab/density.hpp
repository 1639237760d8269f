#pragma once

#include <cstdint>
#include <string>

namespace pntlab {

class ZeroSet;

/// Constants of a zero-density bound
///   N(sigma, t) << t^{A (1 - sigma)^B} (log t)^C,  sigma in [sigma0, 1].
///
/// The implied constant is taken to be 1 throughout ("unit-constant form").
struct DensityEstimate {
  double a = 0.0;
  double b = 1.0;
  double c = 0.0;
  double sigma0 = 0.75;
  std::string label;

  // Throws ParameterError unless A > 0, B >= 1, C >= 0, sigma0 in (1/2, 1).
  void validate() const;

  static DensityEstimate jutila();  // A = 5/2, B = 1, C = 0, sigma0 = 0.8
  static DensityEstimate ford();    // A = 58.05, B = 3/2, C = 15, sigma0 = 0.9
};

/// max{A / (A + 0.5), sigma0}. Throws DomainError outside A > 0,
/// sigma0 in (1/2, 1).
double sigma1(double a, double sigma0);

/// A - (A + 1) sigma1: the exponent that must lie in (-1, 0) for the tail
/// sum above sigma1 to stay bounded.
double sigma1_exponent(double a, double sigma0);

/// A (1 - sigma)^B log_T + C log(log_T): natural log of the unit-constant
/// bound. Throws DomainError if sigma is outside [sigma0, 1] or log_T <= 1.
double log_density_bound(const DensityEstimate& est, double sigma, double log_t);

/// #{beta + i gamma in zs : sigma < beta < 1, 0 < gamma < t}. Conjugates are
/// not counted.
std::int64_t empirical_count(const ZeroSet& zs, double sigma, double t);

}  // namespace pntlab
