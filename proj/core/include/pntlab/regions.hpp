#pragma once

#include <string>

namespace pntlab {

enum class RegionFamily { Classical, VinogradovKorobov, PowerForm };

std::string to_string(RegionFamily family);

// Family constants. Only the members relevant to the family are read:
// Classical uses r, VinogradovKorobov uses c, PowerForm uses c1, c2, c3.
struct RegionParams {
  double r = 0.0;
  double c = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

/// A zero-free region eta(t): zeta has no zeros beta + i*t with
/// beta > 1 - eta(|t|), for t at or above the start of the validity domain.
///
/// Every evaluation goes through u = log t so that t may be astronomically
/// large (u up to ~1e9). The `*_at_log` members take u directly; the plain
/// members take t and forward log(t).
///
/// Construction validates the constants and computes t_min, so a constructed
/// value is always usable. Instances are immutable.
class ZeroFreeRegion {
 public:
  static ZeroFreeRegion classical(double r);
  static ZeroFreeRegion vinogradov_korobov(double c);
  static ZeroFreeRegion power_form(double c1, double c2, double c3);

  RegionFamily family() const { return family_; }
  const RegionParams& params() const { return params_; }

  // Start of the validity domain: the smallest t >= 3 with eta(t) <= 1/2,
  // eta strictly decreasing beyond it, and log log t defined when needed.
  double t_min() const { return t_min_; }
  double log_t_min() const { return log_t_min_; }

  // eta(t); throws DomainError when t < t_min.
  double eta(double t) const;
  double eta_at_log(double log_t) const;

  // d(eta)/dt; throws DomainError when t < t_min. Underflows to -0 for
  // astronomically large t, use log_derivative_at_log there.
  double eta_prime(double t) const;
  double eta_prime_at_log(double log_t) const;

  // d(eta)/d(log t) = t * eta'(t).
  double log_derivative_at_log(double log_t) const;

  // The family formula without the domain check. Needed for points below
  // t_min where the formula is still defined (e.g. eta'(e) for the classical
  // family); undefined arguments yield NaN.
  double formula_at_log(double log_t) const;
  double formula_log_derivative_at_log(double log_t) const;

  // Short preset spelling, e.g. "classical:5.573412".
  std::string describe() const;

 private:
  ZeroFreeRegion(RegionFamily family, RegionParams params);
  void check_domain(double log_t) const;

  RegionFamily family_;
  RegionParams params_;
  double t_min_ = 3.0;
  double log_t_min_ = 0.0;
};

/// Smallest admissible t for the family, found by bisection on log t and
/// clamped to >= 3. Throws ParameterError if no such t exists below 1e300.
double domain_start(RegionFamily family, const RegionParams& params);

// Free-function spellings of the member evaluations.
inline double eval_eta(const ZeroFreeRegion& region, double t) { return region.eta(t); }
inline double eval_eta_prime(const ZeroFreeRegion& region, double t) { return region.eta_prime(t); }

}  // namespace pntlab
