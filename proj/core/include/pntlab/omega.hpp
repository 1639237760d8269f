#pragma once

#include "pntlab/regions.hpp"

namespace pntlab {

// Pointwise checks of the growth hypotheses on omega(x):
// omega >= 2 log log x, and the surrogate omega / log x <= 1/2 standing in
// for omega = o(log x).
struct GrowthConditions {
  bool omega_ge_2loglogx = false;
  bool omega_small_vs_logx = false;

  bool all() const { return omega_ge_2loglogx && omega_small_vs_logx; }
};

// Outcome of minimising f_x(t) = eta(t) log x + log t.
struct OmegaResult {
  double log_x = 0.0;
  double log_t0 = 0.0;  // natural log of the minimiser t0
  double omega = 0.0;   // f_x(t0)
  GrowthConditions conditions;
  // The minimum sits on the lower end of the search window rather than at an
  // interior critical point.
  bool boundary = false;
};

// Ratio omega / log x above which the o(log x) surrogate fails.
inline constexpr double kSmallVsLogXThreshold = 0.5;

// Hard cap on log t during bracket expansion.
inline constexpr double kLogTExpansionCap = 1e9;

/// f_x(t) evaluated at log t.
double f_x_at_log(const ZeroFreeRegion& region, double log_x, double log_t);

/// Global minimiser of f_x over t >= max(t_min, 3).
///
/// Works in u = log t: the bracket grows geometrically from the lower end of
/// the window until f rises, golden-section search narrows it to a relative
/// width of 1e-12, and the interior critical point is then polished by
/// bisection on the analytic derivative eta'(u) log x + 1.
///
/// Throws DomainError for log_x <= 0 and LimitError if f is still decreasing
/// at log t = 1e9.
OmegaResult minimize_f(const ZeroFreeRegion& region, double log_x);

/// omega = 2 sqrt(log x / R), log t0 = sqrt(log x / R) for eta = 1/(R log t).
/// Ignores the t >= 3 window; the caller compares against minimize_f only
/// where the minimiser is interior.
OmegaResult closed_form_classical(double r, double log_x);

/// (5^6 / (2^2 3^4 c^3))^{1/5} (log x)^{3/5} / (log log x)^{1/5}.
double asymptotic_vk(double c, double log_x);

/// Leading constant of asymptotic_vk.
double asymptotic_vk_constant(double c);

GrowthConditions check_growth_conditions(const OmegaResult& result);
GrowthConditions check_growth_conditions(double omega, double log_x);

}  // namespace pntlab
