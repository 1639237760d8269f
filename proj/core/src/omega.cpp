#include "pntlab/omega.hpp"

#include <cmath>
#include <sstream>

#include "pntlab/errors.hpp"

namespace pntlab {
namespace {

constexpr double kInvPhi = 0.61803398874989484820;  // (sqrt(5) - 1) / 2

void require_positive_log_x(double log_x) {
  if (!(log_x > 0.0) || !std::isfinite(log_x)) {
    std::ostringstream msg;
    msg << "log x must be positive and finite, got " << log_x;
    throw DomainError(msg.str());
  }
}

struct Bracket {
  double lo;
  double hi;
};

// Golden-section search on [lo, hi] to width < 1e-12 * max(1, |u|).
Bracket golden_section(const ZeroFreeRegion& region, double log_x, double lo, double hi) {
  auto f = [&](double u) { return f_x_at_log(region, log_x, u); };
  double c = hi - kInvPhi * (hi - lo);
  double d = lo + kInvPhi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int iter = 0; iter < 400; ++iter) {
    const double scale = std::max(1.0, std::abs(0.5 * (lo + hi)));
    if (hi - lo < 1e-12 * scale) break;
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - kInvPhi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + kInvPhi * (hi - lo);
      fd = f(d);
    }
  }
  return {lo, hi};
}

}  // namespace

double f_x_at_log(const ZeroFreeRegion& region, double log_x, double log_t) {
  return region.eta_at_log(log_t) * log_x + log_t;
}

OmegaResult minimize_f(const ZeroFreeRegion& region, double log_x) {
  require_positive_log_x(log_x);

  const double u_min = std::max(region.log_t_min(), std::log(3.0));
  auto f = [&](double u) { return f_x_at_log(region, log_x, u); };
  auto slope = [&](double u) { return region.log_derivative_at_log(u) * log_x + 1.0; };

  OmegaResult result;
  result.log_x = log_x;

  if (slope(u_min) >= 0.0) {
    result.log_t0 = u_min;
    result.omega = f(u_min);
    result.boundary = true;
    result.conditions = check_growth_conditions(result);
    return result;
  }

  // Expand [a, c] with f(b) < f(a) and f(b) <= f(c) for the middle point b.
  double a = u_min;
  double b = u_min;
  double fb = f(b);
  double step = std::max(1.0, u_min);
  double c = u_min + step;
  double fc = f(c);
  while (fc < fb) {
    a = b;
    b = c;
    fb = fc;
    step *= 2.0;
    c = b + step;
    if (c > kLogTExpansionCap) {
      std::ostringstream msg;
      msg << "f_x is still decreasing at log t = " << kLogTExpansionCap
          << " (log x = " << log_x << "); no interior minimum found";
      throw LimitError(msg.str());
    }
    fc = f(c);
  }

  const Bracket narrowed = golden_section(region, log_x, a, c);
  double lo = narrowed.lo;
  double hi = narrowed.hi;

  // Values of f are flat to rounding within ~sqrt(eps) of the minimiser, so
  // the golden bracket can stall there. The derivative still changes sign
  // sharply; bisect on it, widening first if rounding pushed the root out.
  double s_lo = slope(lo);
  double s_hi = slope(hi);
  for (int widen = 0; widen < 60 && !(s_lo <= 0.0 && s_hi >= 0.0); ++widen) {
    const double w = std::max(hi - lo, 1e-12 * std::max(1.0, std::abs(hi)));
    if (s_lo > 0.0) lo = std::max(u_min, lo - w);
    if (s_hi < 0.0) hi = hi + w;
    s_lo = slope(lo);
    s_hi = slope(hi);
  }
  double u0 = 0.5 * (lo + hi);
  if (s_lo <= 0.0 && s_hi >= 0.0) {
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = lo + 0.5 * (hi - lo);
      if (mid <= lo || mid >= hi) break;
      if (slope(mid) < 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    u0 = (f(lo) <= f(hi)) ? lo : hi;
  }

  result.log_t0 = u0;
  result.omega = f(u0);
  result.boundary = (u0 <= u_min);
  result.conditions = check_growth_conditions(result);
  return result;
}

OmegaResult closed_form_classical(double r, double log_x) {
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("closed form needs R > 0");
  require_positive_log_x(log_x);
  OmegaResult result;
  result.log_x = log_x;
  result.log_t0 = std::sqrt(log_x / r);
  result.omega = 2.0 * result.log_t0;
  result.conditions = check_growth_conditions(result);
  return result;
}

double asymptotic_vk_constant(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("VK asymptotic needs c > 0");
  // 5^6 / (2^2 * 3^4) = 15625 / 324
  return std::pow(15625.0 / (324.0 * c * c * c), 0.2);
}

double asymptotic_vk(double c, double log_x) {
  const double k = asymptotic_vk_constant(c);
  require_positive_log_x(log_x);
  const double loglog = std::log(log_x);
  if (!(loglog > 0.0)) {
    std::ostringstream msg;
    msg << "VK asymptotic needs log log x > 0, got log x = " << log_x;
    throw DomainError(msg.str());
  }
  return k * std::pow(log_x, 0.6) / std::pow(loglog, 0.2);
}

GrowthConditions check_growth_conditions(double omega, double log_x) {
  GrowthConditions flags;
  flags.omega_ge_2loglogx = omega >= 2.0 * std::log(log_x);
  flags.omega_small_vs_logx = omega / log_x <= kSmallVsLogXThreshold;
  return flags;
}

GrowthConditions check_growth_conditions(const OmegaResult& result) {
  return check_growth_conditions(result.omega, result.log_x);
}

}  // namespace pntlab
