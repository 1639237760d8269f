#include "pntlab/regions.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "pntlab/errors.hpp"

namespace pntlab {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kLogTCap = 690.77552789821368;  // log(1e300)

bool needs_log_log(RegionFamily family, const RegionParams& p) {
  return family == RegionFamily::VinogradovKorobov ||
         (family == RegionFamily::PowerForm && p.c3 != 0.0);
}

double raw_eta(RegionFamily family, const RegionParams& p, double u) {
  switch (family) {
    case RegionFamily::Classical:
      if (!(u > 0.0)) return kNaN;
      return 1.0 / (p.r * u);
    case RegionFamily::VinogradovKorobov: {
      if (!(u > 1.0)) return kNaN;
      return 1.0 / (p.c * std::cbrt(u * u) * std::cbrt(std::log(u)));
    }
    case RegionFamily::PowerForm: {
      if (!(u > 0.0)) return kNaN;
      double denom = std::pow(u, p.c2);
      if (p.c3 != 0.0) {
        if (!(u > 1.0)) return kNaN;
        denom *= std::pow(std::log(u), p.c3);
      }
      return p.c1 / denom;
    }
  }
  return kNaN;
}

// d(eta)/du as -eta * rate(u).
double raw_log_derivative(RegionFamily family, const RegionParams& p, double u) {
  const double eta = raw_eta(family, p, u);
  if (std::isnan(eta)) return kNaN;
  switch (family) {
    case RegionFamily::Classical:
      return -eta / u;
    case RegionFamily::VinogradovKorobov:
      return -eta * (2.0 / (3.0 * u) + 1.0 / (3.0 * u * std::log(u)));
    case RegionFamily::PowerForm: {
      double rate = p.c2 / u;
      if (p.c3 != 0.0) rate += p.c3 / (u * std::log(u));
      return -eta * rate;
    }
  }
  return kNaN;
}

bool admissible(RegionFamily family, const RegionParams& p, double u) {
  const double eta = raw_eta(family, p, u);
  if (std::isnan(eta) || eta > 0.5) return false;
  return raw_log_derivative(family, p, u) < 0.0;
}

void validate(RegionFamily family, const RegionParams& p) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  switch (family) {
    case RegionFamily::Classical:
      if (!positive(p.r)) throw ParameterError("classical region needs R > 0");
      break;
    case RegionFamily::VinogradovKorobov:
      if (!positive(p.c)) throw ParameterError("Vinogradov-Korobov region needs c > 0");
      break;
    case RegionFamily::PowerForm:
      if (!positive(p.c1)) throw ParameterError("power-form region needs c1 > 0");
      if (!positive(p.c2)) throw ParameterError("power-form region needs c2 > 0");
      if (!std::isfinite(p.c3)) throw ParameterError("power-form region needs finite c3");
      break;
  }
}

}  // namespace

std::string to_string(RegionFamily family) {
  switch (family) {
    case RegionFamily::Classical:
      return "classical";
    case RegionFamily::VinogradovKorobov:
      return "vk";
    case RegionFamily::PowerForm:
      return "power";
  }
  return "unknown";
}

double domain_start(RegionFamily family, const RegionParams& params) {
  validate(family, params);

  double lower = needs_log_log(family, params) ? 1.0 : 0.0;
  if (family == RegionFamily::PowerForm && params.c3 < 0.0) {
    // eta is increasing in log t until log log t = -c3/c2.
    lower = std::max(lower, std::exp(-params.c3 / params.c2));
  }

  double lo = lower;
  double hi = std::nextafter(lower, std::numeric_limits<double>::infinity());
  if (!admissible(family, params, hi)) {
    lo = hi;
    hi = lower + 1.0;
    while (!admissible(family, params, hi)) {
      lo = hi;
      hi = lower + 2.0 * (hi - lower);
      if (hi > kLogTCap) {
        throw ParameterError("no admissible start of the zero-free region below t = 1e300");
      }
    }
    // Admissibility is monotone beyond `lower`: bisect down to adjacent doubles.
    for (int i = 0; i < 2000; ++i) {
      const double mid = lo + 0.5 * (hi - lo);
      if (mid <= lo || mid >= hi) break;
      if (admissible(family, params, mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
  }
  if (hi > kLogTCap) {
    throw ParameterError("no admissible start of the zero-free region below t = 1e300");
  }
  return hi < std::log(3.0) ? 3.0 : std::exp(hi);
}

ZeroFreeRegion::ZeroFreeRegion(RegionFamily family, RegionParams params)
    : family_(family), params_(params) {
  t_min_ = domain_start(family_, params_);
  log_t_min_ = (t_min_ == 3.0) ? std::log(3.0) : std::log(t_min_);
  // log(exp(u)) may land one ulp below the bisection result; make sure the
  // stored start is itself admissible.
  while (!admissible(family_, params_, log_t_min_)) {
    log_t_min_ = std::nextafter(log_t_min_, std::numeric_limits<double>::infinity());
  }
}

ZeroFreeRegion ZeroFreeRegion::classical(double r) {
  RegionParams p;
  p.r = r;
  return ZeroFreeRegion(RegionFamily::Classical, p);
}

ZeroFreeRegion ZeroFreeRegion::vinogradov_korobov(double c) {
  RegionParams p;
  p.c = c;
  return ZeroFreeRegion(RegionFamily::VinogradovKorobov, p);
}

ZeroFreeRegion ZeroFreeRegion::power_form(double c1, double c2, double c3) {
  RegionParams p;
  p.c1 = c1;
  p.c2 = c2;
  p.c3 = c3;
  return ZeroFreeRegion(RegionFamily::PowerForm, p);
}

void ZeroFreeRegion::check_domain(double log_t) const {
  if (!(log_t >= log_t_min_)) {
    std::ostringstream msg;
    msg << "log t = " << log_t << " lies below the region's domain start log t_min = "
        << log_t_min_;
    throw DomainError(msg.str());
  }
}

double ZeroFreeRegion::eta(double t) const {
  if (!(t >= t_min_)) {
    std::ostringstream msg;
    msg << "t = " << t << " lies below the region's domain start t_min = " << t_min_;
    throw DomainError(msg.str());
  }
  return raw_eta(family_, params_, std::max(std::log(t), log_t_min_));
}

double ZeroFreeRegion::eta_at_log(double log_t) const {
  check_domain(log_t);
  return raw_eta(family_, params_, log_t);
}

double ZeroFreeRegion::eta_prime(double t) const {
  if (!(t >= t_min_)) {
    std::ostringstream msg;
    msg << "t = " << t << " lies below the region's domain start t_min = " << t_min_;
    throw DomainError(msg.str());
  }
  return raw_log_derivative(family_, params_, std::max(std::log(t), log_t_min_)) / t;
}

double ZeroFreeRegion::eta_prime_at_log(double log_t) const {
  check_domain(log_t);
  return raw_log_derivative(family_, params_, log_t) * std::exp(-log_t);
}

double ZeroFreeRegion::log_derivative_at_log(double log_t) const {
  check_domain(log_t);
  return raw_log_derivative(family_, params_, log_t);
}

double ZeroFreeRegion::formula_at_log(double log_t) const {
  return raw_eta(family_, params_, log_t);
}

double ZeroFreeRegion::formula_log_derivative_at_log(double log_t) const {
  return raw_log_derivative(family_, params_, log_t);
}

std::string ZeroFreeRegion::describe() const {
  // Shortest round-trip spelling, so the string parses back to the same region.
  auto shortest = [](double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
  };
  switch (family_) {
    case RegionFamily::Classical:
      return "classical:" + shortest(params_.r);
    case RegionFamily::VinogradovKorobov:
      return "vk:" + shortest(params_.c);
    case RegionFamily::PowerForm:
      return "power:" + shortest(params_.c1) + ',' + shortest(params_.c2) + ',' +
             shortest(params_.c3);
  }
  return "unknown";
}

}  // namespace pntlab
