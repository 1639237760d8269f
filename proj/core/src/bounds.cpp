#include "pntlab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "pntlab/errors.hpp"
#include "pntlab/omega.hpp"

namespace pntlab {
namespace {

void require_omega_log_x(double omega, double log_x) {
  if (!(omega > 1.0) || !std::isfinite(omega)) {
    std::ostringstream msg;
    msg << "bound needs omega > 1, got " << omega;
    throw DomainError(msg.str());
  }
  if (!(log_x > 0.0) || !std::isfinite(log_x)) {
    std::ostringstream msg;
    msg << "bound needs log x > 0, got " << log_x;
    throw DomainError(msg.str());
  }
}

LogBound make(BoundKind kind, double value, double omega, double log_x, double eps = 0.0) {
  LogBound b;
  b.kind = kind;
  b.log_value = value;
  b.omega = omega;
  b.log_x = log_x;
  b.eps = eps;
  return b;
}

std::optional<double> evaluate(BoundKind kind, double omega, double log_x,
                               const DensityEstimate& est, double eps) {
  try {
    switch (kind) {
      case BoundKind::Theorem1:
        return log_bound_theorem1(omega, log_x, est).log_value;
      case BoundKind::CorLogFree:
      case BoundKind::CorVK:
      case BoundKind::CorVKSimplified:
        return log_bound_corollary(omega, log_x, kind).log_value;
      case BoundKind::Pintz:
      case BoundKind::Ingham:
      case BoundKind::SchoenfeldRH:
        return log_bound_baseline(omega, log_x, kind, eps).log_value;
    }
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::Theorem1:
      return "th1";
    case BoundKind::CorLogFree:
      return "cor_logfree";
    case BoundKind::CorVK:
      return "cor_vk";
    case BoundKind::CorVKSimplified:
      return "cor_vk_simple";
    case BoundKind::Pintz:
      return "pintz";
    case BoundKind::Ingham:
      return "ingham";
    case BoundKind::SchoenfeldRH:
      return "schoenfeld";
  }
  return "unknown";
}

std::string LogBound::label() const {
  std::ostringstream out;
  out << to_string(kind);
  if (kind == BoundKind::Pintz || kind == BoundKind::Ingham) out << "(eps=" << eps << ")";
  if (kind == BoundKind::Theorem1 && estimate) out << "(" << estimate->label << ")";
  return out.str();
}

LogBound log_bound_theorem1(double omega, double log_x, const DensityEstimate& est) {
  require_omega_log_x(omega, log_x);
  est.validate();
  const double density_term = 2.0 * est.a * omega * std::pow(omega / log_x, est.b);
  const double log_term = est.c == 0.0 ? 0.0 : est.c * std::log(omega);
  LogBound b = make(BoundKind::Theorem1, -omega + density_term + log_term, omega, log_x);
  b.estimate = est;
  return b;
}

LogBound log_bound_corollary(double omega, double log_x, BoundKind which) {
  require_omega_log_x(omega, log_x);
  switch (which) {
    case BoundKind::CorLogFree:
      return make(which, -omega + 5.0 * omega * omega / log_x, omega, log_x);
    case BoundKind::CorVK:
      // 117 is the rounded-up 2 * 58.05 of the stated corollary.
      return make(which,
                  -omega + 117.0 * std::pow(omega, 2.5) / std::pow(log_x, 1.5) +
                      15.0 * std::log(omega),
                  omega, log_x);
    case BoundKind::CorVKSimplified: {
      const double loglog = std::log(log_x);
      if (!(loglog > 1.0)) {
        std::ostringstream msg;
        msg << "simplified VK bound needs log log x > 1, got log x = " << log_x;
        throw DomainError(msg.str());
      }
      return make(which, -omega + 9.0 * loglog - 3.0 * std::log(loglog), omega, log_x);
    }
    default:
      throw DomainError("not a corollary bound: " + to_string(which));
  }
}

LogBound log_bound_baseline(double omega, double log_x, BoundKind which, double eps) {
  switch (which) {
    case BoundKind::Ingham:
      if (!(eps > 0.0 && eps < 0.5)) throw DomainError("Ingham bound needs eps in (0, 1/2)");
      return make(which, -(0.5 - eps) * omega, omega, log_x, eps);
    case BoundKind::Pintz:
      if (!(eps > 0.0 && eps < 1.0)) throw DomainError("Pintz bound needs eps in (0, 1)");
      return make(which, -(1.0 - eps) * omega, omega, log_x, eps);
    case BoundKind::SchoenfeldRH: {
      if (!(log_x > 1.0)) throw DomainError("Schoenfeld bound needs log x > 1");
      const double value =
          2.0 * std::log(log_x) - std::log(8.0 * std::numbers::pi) - 0.5 * log_x;
      return make(which, value, omega, log_x);
    }
    default:
      throw DomainError("not a baseline bound: " + to_string(which));
  }
}

std::string format_magnitude(double log_value) {
  if (std::isnan(log_value)) return "nan";
  if (log_value < -300.0 * std::numbers::ln10) return "<1e-300";
  if (log_value > 300.0 * std::numbers::ln10) return ">1e300";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", std::exp(log_value));
  return buf;
}

std::optional<double> bound_at(BoundKind kind, const ZeroFreeRegion& region,
                               const DensityEstimate& est, double log_x, double eps) {
  double omega = 0.0;
  try {
    omega = minimize_f(region, log_x).omega;
  } catch (const Error&) {
    return std::nullopt;
  }
  return evaluate(kind, omega, log_x, est, eps);
}

ComparisonTable comparison_table(const ZeroFreeRegion& region, const DensityEstimate& est,
                                 const std::vector<double>& log_x_grid, double eps,
                                 const PrimeTables* measured) {
  ComparisonTable table;
  table.rows.reserve(log_x_grid.size());
  for (double log_x : log_x_grid) {
    ComparisonRow row;
    row.log_x = log_x;
    row.omega = minimize_f(region, log_x).omega;
    for (std::size_t k = 0; k < kComparisonColumnCount; ++k) {
      row.log_bounds[k] = evaluate(kComparisonColumns[k], row.omega, log_x, est, eps);
    }
    if (measured != nullptr && log_x < 64.0 * std::numbers::ln2) {
      const double x = std::round(std::exp(log_x));
      if (x >= 2.0 && x <= static_cast<double>(measured->limit)) {
        const auto xi = static_cast<std::uint64_t>(x);
        if (measured->checkpoints.count(xi) != 0) row.delta3_measured = deltas(*measured, xi).d3;
      }
    }
    table.rows.push_back(row);
  }

  for (std::size_t i = 0; i < kComparisonColumnCount; ++i) {
    for (std::size_t j = i + 1; j < kComparisonColumnCount; ++j) {
      for (std::size_t r = 1; r < table.rows.size(); ++r) {
        const auto& prev = table.rows[r - 1];
        const auto& cur = table.rows[r];
        if (!prev.log_bounds[i] || !prev.log_bounds[j] || !cur.log_bounds[i] ||
            !cur.log_bounds[j]) {
          continue;
        }
        const double d0 = *prev.log_bounds[i] - *prev.log_bounds[j];
        const double d1 = *cur.log_bounds[i] - *cur.log_bounds[j];
        // Curves that agree up to rounding (th1 with Jutila against
        // cor_logfree) must not register sign flips of the noise.
        auto negligible = [](double d, double a, double b) {
          return std::abs(d) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
        };
        if (negligible(d0, *prev.log_bounds[i], *prev.log_bounds[j]) ||
            negligible(d1, *cur.log_bounds[i], *cur.log_bounds[j]) || (d0 > 0.0) == (d1 > 0.0)) {
          continue;
        }

        auto diff = [&](double lx) -> std::optional<double> {
          const auto a = bound_at(kComparisonColumns[i], region, est, lx, eps);
          const auto b = bound_at(kComparisonColumns[j], region, est, lx, eps);
          if (!a || !b) return std::nullopt;
          return *a - *b;
        };
        double lo = prev.log_x;
        double hi = cur.log_x;
        const bool lo_positive = d0 > 0.0;
        for (int iter = 0; iter < 200 && hi - lo > 1e-6; ++iter) {
          const double mid = 0.5 * (lo + hi);
          const auto dm = diff(mid);
          if (!dm) break;
          if ((*dm > 0.0) == lo_positive) {
            lo = mid;
          } else {
            hi = mid;
          }
        }
        table.crossovers.push_back({kComparisonColumns[i], kComparisonColumns[j], 0.5 * (lo + hi)});
        break;
      }
    }
  }
  return table;
}

}  // namespace pntlab
