#include "pntlab/explicit_formula.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <sstream>

#include "pntlab/compensated.hpp"
#include "pntlab/errors.hpp"

namespace pntlab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_coverage(const ZeroSet& zs, double t) {
  if (t > zs.gamma_max()) {
    std::ostringstream msg;
    msg << "T = " << t << " exceeds the zero set's coverage gamma_max = " << zs.gamma_max();
    throw CoverageError(msg.str());
  }
}

std::size_t count_up_to(const ZeroSet& zs, double t) {
  const auto& e = zs.entries();
  return static_cast<std::size_t>(
      std::upper_bound(e.begin(), e.end(), t,
                       [](double bound, const Zero& z) { return bound < z.gamma; }) -
      e.begin());
}

CompensatedSum chunk_sum(const std::vector<Zero>& entries, std::size_t begin, std::size_t end,
                         double x, double log_x) {
  CompensatedSum sum;
  for (std::size_t i = begin; i < end; ++i) {
    const Zero& z = entries[i];
    const double angle = z.gamma * log_x;
    const double magnitude = std::pow(x, z.beta);
    const double denom = z.beta * z.beta + z.gamma * z.gamma;
    sum += 2.0 * magnitude * (z.beta * std::cos(angle) + z.gamma * std::sin(angle)) / denom;
  }
  return sum;
}

// x^{beta - 1} * 2 / gamma, computed in log space to survive large log x.
double split_term(const Zero& z, double log_x) {
  return 2.0 * std::exp((z.beta - 1.0) * log_x - std::log(z.gamma));
}

}  // namespace

double zero_sum(double x, const ZeroSet& zs, double t, const ZeroSumOptions& options) {
  const std::size_t n = count_up_to(zs, t);
  const double log_x = std::log(x);
  const auto& entries = zs.entries();
  const std::size_t chunk = std::max<std::size_t>(1, options.chunk_size);
  const std::size_t chunks = (n + chunk - 1) / chunk;

  std::vector<CompensatedSum> partials(chunks);
  auto run = [&](std::size_t first_chunk, std::size_t stride) {
    for (std::size_t k = first_chunk; k < chunks; k += stride) {
      partials[k] = chunk_sum(entries, k * chunk, std::min(n, (k + 1) * chunk), x, log_x);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, chunks));
  if (workers <= 1) {
    run(0, 1);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) jobs.push_back(std::async(std::launch::async, run, w, workers));
    for (auto& job : jobs) job.get();
  }

  CompensatedSum total;
  for (const auto& p : partials) total += p;
  return total.value();
}

double truncated_psi(double x, const ZeroSet& zs, double t, const ZeroSumOptions& options) {
  if (!(x >= 2.0) || !std::isfinite(x)) throw DomainError("truncated_psi needs x >= 2");
  if (x == std::floor(x)) {
    throw DomainError("truncated_psi is evaluated off the jumps of psi; use a half-integer x");
  }
  require_coverage(zs, t);
  const double sum = zero_sum(x, zs, t, options);
  const double tail = 0.5 * std::log1p(-1.0 / (x * x));
  return x - sum - std::log(2.0 * std::numbers::pi) - tail;
}

Residual residual(double x, const ZeroSet& zs, double t, double psi_true,
                  const ZeroSumOptions& options) {
  Residual r;
  r.truncated = truncated_psi(x, zs, t, options);
  r.residual = std::abs(psi_true - r.truncated);
  const double log_x = std::log(x);
  r.envelope = x * log_x * log_x / t;
  return r;
}

double unsplit_sum(double log_x, const ZeroSet& zs, double t) {
  require_coverage(zs, t);
  CompensatedSum sum;
  for (const Zero& z : zs.entries()) {
    if (z.gamma > t) break;
    if (z.gamma > 1.0) sum += split_term(z, log_x);
  }
  return sum.value();
}

SplitSums split_sums(double log_x, const ZeroSet& zs, const ZeroFreeRegion& region,
                     const DensityEstimate& est) {
  est.validate();
  SplitSums out;
  out.log_x = log_x;
  out.omega = minimize_f(region, log_x);
  if (!out.omega.conditions.all()) {
    std::ostringstream msg;
    msg << "growth conditions fail at log x = " << log_x << " (omega = " << out.omega.omega
        << ", omega >= 2 log log x: " << out.omega.conditions.omega_ge_2loglogx
        << ", omega / log x <= " << kSmallVsLogXThreshold << ": "
        << out.omega.conditions.omega_small_vs_logx << ")";
    throw ConditionError(msg.str());
  }
  out.log_t = 2.0 * out.omega.omega;
  out.t = std::exp(out.log_t);
  require_coverage(zs, out.t);

  out.sigma1 = sigma1(est.a, est.sigma0);
  out.sigma2 = 1.0 - out.omega.omega / log_x;
  out.strips_collapsed = out.sigma2 <= out.sigma1;
  const double top_floor = std::max(out.sigma1, out.sigma2);

  CompensatedSum s1, s2, s3, total;
  for (const Zero& z : zs.entries()) {
    if (z.gamma > out.t) break;
    if (!(z.gamma > 1.0)) continue;
    const double term = split_term(z, log_x);
    total += term;
    if (z.beta <= out.sigma1) {
      s1 += term;
      ++out.count1;
    } else if (z.beta <= out.sigma2) {
      s2 += term;
      ++out.count2;
    } else if (z.beta > top_floor && z.beta < 1.0) {
      s3 += term;
      ++out.count3;
    }
  }
  out.s1 = s1.value();
  out.s2 = s2.value();
  out.s3 = s3.value();
  out.total = total.value();
  out.chain_ok = check_s3_chain(out, zs, region, est).ok;
  return out;
}

ChainReport check_s3_chain(const SplitSums& split, const ZeroSet& zs, const ZeroFreeRegion& region,
                           const DensityEstimate& /*est*/) {
  ChainReport report;
  report.termwise_ok = true;
  report.termwise_slack = kInf;
  const double log_x = split.log_x;
  const double omega = split.omega.omega;
  const double top_floor = std::max(split.sigma1, split.sigma2);
  const auto tol = [](double v) { return kChainTolerance * std::max(1.0, std::abs(v)); };

  const auto& entries = zs.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Zero& z = entries[i];
    if (z.gamma > split.t) break;
    if (!(z.gamma > 1.0) || !(z.beta > top_floor && z.beta < 1.0)) continue;

    const double log_term = (z.beta - 1.0) * log_x - std::log(z.gamma);
    double region_cap = std::numeric_limits<double>::quiet_NaN();
    bool ok = true;
    if (z.gamma >= region.t_min()) {
      region_cap = -(region.eta(z.gamma) * log_x + std::log(z.gamma));
      ok = log_term <= region_cap + tol(region_cap) && region_cap <= -omega + tol(omega);
    } else {
      // Below the region's domain the only claim left is the final bound.
      ok = log_term <= -omega + tol(omega);
    }
    report.termwise_slack = std::min(report.termwise_slack, -omega - log_term);
    if (!ok) {
      report.termwise_ok = false;
      report.violators.push_back({i, z, log_term, region_cap});
    }
  }

  report.strip_count =
      empirical_count(zs, split.sigma2, std::nextafter(split.t, kInf));
  if (split.s3 > 0.0) {
    const double cap = std::log(2.0 * static_cast<double>(report.strip_count)) - omega;
    const double have = std::log(split.s3);
    report.aggregate_slack = cap - have;
    report.aggregate_ok = have <= cap + tol(cap);
  } else {
    report.aggregate_slack = kInf;
    report.aggregate_ok = true;
  }
  report.ok = report.termwise_ok && report.aggregate_ok;
  return report;
}

}  // namespace pntlab
