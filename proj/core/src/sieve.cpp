#include "pntlab/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <future>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "pntlab/compensated.hpp"
#include "pntlab/errors.hpp"

namespace pntlab {
namespace {

std::vector<std::uint32_t> small_primes(std::uint64_t n) {
  std::vector<char> composite(n + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = 1;
  }
  return primes;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Marks composites in [lo, hi); entry i corresponds to lo + i.
std::vector<char> sieve_segment(std::uint64_t lo, std::uint64_t hi,
                                const std::vector<std::uint32_t>& base) {
  std::vector<char> is_prime(hi - lo, 1);
  for (std::uint64_t n = lo; n < std::min<std::uint64_t>(hi, 2); ++n) is_prime[n - lo] = 0;
  for (std::uint32_t p : base) {
    const std::uint64_t pp = std::uint64_t{p} * p;
    if (pp >= hi) break;
    std::uint64_t start = std::max(pp, ((lo + p - 1) / p) * p);
    for (std::uint64_t m = start; m < hi; m += p) is_prime[m - lo] = 0;
  }
  return is_prime;
}

struct PrimePower {
  std::uint64_t value;
  double log_p;
};

}  // namespace

const PrimeCounts& PrimeTables::at(std::uint64_t x) const {
  const auto it = checkpoints.find(x);
  if (it == checkpoints.end()) {
    std::ostringstream msg;
    msg << "x = " << x << " is not a checkpoint of these tables";
    throw DomainError(msg.str());
  }
  return it->second;
}

PrimeTables build_tables(std::uint64_t limit, std::vector<std::uint64_t> checkpoints,
                         const SieveOptions& options) {
  if (limit > kSieveLimitCap) {
    std::ostringstream msg;
    msg << "sieve limit " << limit << " exceeds the cap " << kSieveLimitCap;
    throw LimitError(msg.str());
  }
  std::sort(checkpoints.begin(), checkpoints.end());
  checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());
  for (auto x : checkpoints) {
    if (x > limit) {
      std::ostringstream msg;
      msg << "checkpoint " << x << " exceeds the sieve limit " << limit;
      throw DomainError(msg.str());
    }
  }

  PrimeTables tables;
  tables.limit = limit;
  if (checkpoints.empty()) return tables;

  const std::uint64_t top = checkpoints.back();
  const auto base = small_primes(isqrt(top));

  // Prime powers p^k, k >= 2, up to `top`, in ascending order.
  std::vector<PrimePower> powers;
  for (std::uint32_t p : base) {
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t q = std::uint64_t{p} * p; q <= top; ) {
      powers.push_back({q, lp});
      if (q > top / p) break;
      q *= p;
    }
  }
  std::sort(powers.begin(), powers.end(),
            [](const PrimePower& l, const PrimePower& r) { return l.value < r.value; });

  CompensatedSum theta;
  CompensatedSum surplus;  // psi - theta
  std::int64_t pi = 0;
  std::size_t next_power = 0;
  std::size_t next_checkpoint = 0;

  // Record every checkpoint strictly below `n` (all numbers < n processed).
  auto flush_below = [&](std::uint64_t n) {
    while (next_checkpoint < checkpoints.size() && checkpoints[next_checkpoint] < n) {
      const std::uint64_t x = checkpoints[next_checkpoint];
      while (next_power < powers.size() && powers[next_power].value <= x) {
        surplus += powers[next_power].log_p;
        ++next_power;
      }
      CompensatedSum psi = theta;
      psi += surplus;
      tables.checkpoints[x] = {psi.value(), theta.value(), pi};
      ++next_checkpoint;
    }
  };

  std::uint64_t segment = std::max<std::uint64_t>(2, options.segment_size);
  segment += segment % 2;
  const std::uint64_t end = top + 1;
  const unsigned workers = std::max(1u, options.workers);

  std::deque<std::future<std::vector<char>>> pending;
  std::uint64_t scheduled = 0;
  auto schedule = [&]() {
    const std::uint64_t lo = scheduled;
    const std::uint64_t hi = std::min(end, lo + segment);
    scheduled = hi;
    if (workers > 1) {
      pending.push_back(std::async(std::launch::async, sieve_segment, lo, hi, std::cref(base)));
    } else {
      std::promise<std::vector<char>> ready;
      ready.set_value(sieve_segment(lo, hi, base));
      pending.push_back(ready.get_future());
    }
  };

  for (std::uint64_t lo = 0; lo < end; lo += segment) {
    while (scheduled < end && pending.size() < workers) schedule();
    const auto marks = pending.front().get();
    pending.pop_front();
    for (std::size_t i = 0; i < marks.size(); ++i) {
      if (!marks[i]) continue;
      const std::uint64_t p = lo + i;
      flush_below(p);
      theta += std::log(static_cast<double>(p));
      ++pi;
    }
  }
  flush_below(end);
  return tables;
}

double li(double x) {
  if (!(x >= 2.0) || !std::isfinite(x)) {
    std::ostringstream msg;
    msg << "li(x) needs x >= 2, got " << x;
    throw DomainError(msg.str());
  }
  if (x == 2.0) return 0.0;
  // dt / log t with t = e^s becomes e^s / s ds on [log 2, log x].
  auto integrand = [](double s) { return std::exp(s) / s; };
  // Unit-width panels in s keep the integrand's dynamic range per panel
  // small; each panel is then adaptive to near machine precision.
  const double a = std::log(2.0);
  const double b = std::log(x);
  CompensatedSum total;
  for (double lo = a; lo < b; lo += 1.0) {
    const double hi = std::min(b, lo + 1.0);
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, lo, hi, 8,
                                                                            1e-14);
  }
  return total.value();
}

Deltas deltas(const PrimeTables& tables, std::uint64_t x) {
  const PrimeCounts& c = tables.at(x);
  const double xd = static_cast<double>(x);
  Deltas d;
  d.d1 = x >= 2 ? std::abs(static_cast<double>(c.pi) - li(xd)) * std::log(xd) / xd : 0.0;
  d.d2 = std::abs(c.theta - xd) / xd;
  d.d3 = std::abs(c.psi - xd) / xd;
  return d;
}

std::vector<std::uint64_t> log_spaced_checkpoints(std::uint64_t limit, int k) {
  if (limit < 2 || k < 1) throw DomainError("log-spaced checkpoints need limit >= 2 and k >= 1");
  std::vector<std::uint64_t> out;
  const double lo = std::log(2.0);
  const double hi = std::log(static_cast<double>(limit));
  for (int i = 0; i < k; ++i) {
    const double frac = k == 1 ? 1.0 : static_cast<double>(i) / (k - 1);
    auto v = static_cast<std::uint64_t>(std::llround(std::exp(lo + (hi - lo) * frac)));
    out.push_back(std::clamp<std::uint64_t>(v, 2, limit));
  }
  out.back() = limit;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pntlab
