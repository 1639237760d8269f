#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace pntlab {

struct PrimeCounts {
  double psi = 0.0;    // sum over p^k <= x of log p
  double theta = 0.0;  // sum over p <= x of log p
  std::int64_t pi = 0;
};

struct PrimeTables {
  std::uint64_t limit = 0;
  std::map<std::uint64_t, PrimeCounts> checkpoints;

  // Throws DomainError if x is not a checkpoint.
  const PrimeCounts& at(std::uint64_t x) const;
};

inline constexpr std::uint64_t kSieveLimitCap = 10'000'000'000ULL;

struct SieveOptions {
  // Numbers per sieve segment; rounded up to an even count.
  std::uint64_t segment_size = std::uint64_t{1} << 18;
  // Segments sieved ahead of the accumulator on worker threads. The
  // accumulation itself is a single ascending pass, so the tables do not
  // depend on either setting.
  unsigned workers = 1;
};

/// Segmented sieve of Eratosthenes up to `limit`, recording psi, theta and
/// pi at every checkpoint (values above `limit` are rejected). Logs are
/// accumulated with compensated summation in ascending order.
/// Throws LimitError above 1e10 and DomainError for bad checkpoints.
PrimeTables build_tables(std::uint64_t limit, std::vector<std::uint64_t> checkpoints,
                         const SieveOptions& options = {});

/// li(x) = integral from 2 to x of dt / log t (lower limit 2, not the
/// principal value). Adaptive Gauss-Kronrod quadrature in s = log t.
/// Throws DomainError for x < 2.
double li(double x);

struct Deltas {
  double d1 = 0.0;  // |pi - li| log x / x
  double d2 = 0.0;  // |theta - x| / x
  double d3 = 0.0;  // |psi - x| / x
};

Deltas deltas(const PrimeTables& tables, std::uint64_t x);

/// k log-spaced integers in [2, limit] (deduplicated, ascending, limit
/// included).
std::vector<std::uint64_t> log_spaced_checkpoints(std::uint64_t limit, int k);

}  // namespace pntlab
