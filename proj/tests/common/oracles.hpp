#pragma once

// Independent reference implementations used as test oracles. Nothing here
// shares code with the library.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace oracle {

inline std::string data_path(const std::string& name) {
  return std::string(PNTLAB_DATA_DIR) + "/" + name;
}

inline std::string zero_table() { return data_path("zeros_100k.txt"); }

// Plain (unsegmented) sieve of Eratosthenes.
inline std::vector<bool> composite_flags(std::uint64_t n) {
  std::vector<bool> comp(n + 1, false);
  comp[0] = true;
  if (n >= 1) comp[1] = true;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (comp[p]) continue;
    for (std::uint64_t m = p * p; m <= n; m += p) comp[m] = true;
  }
  return comp;
}

inline std::vector<std::uint64_t> primes_upto(std::uint64_t n) {
  const auto comp = composite_flags(n);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!comp[i]) out.push_back(i);
  }
  return out;
}

// Trial division; slow but shares nothing with any sieve.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// psi(x) by walking every prime power, summed in long double.
inline double psi_brute(std::uint64_t x) {
  long double s = 0;
  for (std::uint64_t p : primes_upto(x)) {
    for (std::uint64_t q = p; q <= x; q *= p) {
      s += std::log(static_cast<long double>(p));
      if (q > x / p) break;
    }
  }
  return static_cast<double>(s);
}

inline double theta_brute(std::uint64_t x) {
  long double s = 0;
  for (std::uint64_t p : primes_upto(x)) s += std::log(static_cast<long double>(p));
  return static_cast<double>(s);
}

inline double rel_err(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// li(x) with lower limit 2 from the exponential integral.
inline double li_expint(double x) { return std::expint(std::log(x)) - std::expint(std::log(2.0)); }

// Minimum of f over n + 1 evenly spaced points of [u_lo, u_hi].
template <class F>
double grid_min(F f, double u_lo, double u_hi, int n, double* argmin = nullptr) {
  double best = INFINITY;
  double best_u = u_lo;
  for (int i = 0; i <= n; ++i) {
    const double u = u_lo + (u_hi - u_lo) * i / n;
    const double v = f(u);
    if (v < best) {
      best = v;
      best_u = u;
    }
  }
  if (argmin) *argmin = best_u;
  return best;
}

// Uniform double in [lo, hi] from a fixed-seed engine.
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

}  // namespace oracle
