#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pntlab/density.hpp"
#include "pntlab/regions.hpp"
#include "pntlab/sieve.hpp"

namespace pntlab {

enum class BoundKind {
  Theorem1,
  CorLogFree,
  CorVK,
  CorVKSimplified,
  Pintz,
  Ingham,
  SchoenfeldRH,
};

std::string to_string(BoundKind kind);

/// A bound magnitude held as its natural logarithm. All bounds use a unit
/// implied constant.
struct LogBound {
  double log_value = 0.0;
  BoundKind kind = BoundKind::Theorem1;
  double eps = 0.0;  // Pintz / Ingham only
  double log_x = 0.0;
  double omega = 0.0;
  std::optional<DensityEstimate> estimate;  // Theorem1 only

  std::string label() const;  // e.g. "pintz(eps=0.01)"
};

/// -omega + 2 A omega (omega / log x)^B + C log omega. Throws DomainError for
/// omega <= 1 or log x <= 0.
LogBound log_bound_theorem1(double omega, double log_x, const DensityEstimate& est);

/// CorLogFree:      -omega + 5 omega^2 / log x
/// CorVK:           -omega + 117 omega^{5/2} / (log x)^{3/2} + 15 log omega
/// CorVKSimplified: -omega + 9 log log x - 3 log log log x  (needs log log x > 1)
LogBound log_bound_corollary(double omega, double log_x, BoundKind which);

/// Ingham: -(1/2 - eps) omega, eps in (0, 1/2)
/// Pintz:  -(1 - eps) omega,   eps in (0, 1)
/// SchoenfeldRH: 2 log log x - log(8 pi) - (log x) / 2   (omega unused)
LogBound log_bound_baseline(double omega, double log_x, BoundKind which, double eps);

/// exp(log_value) as text, clamped to "<1e-300" on underflow.
std::string format_magnitude(double log_value);

inline constexpr double kDefaultBaselineEps = 0.01;

// Column order of the comparison table.
inline constexpr BoundKind kComparisonColumns[] = {
    BoundKind::Theorem1,    BoundKind::CorLogFree, BoundKind::CorVK,
    BoundKind::CorVKSimplified, BoundKind::Pintz,  BoundKind::Ingham,
    BoundKind::SchoenfeldRH,
};
inline constexpr std::size_t kComparisonColumnCount = std::size(kComparisonColumns);

struct ComparisonRow {
  double log_x = 0.0;
  double omega = 0.0;
  // Indexed like kComparisonColumns; empty where the formula's domain
  // excludes this point.
  std::optional<double> log_bounds[kComparisonColumnCount];
  std::optional<double> delta3_measured;
};

struct Crossover {
  BoundKind first;
  BoundKind second;
  double log_x = 0.0;  // first grid-bracketed sign change of the difference
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
  std::vector<Crossover> crossovers;
};

/// Evaluates every bound along the grid with omega from minimize_f, adds the
/// measured Delta_3 where `measured` has a checkpoint at round(exp(log x)),
/// and locates the first crossover of each pair of curves by bisection to
/// 1e-6 in log x.
ComparisonTable comparison_table(const ZeroFreeRegion& region, const DensityEstimate& est,
                                 const std::vector<double>& log_x_grid,
                                 double eps = kDefaultBaselineEps,
                                 const PrimeTables* measured = nullptr);

/// log_value of `kind` at log x, with omega from minimize_f. Empty outside
/// the formula's domain.
std::optional<double> bound_at(BoundKind kind, const ZeroFreeRegion& region,
                               const DensityEstimate& est, double log_x, double eps);

}  // namespace pntlab
