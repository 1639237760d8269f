#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "pntlab/density.hpp"
#include "pntlab/regions.hpp"

namespace pntlab {

// A nontrivial zero beta + i gamma with gamma > 0. Conjugates are implied.
struct Zero {
  double beta = 0.5;
  double gamma = 0.0;

  friend bool operator==(const Zero&, const Zero&) = default;
};

enum class ZeroSource { RealTable, Synthetic };

std::string to_string(ZeroSource source);

/// Finite set of zeros sorted by ascending ordinate.
///
/// gamma_max is the height up to which the set claims to be complete: the
/// last ordinate for a table, the generation height for a synthetic set.
/// Sums over |Im rho| <= T are refused beyond it.
class ZeroSet {
 public:
  ZeroSet() = default;
  // Throws ParameterError if entries are unsorted or an ordinate is <= 0.
  ZeroSet(std::vector<Zero> entries, ZeroSource source, double gamma_max,
          std::vector<std::string> ordinate_text = {});

  const std::vector<Zero>& entries() const { return entries_; }
  ZeroSource source() const { return source_; }
  double gamma_max() const { return gamma_max_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Decimal text of each ordinate as read from disk; empty for generated sets.
  const std::vector<std::string>& ordinate_text() const { return ordinate_text_; }

 private:
  std::vector<Zero> entries_;
  ZeroSource source_ = ZeroSource::RealTable;
  double gamma_max_ = 0.0;
  std::vector<std::string> ordinate_text_;
};

/// Reads a table of ordinates: one decimal number per line, ascending, with
/// '#' comment lines and blank lines ignored. Every zero gets beta = 1/2.
/// Throws ParseError / MonotonicityError with the offending line number.
ZeroSet parse_ordinates(std::istream& in);
ZeroSet load_ordinates(const std::filesystem::path& path);

/// Like parse_ordinates, but also accepts two-column "beta gamma" lines,
/// which produce a Synthetic set. A "# gamma_max: <v>" comment sets the
/// coverage height of a two-column file (default: its last ordinate).
ZeroSet parse_zero_set(std::istream& in);
ZeroSet load_zero_set(const std::filesystem::path& path);

/// Writes a set in the format read by parse_zero_set. Critical-line tables
/// are written one ordinate per line using the original decimal text.
void write_zero_set(const ZeroSet& zs, std::ostream& out);
void save_zero_set(const ZeroSet& zs, const std::filesystem::path& path);

// The fixed (sigma, T) grid on which generated sets are audited against the
// unit-constant density bound: 50 sigmas evenly spaced over [sigma0, 1] and
// 20 heights log-spaced over [4, T].
struct AuditGrid {
  std::vector<double> sigmas;
  std::vector<double> heights;
};

inline constexpr int kAuditSigmaCount = 50;
inline constexpr int kAuditHeightCount = 20;

AuditGrid density_audit_grid(const DensityEstimate& est, double t);

struct SynthesisOptions {
  int draws = 1024;
};

struct SynthesisResult {
  ZeroSet zeros;
  bool feasible = true;
  std::string warning;  // set when the region leaves no room above sigma0
  int accepted = 0;
  int rejected = 0;
};

/// Rejection-samples a hypothetical zero set below height T that respects
/// both the zero-free region (beta <= 1 - eta(gamma)) and the unit-constant
/// density bound on the audit grid. Deterministic in `seed`.
SynthesisResult synthesize_zero_set(const ZeroFreeRegion& region, const DensityEstimate& est,
                                    double t, std::uint64_t seed,
                                    const SynthesisOptions& options = {});

/// max over entries with gamma >= t_min of beta - (1 - eta(gamma)); a
/// region-compliant set gives a value <= 0. Returns -inf for an empty set.
double region_excess(const ZeroSet& zs, const ZeroFreeRegion& region);

/// True iff empirical_count <= exp(log_density_bound) on every grid cell.
bool density_respected(const ZeroSet& zs, const DensityEstimate& est, const AuditGrid& grid);

/// sum over 1 < gamma <= T of 2 / gamma (the factor 2 accounts for
/// conjugates). Throws CoverageError if T > gamma_max.
double reciprocal_gamma_sum(const ZeroSet& zs, double t);

}  // namespace pntlab
