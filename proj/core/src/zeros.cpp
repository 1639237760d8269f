#include "pntlab/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string_view>

#include "pntlab/compensated.hpp"
#include "pntlab/errors.hpp"

namespace pntlab {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t,", pos);
    if (start == std::string_view::npos) break;
    auto end = s.find_first_of(" \t,", start);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    pos = end;
  }
  return out;
}

double parse_number(std::string_view token, std::size_t line) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ParseError("cannot parse '" + std::string(token) + "' as a decimal number", line);
  }
  return value;
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

ZeroSet parse_impl(std::istream& in, bool allow_two_columns) {
  std::vector<Zero> entries;
  std::vector<std::string> text;
  int columns = 0;
  double declared_gamma_max = -1.0;
  std::size_t line_no = 0;
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view kDirective = "gamma_max:";
      const std::string_view body = trim(line.substr(1));
      if (allow_two_columns && body.starts_with(kDirective)) {
        declared_gamma_max = parse_number(trim(body.substr(kDirective.size())), line_no);
      }
      continue;
    }
    const auto fields = split_fields(line);
    const int n = static_cast<int>(fields.size());
    if (n != 1 && !(allow_two_columns && n == 2)) {
      throw ParseError(allow_two_columns ? "expected 'gamma' or 'beta gamma'"
                                         : "expected one ordinate per line",
                       line_no);
    }
    if (columns == 0) {
      columns = n;
    } else if (columns != n) {
      throw ParseError("column count changes mid-file", line_no);
    }
    Zero z;
    z.gamma = parse_number(fields.back(), line_no);
    if (n == 2) {
      z.beta = parse_number(fields.front(), line_no);
      if (!(z.beta > 0.0 && z.beta < 1.0)) throw ParseError("beta must lie in (0, 1)", line_no);
    }
    if (!(z.gamma > 0.0)) throw ParseError("ordinates must be positive", line_no);
    if (!entries.empty() && z.gamma < entries.back().gamma) {
      throw MonotonicityError("ordinates must be ascending", line_no);
    }
    entries.push_back(z);
    if (n == 1) text.emplace_back(fields.front());
  }
  if (in.bad()) throw IoError("read failure");

  if (columns == 2) {
    const double top = entries.empty() ? 0.0 : entries.back().gamma;
    const double gmax = declared_gamma_max >= 0.0 ? declared_gamma_max : top;
    if (gmax < top) throw ParseError("gamma_max directive below the last ordinate", line_no);
    return ZeroSet(std::move(entries), ZeroSource::Synthetic, gmax);
  }
  const double gmax = entries.empty() ? 0.0 : entries.back().gamma;
  return ZeroSet(std::move(entries), ZeroSource::RealTable, gmax, std::move(text));
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open zero table '" + path.string() + "'");
  return in;
}

// Uniform double in [0, 1) from the top 53 bits; stable across standard
// libraries, unlike std::uniform_real_distribution.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::string to_string(ZeroSource source) {
  return source == ZeroSource::RealTable ? "real-table" : "synthetic";
}

ZeroSet::ZeroSet(std::vector<Zero> entries, ZeroSource source, double gamma_max,
                 std::vector<std::string> ordinate_text)
    : entries_(std::move(entries)),
      source_(source),
      gamma_max_(gamma_max),
      ordinate_text_(std::move(ordinate_text)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!(entries_[i].gamma > 0.0)) throw ParameterError("zero ordinates must be positive");
    if (!(entries_[i].beta > 0.0 && entries_[i].beta < 1.0)) {
      throw ParameterError("zero real parts must lie in (0, 1)");
    }
    if (i > 0 && entries_[i].gamma < entries_[i - 1].gamma) {
      throw ParameterError("zero set entries must be sorted by ordinate");
    }
  }
  if (!ordinate_text_.empty() && ordinate_text_.size() != entries_.size()) {
    throw ParameterError("ordinate text does not match the entries");
  }
}

ZeroSet parse_ordinates(std::istream& in) { return parse_impl(in, false); }

ZeroSet load_ordinates(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_ordinates(in);
}

ZeroSet parse_zero_set(std::istream& in) { return parse_impl(in, true); }

ZeroSet load_zero_set(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_zero_set(in);
}

void write_zero_set(const ZeroSet& zs, std::ostream& out) {
  const bool critical_line = std::all_of(zs.entries().begin(), zs.entries().end(),
                                         [](const Zero& z) { return z.beta == 0.5; });
  if (zs.source() == ZeroSource::RealTable && critical_line) {
    const auto& text = zs.ordinate_text();
    for (std::size_t i = 0; i < zs.size(); ++i) {
      out << (text.empty() ? shortest(zs.entries()[i].gamma) : text[i]) << '\n';
    }
    return;
  }
  out << "# " << to_string(zs.source()) << " zero set: beta gamma\n";
  out << "# gamma_max: " << shortest(zs.gamma_max()) << '\n';
  for (const Zero& z : zs.entries()) {
    out << shortest(z.beta) << ' ' << shortest(z.gamma) << '\n';
  }
}

void save_zero_set(const ZeroSet& zs, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  write_zero_set(zs, out);
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

AuditGrid density_audit_grid(const DensityEstimate& est, double t) {
  AuditGrid grid;
  grid.sigmas.reserve(kAuditSigmaCount);
  for (int i = 0; i < kAuditSigmaCount; ++i) {
    grid.sigmas.push_back(est.sigma0 + (1.0 - est.sigma0) * i / (kAuditSigmaCount - 1));
  }
  grid.sigmas.back() = 1.0;
  const double lo = std::log(4.0);
  const double hi = std::log(std::max(t, 4.0));
  grid.heights.reserve(kAuditHeightCount);
  for (int j = 0; j < kAuditHeightCount; ++j) {
    grid.heights.push_back(std::exp(lo + (hi - lo) * j / (kAuditHeightCount - 1)));
  }
  grid.heights.back() = std::max(t, 4.0);
  return grid;
}

SynthesisResult synthesize_zero_set(const ZeroFreeRegion& region, const DensityEstimate& est,
                                    double t, std::uint64_t seed,
                                    const SynthesisOptions& options) {
  est.validate();
  if (!(t > region.t_min())) {
    std::ostringstream msg;
    msg << "synthesis height T = " << t << " must exceed the region's t_min = " << region.t_min();
    throw DomainError(msg.str());
  }

  SynthesisResult result;
  const double lo_t = std::max(3.0, region.t_min());
  if (!(1.0 - region.eta(t) > est.sigma0)) {
    result.feasible = false;
    result.warning = "zero-free region leaves no room above sigma0 below T; empty set returned";
    result.zeros = ZeroSet({}, ZeroSource::Synthetic, t);
    return result;
  }

  // First height where 1 - eta(gamma) > sigma0; eta is decreasing, so bisect.
  double a = std::log(lo_t);
  double b = std::log(t);
  if (!(1.0 - region.eta_at_log(a) > est.sigma0)) {
    for (int i = 0; i < 200; ++i) {
      const double mid = a + 0.5 * (b - a);
      if (mid <= a || mid >= b) break;
      if (1.0 - region.eta_at_log(mid) > est.sigma0) {
        b = mid;
      } else {
        a = mid;
      }
    }
    a = b;
  }
  const double log_lo = a;
  const double log_hi = std::log(t);

  const AuditGrid grid = density_audit_grid(est, t);
  const std::size_t ns = grid.sigmas.size();
  const std::size_t nh = grid.heights.size();
  std::vector<double> log_cap(ns * nh);
  for (std::size_t i = 0; i < ns; ++i) {
    for (std::size_t j = 0; j < nh; ++j) {
      log_cap[i * nh + j] = log_density_bound(est, grid.sigmas[i], std::log(grid.heights[j]));
    }
  }
  std::vector<std::int64_t> counts(ns * nh, 0);

  std::mt19937_64 rng(seed);
  std::vector<Zero> accepted;
  for (int draw = 0; draw < options.draws; ++draw) {
    const double u = log_lo + (log_hi - log_lo) * uniform01(rng);
    const double gamma = std::exp(u);
    const double v = uniform01(rng);
    if (!(gamma > lo_t && gamma < t)) {
      ++result.rejected;
      continue;
    }
    const double top = 1.0 - region.eta(gamma);
    if (!(top > est.sigma0)) {
      ++result.rejected;
      continue;
    }
    // beta in (sigma0, top]
    const double beta = top - v * (top - est.sigma0);
    bool ok = beta > est.sigma0 && beta < 1.0;
    for (std::size_t i = 0; ok && i < ns; ++i) {
      if (!(grid.sigmas[i] < beta)) continue;
      for (std::size_t j = 0; j < nh; ++j) {
        if (!(gamma < grid.heights[j])) continue;
        const auto k = i * nh + j;
        if (std::log(static_cast<double>(counts[k] + 1)) > log_cap[k]) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      ++result.rejected;
      continue;
    }
    for (std::size_t i = 0; i < ns; ++i) {
      if (!(grid.sigmas[i] < beta)) continue;
      for (std::size_t j = 0; j < nh; ++j) {
        if (gamma < grid.heights[j]) ++counts[i * nh + j];
      }
    }
    accepted.push_back({beta, gamma});
    ++result.accepted;
  }
  std::sort(accepted.begin(), accepted.end(),
            [](const Zero& l, const Zero& r) { return l.gamma < r.gamma; });
  result.zeros = ZeroSet(std::move(accepted), ZeroSource::Synthetic, t);
  return result;
}

double region_excess(const ZeroSet& zs, const ZeroFreeRegion& region) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const Zero& z : zs.entries()) {
    if (z.gamma < region.t_min()) continue;
    worst = std::max(worst, z.beta - (1.0 - region.eta(z.gamma)));
  }
  return worst;
}

bool density_respected(const ZeroSet& zs, const DensityEstimate& est, const AuditGrid& grid) {
  for (double sigma : grid.sigmas) {
    for (double height : grid.heights) {
      const auto n = empirical_count(zs, sigma, height);
      if (n == 0) continue;
      if (std::log(static_cast<double>(n)) > log_density_bound(est, sigma, std::log(height))) {
        return false;
      }
    }
  }
  return true;
}

double reciprocal_gamma_sum(const ZeroSet& zs, double t) {
  if (t > zs.gamma_max()) {
    std::ostringstream msg;
    msg << "T = " << t << " exceeds the zero set's coverage gamma_max = " << zs.gamma_max();
    throw CoverageError(msg.str());
  }
  CompensatedSum sum;
  for (const Zero& z : zs.entries()) {
    if (z.gamma > t) break;
    if (z.gamma > 1.0) sum += 2.0 / z.gamma;
  }
  return sum.value();
}

}  // namespace pntlab
