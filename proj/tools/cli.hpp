#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pntlab::cli {

enum class OutputFormat { Csv, Json, Svg };

// Everything needed to replay a run. Echoed into the metadata sidecar.
struct RunConfig {
  std::string subcommand;
  std::string zeros_action;  // "load" or "synth" for the zeros subcommand
  std::string region = "classical:1";
  std::string density = "jutila";
  std::string logx;        // value, list or grid spec
  std::string checkpoints = "logspaced:10";
  std::string t_spec;      // value, list or grid spec
  std::string zeros_path;
  std::string out_path;
  std::string svg_path;
  OutputFormat format = OutputFormat::Csv;
  double x = 0.0;
  double eps = 0.01;
  std::uint64_t limit = 0;
  std::uint64_t sieve_limit = 0;
  std::uint64_t segment_size = std::uint64_t{1} << 18;
  std::optional<std::uint64_t> seed;
  int draws = 1024;
  unsigned threads = 1;
  bool plant_violator = false;
};

/// Expands "v", "v1,v2,..." or "start:stop:count:log|lin" into values.
std::vector<double> parse_grid(const std::string& spec);

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex digits.
std::string file_fingerprint(const std::string& path);

/// Runs the command line `args` (program name excluded). Primary output goes
/// to `out` unless --out is given; diagnostics go to `err`.
/// Exit codes: 0 success, 1 usage / validation / domain errors, 2 I/O errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pntlab::cli
