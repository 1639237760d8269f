#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "pntlab/audit.hpp"
#include "pntlab/bounds.hpp"
#include "pntlab/errors.hpp"
#include "pntlab/explicit_formula.hpp"
#include "pntlab/omega.hpp"
#include "pntlab/presets.hpp"
#include "pntlab/sieve.hpp"
#include "pntlab/zeros.hpp"

#ifndef PNTLAB_VERSION
#define PNTLAB_VERSION "dev"
#endif

namespace pntlab::cli {
namespace {

using nlohmann::json;

constexpr const char* kDefaultZeroTable = "zeros_100k.txt";
constexpr const char* kZerosDirEnv = "PNT_LAB_ZEROS_DIR";

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  return fmt::format("{:.15g}", v);
}

std::string opt_num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

std::string flag(bool b) { return b ? "true" : "false"; }

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Csv:
      return "csv";
    case OutputFormat::Json:
      return "json";
    case OutputFormat::Svg:
      return "svg";
  }
  return "csv";
}

// Resolves the zero table path: explicit path, else the env directory.
std::string resolve_zeros(const std::string& given) {
  const char* dir = std::getenv(kZerosDirEnv);
  if (given.empty()) {
    if (dir == nullptr) {
      throw ParameterError(std::string("no zero table given: pass --zeros or set ") + kZerosDirEnv);
    }
    return (std::filesystem::path(dir) / kDefaultZeroTable).string();
  }
  if (!std::filesystem::exists(given) && dir != nullptr &&
      std::filesystem::path(given).is_relative()) {
    const auto candidate = std::filesystem::path(dir) / given;
    if (std::filesystem::exists(candidate)) return candidate.string();
  }
  return given;
}

json config_json(const RunConfig& c) {
  json j;
  j["subcommand"] = c.subcommand;
  if (!c.zeros_action.empty()) j["zeros_action"] = c.zeros_action;
  j["region"] = c.region;
  j["density"] = c.density;
  if (!c.logx.empty()) j["logx"] = c.logx;
  if (!c.t_spec.empty()) j["T"] = c.t_spec;
  if (!c.zeros_path.empty()) j["zeros"] = c.zeros_path;
  j["format"] = format_name(c.format);
  if (c.x != 0.0) j["x"] = c.x;
  j["eps"] = c.eps;
  if (c.limit != 0) j["limit"] = c.limit;
  if (c.subcommand == "sieve") {
    j["checkpoints"] = c.checkpoints;
    j["segment_size"] = c.segment_size;
  }
  if (c.sieve_limit != 0) j["sieve_limit"] = c.sieve_limit;
  if (c.seed) j["seed"] = *c.seed;
  j["draws"] = c.draws;
  j["threads"] = c.threads;
  j["plant_violator"] = c.plant_violator;
  return j;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write '" + path + "'");
  f << content;
  if (!f) throw IoError("write failure on '" + path + "'");
}

// Primary output plus an optional JSON sidecar next to it.
class Emitter {
 public:
  Emitter(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

  void note(const std::string& text) { notes_.push_back(text); }
  void zero_table(const std::string& path) { zero_table_ = path; }
  void extra(const std::string& key, json value) { extra_[key] = std::move(value); }

  void emit(const std::string& content) {
    if (config_.out_path.empty()) {
      out_ << content;
      return;
    }
    write_text_file(config_.out_path, content);
    json meta;
    meta["tool"] = "pntlab";
    meta["version"] = PNTLAB_VERSION;
    meta["config"] = config_json(config_);
    meta["generated_at"] = utc_timestamp();
    if (!zero_table_.empty()) {
      meta["zero_table"] = {{"path", zero_table_}, {"fnv1a64", file_fingerprint(zero_table_)}};
    }
    meta["notes"] = notes_;
    for (auto& [k, v] : extra_.items()) meta[k] = v;
    write_text_file(config_.out_path + ".meta.json", meta.dump(2) + "\n");
  }

 private:
  const RunConfig& config_;
  std::ostream& out_;
  std::vector<std::string> notes_;
  std::string zero_table_;
  json extra_ = json::object();
};

// --- omega -----------------------------------------------------------------

void cmd_omega(const RunConfig& c, std::ostream& out) {
  const ZeroFreeRegion region = parse_region(c.region);
  const auto grid = parse_grid(c.logx);
  Emitter emit(c, out);
  emit.note("omega(x) = min over t >= max(t_min, 3) of eta(t) log x + log t");
  emit.note("cond2 is the pointwise surrogate omega / log x <= 0.5 for omega = o(log x)");

  std::vector<OmegaResult> results;
  results.reserve(grid.size());
  for (double lx : grid) results.push_back(minimize_f(region, lx));

  if (c.format == OutputFormat::Json) {
    json rows = json::array();
    for (const auto& r : results) {
      rows.push_back({{"log_x", r.log_x},
                      {"omega", r.omega},
                      {"log_t0", r.log_t0},
                      {"cond1", r.conditions.omega_ge_2loglogx},
                      {"cond2", r.conditions.omega_small_vs_logx},
                      {"boundary_flag", r.boundary}});
    }
    emit.emit(json{{"region", region.describe()}, {"rows", rows}}.dump(2) + "\n");
    return;
  }
  std::string csv = "log_x,omega,log_t0,cond1,cond2,boundary_flag\n";
  for (const auto& r : results) {
    csv += fmt::format("{},{},{},{},{},{}\n", num(r.log_x), num(r.omega), num(r.log_t0),
                       flag(r.conditions.omega_ge_2loglogx),
                       flag(r.conditions.omega_small_vs_logx), flag(r.boundary));
  }
  emit.emit(csv);
}

// --- sieve -----------------------------------------------------------------

std::vector<std::uint64_t> parse_checkpoints(const std::string& spec, std::uint64_t limit) {
  constexpr std::string_view kLog = "logspaced:";
  if (spec.rfind(kLog, 0) == 0) {
    const int k = std::stoi(spec.substr(kLog.size()));
    return log_spaced_checkpoints(limit, k);
  }
  std::vector<std::uint64_t> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size() || v < 2 || v != std::floor(v)) {
      throw ParameterError("checkpoint '" + item + "' must be an integer >= 2");
    }
    out.push_back(static_cast<std::uint64_t>(v));
  }
  if (out.empty()) throw ParameterError("no checkpoints given");
  return out;
}

void cmd_sieve(const RunConfig& c, std::ostream& out) {
  if (c.limit < 2) throw ParameterError("--limit must be at least 2");
  const auto cps = parse_checkpoints(c.checkpoints, c.limit);
  SieveOptions opts;
  opts.segment_size = c.segment_size;
  opts.workers = c.threads;
  const PrimeTables tables = build_tables(c.limit, cps, opts);
  Emitter emit(c, out);
  emit.note("li(x) is the integral from 2 to x of dt / log t");

  if (c.format == OutputFormat::Json) {
    json rows = json::array();
    for (const auto& [x, pc] : tables.checkpoints) {
      const Deltas d = deltas(tables, x);
      rows.push_back({{"x", x}, {"pi", pc.pi}, {"theta", pc.theta}, {"psi", pc.psi},
                      {"li", li(static_cast<double>(x))}, {"d1", d.d1}, {"d2", d.d2},
                      {"d3", d.d3}});
    }
    emit.emit(json{{"limit", tables.limit}, {"rows", rows}}.dump(2) + "\n");
    return;
  }
  std::string csv = "x,pi,theta,psi,li,d1,d2,d3\n";
  for (const auto& [x, pc] : tables.checkpoints) {
    const Deltas d = deltas(tables, x);
    csv += fmt::format("{},{},{},{},{},{},{},{}\n", x, pc.pi, num(pc.theta), num(pc.psi),
                       num(li(static_cast<double>(x))), num(d.d1), num(d.d2), num(d.d3));
  }
  emit.emit(csv);
}

// --- zeros -----------------------------------------------------------------

void cmd_zeros_load(const RunConfig& c, std::ostream& out) {
  const std::string path = resolve_zeros(c.zeros_path);
  const ZeroSet zs = load_zero_set(path);
  RunConfig summary_cfg = c;
  summary_cfg.out_path.clear();
  Emitter emit(summary_cfg, out);
  const double first = zs.empty() ? 0.0 : zs.entries().front().gamma;
  if (!c.out_path.empty()) {
    // --out re-serialises the table.
    std::ostringstream body;
    write_zero_set(zs, body);
    RunConfig file_cfg = c;
    Emitter file_emit(file_cfg, out);
    file_emit.zero_table(path);
    file_emit.emit(body.str());
  }
  if (c.format == OutputFormat::Json) {
    emit.emit(json{{"source", to_string(zs.source())},
                   {"count", zs.size()},
                   {"gamma_first", first},
                   {"gamma_max", zs.gamma_max()},
                   {"fnv1a64", file_fingerprint(path)}}
                  .dump(2) +
              "\n");
    return;
  }
  emit.emit(fmt::format("source,count,gamma_first,gamma_max,fnv1a64\n{},{},{},{},{}\n",
                        to_string(zs.source()), zs.size(), num(first), num(zs.gamma_max()),
                        file_fingerprint(path)));
}

void cmd_zeros_synth(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (!c.seed) throw ParameterError("zeros synth needs --seed");
  if (c.out_path.empty()) throw ParameterError("zeros synth needs --out");
  const ZeroFreeRegion region = parse_region(c.region);
  const DensityEstimate est = parse_density(c.density);
  const auto ts = parse_grid(c.t_spec);
  if (ts.size() != 1) throw ParameterError("zeros synth needs a single --T value");
  SynthesisOptions opts;
  opts.draws = c.draws;
  const SynthesisResult result = synthesize_zero_set(region, est, ts.front(), *c.seed, opts);
  if (!result.feasible) err << "warning: " << result.warning << "\n";

  std::ostringstream body;
  write_zero_set(result.zeros, body);
  Emitter file_emit(c, out);
  file_emit.note("synthetic zeros respect beta <= 1 - eta(gamma) and the unit-constant density "
                 "bound on a 50 x 20 (sigma, T) grid");
  file_emit.extra("synthesis", {{"accepted", result.accepted},
                                {"rejected", result.rejected},
                                {"feasible", result.feasible}});
  file_emit.emit(body.str());

  out << "seed,T,count,accepted,rejected,feasible\n"
      << fmt::format("{},{},{},{},{},{}\n", *c.seed, num(ts.front()), result.zeros.size(),
                     result.accepted, result.rejected, flag(result.feasible));
}

// --- verify-explicit-formula ------------------------------------------------

void cmd_verify(const RunConfig& c, std::ostream& out) {
  if (!(c.x >= 2.0)) throw ParameterError("--x must be at least 2");
  const std::string path = resolve_zeros(c.zeros_path);
  const ZeroSet zs = load_zero_set(path);
  const auto ts = parse_grid(c.t_spec);
  const auto floor_x = static_cast<std::uint64_t>(std::floor(c.x));
  const PrimeTables tables = build_tables(floor_x, {floor_x});
  const double psi = tables.at(floor_x).psi;

  ZeroSumOptions opts;
  opts.workers = c.threads;
  Emitter emit(c, out);
  emit.zero_table(path);
  emit.note("truncated_psi includes the constant terms -log(2 pi) - (1/2) log(1 - x^-2)");
  emit.note("envelope is x (log x)^2 / T with unit implied constant");

  std::vector<Residual> rows;
  for (double t : ts) rows.push_back(residual(c.x, zs, t, psi, opts));
  if (c.format == OutputFormat::Json) {
    json arr = json::array();
    for (std::size_t i = 0; i < ts.size(); ++i) {
      arr.push_back({{"x", c.x}, {"T", ts[i]}, {"truncated_psi", rows[i].truncated},
                     {"psi_sieve", psi}, {"residual", rows[i].residual},
                     {"envelope", rows[i].envelope}});
    }
    emit.emit(json{{"rows", arr}}.dump(2) + "\n");
    return;
  }
  std::string csv = "x,T,truncated_psi,psi_sieve,residual,envelope\n";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    csv += fmt::format("{},{},{},{},{},{}\n", num(c.x), num(ts[i]), num(rows[i].truncated),
                       num(psi), num(rows[i].residual), num(rows[i].envelope));
  }
  emit.emit(csv);
}

// --- compare ---------------------------------------------------------------

std::string render_svg(const ComparisonTable& table) {
  constexpr double kW = 720, kH = 440, kLeft = 70, kRight = 150, kTop = 20, kBottom = 50;
  const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2"};
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& row : table.rows) {
    if (!(row.log_x > 1.0)) continue;
    const double xv = std::log(row.log_x);
    for (const auto& v : row.log_bounds) {
      if (!v) continue;
      xmin = std::min(xmin, xv);
      xmax = std::max(xmax, xv);
      ymin = std::min(ymin, *v);
      ymax = std::max(ymax, *v);
    }
  }
  if (!(xmax > xmin)) xmax = xmin + 1;
  if (!(ymax > ymin)) ymax = ymin + 1;
  auto sx = [&](double v) { return kLeft + (v - xmin) / (xmax - xmin) * (kW - kLeft - kRight); };
  auto sy = [&](double v) { return kTop + (ymax - v) / (ymax - ymin) * (kH - kTop - kBottom); };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "font-family=\"sans-serif\" font-size=\"11\">\n",
      kW, kH);
  svg += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
                     "stroke=\"#444\"/>\n",
                     kLeft, kTop, kW - kLeft - kRight, kH - kTop - kBottom);
  svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">log log x</text>\n",
                     (kLeft + kW - kRight) / 2, kH - 12);
  svg += fmt::format("<text x=\"14\" y=\"{}\" transform=\"rotate(-90 14 {})\" "
                     "text-anchor=\"middle\">log of bound (unit constant)</text>\n",
                     kH / 2, kH / 2);
  svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{:.4g}</text>\n", kLeft - 4,
                     sy(ymax) + 4, ymax);
  svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{:.4g}</text>\n", kLeft - 4,
                     sy(ymin) + 4, ymin);
  svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{:.4g}</text>\n", sx(xmin),
                     kH - kBottom + 14, xmin);
  svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{:.4g}</text>\n", sx(xmax),
                     kH - kBottom + 14, xmax);
  for (std::size_t k = 0; k < kComparisonColumnCount; ++k) {
    std::string points;
    for (const auto& row : table.rows) {
      if (!row.log_bounds[k] || !(row.log_x > 1.0)) continue;
      points += fmt::format("{:.2f},{:.2f} ", sx(std::log(row.log_x)), sy(*row.log_bounds[k]));
    }
    svg += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" "
                       "points=\"{}\"/>\n",
                       colors[k], points);
    svg += fmt::format("<text x=\"{}\" y=\"{}\" fill=\"{}\">{}</text>\n", kW - kRight + 8,
                       kTop + 14 + 16 * k, colors[k], to_string(kComparisonColumns[k]));
  }
  svg += "</svg>\n";
  return svg;
}

void cmd_compare(const RunConfig& c, std::ostream& out) {
  const ZeroFreeRegion region = parse_region(c.region);
  const DensityEstimate est = parse_density(c.density);
  const auto grid = parse_grid(c.logx);

  std::optional<PrimeTables> measured;
  if (c.sieve_limit >= 2) {
    std::vector<std::uint64_t> cps;
    for (double lx : grid) {
      if (lx > 64.0) continue;
      const double x = std::round(std::exp(lx));
      if (x >= 2.0 && x <= static_cast<double>(c.sieve_limit)) {
        cps.push_back(static_cast<std::uint64_t>(x));
      }
    }
    SieveOptions opts;
    opts.workers = c.threads;
    measured = build_tables(c.sieve_limit, cps, opts);
  }
  const ComparisonTable table =
      comparison_table(region, est, grid, c.eps, measured ? &*measured : nullptr);

  Emitter emit(c, out);
  emit.note("all bounds are natural logs with unit implied constant");
  emit.note("cor_vk keeps the stated coefficient 117; th1 uses 2A exactly");
  json xs = json::array();
  for (const auto& x : table.crossovers) {
    xs.push_back({{"first", to_string(x.first)}, {"second", to_string(x.second)},
                  {"log_x", x.log_x}});
  }
  emit.extra("crossovers", xs);

  if (!c.svg_path.empty()) write_text_file(c.svg_path, render_svg(table));
  if (c.format == OutputFormat::Svg) {
    emit.emit(render_svg(table));
    return;
  }
  if (c.format == OutputFormat::Json) {
    json rows = json::array();
    for (const auto& row : table.rows) {
      json r{{"log_x", row.log_x}, {"omega", row.omega}};
      for (std::size_t k = 0; k < kComparisonColumnCount; ++k) {
        const auto name = to_string(kComparisonColumns[k]);
        if (row.log_bounds[k]) {
          r[name] = *row.log_bounds[k];
          r[name + "_magnitude"] = format_magnitude(*row.log_bounds[k]);
        } else {
          r[name] = nullptr;
        }
      }
      r["delta3_measured"] = row.delta3_measured ? json(*row.delta3_measured) : json(nullptr);
      rows.push_back(r);
    }
    emit.emit(json{{"region", region.describe()},
                   {"density", describe(est)},
                   {"eps", c.eps},
                   {"rows", rows},
                   {"crossovers", xs}}
                  .dump(2) +
              "\n");
    return;
  }
  std::string csv =
      "log_x,omega,th1,cor_logfree,cor_vk,cor_vk_simple,pintz,ingham,schoenfeld,delta3_measured\n";
  for (const auto& row : table.rows) {
    csv += num(row.log_x) + "," + num(row.omega);
    for (const auto& v : row.log_bounds) csv += "," + opt_num(v);
    csv += "," + opt_num(row.delta3_measured) + "\n";
  }
  emit.emit(csv);
}

// --- audit-proof -----------------------------------------------------------

void cmd_audit(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const ZeroFreeRegion region = parse_region(c.region);
  const DensityEstimate est = parse_density(c.density);
  const auto grid = parse_grid(c.logx);
  if (grid.size() != 1) throw ParameterError("audit-proof needs a single --logx value");
  const double log_x = grid.front();

  Emitter emit(c, out);
  ZeroSet zs;
  if (!c.zeros_path.empty() || !c.seed) {
    const std::string path = resolve_zeros(c.zeros_path);
    zs = load_zero_set(path);
    emit.zero_table(path);
  } else {
    const OmegaResult om = minimize_f(region, log_x);
    SynthesisOptions opts;
    opts.draws = c.draws;
    const auto synth = synthesize_zero_set(region, est, std::exp(2.0 * om.omega), *c.seed, opts);
    if (!synth.feasible) err << "warning: " << synth.warning << "\n";
    zs = synth.zeros;
  }
  std::optional<Zero> planted;
  if (c.plant_violator) {
    Zero z;
    zs = plant_violator(zs, region, log_x, &z);
    planted = z;
  }

  const AuditReport rep = audit_proof(zs, region, est, log_x);
  const SplitSums& s = rep.split;
  const ChainReport& ch = rep.chain;
  auto log_slack = [](double cap, double have) {
    if (have <= 0.0) return std::numeric_limits<double>::infinity();
    return std::log(cap) - std::log(have);
  };

  if (c.format == OutputFormat::Json) {
    json viol = json::array();
    for (const auto& v : ch.violators) {
      viol.push_back({{"index", v.index}, {"beta", v.zero.beta}, {"gamma", v.zero.gamma},
                      {"log_term", v.log_term}, {"log_region_cap", v.log_region_cap}});
    }
    json j{{"region", region.describe()},
           {"density", describe(est)},
           {"zero_source", to_string(zs.source())},
           {"zero_count", zs.size()},
           {"log_x", log_x},
           {"omega", s.omega.omega},
           {"log_t0", s.omega.log_t0},
           {"log_T", s.log_t},
           {"sigma1", s.sigma1},
           {"sigma2", s.sigma2},
           {"strips_collapsed", s.strips_collapsed},
           {"s1", s.s1}, {"s2", s.s2}, {"s3", s.s3}, {"total", s.total},
           {"counts", {s.count1, s.count2, s.count3}},
           {"partition_error", rep.partition_error},
           {"partition_ok", rep.partition_ok},
           {"reciprocal_sum", rep.reciprocal_sum},
           {"reciprocal_ratio", rep.reciprocal_ratio},
           {"s1_cap", rep.s1_cap}, {"s1_ok", rep.s1_ok},
           {"s1_log_slack", log_slack(rep.s1_cap, s.s1)},
           {"s2_cap", rep.s2_cap}, {"s2_ok", rep.s2_ok},
           {"s2_log_slack", log_slack(rep.s2_cap, s.s2)},
           {"s3_termwise_ok", ch.termwise_ok},
           {"s3_termwise_log_slack", ch.termwise_slack},
           {"s3_aggregate_ok", ch.aggregate_ok},
           {"s3_aggregate_log_slack", ch.aggregate_slack},
           {"strip_count", ch.strip_count},
           {"chain_ok", ch.ok},
           {"violators", viol},
           {"passed", rep.passed()}};
    if (planted) j["planted"] = {{"beta", planted->beta}, {"gamma", planted->gamma}};
    // nlohmann serialises inf as null; keep the dump deterministic.
    emit.emit(j.dump(2) + "\n");
  } else {
    std::string csv = "item,value,passed\n";
    auto row = [&](const std::string& item, const std::string& value, const std::string& ok) {
      csv += item + "," + value + "," + ok + "\n";
    };
    row("zero_source", to_string(zs.source()), "");
    row("zero_count", std::to_string(zs.size()), "");
    row("log_x", num(log_x), "");
    row("omega", num(s.omega.omega), flag(s.omega.conditions.all()));
    row("log_T", num(s.log_t), "");
    row("sigma1", num(s.sigma1), "");
    row("sigma2", num(s.sigma2), "");
    row("strips_collapsed", flag(s.strips_collapsed), "");
    row("s1", num(s.s1), "");
    row("s2", num(s.s2), "");
    row("s3", num(s.s3), "");
    row("total", num(s.total), "");
    row("partition_error", num(rep.partition_error), flag(rep.partition_ok));
    row("reciprocal_ratio", num(rep.reciprocal_ratio), "");
    row("s1_log_slack", num(log_slack(rep.s1_cap, s.s1)), flag(rep.s1_ok));
    row("s2_log_slack", num(log_slack(rep.s2_cap, s.s2)), flag(rep.s2_ok));
    row("s3_termwise_log_slack", num(ch.termwise_slack), flag(ch.termwise_ok));
    row("s3_aggregate_log_slack", num(ch.aggregate_slack), flag(ch.aggregate_ok));
    row("chain_ok", flag(ch.ok), flag(ch.ok));
    for (const auto& v : ch.violators) {
      row("violator", fmt::format("beta={};gamma={}", num(v.zero.beta), num(v.zero.gamma)),
          "false");
    }
    row("overall", rep.passed() ? "pass" : "fail", flag(rep.passed()));
    emit.emit(csv);
  }
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec) {
  if (spec.empty()) throw ParameterError("empty value / grid specification");
  auto to_double = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw ParameterError("cannot parse '" + s + "' in '" + spec + "'");
    }
    if (used != s.size() || !std::isfinite(v)) {
      throw ParameterError("cannot parse '" + s + "' in '" + spec + "'");
    }
    return v;
  };
  std::vector<std::string> parts;
  const char sep = spec.find(':') != std::string::npos ? ':' : ',';
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);

  if (sep == ',') {
    std::vector<double> out;
    for (const auto& p : parts) out.push_back(to_double(p));
    return out;
  }
  if (parts.size() != 4 || (parts[3] != "log" && parts[3] != "lin")) {
    throw ParameterError("grid '" + spec + "' must be start:stop:count:log|lin");
  }
  const double start = to_double(parts[0]);
  const double stop = to_double(parts[1]);
  const double count_d = to_double(parts[2]);
  if (count_d < 1 || count_d != std::floor(count_d)) {
    throw ParameterError("grid count must be a positive integer");
  }
  const int count = static_cast<int>(count_d);
  const bool log_scale = parts[3] == "log";
  if (log_scale && !(start > 0.0 && stop > 0.0)) {
    throw ParameterError("log grid needs positive endpoints");
  }
  std::vector<double> out;
  for (int i = 0; i < count; ++i) {
    const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    out.push_back(log_scale ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start)))
                            : start + f * (stop - start));
  }
  out.front() = start;
  if (count > 1) out.back() = stop;
  return out;
}

std::string file_fingerprint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 0x100000001b3ULL;
    }
  }
  return fmt::format("{:016x}", h);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"pntlab: zero-free regions, omega(x), zero sums and PNT error bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PNTLAB_VERSION);

  const std::map<std::string, OutputFormat> formats{
      {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}, {"svg", OutputFormat::Svg}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "Write primary output here (plus <out>.meta.json)");
    sub->add_option("--format", cfg.format, "Output format: csv, json (svg for compare)")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* omega = app.add_subcommand("omega", "Minimise f_x(t) = eta(t) log x + log t");
  omega->add_option("--region", cfg.region, "Zero-free region preset")->required();
  omega->add_option("--logx", cfg.logx, "log x value, list or start:stop:count:log|lin")
      ->required();
  common(omega);

  auto* sieve = app.add_subcommand("sieve", "Segmented sieve: pi, theta, psi, li and deltas");
  sieve->add_option("--limit", cfg.limit, "Sieve limit (<= 1e10)")->required();
  sieve->add_option("--checkpoints", cfg.checkpoints, "Comma list or logspaced:k");
  sieve->add_option("--segment-size", cfg.segment_size, "Numbers per segment");
  sieve->add_option("--threads", cfg.threads, "Segments sieved ahead on worker threads");
  common(sieve);

  auto* zeros = app.add_subcommand("zeros", "Load or synthesise zero sets");
  zeros->require_subcommand(1);
  auto* zload = zeros->add_subcommand("load", "Load and summarise a zero table");
  zload->add_option("path", cfg.zeros_path, "Zero table file");
  common(zload);
  auto* zsynth = zeros->add_subcommand("synth", "Synthesise a region- and density-respecting set");
  zsynth->add_option("--region", cfg.region, "Zero-free region preset")->required();
  zsynth->add_option("--density", cfg.density, "Density preset")->required();
  zsynth->add_option("--T", cfg.t_spec, "Height T")->required();
  zsynth->add_option("--seed", cfg.seed, "RNG seed")->required();
  zsynth->add_option("--draws", cfg.draws, "Candidate draws");
  common(zsynth);

  auto* verify = app.add_subcommand("verify-explicit-formula",
                                    "Truncated explicit formula against sieved psi");
  verify->add_option("--x", cfg.x, "Evaluation point (use a half-integer)")->required();
  verify->add_option("--zeros", cfg.zeros_path, "Zero table (default: $PNT_LAB_ZEROS_DIR)");
  verify->add_option("--T", cfg.t_spec, "Truncation height(s)")->required();
  verify->add_option("--threads", cfg.threads, "Workers for the zero sum");
  common(verify);

  auto* compare = app.add_subcommand("compare", "Log-space comparison of PNT error bounds");
  compare->add_option("--region", cfg.region, "Zero-free region preset")->required();
  compare->add_option("--density", cfg.density, "Density preset")->required();
  compare->add_option("--logx-grid", cfg.logx, "start:stop:count:log|lin or list")->required();
  compare->add_option("--eps", cfg.eps, "epsilon for the Pintz and Ingham baselines");
  compare->add_option("--svg", cfg.svg_path, "Also write a static SVG plot");
  compare->add_option("--sieve-limit", cfg.sieve_limit, "Measure Delta_3 by sieving up to this");
  compare->add_option("--threads", cfg.threads, "Sieve workers");
  common(compare);

  auto* audit = app.add_subcommand("audit-proof", "Replay the s1/s2/s3 split and the s3 chain");
  audit->add_option("--region", cfg.region, "Zero-free region preset")->required();
  audit->add_option("--density", cfg.density, "Density preset")->required();
  audit->add_option("--logx", cfg.logx, "log x")->required();
  audit->add_option("--zeros", cfg.zeros_path, "Zero set file (one or two columns)");
  audit->add_option("--seed", cfg.seed, "Synthesise the zero set with this seed");
  audit->add_option("--draws", cfg.draws, "Candidate draws for synthesis");
  audit->add_flag("--plant-violator", cfg.plant_violator,
                  "Insert one zero breaking the zero-free region");
  common(audit);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << PNTLAB_VERSION << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return 1;
  }

  if (cfg.format == OutputFormat::Svg && !compare->parsed()) {
    err << "error: --format svg is only available for compare\n";
    return 1;
  }

  try {
    if (omega->parsed()) {
      cfg.subcommand = "omega";
      cmd_omega(cfg, out);
    } else if (sieve->parsed()) {
      cfg.subcommand = "sieve";
      cmd_sieve(cfg, out);
    } else if (zload->parsed()) {
      cfg.subcommand = "zeros";
      cfg.zeros_action = "load";
      cmd_zeros_load(cfg, out);
    } else if (zsynth->parsed()) {
      cfg.subcommand = "zeros";
      cfg.zeros_action = "synth";
      cmd_zeros_synth(cfg, out, err);
    } else if (verify->parsed()) {
      cfg.subcommand = "verify-explicit-formula";
      cmd_verify(cfg, out);
    } else if (compare->parsed()) {
      cfg.subcommand = "compare";
      cmd_compare(cfg, out);
    } else if (audit->parsed()) {
      cfg.subcommand = "audit-proof";
      cmd_audit(cfg, out, err);
    }
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid number: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    err << "error: number out of range: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace pntlab::cli
