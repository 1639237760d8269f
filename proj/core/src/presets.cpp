#include "pntlab/presets.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "pntlab/errors.hpp"

namespace pntlab {
namespace {

using nlohmann::json;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

double to_number(std::string_view token, std::string_view context) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw ParameterError("cannot parse '" + std::string(token) + "' in " + std::string(context));
  }
  return v;
}

// Splits on ',' and on '-' used as a separator. A '-' is a minus sign when it
// starts the string, follows another separator, or follows an exponent 'e'.
std::vector<std::string_view> split_params(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    bool sep = ch == ',';
    if (ch == '-') {
      const bool sign = i == start || s[i - 1] == 'e' || s[i - 1] == 'E';
      sep = !sign;
    }
    if (sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::string read_file(std::string_view path) {
  std::ifstream in{std::string(path)};
  if (!in) throw IoError("cannot open preset file '" + std::string(path) + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double json_number(const json& j, const char* key, std::string_view context) {
  if (!j.contains(key) || !j.at(key).is_number()) {
    throw ParameterError(std::string(context) + " preset needs numeric '" + key + "'");
  }
  return j.at(key).get<double>();
}

ZeroFreeRegion region_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
    throw ParameterError("region JSON needs a string 'family'");
  }
  const std::string family = lower(j.at("family").get<std::string>());
  if (family == "classical") return ZeroFreeRegion::classical(json_number(j, "R", "classical"));
  if (family == "vk" || family == "vinogradov-korobov" || family == "vinogradovkorobov") {
    return ZeroFreeRegion::vinogradov_korobov(json_number(j, "c", "vk"));
  }
  if (family == "power" || family == "powerform" || family == "power-form") {
    return ZeroFreeRegion::power_form(json_number(j, "c1", "power"), json_number(j, "c2", "power"),
                                      json_number(j, "c3", "power"));
  }
  throw ParameterError("unknown region family '" + family + "'");
}

DensityEstimate density_from_json(const json& j) {
  if (!j.is_object()) throw ParameterError("density JSON must be an object");
  DensityEstimate est;
  est.a = json_number(j, "A", "density");
  est.b = json_number(j, "B", "density");
  est.c = json_number(j, "C", "density");
  est.sigma0 = json_number(j, "sigma0", "density");
  est.label = j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>()
                                                               : "custom";
  est.validate();
  return est;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParameterError(std::string("malformed preset JSON: ") + e.what());
  }
}

}  // namespace

ZeroFreeRegion parse_region(std::string_view spec) {
  if (spec.empty()) throw ParameterError("empty region preset");
  if (spec.front() == '@') return parse_region(read_file(spec.substr(1)));
  if (spec.front() == '{') return region_from_json(parse_json(spec));

  const auto cut = spec.find_first_of(":-");
  if (cut == std::string_view::npos) {
    throw ParameterError("region preset '" + std::string(spec) + "' needs family:params");
  }
  const std::string family = lower(spec.substr(0, cut));
  const auto params = split_params(spec.substr(cut + 1));
  const std::string context = "region preset '" + std::string(spec) + "'";
  auto expect = [&](std::size_t n) {
    if (params.size() != n) {
      throw ParameterError(context + " expects " + std::to_string(n) + " parameter(s)");
    }
  };
  if (family == "classical") {
    expect(1);
    return ZeroFreeRegion::classical(to_number(params[0], context));
  }
  if (family == "vk") {
    expect(1);
    return ZeroFreeRegion::vinogradov_korobov(to_number(params[0], context));
  }
  if (family == "power") {
    expect(3);
    return ZeroFreeRegion::power_form(to_number(params[0], context), to_number(params[1], context),
                                      to_number(params[2], context));
  }
  throw ParameterError("unknown region family '" + family + "'");
}

DensityEstimate parse_density(std::string_view spec) {
  if (spec.empty()) throw ParameterError("empty density preset");
  if (spec.front() == '@') return parse_density(read_file(spec.substr(1)));
  if (spec.front() == '{') return density_from_json(parse_json(spec));
  const std::string name = lower(spec);
  if (name == "jutila") return DensityEstimate::jutila();
  if (name == "ford") return DensityEstimate::ford();

  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || spec[i] == ',') {
      parts.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 4) {
    throw ParameterError("density preset '" + std::string(spec) +
                         "' must be jutila, ford or A,B,C,sigma0");
  }
  const std::string context = "density preset '" + std::string(spec) + "'";
  DensityEstimate est{to_number(parts[0], context), to_number(parts[1], context),
                      to_number(parts[2], context), to_number(parts[3], context), "custom"};
  est.validate();
  return est;
}

std::string describe(const DensityEstimate& est) {
  auto shortest = [](double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
  };
  return est.label + "(A=" + shortest(est.a) + ",B=" + shortest(est.b) + ",C=" + shortest(est.c) +
         ",sigma0=" + shortest(est.sigma0) + ")";
}

}  // namespace pntlab
