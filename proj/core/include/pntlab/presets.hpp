#pragma once

#include <string>
#include <string_view>

#include "pntlab/density.hpp"
#include "pntlab/regions.hpp"

namespace pntlab {

/// Region from a preset string:
///   classical:R   vk:c   power:c1,c2,c3
/// '-' may replace ':' and ',' (classical-5.573412, power-0.05-1-0.3). A
/// string starting with '{' is read as JSON, e.g.
///   {"family": "classical", "R": 5.573412}
///   {"family": "vk", "c": 53.989}
///   {"family": "power", "c1": 0.05, "c2": 1, "c3": 0.3}
/// and "@path" reads the JSON from a file. Throws ParameterError.
ZeroFreeRegion parse_region(std::string_view spec);

/// Density estimate from "jutila", "ford", "A,B,C,sigma0", a JSON object
/// with keys A, B, C, sigma0 (and optional label), or "@path".
DensityEstimate parse_density(std::string_view spec);

std::string describe(const DensityEstimate& est);

}  // namespace pntlab
