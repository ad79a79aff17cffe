#pragma once

#include <string>

#include "plumb/model.hpp"

namespace plumb {

/// One edge chart: boundary pieces, both collar parallelograms and (optionally)
/// the corner annotations. 512 units across the bounding box padded by 10%.
/// Geometry stays exact until coordinates are printed with 6 decimals.
std::string emit_region_svg(const ToricRegion& region, bool labels);

/// Schematic contour plot of the profile function: five level sets t = k*gamma,
/// straight outside the band |y - x| <= gamma, quadratic arcs inside it.
inline constexpr int kProfileLevels = 5;
std::string emit_profile_svg(const ModelConstants& consts);

}  // namespace plumb
