#pragma once

#include "klstab/types.hpp"

#include <string>

namespace klstab {

/// Deterministic SVG of the lattice window [-w, w]^2 in the (k,l) plane
/// with each point coloured by region and the three bounding lines of each
/// linear-form family drawn on top. window = 0 picks the default w = n*g.
/// Identical inputs always produce identical bytes.
std::string region_plot_svg(i64 n, i64 g, i64 window = 0);

}  // namespace klstab
