// Presentation-only SVG rendering of configurations, construction circles,
// grid heatmaps, and the shrinking-ring curve. Carries no acceptance weight.
#pragma once

#include <string>
#include <vector>

#include "hullbound/cheb.h"
#include "hullbound/geometry.h"

namespace hullbound {

/// Points (dots), optional highlighted points (crosses), optional circles,
/// optionally the unit circle for reference.
std::string svg_scene(const std::vector<cplx>& points, const std::vector<cplx>& marked,
                      const std::vector<CircleSpec>& circles, bool unit_circle);

/// Member/borderline/non-member cells as colored rectangles with the samples
/// drawn on top.
std::string svg_grid(const HullGrid& grid, const std::vector<cplx>& samples);

/// The chain of shrinking rings with their marked points.
std::string svg_rings(int n_max);

}  // namespace hullbound
