#pragma once

#include <string>

#include "softdisc/configuration.hpp"

namespace softdisc {

// Draws the configuration and its bond graph as a standalone SVG: boundary
// edges heavy, interior edges light, wire edges dashed, non-triangular faces
// shaded, boundary vertices emphasized. 40 px per unit distance, auto-fitted
// viewport, deterministic output. Throws infeasible_error like the graph
// builder does.
std::string render_svg(const Configuration& config, const PotentialParams& params);

inline std::string render_svg(const Configuration& config) {
  return render_svg(config, config.params());
}

}  // namespace softdisc
