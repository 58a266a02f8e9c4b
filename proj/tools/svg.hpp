#pragma once

#include <string>

#include "gcn/gcset.hpp"

namespace gcn {

/// SVG 1.1 drawing of a node set: nodes colored by maximal-line class,
/// maximal lines solid, proper lines dashed and other used lines dotted.
/// Line classes are drawn only for GC sets. Output is a pure function of
/// the input.
std::string render_svg(const GcContext& ctx);

}  // namespace gcn
