#pragma once

#include "symwsc/weave.hpp"

#include <string>

namespace symwsc {

enum class RenderFormat { Svg, Tikz };

RenderFormat parse_format(const std::string& s);

/// Tiling picture: vertex S at the label sum of regular n-gon corners,
/// white/black faces shaded, labels printed (compact digits when n <= 9).
std::string render_tiling(const PlabicTiling& T, RenderFormat fmt);

/// Plabic graph picture: marked points on the circle, internal vertices
/// placed by averaging neighbors, colored disks.
std::string render_graph(const PlabicGraph& G, RenderFormat fmt);

/// Weave picture: per-layer edge colors, boundary slot ticks.
std::string render_weave(const WeaveGraph& W, RenderFormat fmt);

} // namespace symwsc
