#pragma once

#include <string>

#include "qloci/lacing_diagram.hpp"
#include "qloci/pipe_dream.hpp"
#include "qloci/quiver.hpp"

namespace qloci {

std::string render_svg(const PipeDream& p, int cell = 24);
/// Lists the arrows and laces of the diagram.
std::string render_lacing_text(const BipartiteQuiver& q, const LacingDiagram& w);
/// Dots in drawing order; with extended, virtual dots (red) and the
/// extended arrows are drawn too.
std::string render_lacing_svg(const BipartiteQuiver& q, const LacingDiagram& w, bool extended);

}  // namespace qloci
