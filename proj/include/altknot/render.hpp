#pragma once

#include <string>

#include "altknot/diagram.hpp"

namespace altknot {

// SVG drawing of a connected diagram. Crossings, edge midpoints and face
// centres are placed by a barycentric embedding with the largest face on
// the outside; a circular layout is used when that embedding degenerates.
// Throws RenderError for disconnected diagrams.
std::string render_svg(const Diagram& d);

}  // namespace altknot
