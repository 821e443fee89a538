#pragma once

#include "wlink/linkproj.hpp"
#include "wlink/tutte.hpp"

#include <string>

namespace wlink {

// Straight-line drawing of the embedded map: wing edges thin, nervure edges
// thick, axis vertices labelled.
std::string embedding_to_svg(const RotationMap& map, const PlaneEmbedding& emb);

// Projected diagram with the under strand interrupted at each crossing (gap of
// 6% of the crossed stroke's length, centered at the crossing point).
std::string diagram_to_svg(const LinkDiagram& diagram);

} // namespace wlink
