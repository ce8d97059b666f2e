#pragma once

#include <string>
#include <vector>

#include "nkicon/unroll.hpp"

namespace nkicon {

struct SvgOptions {
  double stroke_mm = 0.25;
  double margin_mm = 10.0;
  double gap_mm = 10.0;   // spacing between pieces
  bool labels = true;     // seam labels and start markers
};

// Renders the pieces as an SVG 1.1 document in millimeter units. Arcs are
// emitted as circular elliptical-arc commands, never sampled. Mated seam
// elements share a color and a "seam-<id>-<a|b>" label; the start marker is
// drawn as an arrow pointing into the piece.
std::string emit_svg(const std::vector<TemplatePiece>& pieces, const SvgOptions& options = {});

}  // namespace nkicon
