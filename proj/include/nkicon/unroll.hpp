#pragma once

#include <Eigen/Dense>
#include <vector>

#include "nkicon/cut_structure.hpp"
#include "nkicon/profile.hpp"

namespace nkicon {

// Planar development of one half-band (180 degrees of revolution). Cones and
// flats unroll to annulus sectors around the cone apex; cylinders unroll to
// rectangles. The sector angle satisfies angle * apex_distance = pi * rho.
struct HalfBandDevelopment {
  bool cylinder = false;
  double inner_radius = 0.0;
  double outer_radius = 0.0;
  double angle = 0.0;  // radians
  double width = 0.0;  // cylinder: pi * rho
  double height = 0.0; // cylinder: slant
};

HalfBandDevelopment unroll_band_half(const Band& band);

// One fabrication template: the exact planar development of a surface
// component, bounded by straight segments and circular arcs. The chain is
// closed; every element records which element it is seamed to during
// assembly ("seam-<id>-a" mates with "seam-<id>-b").
struct TemplatePiece {
  struct Element {
    enum class Type { Segment, Arc };
    Type type = Type::Segment;
    Vec2 p0{0, 0}, p1{0, 0};  // endpoints in chain order
    Vec2 center{0, 0};        // arcs only
    double radius = 0.0;      // arcs only
    double sweep = 0.0;       // arcs: signed angle, ccw positive
    double length = 0.0;
    int seam_id = -1;
    char seam_side = 'a';
    int mate_piece = -1;
    int mate_element = -1;
    bool mate_reversed = false;
    int ring = -1;       // vertex circle developed into this element, if any
    int half = -1;       // 0 = A, 1 = B
    int cut_edge = -1;   // annular components: the opened glue edge
    int bp0 = -1, bp1 = -1;  // cross-section breakpoints at the endpoints
  };

  std::vector<Element> boundary;
  bool traceable = false;
  int start_marker_element = 0;
  Vec2 start_marker_pos{0, 0};
  Vec2 start_marker_dir{0, 1};  // points into the piece
};

// Unrolls every surface component of the icon into exact templates. Disk
// components develop completely; annular components are opened along one
// glue edge, whose two straight sides become mated boundary segments.
std::vector<TemplatePiece> assemble_templates(const IconSpec& spec);

// Boundary element lengths in chain order.
std::vector<double> template_arc_lengths(const TemplatePiece& piece);

double piece_boundary_length(const TemplatePiece& piece);

// Exact enclosed area (Green's theorem over segments and arcs).
double piece_area(const TemplatePiece& piece);

struct Box2 {
  Vec2 lo, hi;
  double width() const { return hi.x() - lo.x(); }
  double height() const { return hi.y() - lo.y(); }
};

Box2 piece_bounds(const TemplatePiece& piece);

}  // namespace nkicon
