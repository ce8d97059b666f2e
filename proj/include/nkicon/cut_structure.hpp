#pragma once

#include <array>
#include <vector>

#include "nkicon/profile.hpp"

namespace nkicon {

// Combinatorics of the cut-twist-reglue step, independent of tessellation.
//
// The cross-section polygon boundary is sampled at 2n breakpoints (vertices
// and edge midpoints). Half A of the solid covers revolution angles [0, pi],
// half B covers [pi, 2*pi]; regluing rotates half B so that breakpoint m
// lands on breakpoint m + 2k (mod 2n). Everything downstream (edge curves,
// surface components, templates) is derived from this identification.
struct CutStructure {
  int n = 0;
  int k = 0;
  Axis axis = Axis::VV;
  double side = 1.0;

  std::vector<Vec2> bp;       // 2n cross-section breakpoints (x, z)
  int vertex_parity = 0;      // breakpoint j is a polygon vertex iff j % 2 == vertex_parity
  std::vector<Band> bands;    // geometric bands, top to bottom
  std::vector<int> band_first_bp;  // right-profile breakpoint span of each band
  std::vector<int> band_last_bp;

  int breakpoint_count() const { return 2 * n; }
  bool is_vertex_bp(int m) const;
  // Profile ring id (0..n) whose sweep passes through breakpoint m.
  int ring_of_bp(int m) const { return m <= n ? m : 2 * n - m; }
  double ring_rho(int ring) const { return bp[ring].x(); }
  double ring_z(int ring) const { return bp[ring].y(); }

  // Polygon edges of the cross-section, n of them; edge e spans the vertex
  // breakpoints returned below (passing through one midpoint breakpoint).
  int edge_count() const { return n; }
  int edge_vertex_bp(int e, int end) const;  // end in {0, 1}
  int edge_midpoint_bp(int e) const;

  // Band whose half A touches edge e along the cut plane.
  int band_of_edge(int e) const;
  // Band whose half B touches edge e after the twist.
  int band_of_edge_b(int e) const { return band_of_edge(((e - k) % n + n) % n); }

  // Where the twist sends breakpoint m of half B.
  int rotated_bp(int m) const { return (m + 2 * k) % (2 * n); }

  // Boundary breakpoints of the semicircular arc swept by `ring` on `half`
  // (0 = A, 1 = B), ordered by increasing revolution angle. Half-B arcs are
  // reported at their post-twist positions.
  std::array<int, 2> arc_endpoints(int ring, int half) const;
};

CutStructure make_cut_structure(int n, int k, Axis axis, double side = 1.0);
inline CutStructure make_cut_structure(const IconSpec& spec) {
  return make_cut_structure(spec.n, spec.k % spec.n, spec.axis, spec.side);
}

// Reassembled edge curve: a chain of vertex-circle semicircles, either a
// closed loop or an open run between two cone apices.
struct EdgeCurveChain {
  struct ArcRef {
    int ring;       // profile ring id, 0 < ring < n
    int half;       // 0 = A, 1 = B
    bool reversed;  // traverse against increasing revolution angle
  };
  bool closed = false;
  std::vector<ArcRef> arcs;
  std::array<int, 2> endpoint_bps{-1, -1};  // world breakpoints, open chains only
};

std::vector<EdgeCurveChain> edge_curve_chains(const CutStructure& cs);

// Surface component of the reglued solid: half-bands joined across the cut
// plane along polygon edges. A component is an annulus (its glue graph
// closes a loop through the cut plane) or a disk; annuli are the surfaces
// whose mid-line can be traced around and back to the start.
struct FaceComponent {
  struct HalfBand {
    int band;
    int half;  // 0 = A, 1 = B
  };
  std::vector<HalfBand> members;
  std::vector<int> glue_edges;  // polygon edge ids interior to this face
  bool has_flat = false;
  bool annulus = false;
};

std::vector<FaceComponent> face_components(const CutStructure& cs);

}  // namespace nkicon
