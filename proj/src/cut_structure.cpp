#include "nkicon/cut_structure.hpp"

#include <algorithm>
#include <map>

namespace nkicon {

bool CutStructure::is_vertex_bp(int m) const {
  return (m % 2) == vertex_parity;
}

int CutStructure::edge_vertex_bp(int e, int end) const {
  return (vertex_parity + 2 * e + 2 * end) % (2 * n);
}

int CutStructure::edge_midpoint_bp(int e) const {
  return (vertex_parity + 2 * e + 1) % (2 * n);
}

int CutStructure::band_of_edge(int e) const {
  int m = edge_midpoint_bp(e);
  if (m > n) m = 2 * n - m;
  if (m == 0) return 0;
  if (m == n) return static_cast<int>(bands.size()) - 1;
  for (size_t b = 0; b < bands.size(); ++b)
    if (band_first_bp[b] < m && m < band_last_bp[b]) return static_cast<int>(b);
  throw Error(Errc::InvalidArgument, "edge midpoint outside every band span");
}

std::array<int, 2> CutStructure::arc_endpoints(int ring, int half) const {
  const int nb = 2 * n;
  if (half == 0) return {ring, (nb - ring) % nb};
  return {rotated_bp((nb - ring) % nb), rotated_bp(ring)};
}

CutStructure make_cut_structure(int n, int k, Axis axis, double side) {
  IconSpec spec{n, ((k % n) + n) % n, axis, side, 8};
  validate(spec);
  CutStructure cs;
  cs.n = n;
  cs.k = spec.k;
  cs.axis = axis;
  cs.side = side;
  cs.bp = cross_section_polygon(n, axis, side);
  cs.vertex_parity = (axis == Axis::MM) ? 1 : 0;
  // Band spans: split the right profile (breakpoints 0..n) at interior
  // polygon-vertex breakpoints.
  std::vector<int> cuts{0};
  for (int j = 1; j < n; ++j)
    if (j % 2 == cs.vertex_parity) cuts.push_back(j);
  cuts.push_back(n);
  const Profile profile = make_profile({n, cs.k, axis, side, 8});
  cs.bands = band_geometry(profile);
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    cs.band_first_bp.push_back(cuts[i]);
    cs.band_last_bp.push_back(cuts[i + 1]);
  }
  if (cs.bands.size() != cs.band_first_bp.size())
    throw Error(Errc::InvalidArgument, "band span bookkeeping out of step");
  return cs;
}

std::vector<EdgeCurveChain> edge_curve_chains(const CutStructure& cs) {
  struct ArcEnd {
    int ring;
    int half;
    int ends[2];
  };
  std::vector<ArcEnd> arcs;
  for (int ring = 1; ring < cs.n; ++ring) {
    if (!cs.is_vertex_bp(ring)) continue;
    for (int half = 0; half < 2; ++half) {
      const auto e = cs.arc_endpoints(ring, half);
      arcs.push_back({ring, half, {e[0], e[1]}});
    }
  }
  // Incidence of arc ends at vertex breakpoints. Each breakpoint carries at
  // most one end per half; apices (rho = 0 rings) contribute no arc, which
  // is where open chains terminate.
  std::map<int, std::vector<std::pair<int, int>>> at_bp;  // bp -> (arc idx, end)
  for (size_t a = 0; a < arcs.size(); ++a) {
    at_bp[arcs[a].ends[0]].push_back({static_cast<int>(a), 0});
    at_bp[arcs[a].ends[1]].push_back({static_cast<int>(a), 1});
  }
  std::vector<bool> used(arcs.size(), false);
  std::vector<EdgeCurveChain> chains;

  auto walk = [&](int start_arc, int start_end) {
    EdgeCurveChain chain;
    int a = start_arc;
    int entry = start_end;  // we enter arc a at this end
    while (true) {
      used[a] = true;
      chain.arcs.push_back({arcs[a].ring, arcs[a].half, entry == 1});
      const int exit_bp = arcs[a].ends[1 - entry];
      int next = -1, next_end = -1;
      for (auto [idx, end] : at_bp[exit_bp]) {
        if (!used[idx]) {
          next = idx;
          next_end = end;
          break;
        }
      }
      if (next < 0) {
        if (exit_bp == arcs[start_arc].ends[start_end]) {
          chain.closed = true;
        } else {
          chain.closed = false;
          chain.endpoint_bps = {arcs[start_arc].ends[start_end], exit_bp};
        }
        return chain;
      }
      a = next;
      entry = next_end;
    }
  };

  // Open chains first: start from breakpoints of degree 1.
  for (size_t a = 0; a < arcs.size(); ++a) {
    for (int end = 0; end < 2; ++end) {
      if (used[a]) continue;
      if (at_bp[arcs[a].ends[end]].size() == 1) chains.push_back(walk(static_cast<int>(a), end));
    }
  }
  for (size_t a = 0; a < arcs.size(); ++a)
    if (!used[a]) chains.push_back(walk(static_cast<int>(a), 0));
  return chains;
}

std::vector<FaceComponent> face_components(const CutStructure& cs) {
  const int nbands = static_cast<int>(cs.bands.size());
  const int nnodes = 2 * nbands;  // node id = band * 2 + half
  std::vector<int> comp(nnodes, -1);
  std::vector<std::vector<std::pair<int, int>>> adj(nnodes);  // (neighbor, edge id)
  for (int e = 0; e < cs.edge_count(); ++e) {
    const int u = cs.band_of_edge(e) * 2 + 0;
    const int v = cs.band_of_edge_b(e) * 2 + 1;
    adj[u].push_back({v, e});
    adj[v].push_back({u, e});
  }
  std::vector<FaceComponent> faces;
  for (int seed = 0; seed < nnodes; ++seed) {
    if (comp[seed] >= 0) continue;
    const int id = static_cast<int>(faces.size());
    FaceComponent face;
    std::vector<int> stack{seed};
    comp[seed] = id;
    std::vector<bool> edge_seen(cs.edge_count(), false);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      face.members.push_back({u / 2, u % 2});
      if (cs.bands[u / 2].kind == BandKind::FlatDiskOrAnnulus) face.has_flat = true;
      for (auto [v, e] : adj[u]) {
        if (!edge_seen[e]) {
          edge_seen[e] = true;
          face.glue_edges.push_back(e);
        }
        if (comp[v] < 0) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(face.members.begin(), face.members.end(), [](auto a, auto b) {
      return std::tie(a.band, a.half) < std::tie(b.band, b.half);
    });
    std::sort(face.glue_edges.begin(), face.glue_edges.end());
    // Disk components glue along a tree (edges = nodes - 1); one extra glue
    // edge closes the loop through the cut plane and makes an annulus.
    face.annulus = face.glue_edges.size() == face.members.size();
    faces.push_back(std::move(face));
  }
  return faces;
}

}  // namespace nkicon
