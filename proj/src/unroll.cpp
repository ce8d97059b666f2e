#include "nkicon/unroll.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>

namespace nkicon {

namespace {

constexpr double kPi = std::numbers::pi;

double sector_angle(const Band& band) {
  if (band.rho0 > 0.0) return kPi * band.rho0 / band.apex_distance_s0;
  return kPi * band.rho1 / band.apex_distance_s1;
}

}  // namespace

HalfBandDevelopment unroll_band_half(const Band& band) {
  HalfBandDevelopment dev;
  if (band.kind == BandKind::Cylinder) {
    dev.cylinder = true;
    dev.width = kPi * band.rho0;
    dev.height = band.slant;
    return dev;
  }
  dev.inner_radius = std::min(band.apex_distance_s0, band.apex_distance_s1);
  dev.outer_radius = std::max(band.apex_distance_s0, band.apex_distance_s1);
  dev.angle = sector_angle(band);
  return dev;
}

namespace {

using Iso2 = Eigen::Isometry2d;

Vec2 dir(double angle) { return Vec2(std::cos(angle), std::sin(angle)); }

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

// One half-band being laid out in the plane.
struct DevNode {
  int band = -1;
  int half = -1;
  bool cylinder = false;
  double s_first = 0.0, s_second = 0.0;  // apex distances at the span rims
  double sigma = 1.0;                    // +1 when s grows along the profile
  double phi = 0.0;                      // sector angle
  double rho = 0.0, slant = 0.0;         // cylinder data
  int first_bp = 0, last_bp = 0;
  Iso2 T = Iso2::Identity();
  bool placed = false;
};

// Local coordinates of a span-rim corner. u01 = 0 is the start of the half
// revolution, u01 = 1 the end.
Vec2 local_corner(const DevNode& nd, int ring, int u01) {
  if (nd.cylinder) {
    const double x = (u01 == 0 ? -1.0 : 1.0) * kPi * nd.rho / 2.0;
    const double y = (ring == nd.first_bp) ? 0.0 : -nd.slant;
    return Vec2(x, y);
  }
  const double s = (ring == nd.first_bp) ? nd.s_first : nd.s_second;
  const double psi = nd.sigma * nd.phi * (u01 == 0 ? -0.5 : 0.5);
  return s * dir(psi);
}

Vec2 local_interior_point(const DevNode& nd) {
  if (nd.cylinder) return Vec2(0.0, -nd.slant / 2.0);
  const double lo = std::min(nd.s_first, nd.s_second);
  const double hi = std::max(nd.s_first, nd.s_second);
  const double s = lo > 0.0 ? 0.5 * (lo + hi) : 0.5 * hi;
  return s * dir(0.0);
}

int corner_world_bp(const CutStructure& cs, const DevNode& nd, int ring, int u01) {
  const int nb = cs.breakpoint_count();
  if (nd.half == 0) return u01 == 0 ? ring : (nb - ring) % nb;
  return u01 == 0 ? cs.rotated_bp((nb - ring) % nb) : cs.rotated_bp(ring);
}

struct BoundaryPart {
  enum class Kind { Rim, Side } kind = Kind::Rim;
  int ring = -1;       // Rim
  int glue_edge = -1;  // Side
  bool is_arc = false;
  Vec2 a{0, 0}, b{0, 0};  // local endpoints in traversal order
  double radius = 0.0;
  double sweep = 0.0;  // signed arc sweep (ccw positive), arcs only
  int bp_a = -1, bp_b = -1;
};

// Counterclockwise local boundary cycle of a half-band development.
std::vector<BoundaryPart> node_boundary(const CutStructure& cs, const DevNode& nd,
                                        const std::map<std::pair<int, int>, int>& edge_of_bps) {
  const auto side_edge = [&](int bpa, int bpb) {
    auto it = edge_of_bps.find(std::minmax(bpa, bpb));
    if (it == edge_of_bps.end())
      throw Error(Errc::InvalidArgument, "cut side does not match a polygon edge");
    return it->second;
  };

  std::vector<BoundaryPart> parts;
  const Band& band = cs.bands[nd.band];
  if (nd.cylinder) {
    // Rectangle [-w/2, w/2] x [-slant, 0], ccw from the bottom-left corner.
    const int rf = nd.first_bp, rl = nd.last_bp;
    BoundaryPart bottom{BoundaryPart::Kind::Rim, rl, -1, false,
                        local_corner(nd, rl, 0), local_corner(nd, rl, 1), 0, 0,
                        corner_world_bp(cs, nd, rl, 0), corner_world_bp(cs, nd, rl, 1)};
    BoundaryPart right{BoundaryPart::Kind::Side, -1, -1, false,
                       local_corner(nd, rl, 1), local_corner(nd, rf, 1), 0, 0,
                       corner_world_bp(cs, nd, rl, 1), corner_world_bp(cs, nd, rf, 1)};
    right.glue_edge = side_edge(right.bp_a, right.bp_b);
    BoundaryPart top{BoundaryPart::Kind::Rim, rf, -1, false,
                     local_corner(nd, rf, 1), local_corner(nd, rf, 0), 0, 0,
                     corner_world_bp(cs, nd, rf, 1), corner_world_bp(cs, nd, rf, 0)};
    BoundaryPart left{BoundaryPart::Kind::Side, -1, -1, false,
                      local_corner(nd, rf, 0), local_corner(nd, rl, 0), 0, 0,
                      corner_world_bp(cs, nd, rf, 0), corner_world_bp(cs, nd, rl, 0)};
    left.glue_edge = side_edge(left.bp_a, left.bp_b);
    parts = {bottom, right, top, left};
    return parts;
  }

  const bool first_is_outer = nd.s_first > nd.s_second;
  const int ring_outer = first_is_outer ? nd.first_bp : nd.last_bp;
  const int ring_inner = first_is_outer ? nd.last_bp : nd.first_bp;
  const double s_outer = std::max(nd.s_first, nd.s_second);
  const double s_inner = std::min(nd.s_first, nd.s_second);
  // u value sitting at sector angle -phi/2 (psi(u) = sigma*phi*(u/pi - 1/2)).
  const int u_at_lo = nd.sigma > 0 ? 0 : 1;
  const int u_at_hi = 1 - u_at_lo;

  // Outer arc, ccw from -phi/2 to +phi/2.
  BoundaryPart outer;
  outer.kind = BoundaryPart::Kind::Rim;
  outer.ring = ring_outer;
  outer.is_arc = true;
  outer.a = s_outer * dir(-nd.phi / 2);
  outer.b = s_outer * dir(nd.phi / 2);
  outer.radius = s_outer;
  outer.sweep = nd.phi;
  outer.bp_a = corner_world_bp(cs, nd, ring_outer, u_at_lo);
  outer.bp_b = corner_world_bp(cs, nd, ring_outer, u_at_hi);
  parts.push_back(outer);

  if (band.kind == BandKind::FlatDiskOrAnnulus && s_inner == 0.0) {
    // Flat cap: the two radial sides are collinear and belong to the same
    // polygon edge, so they form a single diameter side.
    BoundaryPart diam;
    diam.kind = BoundaryPart::Kind::Side;
    diam.a = outer.b;
    diam.b = outer.a;
    diam.bp_a = outer.bp_b;
    diam.bp_b = outer.bp_a;
    diam.glue_edge = side_edge(diam.bp_a, diam.bp_b);
    parts.push_back(diam);
    return parts;
  }

  BoundaryPart side_hi;  // radial side at +phi/2, outward to inward
  side_hi.kind = BoundaryPart::Kind::Side;
  side_hi.a = outer.b;
  side_hi.b = s_inner * dir(nd.phi / 2);
  side_hi.bp_a = outer.bp_b;
  side_hi.bp_b = corner_world_bp(cs, nd, ring_inner, u_at_hi);
  side_hi.glue_edge = side_edge(side_hi.bp_a, side_hi.bp_b);
  parts.push_back(side_hi);

  if (s_inner > 0.0) {
    BoundaryPart inner;
    inner.kind = BoundaryPart::Kind::Rim;
    inner.ring = ring_inner;
    inner.is_arc = true;
    inner.a = s_inner * dir(nd.phi / 2);
    inner.b = s_inner * dir(-nd.phi / 2);
    inner.radius = s_inner;
    inner.sweep = -nd.phi;
    inner.bp_a = corner_world_bp(cs, nd, ring_inner, u_at_hi);
    inner.bp_b = corner_world_bp(cs, nd, ring_inner, u_at_lo);
    parts.push_back(inner);
  }

  BoundaryPart side_lo;  // radial side at -phi/2, inward to outward
  side_lo.kind = BoundaryPart::Kind::Side;
  side_lo.a = s_inner * dir(-nd.phi / 2);
  side_lo.b = outer.a;
  side_lo.bp_a = corner_world_bp(cs, nd, ring_inner, u_at_lo);
  side_lo.bp_b = outer.bp_a;
  side_lo.glue_edge = side_edge(side_lo.bp_a, side_lo.bp_b);
  parts.push_back(side_lo);
  return parts;
}

DevNode make_node(const CutStructure& cs, int band, int half) {
  DevNode nd;
  nd.band = band;
  nd.half = half;
  nd.first_bp = cs.band_first_bp[band];
  nd.last_bp = cs.band_last_bp[band];
  const Band& b = cs.bands[band];
  if (b.kind == BandKind::Cylinder) {
    nd.cylinder = true;
    nd.rho = b.rho0;
    nd.slant = b.slant;
    return nd;
  }
  nd.s_first = b.apex_distance_s0;
  nd.s_second = b.apex_distance_s1;
  nd.sigma = nd.s_second > nd.s_first ? 1.0 : -1.0;
  nd.phi = sector_angle(b);
  return nd;
}

// Local coordinates of the glue side of edge `e` on this node, keyed by the
// edge's two vertex breakpoints.
std::pair<Vec2, Vec2> glue_side_local(const CutStructure& cs, const DevNode& nd, int e) {
  const int w0 = cs.edge_vertex_bp(e, 0);
  const int w1 = cs.edge_vertex_bp(e, 1);
  auto locate = [&](int w) -> Vec2 {
    for (int ring : {nd.first_bp, nd.last_bp})
      for (int u = 0; u < 2; ++u)
        if (corner_world_bp(cs, nd, ring, u) == w) return local_corner(nd, ring, u);
    throw Error(Errc::InvalidArgument, "breakpoint is not a corner of this half-band");
  };
  return {locate(w0), locate(w1)};
}

}  // namespace

std::vector<TemplatePiece> assemble_templates(const IconSpec& spec) {
  validate(spec);
  if (spec.k % spec.n == 0)
    throw Error(Errc::DegenerateTwist, "k = 0 names the uncut solid; no reglued templates exist");
  const CutStructure cs = make_cut_structure(spec);
  const auto faces = face_components(cs);

  std::map<std::pair<int, int>, int> edge_of_bps;
  for (int e = 0; e < cs.edge_count(); ++e)
    edge_of_bps[std::minmax(cs.edge_vertex_bp(e, 0), cs.edge_vertex_bp(e, 1))] = e;

  std::vector<TemplatePiece> pieces;

  for (const auto& face : faces) {
    // Node bookkeeping for this face.
    std::vector<DevNode> nodes;
    auto node_index = [&](int band, int half) {
      for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].band == band && nodes[i].half == half) return static_cast<int>(i);
      return -1;
    };
    for (const auto& hb : face.members) nodes.push_back(make_node(cs, hb.band, hb.half));

    struct GlueEdge {
      int e;
      int node_a;  // half A side
      int node_b;  // half B side
      bool used_for_placement = false;
      bool cut = false;
    };
    std::vector<GlueEdge> glue;
    for (int e : face.glue_edges)
      glue.push_back({e, node_index(cs.band_of_edge(e), 0), node_index(cs.band_of_edge_b(e), 1)});

    // Start at the half-band nearest mid-height, preferring half A, and pose
    // it with its opening side vertical.
    int start = 0;
    auto node_key = [&](const DevNode& nd) {
      const Band& b = cs.bands[nd.band];
      return std::make_tuple(std::abs(0.5 * (b.z0 + b.z1)), nd.band, nd.half);
    };
    for (size_t i = 1; i < nodes.size(); ++i)
      if (node_key(nodes[i]) < node_key(nodes[start])) start = static_cast<int>(i);
    {
      DevNode& nd = nodes[start];
      double pose = 0.0;
      if (!nd.cylinder) pose = kPi / 2 + nd.sigma * nd.phi / 2;
      nd.T = Iso2(Eigen::Rotation2Dd(pose));
      nd.placed = true;
    }

    // Place the remaining half-bands across shared glue sides. Annular faces
    // have one surplus glue edge, which stays open as the template's cut.
    bool progress = true;
    while (progress) {
      progress = false;
      for (auto& ge : glue) {
        DevNode& na = nodes[ge.node_a];
        DevNode& nb = nodes[ge.node_b];
        if (na.placed == nb.placed) continue;
        DevNode& src = na.placed ? na : nb;
        DevNode& dst = na.placed ? nb : na;
        const auto [p0, p1] = glue_side_local(cs, src, ge.e);
        const auto [q0, q1] = glue_side_local(cs, dst, ge.e);
        const Vec2 a0 = src.T * p0;
        const Vec2 a1 = src.T * p1;
        const double theta =
            std::atan2((a1 - a0).y(), (a1 - a0).x()) - std::atan2((q1 - q0).y(), (q1 - q0).x());
        Iso2 T = Iso2::Identity();
        T.translate(a0).rotate(theta).translate(-q0);
        dst.T = T;
        dst.placed = true;
        ge.used_for_placement = true;
        const double side_src = cross2(a1 - a0, src.T * local_interior_point(src) - a0);
        const double side_dst = cross2(a1 - a0, dst.T * local_interior_point(dst) - a0);
        if (side_src * side_dst >= 0.0)
          throw Error(Errc::InvalidArgument, "glued half-bands landed on the same side");
        progress = true;
      }
    }
    // A disk component glues along a spanning tree and every edge places a
    // half-band; an annular component has exactly one surplus edge, which is
    // left open as the template's cut.
    int cut_edge = -1;
    for (auto& ge : glue) {
      if (ge.used_for_placement) continue;
      ge.cut = true;
      if (cut_edge >= 0)
        throw Error(Errc::InvalidArgument, "more than one open glue edge in a component");
      cut_edge = ge.e;
    }
    if (face.annulus != (cut_edge >= 0))
      throw Error(Errc::InvalidArgument, "development disagrees with annulus classification");
    for (const auto& ge : glue) {
      if (ge.cut) continue;
      const auto [p0, p1] = glue_side_local(cs, nodes[ge.node_a], ge.e);
      const auto [q0, q1] = glue_side_local(cs, nodes[ge.node_b], ge.e);
      const double gap = std::max((nodes[ge.node_a].T * p0 - nodes[ge.node_b].T * q0).norm(),
                                  (nodes[ge.node_a].T * p1 - nodes[ge.node_b].T * q1).norm());
      if (gap > 1e-9 * cs.side)
        throw Error(Errc::InvalidArgument, "glued sides failed to coincide in the development");
    }

    // Boundary walk over the glued node cycles.
    std::vector<std::vector<BoundaryPart>> cycles;
    for (auto& nd : nodes) cycles.push_back(node_boundary(cs, nd, edge_of_bps));
    auto side_instance = [&](int e, int exclude_node) -> std::pair<int, int> {
      for (size_t ni = 0; ni < nodes.size(); ++ni) {
        if (static_cast<int>(ni) == exclude_node) continue;
        for (size_t pi = 0; pi < cycles[ni].size(); ++pi)
          if (cycles[ni][pi].kind == BoundaryPart::Kind::Side && cycles[ni][pi].glue_edge == e)
            return {static_cast<int>(ni), static_cast<int>(pi)};
      }
      throw Error(Errc::InvalidArgument, "missing partner side for a glue edge");
    };

    TemplatePiece piece;
    piece.traceable = face.annulus;
    int start_part = -1;
    for (size_t pi = 0; pi < cycles[start].size(); ++pi)
      if (cycles[start][pi].kind == BoundaryPart::Kind::Rim) {
        start_part = static_cast<int>(pi);
        break;
      }
    int ni = start;
    int pi = start_part;
    do {
      const BoundaryPart& part = cycles[ni][pi];
      if (part.kind == BoundaryPart::Kind::Side && part.glue_edge != cut_edge) {
        const auto [nj, pj] = side_instance(part.glue_edge, ni);
        const BoundaryPart& partner = cycles[nj][pj];
        if (partner.bp_a != part.bp_b || partner.bp_b != part.bp_a)
          throw Error(Errc::InvalidArgument, "glued sides traverse inconsistently");
        ni = nj;
        pi = (pj + 1) % static_cast<int>(cycles[nj].size());
        continue;
      }
      TemplatePiece::Element el;
      const DevNode& nd = nodes[ni];
      el.p0 = nd.T * part.a;
      el.p1 = nd.T * part.b;
      if (part.is_arc) {
        el.type = TemplatePiece::Element::Type::Arc;
        el.center = nd.T * Vec2(0, 0);
        el.radius = part.radius;
        el.sweep = part.sweep;
        el.length = part.radius * std::abs(part.sweep);
      } else {
        el.type = TemplatePiece::Element::Type::Segment;
        el.length = (el.p1 - el.p0).norm();
      }
      if (part.kind == BoundaryPart::Kind::Rim) {
        el.ring = part.ring;
        el.half = nd.half;
      } else {
        el.cut_edge = part.glue_edge;
      }
      el.bp0 = part.bp_a;
      el.bp1 = part.bp_b;
      piece.boundary.push_back(el);
      pi = (pi + 1) % static_cast<int>(cycles[ni].size());
    } while (!(ni == start && pi == start_part));
    pieces.push_back(std::move(piece));
  }

  // Seam pairing: every rim development appears exactly twice across all
  // pieces (the two faces flanking that vertex circle), as do the two sides
  // of each opened cut. Ids are assigned in deterministic key order.
  std::map<std::tuple<int, int, int>, std::vector<std::pair<int, int>>> seams;
  for (size_t p = 0; p < pieces.size(); ++p) {
    for (size_t e = 0; e < pieces[p].boundary.size(); ++e) {
      const auto& el = pieces[p].boundary[e];
      const auto key = el.ring >= 0 ? std::make_tuple(0, el.ring, el.half)
                                    : std::make_tuple(1, el.cut_edge, 0);
      seams[key].push_back({static_cast<int>(p), static_cast<int>(e)});
    }
  }
  int seam_id = 0;
  for (const auto& [key, locs] : seams) {
    if (locs.size() != 2)
      throw Error(Errc::InvalidArgument, "boundary element without a unique seam mate");
    auto& ea = pieces[locs[0].first].boundary[locs[0].second];
    auto& eb = pieces[locs[1].first].boundary[locs[1].second];
    ea.seam_id = eb.seam_id = seam_id++;
    ea.seam_side = 'a';
    eb.seam_side = 'b';
    ea.mate_piece = locs[1].first;
    ea.mate_element = locs[1].second;
    eb.mate_piece = locs[0].first;
    eb.mate_element = locs[0].second;
    const bool reversed = ea.bp0 == eb.bp1 && ea.bp1 == eb.bp0;
    ea.mate_reversed = eb.mate_reversed = reversed;
  }

  for (size_t p = 0; p < pieces.size(); ++p) {
    auto& piece = pieces[p];
    piece.start_marker_element = 0;
    for (size_t e = 0; e < piece.boundary.size(); ++e) {
      if (piece.boundary[e].mate_piece != static_cast<int>(p)) {
        piece.start_marker_element = static_cast<int>(e);
        break;
      }
    }
    const auto& el = piece.boundary[piece.start_marker_element];
    Vec2 mid, tangent;
    if (el.type == TemplatePiece::Element::Type::Arc) {
      const double a0 = std::atan2((el.p0 - el.center).y(), (el.p0 - el.center).x());
      const double am = a0 + el.sweep / 2;
      mid = el.center + el.radius * dir(am);
      tangent = (el.sweep > 0 ? 1.0 : -1.0) * Vec2(-std::sin(am), std::cos(am));
    } else {
      mid = 0.5 * (el.p0 + el.p1);
      tangent = (el.p1 - el.p0).normalized();
    }
    piece.start_marker_pos = mid;
    piece.start_marker_dir = Vec2(-tangent.y(), tangent.x());  // interior is left
  }
  return pieces;
}

std::vector<double> template_arc_lengths(const TemplatePiece& piece) {
  std::vector<double> lengths;
  for (const auto& el : piece.boundary) lengths.push_back(el.length);
  return lengths;
}

double piece_boundary_length(const TemplatePiece& piece) {
  double total = 0.0;
  for (const auto& el : piece.boundary) total += el.length;
  return total;
}

double piece_area(const TemplatePiece& piece) {
  double area = 0.0;
  for (const auto& el : piece.boundary) {
    if (el.type == TemplatePiece::Element::Type::Arc) {
      area += 0.5 * (cross2(el.center, el.p1 - el.p0) + el.radius * el.radius * el.sweep);
    } else {
      area += 0.5 * cross2(el.p0, el.p1);
    }
  }
  return area;
}

Box2 piece_bounds(const TemplatePiece& piece) {
  Box2 box{Vec2(1e300, 1e300), Vec2(-1e300, -1e300)};
  auto grow = [&box](const Vec2& p) {
    box.lo = box.lo.cwiseMin(p);
    box.hi = box.hi.cwiseMax(p);
  };
  for (const auto& el : piece.boundary) {
    grow(el.p0);
    grow(el.p1);
    if (el.type != TemplatePiece::Element::Type::Arc) continue;
    // Axis-aligned extremes reached within the arc's sweep.
    const double a0 = std::atan2((el.p0 - el.center).y(), (el.p0 - el.center).x());
    for (int q = -8; q <= 8; ++q) {
      const double cand = q * kPi / 2;
      const double t = (cand - a0) / el.sweep;
      if (t > 0.0 && t < 1.0) grow(el.center + el.radius * dir(cand));
    }
  }
  return box;
}

}  // namespace nkicon
