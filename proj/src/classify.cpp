#include "nkicon/classify.hpp"

#include <numeric>

namespace nkicon {

namespace {

void check_axis(int n, Axis axis) {
  const bool odd = n % 2 != 0;
  if (odd && axis != Axis::Odd)
    throw Error(Errc::ParityMismatch, "odd n admits only the vertex-to-edge-midpoint axis");
  if (!odd && axis == Axis::Odd)
    throw Error(Errc::ParityMismatch, "even n requires axis vv or mm");
}

void check_twist(int n, int k, Axis axis) {
  check_axis(n, axis);
  if (degenerate_twist(n, k, axis))
    throw Error(Errc::DegenerateTwist,
                "twist k=" + std::to_string(k) + " reproduces the uncut solid for n=" +
                    std::to_string(n) + "; feature counts presume an actual cut");
}

}  // namespace

const char* to_string(DesignationKind kind) {
  switch (kind) {
    case DesignationKind::PitaForm: return "PITA_FORM";
    case DesignationKind::DForm: return "D_FORM";
    case DesignationKind::Neither: return "NEITHER";
  }
  return "?";
}

bool degenerate_twist(int n, int k, Axis axis) {
  check_axis(n, axis);
  const int km = ((k % n) + n) % n;
  if (km == 0) return true;
  // For even n a half-turn twist is a symmetry of the solid of revolution,
  // so regluing reproduces the uncut solid as well.
  return n % 2 == 0 && km == n / 2;
}

FeatureCount feature_counts_formula(int n, int k, Axis axis) {
  if (n < 3) throw Error(Errc::InvalidArgument, "n must be >= 3");
  check_twist(n, k, axis);
  const int km = ((k % n) + n) % n;
  FeatureCount c;
  if (axis == Axis::Odd) {
    const int g = std::gcd(n, km);
    c.closed_edges = (g - 1) / 2;
    c.open_edges = 1;
    c.traceable_surfaces = (g - 1) / 2;
    c.other_surfaces = 1;
  } else {
    const int g = std::gcd(n / 2, km);
    if (axis == Axis::VV) {
      c.closed_edges = g - 1;
      c.open_edges = 2;
      c.traceable_surfaces = g;
      c.other_surfaces = 0;
    } else {
      c.closed_edges = g;
      c.open_edges = 0;
      c.traceable_surfaces = g - 1;
      c.other_surfaces = 2;
    }
  }
  return c;
}

FeatureCount feature_counts_trace(const IconSpec& spec) {
  if (spec.n < 3) throw Error(Errc::InvalidArgument, "n must be >= 3");
  check_twist(spec.n, spec.k, spec.axis);
  const CutStructure cs = make_cut_structure(spec.n, spec.k, spec.axis, 1.0);
  FeatureCount c;
  for (const auto& chain : edge_curve_chains(cs)) {
    if (chain.closed)
      ++c.closed_edges;
    else
      ++c.open_edges;
  }
  for (const auto& face : face_components(cs)) {
    if (face.annulus)
      ++c.traceable_surfaces;
    else
      ++c.other_surfaces;
  }
  return c;
}

Designation designate(const FeatureCount& counts) {
  Designation d;
  if (counts.total_surfaces() == 1 && counts.open_edges == 1 && counts.closed_edges == 0) {
    d.kind = DesignationKind::PitaForm;
    d.reason = "one surface and one edge running between two distinct endpoints";
  } else if (counts.total_surfaces() == 2 && counts.closed_edges == 1 && counts.open_edges == 0) {
    d.kind = DesignationKind::DForm;
    d.reason = "two surfaces and one closed edge";
  } else {
    d.kind = DesignationKind::Neither;
    d.reason = std::to_string(counts.total_surfaces()) + " surface(s), " +
               std::to_string(counts.closed_edges) + " closed and " +
               std::to_string(counts.open_edges) + " open edge(s)";
  }
  return d;
}

Designation designate(int n, int k, Axis axis) {
  return designate(feature_counts_formula(n, k, axis));
}

}  // namespace nkicon
