#include "nkicon/profile.hpp"

#include <cmath>
#include <numbers>

namespace nkicon {

namespace {
constexpr double kPi = std::numbers::pi;
}

const char* to_string(Axis axis) {
  switch (axis) {
    case Axis::VV: return "vv";
    case Axis::MM: return "mm";
    case Axis::Odd: return "odd";
  }
  return "?";
}

Axis axis_from_string(const std::string& s) {
  if (s == "vv") return Axis::VV;
  if (s == "mm") return Axis::MM;
  if (s == "odd") return Axis::Odd;
  throw Error(Errc::InvalidArgument, "unknown axis '" + s + "' (expected vv, mm or odd)");
}

void validate(const IconSpec& spec) {
  if (spec.n < 3) throw Error(Errc::InvalidArgument, "n must be >= 3");
  if (!(spec.side > 0.0)) throw Error(Errc::InvalidArgument, "side must be > 0");
  if (spec.segments < 8 || spec.segments % 2 != 0)
    throw Error(Errc::InvalidArgument, "segments must be even and >= 8");
  if (spec.k < 0) throw Error(Errc::InvalidArgument, "k must be >= 0");
  const bool odd = spec.n % 2 != 0;
  if (odd && spec.axis != Axis::Odd)
    throw Error(Errc::ParityMismatch, "odd n admits only the vertex-to-edge-midpoint axis");
  if (!odd && spec.axis == Axis::Odd)
    throw Error(Errc::ParityMismatch, "even n requires axis vv or mm");
}

double circumradius(int n, double side) { return side / (2.0 * std::sin(kPi / n)); }

double apothem(int n, double side) { return side / (2.0 * std::tan(kPi / n)); }

std::vector<Vec2> cross_section_polygon(int n, Axis axis, double side) {
  const double R = circumradius(n, side);
  const double ap = apothem(n, side);
  // Breakpoint j sits at angle j*pi/n from +z toward +x, at circumradius for
  // polygon vertices and apothem for edge midpoints. Vertices occupy even j
  // for VV and odd axes, odd j for MM.
  const int vertex_parity = (axis == Axis::MM) ? 1 : 0;
  std::vector<Vec2> bp(2 * n);
  const int half = n / 2;  // compute the upper-right arc, derive the rest
  for (int j = 0; j <= (n % 2 == 0 ? half : n); ++j) {
    const double r = (j % 2 == vertex_parity) ? R : ap;
    const double beta = j * kPi / n;
    bp[j] = Vec2(r * std::sin(beta), r * std::cos(beta));
  }
  bp[0].x() = 0.0;
  if (n % 2 == 0) {
    for (int j = half + 1; j <= n; ++j) bp[j] = Vec2(bp[n - j].x(), -bp[n - j].y());
  } else {
    bp[n].x() = 0.0;
    bp[n].y() = bp[n - 1].y();  // flat base: midpoint level with its vertices
  }
  if (axis == Axis::MM) {
    bp[0].y() = bp[1].y();  // flat caps: center level with the cap rim
    if (n % 2 == 0) bp[n].y() = bp[n - 1].y();
  }
  for (int j = n + 1; j < 2 * n; ++j) bp[j] = Vec2(-bp[2 * n - j].x(), bp[2 * n - j].y());
  return bp;
}

Profile make_profile(const IconSpec& spec) {
  validate(spec);
  const auto bp = cross_section_polygon(spec.n, spec.axis, spec.side);
  const int vertex_parity = (spec.axis == Axis::MM) ? 1 : 0;
  Profile p;
  p.n = spec.n;
  p.axis = spec.axis;
  p.side = spec.side;
  for (int j = 0; j <= spec.n; ++j) {
    if (j == 0 || j == spec.n || j % 2 == vertex_parity)
      p.vertices.push_back({bp[j].y(), bp[j].x()});
  }
  return p;
}

std::vector<Band> band_geometry(const Profile& profile) {
  std::vector<Band> bands;
  for (size_t i = 0; i + 1 < profile.vertices.size(); ++i) {
    const auto& a = profile.vertices[i];
    const auto& b = profile.vertices[i + 1];
    Band band;
    band.z0 = a.z;
    band.rho0 = a.rho;
    band.z1 = b.z;
    band.rho1 = b.rho;
    band.slant = std::hypot(b.z - a.z, b.rho - a.rho);
    const bool apex0 = a.rho == 0.0;
    const bool apex1 = b.rho == 0.0;
    if (a.z == b.z) {
      // A flat cap also has one rim on the axis; flatness wins.
      band.kind = BandKind::FlatDiskOrAnnulus;
      band.apex_distance_s0 = a.rho;
      band.apex_distance_s1 = b.rho;
    } else if (apex0 != apex1) {
      band.kind = BandKind::ApexCone;
      band.apex_distance_s0 = apex0 ? 0.0 : band.slant;
      band.apex_distance_s1 = apex1 ? 0.0 : band.slant;
    } else if (a.rho == b.rho) {
      band.kind = BandKind::Cylinder;
      band.apex_distance_s0 = kInfApexDistance;
      band.apex_distance_s1 = kInfApexDistance;
    } else {
      band.kind = BandKind::ConeFrustum;
      const double dr = std::abs(b.rho - a.rho);
      band.apex_distance_s0 = band.slant * a.rho / dr;
      band.apex_distance_s1 = band.slant * b.rho / dr;
    }
    bands.push_back(band);
  }
  return bands;
}

std::vector<int> canonical_twists(int n, Axis axis) {
  if (n < 3) throw Error(Errc::InvalidArgument, "n must be >= 3");
  const bool odd = n % 2 != 0;
  if (odd && axis != Axis::Odd)
    throw Error(Errc::ParityMismatch, "odd n admits only the vertex-to-edge-midpoint axis");
  if (!odd && axis == Axis::Odd)
    throw Error(Errc::ParityMismatch, "even n requires axis vv or mm");
  const int k_max = odd ? (n - 1) / 2 : n / 4;
  std::vector<int> ks;
  for (int k = 0; k <= k_max; ++k) ks.push_back(k);
  return ks;
}

}  // namespace nkicon
