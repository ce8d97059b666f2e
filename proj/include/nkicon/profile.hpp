#pragma once

#include <Eigen/Dense>
#include <limits>
#include <vector>

#include "nkicon/error.hpp"

namespace nkicon {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

// Symmetry axis of the generating polygon. Even n admits VV (through two
// opposite vertices) or MM (through two opposite edge midpoints); odd n has
// a single axis type, vertex to opposite edge midpoint.
enum class Axis { VV, MM, Odd };

const char* to_string(Axis axis);
Axis axis_from_string(const std::string& s);

// Recipe for one generalized sphericon: regular n-gon, twist of k polygon
// steps (rotation 2*pi*k/n between cutting and regluing), axis choice,
// polygon side length in mm, and angular tessellation count per revolution.
struct IconSpec {
  int n = 4;
  int k = 1;
  Axis axis = Axis::VV;
  double side = 60.0;    // polygon side length [mm]
  int segments = 512;    // even, >= 8; the cut plane must lie on seams
};

// Throws Error(ParityMismatch / InvalidArgument) on violated invariants.
void validate(const IconSpec& spec);

double circumradius(int n, double side);
double apothem(int n, double side);

// Cross-section of the solid of revolution by the cut plane: the full 2n-gon
// boundary sampled at polygon vertices and edge midpoints, in (x, z)
// coordinates with the revolution axis along z. Index 0 is the topmost
// on-axis point; indices increase toward +x. Positions are constructed so
// that mirror symmetries and flat caps hold bitwise.
std::vector<Vec2> cross_section_polygon(int n, Axis axis, double side);

struct ProfilePoint {
  double z;    // position along the revolution axis [mm]
  double rho;  // radial distance, >= 0 [mm]
};

// Half cross-section from one axis intersection to the other: the polygon
// vertices swept by the revolution, plus the two on-axis endpoints.
struct Profile {
  int n = 0;
  Axis axis = Axis::VV;
  double side = 0.0;
  std::vector<ProfilePoint> vertices;
};

Profile make_profile(const IconSpec& spec);

enum class BandKind { ConeFrustum, Cylinder, FlatDiskOrAnnulus, ApexCone };

// One surface-of-revolution band swept by a polygon edge (or half-edge for
// the flat caps). Apex distances are measured along the cone surface from
// the (possibly virtual) apex to each rim; infinite for cylinders, equal to
// rho for flat bands.
struct Band {
  double z0, rho0;
  double z1, rho1;
  BandKind kind;
  double slant;
  double apex_distance_s0;
  double apex_distance_s1;
};

std::vector<Band> band_geometry(const Profile& profile);

// Canonical twist values (chirality representatives): 0 <= k < n/2 for odd
// n, 0 <= k <= n/4 for even n. k = 0 names the uncut solid and is rejected
// by classification.
std::vector<int> canonical_twists(int n, Axis axis);

inline constexpr double kInfApexDistance = std::numeric_limits<double>::infinity();

}  // namespace nkicon
