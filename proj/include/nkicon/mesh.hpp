#pragma once

#include <array>
#include <map>
#include <vector>

#include "nkicon/cut_structure.hpp"
#include "nkicon/profile.hpp"

namespace nkicon {

// Bijective pairing of the two cut faces: cut-face edge j on half A is glued
// to edge (j + k) mod n on half B, and likewise for polygon vertices.
struct GluingMap {
  int n = 0;
  int k = 0;
  std::vector<int> face_pairing;    // j -> (j + k) % n
  std::vector<int> vertex_pairing;  // j -> (j + k) % n
};

GluingMap build_gluing(const IconSpec& spec);

struct EdgeCurve {
  bool closed = false;
  std::vector<int> vertex_ids;              // polyline; closed curves omit the repeat
  std::array<int, 2> endpoint_ids{-1, -1};  // open curves only
};

struct SurfaceComponent {
  bool traceable = false;
};

// Watertight triangle mesh of an (n,k)-icon, with the reassembled vertex
// circles tagged as edge curves and each triangle labeled by its surface
// component.
struct IconMesh {
  std::vector<Vec3> vertices;                 // mm
  std::vector<std::array<int, 3>> triangles;  // outward orientation
  std::vector<int> triangle_component;
  std::vector<SurfaceComponent> components;
  std::vector<EdgeCurve> edge_curves;
};

// Tessellates both halves on a shared ring/angle grid and reglues by vertex
// index, so the result is watertight by construction for every k.
IconMesh synthesize_mesh(const IconSpec& spec);

struct MeshChecks {
  bool closed_manifold = false;
  long vertex_count = 0;
  long edge_count = 0;
  long triangle_count = 0;
  long euler_characteristic = 0;
};

MeshChecks check_mesh(const IconMesh& mesh);

// Signed-tetrahedron volume sum; positive for outward-oriented watertight
// meshes. Throws Error(NonManifold) when the mesh is not closed.
double mesh_volume(const IconMesh& mesh);

// Sum over vertices of (2*pi - incident triangle angles); 4*pi for any
// closed genus-0 mesh. Throws Error(NonManifold) when the mesh is not closed.
double total_angle_defect(const IconMesh& mesh);

}  // namespace nkicon
