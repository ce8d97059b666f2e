#pragma once

#include <string>
#include <vector>

#include "nkicon/classify.hpp"
#include "nkicon/dform.hpp"
#include "nkicon/mesh.hpp"

namespace nkicon {

// Binary STL: 80-byte header, uint32 triangle count, little-endian float32
// triangles with computed facet normals.
void write_stl(const IconMesh& mesh, const std::string& path);

struct StlTriangle {
  float normal[3];
  float v[3][3];
};

std::vector<StlTriangle> read_stl(const std::string& path);

double stl_volume(const std::vector<StlTriangle>& tris);

// ASCII OBJ: one `o` group per surface component, edge curves appended as
// `l` polyline records under a final `g edges` group.
void write_obj(const IconMesh& mesh, const std::string& path);

std::string classification_json(int n, int k, Axis axis, const FeatureCount& counts,
                                const Designation& designation);

std::string survey_csv(int n_max);

std::string seam_csv(const SeamPairing& seam, double offset_or_start);
std::string seam_json(const SeamPairing& seam, double offset_or_start);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace nkicon
