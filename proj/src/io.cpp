#include "nkicon/io.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace nkicon {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error(Errc::Io, "write failed for '" + path + "'");
}

void write_stl(const IconMesh& mesh, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot open '" + path + "' for writing");
  char header[80] = {};
  std::strncpy(header, "nkicon binary STL", sizeof(header) - 1);
  out.write(header, 80);
  const uint32_t count = static_cast<uint32_t>(mesh.triangles.size());
  out.write(reinterpret_cast<const char*>(&count), 4);
  for (const auto& t : mesh.triangles) {
    const Vec3& a = mesh.vertices[t[0]];
    const Vec3& b = mesh.vertices[t[1]];
    const Vec3& c = mesh.vertices[t[2]];
    Vec3 n = (b - a).cross(c - a);
    const double len = n.norm();
    if (len > 0) n /= len;
    float rec[12] = {static_cast<float>(n.x()),  static_cast<float>(n.y()),
                     static_cast<float>(n.z()),  static_cast<float>(a.x()),
                     static_cast<float>(a.y()),  static_cast<float>(a.z()),
                     static_cast<float>(b.x()),  static_cast<float>(b.y()),
                     static_cast<float>(b.z()),  static_cast<float>(c.x()),
                     static_cast<float>(c.y()),  static_cast<float>(c.z())};
    out.write(reinterpret_cast<const char*>(rec), 48);
    const uint16_t attr = 0;
    out.write(reinterpret_cast<const char*>(&attr), 2);
  }
  if (!out) throw Error(Errc::Io, "write failed for '" + path + "'");
}

std::vector<StlTriangle> read_stl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open '" + path + "' for reading");
  char header[80];
  in.read(header, 80);
  uint32_t count = 0;
  in.read(reinterpret_cast<char*>(&count), 4);
  std::vector<StlTriangle> tris(count);
  for (auto& t : tris) {
    float rec[12];
    in.read(reinterpret_cast<char*>(rec), 48);
    uint16_t attr;
    in.read(reinterpret_cast<char*>(&attr), 2);
    std::memcpy(t.normal, rec, 12);
    std::memcpy(t.v, rec + 3, 36);
  }
  if (!in) throw Error(Errc::Io, "truncated STL file '" + path + "'");
  return tris;
}

double stl_volume(const std::vector<StlTriangle>& tris) {
  double six_v = 0.0;
  for (const auto& t : tris) {
    const Vec3 a(t.v[0][0], t.v[0][1], t.v[0][2]);
    const Vec3 b(t.v[1][0], t.v[1][1], t.v[1][2]);
    const Vec3 c(t.v[2][0], t.v[2][1], t.v[2][2]);
    six_v += a.dot(b.cross(c));
  }
  return six_v / 6.0;
}

void write_obj(const IconMesh& mesh, const std::string& path) {
  std::ostringstream out;
  out << "# nkicon OBJ export\n";
  for (const auto& v : mesh.vertices)
    out << "v " << num(v.x()) << " " << num(v.y()) << " " << num(v.z()) << "\n";
  for (size_t c = 0; c < mesh.components.size(); ++c) {
    out << "# " << (mesh.components[c].traceable ? "traceable" : "other") << "\n";
    out << "o surface-" << c << "\n";
    for (size_t t = 0; t < mesh.triangles.size(); ++t) {
      if (mesh.triangle_component[t] != static_cast<int>(c)) continue;
      const auto& tri = mesh.triangles[t];
      out << "f " << tri[0] + 1 << " " << tri[1] + 1 << " " << tri[2] + 1 << "\n";
    }
  }
  if (!mesh.edge_curves.empty()) {
    out << "g edges\n";
    for (const auto& curve : mesh.edge_curves) {
      out << "l";
      for (int id : curve.vertex_ids) out << " " << id + 1;
      if (curve.closed) out << " " << curve.vertex_ids.front() + 1;
      out << "\n";
    }
  }
  write_text_file(path, out.str());
}

std::string classification_json(int n, int k, Axis axis, const FeatureCount& counts,
                                const Designation& designation) {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["k"] = k;
  j["axis"] = to_string(axis);
  j["closed_edges"] = counts.closed_edges;
  j["open_edges"] = counts.open_edges;
  j["traceable_surfaces"] = counts.traceable_surfaces;
  j["other_surfaces"] = counts.other_surfaces;
  j["designation"] = to_string(designation.kind);
  j["reason"] = designation.reason;
  return j.dump(2) + "\n";
}

std::string survey_csv(int n_max) {
  if (n_max < 3) throw Error(Errc::InvalidArgument, "n_max must be >= 3");
  std::ostringstream out;
  out << "n,k,axis,closed_edges,open_edges,traceable_surfaces,other_surfaces,"
         "trace_closed,trace_open,trace_traceable,trace_other,match,designation\n";
  for (int n = 3; n <= n_max; ++n) {
    std::vector<Axis> axes =
        n % 2 ? std::vector<Axis>{Axis::Odd} : std::vector<Axis>{Axis::VV, Axis::MM};
    for (Axis axis : axes) {
      for (int k : canonical_twists(n, axis)) {
        if (k == 0) continue;
        const FeatureCount f = feature_counts_formula(n, k, axis);
        const FeatureCount t = feature_counts_trace({n, k, axis, 1.0, 8});
        const Designation d = designate(n, k, axis);
        out << n << "," << k << "," << to_string(axis) << "," << f.closed_edges << ","
            << f.open_edges << "," << f.traceable_surfaces << "," << f.other_surfaces << ","
            << t.closed_edges << "," << t.open_edges << "," << t.traceable_surfaces << ","
            << t.other_surfaces << "," << (f == t ? "true" : "false") << "," << to_string(d.kind)
            << "\n";
      }
    }
  }
  return out.str();
}

std::string seam_csv(const SeamPairing& seam, double offset_or_start) {
  std::ostringstream out;
  out << "# perimeter=" << num(seam.perimeter) << ",";
  out << (seam.closed ? "offset=" : "start=") << num(offset_or_start);
  out << ",closed=" << (seam.closed ? "true" : "false");
  out << ",degenerate_flat=" << (seam.degenerate_flat ? "true" : "false");
  if (!seam.endpoints.empty()) {
    out << ",endpoints=";
    for (size_t i = 0; i < seam.endpoints.size(); ++i)
      out << (i ? ";" : "") << num(seam.endpoints[i]);
  }
  if (!seam.note.empty()) out << ",note=\"" << seam.note << "\"";
  out << "\ns_a,s_b\n";
  for (const auto& p : seam.pairs) out << num(p[0]) << "," << num(p[1]) << "\n";
  return out.str();
}

std::string seam_json(const SeamPairing& seam, double offset_or_start) {
  nlohmann::ordered_json j;
  j["perimeter"] = seam.perimeter;
  j[seam.closed ? "offset" : "start"] = offset_or_start;
  j["closed"] = seam.closed;
  j["degenerate_flat"] = seam.degenerate_flat;
  j["endpoints"] = seam.endpoints;
  j["note"] = seam.note;
  auto& pairs = j["pairs"] = nlohmann::ordered_json::array();
  for (const auto& p : seam.pairs) pairs.push_back({p[0], p[1]});
  return j.dump(2) + "\n";
}

}  // namespace nkicon
