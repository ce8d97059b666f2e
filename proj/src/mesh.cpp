#include "nkicon/mesh.hpp"

#include <Eigen/Geometry>
#include <cmath>
#include <numbers>

namespace nkicon {

namespace {
constexpr double kPi = std::numbers::pi;
}

GluingMap build_gluing(const IconSpec& spec) {
  validate(spec);
  GluingMap g;
  g.n = spec.n;
  g.k = ((spec.k % spec.n) + spec.n) % spec.n;
  for (int j = 0; j < spec.n; ++j) {
    g.face_pairing.push_back((j + g.k) % spec.n);
    g.vertex_pairing.push_back((j + g.k) % spec.n);
  }
  return g;
}

namespace {

// Vertex indexing for the glued tessellation. Ring j (breakpoint j of the
// right profile, j = 0..n) is sampled at angles theta_i = 2*pi*i/S; half A
// owns i = 0..S/2, half B owns i = S/2..S. Cut-plane samples are shared
// breakpoint vertices referenced by index from both halves, which makes the
// reglue watertight without any epsilon welding.
class VertexTable {
 public:
  VertexTable(const CutStructure& cs, int segments)
      : cs_(cs), S_(segments), half_(segments / 2) {
    const int n = cs.n;
    const int nb = 2 * n;
    glue_.resize(nb);
    for (int m = 0; m < nb; ++m) {
      glue_[m] = add(Vec3(cs.bp[m].x(), 0.0, cs.bp[m].y()));
    }
    const double alpha = 2.0 * kPi * cs.k / n;
    const Eigen::Matrix3d rot = Eigen::AngleAxisd(alpha, Vec3::UnitY()).toRotationMatrix();
    interior_a_.assign(n + 1, {});
    interior_b_.assign(n + 1, {});
    for (int j = 0; j <= n; ++j) {
      const double rho = cs.ring_rho(j);
      const double z = cs.ring_z(j);
      if (rho == 0.0) continue;
      interior_a_[j].resize(half_ - 1);
      interior_b_[j].resize(half_ - 1);
      for (int i = 1; i < half_; ++i) {
        const double th = 2.0 * kPi * i / S_;
        interior_a_[j][i - 1] = add(Vec3(rho * std::cos(th), rho * std::sin(th), z));
      }
      for (int i = half_ + 1; i < S_; ++i) {
        const double th = 2.0 * kPi * i / S_;
        const Vec3 p(rho * std::cos(th), rho * std::sin(th), z);
        interior_b_[j][i - half_ - 1] = add(rot * p);
      }
    }
  }

  // half A: i in [0, S/2]; half B: i in [S/2, S].
  int vid(int j, int i, int half) const {
    const int nb = 2 * cs_.n;
    if (cs_.ring_rho(j) == 0.0) return glue_[half == 0 ? j : cs_.rotated_bp(j)];
    if (half == 0) {
      if (i == 0) return glue_[j];
      if (i == half_) return glue_[(nb - j) % nb];
      return interior_a_[j][i - 1];
    }
    if (i == half_) return glue_[cs_.rotated_bp((nb - j) % nb)];
    if (i == S_) return glue_[cs_.rotated_bp(j)];
    return interior_b_[j][i - half_ - 1];
  }

  const std::vector<Vec3>& vertices() const { return verts_; }
  int segments() const { return S_; }

 private:
  int add(const Vec3& p) {
    verts_.push_back(p);
    return static_cast<int>(verts_.size()) - 1;
  }

  const CutStructure& cs_;
  int S_;
  int half_;
  std::vector<Vec3> verts_;
  std::vector<int> glue_;
  std::vector<std::vector<int>> interior_a_;
  std::vector<std::vector<int>> interior_b_;
};

}  // namespace

IconMesh synthesize_mesh(const IconSpec& spec) {
  validate(spec);
  const CutStructure cs = make_cut_structure(spec);
  const int S = spec.segments;
  const int half = S / 2;
  VertexTable table(cs, S);

  const auto faces = face_components(cs);
  std::vector<std::vector<int>> comp_of(cs.bands.size(), std::vector<int>(2, -1));
  for (size_t f = 0; f < faces.size(); ++f)
    for (const auto& hb : faces[f].members) comp_of[hb.band][hb.half] = static_cast<int>(f);

  IconMesh mesh;
  for (const auto& f : faces) mesh.components.push_back({f.annulus});

  auto emit = [&](int a, int b, int c, int comp) {
    if (a == b || b == c || a == c) return;
    mesh.triangles.push_back({a, b, c});
    mesh.triangle_component.push_back(comp);
  };

  for (int j = 0; j < cs.n; ++j) {
    int band = -1;
    for (size_t b = 0; b < cs.bands.size(); ++b)
      if (cs.band_first_bp[b] <= j && j < cs.band_last_bp[b]) band = static_cast<int>(b);
    for (int h = 0; h < 2; ++h) {
      const int comp = comp_of[band][h];
      const int i0 = (h == 0) ? 0 : half;
      for (int i = i0; i < i0 + half; ++i) {
        const int a = table.vid(j, i, h);
        const int b = table.vid(j, i + 1, h);
        const int c = table.vid(j + 1, i, h);
        const int d = table.vid(j + 1, i + 1, h);
        emit(a, c, d, comp);
        emit(a, d, b, comp);
      }
    }
  }
  mesh.vertices = table.vertices();

  // Edge curves: concatenate the tessellated semicircle arcs along each
  // reassembled chain. Shared breakpoint vertices make the joints exact.
  for (const auto& chain : edge_curve_chains(cs)) {
    EdgeCurve curve;
    curve.closed = chain.closed;
    for (const auto& arc : chain.arcs) {
      std::vector<int> ids;
      const int i0 = (arc.half == 0) ? 0 : half;
      for (int i = i0; i <= i0 + half; ++i) ids.push_back(table.vid(arc.ring, i, arc.half));
      if (arc.reversed) std::reverse(ids.begin(), ids.end());
      if (curve.vertex_ids.empty())
        curve.vertex_ids = ids;
      else
        curve.vertex_ids.insert(curve.vertex_ids.end(), ids.begin() + 1, ids.end());
    }
    if (curve.closed)
      curve.vertex_ids.pop_back();
    else
      curve.endpoint_ids = {curve.vertex_ids.front(), curve.vertex_ids.back()};
    mesh.edge_curves.push_back(std::move(curve));
  }
  return mesh;
}

MeshChecks check_mesh(const IconMesh& mesh) {
  MeshChecks out;
  out.vertex_count = static_cast<long>(mesh.vertices.size());
  out.triangle_count = static_cast<long>(mesh.triangles.size());
  std::map<std::pair<int, int>, std::pair<int, int>> edges;  // (fwd uses, bwd uses)
  for (const auto& t : mesh.triangles) {
    for (int e = 0; e < 3; ++e) {
      const int a = t[e];
      const int b = t[(e + 1) % 3];
      if (a < b)
        edges[{a, b}].first++;
      else
        edges[{b, a}].second++;
    }
  }
  out.edge_count = static_cast<long>(edges.size());
  out.closed_manifold = true;
  for (const auto& [key, uses] : edges)
    if (uses.first != 1 || uses.second != 1) out.closed_manifold = false;
  out.euler_characteristic = out.vertex_count - out.edge_count + out.triangle_count;
  return out;
}

namespace {

void require_closed(const IconMesh& mesh) {
  if (!check_mesh(mesh).closed_manifold)
    throw Error(Errc::NonManifold, "mesh is not a closed 2-manifold");
}

}  // namespace

double mesh_volume(const IconMesh& mesh) {
  require_closed(mesh);
  double six_v = 0.0;
  for (const auto& t : mesh.triangles) {
    const Vec3& a = mesh.vertices[t[0]];
    const Vec3& b = mesh.vertices[t[1]];
    const Vec3& c = mesh.vertices[t[2]];
    six_v += a.dot(b.cross(c));
  }
  return six_v / 6.0;
}

double total_angle_defect(const IconMesh& mesh) {
  require_closed(mesh);
  std::vector<double> angle_sum(mesh.vertices.size(), 0.0);
  for (const auto& t : mesh.triangles) {
    for (int c = 0; c < 3; ++c) {
      const Vec3& p = mesh.vertices[t[c]];
      const Vec3 u = mesh.vertices[t[(c + 1) % 3]] - p;
      const Vec3 v = mesh.vertices[t[(c + 2) % 3]] - p;
      angle_sum[t[c]] += std::atan2(u.cross(v).norm(), u.dot(v));
    }
  }
  double defect = 0.0;
  for (double s : angle_sum) defect += 2.0 * kPi - s;
  return defect;
}

}  // namespace nkicon
