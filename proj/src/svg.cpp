#include "nkicon/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace nkicon {

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v == 0.0 ? 0.0 : v);  // avoid -0
  return buf;
}

const char* seam_color(int seam_id) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
                                  "#bcbd22", "#7f7f7f", "#aec7e8", "#98df8a"};
  return palette[seam_id % 12];
}

struct Mapper {
  Vec2 offset;
  double height;
  Vec2 operator()(const Vec2& p) const {
    return Vec2(p.x() + offset.x(), height - (p.y() + offset.y()));
  }
};

void append_element_path(std::string& d, const TemplatePiece::Element& el, const Mapper& map,
                         bool move_first) {
  const Vec2 a = map(el.p0);
  const Vec2 b = map(el.p1);
  if (move_first) d += "M " + num(a.x()) + " " + num(a.y()) + " ";
  if (el.type == TemplatePiece::Element::Type::Arc) {
    const int large = std::abs(el.sweep) > kPi ? 1 : 0;
    // The y-flip reverses handedness: ccw geometry arcs render with sweep 0.
    const int sf = el.sweep > 0 ? 0 : 1;
    d += "A " + num(el.radius) + " " + num(el.radius) + " 0 " + std::to_string(large) + " " +
         std::to_string(sf) + " " + num(b.x()) + " " + num(b.y()) + " ";
  } else {
    d += "L " + num(b.x()) + " " + num(b.y()) + " ";
  }
}

}  // namespace

std::string emit_svg(const std::vector<TemplatePiece>& pieces, const SvgOptions& opt) {
  // Row layout in geometry coordinates, then a single y-flip at emission.
  std::vector<Vec2> offsets(pieces.size(), Vec2(0, 0));
  double x = opt.margin_mm;
  double max_h = 0.0;
  for (size_t i = 0; i < pieces.size(); ++i) {
    const Box2 box = piece_bounds(pieces[i]);
    offsets[i] = Vec2(x - box.lo.x(), opt.margin_mm - box.lo.y());
    x += box.width() + opt.gap_mm;
    max_h = std::max(max_h, box.height());
  }
  const double width = pieces.empty() ? 2 * opt.margin_mm : x - opt.gap_mm + opt.margin_mm;
  const double height = 2 * opt.margin_mm + max_h;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "mm\" height=\""
      << num(height) << "mm\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  for (size_t i = 0; i < pieces.size(); ++i) {
    const auto& piece = pieces[i];
    const Mapper map{offsets[i], height};
    out << "  <g id=\"piece-" << i << "\">\n";
    std::string d;
    for (size_t e = 0; e < piece.boundary.size(); ++e)
      append_element_path(d, piece.boundary[e], map, e == 0);
    d += "Z";
    out << "    <path d=\"" << d << "\" fill=\"none\" stroke=\"black\" stroke-width=\""
        << num(opt.stroke_mm) << "\"/>\n";
    if (opt.labels) {
      for (const auto& el : piece.boundary) {
        std::string ds;
        append_element_path(ds, el, map, true);
        out << "    <path d=\"" << ds << "\" fill=\"none\" stroke=\"" << seam_color(el.seam_id)
            << "\" stroke-width=\"" << num(opt.stroke_mm / 2) << "\" stroke-dasharray=\"2 1\"/>\n";
        Vec2 mid;
        if (el.type == TemplatePiece::Element::Type::Arc) {
          const double a0 = std::atan2((el.p0 - el.center).y(), (el.p0 - el.center).x());
          const double am = a0 + el.sweep / 2;
          mid = el.center + el.radius * Vec2(std::cos(am), std::sin(am));
        } else {
          mid = 0.5 * (el.p0 + el.p1);
        }
        const Vec2 tp = map(mid);
        out << "    <text x=\"" << num(tp.x()) << "\" y=\"" << num(tp.y())
            << "\" font-size=\"2.5\" fill=\"" << seam_color(el.seam_id) << "\">seam-" << el.seam_id
            << "-" << el.seam_side << "</text>\n";
      }
      // Start marker: arrow pointing into the piece at the suggested first
      // join point.
      const Vec2 tip = map(piece.start_marker_pos);
      const Vec2 dirv = Vec2(piece.start_marker_dir.x(), -piece.start_marker_dir.y()).normalized();
      const Vec2 tail = tip - 5.0 * dirv;
      const Vec2 side(-dirv.y(), dirv.x());
      const Vec2 w1 = tip - 1.5 * dirv + 0.9 * side;
      const Vec2 w2 = tip - 1.5 * dirv - 0.9 * side;
      out << "    <path d=\"M " << num(tail.x()) << " " << num(tail.y()) << " L " << num(tip.x())
          << " " << num(tip.y()) << " M " << num(w1.x()) << " " << num(w1.y()) << " L "
          << num(tip.x()) << " " << num(tip.y()) << " L " << num(w2.x()) << " " << num(w2.y())
          << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << num(opt.stroke_mm) << "\"/>\n";
    }
    out << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace nkicon
