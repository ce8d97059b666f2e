#include "nkicon/dform.hpp"

#include <cmath>
#include <numbers>

namespace nkicon {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap(double s, double period) {
  double m = std::fmod(s, period);
  if (m < 0) m += period;
  return m;
}

void validate(const Stadium& st) {
  if (!(st.r > 0.0) || st.h < 0.0)
    throw Error(Errc::InvalidArgument, "stadium needs r > 0 and h >= 0");
}

// Arc-length positions of the two straight-side midpoints and the two cap
// midpoints; seams started exactly there fold the stadium flat in half.
std::array<double, 4> stadium_midpoints(const Stadium& st) {
  const double qp = st.h / 2 + kPi * st.r / 2;
  return {0.0, st.h + kPi * st.r, qp, qp + st.h + kPi * st.r};
}

}  // namespace

double stadium_perimeter(const Stadium& st) {
  validate(st);
  return 2.0 * st.h + 2.0 * kPi * st.r;
}

Vec2 stadium_point(const Stadium& st, double s) {
  validate(st);
  const double P = stadium_perimeter(st);
  double t = wrap(s, P);
  // Bottom side, centered on the origin; caps at x = +-h/2.
  if (t < st.h / 2) return Vec2(t, -st.r);
  t -= st.h / 2;
  if (t < kPi * st.r) {
    const double a = t / st.r - kPi / 2;
    return Vec2(st.h / 2 + st.r * std::cos(a), st.r * std::sin(a));
  }
  t -= kPi * st.r;
  if (t < st.h) return Vec2(st.h / 2 - t, st.r);
  t -= st.h;
  const double a = kPi / 2 + t / st.r;
  return Vec2(-st.h / 2 + st.r * std::cos(a), st.r * std::sin(a));
}

double isoperimetric_scale(double perimeter_a, double perimeter_b) {
  if (!(perimeter_a > 0.0) || !(perimeter_b > 0.0))
    throw Error(Errc::InvalidArgument, "perimeters must be positive");
  return perimeter_a / perimeter_b;
}

SeamPairing pita_seam(const Stadium& st, double start, int samples) {
  validate(st);
  if (samples < 2) throw Error(Errc::InvalidArgument, "samples must be >= 2");
  const double P = stadium_perimeter(st);
  if (start < 0.0 || start >= P)
    throw Error(Errc::InvalidArgument, "seam start must lie in [0, perimeter)");
  SeamPairing seam;
  seam.perimeter = P;
  seam.closed = false;
  for (int i = 0; i < samples; ++i) {
    const double s = (P / 2) * i / (samples - 1);
    // ccw measure on side A, cw measure on side B; the zipped points are
    // start + s and start - s on the boundary.
    seam.pairs.push_back({start + s, (P - start) + s});
  }
  seam.endpoints = {wrap(start, P), wrap(start + P / 2, P)};
  for (double m : stadium_midpoints(st)) {
    if (std::abs(wrap(start - m + P / 2, P) - P / 2) < 1e-9 * P) {
      seam.degenerate_flat = true;
      seam.note = "seam starts at an exact midpoint: the stadium folds over flat onto itself";
    }
  }
  return seam;
}

SeamPairing dform_seam(const Stadium& a, const Stadium& b, double offset, int samples) {
  validate(a);
  validate(b);
  if (samples < 2) throw Error(Errc::InvalidArgument, "samples must be >= 2");
  const double pa = stadium_perimeter(a);
  const double pb = stadium_perimeter(b);
  if (std::abs(pa - pb) > 1e-9 * pa)
    throw Error(Errc::IsoperimetryViolation,
                "stadium perimeters differ by more than 1e-9 relative; scale first");
  SeamPairing seam;
  seam.perimeter = pa;
  seam.closed = true;
  for (int i = 0; i < samples; ++i) {
    const double s = pa * i / (samples - 1);
    seam.pairs.push_back({s, s + offset});
  }
  if (std::abs(wrap(offset + pa / 2, pa) - pa / 2) < 1e-9 * pa) {
    seam.degenerate_flat = true;
    seam.note = "offset 0: the two stadia close onto each other flat";
    return seam;
  }
  // Midpoint-to-midpoint attachment joins cap midpoints to straight-side
  // midpoints; the resulting solid depends on h versus pi*r.
  const double sym = a.h / 2 + kPi * a.r / 2;
  const double off = wrap(offset, pa);
  bool symmetric = false;
  for (double cand : {sym, pa - sym, wrap(sym + pa / 2, pa), wrap(pa / 2 - sym, pa)})
    if (std::abs(off - cand) < 1e-9 * pa) symmetric = true;
  if (symmetric) {
    if (std::abs(a.h - kPi * a.r) < 1e-9 * a.r) {
      seam.note = "symmetric attachment with h = pi*r: this is the mm (4,1)-icon";
    } else if (a.h > kPi * a.r) {
      seam.note =
          "symmetric attachment with h > pi*r: stable on each of its four semicircular faces";
    } else {
      seam.note =
          "symmetric attachment with h < pi*r: rests on the centre-line of either curved surface";
    }
  }
  return seam;
}

RelaxedStadium relax_to_stadium(const TemplatePiece& piece) {
  std::vector<const TemplatePiece::Element*> caps;
  for (const auto& el : piece.boundary) {
    if (el.type == TemplatePiece::Element::Type::Arc &&
        std::abs(std::abs(el.sweep) - kPi) < 1e-9)
      caps.push_back(&el);
  }
  if (caps.size() != 2)
    throw Error(Errc::NoCaps, "piece needs exactly two semicircular cap elements, found " +
                                  std::to_string(caps.size()));
  const double r = caps[0]->radius;
  if (std::abs(caps[1]->radius - r) > 1e-9 * r)
    throw Error(Errc::NoCaps, "semicircular caps are not congruent");
  const double total = piece_boundary_length(piece);
  RelaxedStadium out;
  out.stadium.r = r;
  out.stadium.h = (total - 2.0 * kPi * r) / 2.0;
  out.ratio = out.stadium.h / (kPi * r);
  return out;
}

}  // namespace nkicon
