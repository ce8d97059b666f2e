#pragma once

#include <array>
#include <string>
#include <vector>

#include "nkicon/unroll.hpp"

namespace nkicon {

// Rectangle of length h capped by two semicircles of radius r. Arc length 0
// is the midpoint of one straight side, increasing counterclockwise.
struct Stadium {
  double h = 0.0;  // mm
  double r = 1.0;  // mm
};

double stadium_perimeter(const Stadium& st);

// Boundary point at counterclockwise arc length s (s taken mod perimeter).
Vec2 stadium_point(const Stadium& st, double s);

// Factor f with perimeter_b * f = perimeter_a.
double isoperimetric_scale(double perimeter_a, double perimeter_b);

// Stitch correspondence along a seam. For pita seams side A is measured
// counterclockwise and side B clockwise from the shared origin, so both
// columns increase and increments match exactly.
struct SeamPairing {
  double perimeter = 0.0;
  std::vector<std::array<double, 2>> pairs;  // (s_a, s_b), monotone
  std::vector<double> endpoints;             // ccw positions; empty for closed seams
  bool closed = false;
  bool degenerate_flat = false;  // folds flat onto itself
  std::string note;
};

// Zips the stadium boundary to itself starting at ccw position `start`; the
// seam ends at the two points start and start + P/2. A start at one of the
// four side/cap midpoints folds the stadium flat and is flagged, not
// rejected.
SeamPairing pita_seam(const Stadium& st, double start, int samples);

// Joins two isoperimetric stadia, boundary point s on A to s + offset on B.
// Midpoint-to-midpoint attachment (offset = (h + pi r)/2 mod P/2... annotated
// in the note) with h = pi r is exactly the mm (4,1)-icon.
SeamPairing dform_seam(const Stadium& a, const Stadium& b, double offset, int samples);

struct RelaxedStadium {
  Stadium stadium;
  double ratio = 0.0;  // h / (pi r)
};

// Replaces a template piece by the stadium with the same perimeter and the
// same semicircular caps: r is the cap radius and h absorbs the remaining
// boundary length. Requires exactly two congruent semicircular elements.
RelaxedStadium relax_to_stadium(const TemplatePiece& piece);

}  // namespace nkicon
