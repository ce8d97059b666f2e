#pragma once

#include <string>

#include "nkicon/cut_structure.hpp"
#include "nkicon/profile.hpp"

namespace nkicon {

// The four headline feature counts of an (n,k)-icon.
struct FeatureCount {
  int closed_edges = 0;
  int open_edges = 0;          // edges running between two distinct endpoints
  int traceable_surfaces = 0;  // annular surfaces whose mid-line loops back
  int other_surfaces = 0;

  bool operator==(const FeatureCount&) const = default;
  int total_surfaces() const { return traceable_surfaces + other_surfaces; }
};

enum class DesignationKind { PitaForm, DForm, Neither };

const char* to_string(DesignationKind kind);

struct Designation {
  DesignationKind kind = DesignationKind::Neither;
  std::string reason;
};

// Closed-form counts:
//   odd n:   ((gcd(n,k)-1)/2, 1, (gcd(n,k)-1)/2, 1)
//   even vv: (gcd(n/2,k)-1, 2, gcd(n/2,k), 0)
//   even mm: (gcd(n/2,k), 0, gcd(n/2,k)-1, 2)
// Twists equivalent to the uncut solid (k = 0 mod n, and k = n/2 mod n for
// even n) are rejected as DEGENERATE_TWIST: the uncut solid has no cut seam
// and these formulas do not describe it.
FeatureCount feature_counts_formula(int n, int k, Axis axis);

// Independent combinatorial oracle: cycle/chain decomposition of the glued
// semicircle arcs and half-bands. Same domain restrictions.
FeatureCount feature_counts_trace(const IconSpec& spec);

// Pita-form: one surface, one edge between two distinct endpoints.
// D-form: two surfaces, one closed edge.
Designation designate(int n, int k, Axis axis);
Designation designate(const FeatureCount& counts);

// True when the twist produces the uncut solid of revolution.
bool degenerate_twist(int n, int k, Axis axis);

}  // namespace nkicon
