#pragma once

#include <vector>

#include "axiskit/polynomial.hpp"
#include "axiskit/projection.hpp"

namespace axiskit {

// A directed passage through an edge or across a crossing, identified by the
// boundary item it arrives at. There are 8c of them: 4c edge transits (an
// edge and the side entered) and 4c crossing transits (a crossing, one of
// its two diagonals and a direction along it).
struct Transit {
  BoundaryItem arrival;

  bool is_edge() const { return arrival.is_edge_side(); }
  bool is_crossing() const { return arrival.is_corner(); }
  int dart() const { return arrival.dart(); }
  int crossing() const { return crossing_of(dart()); }
  // Diagonal 0 joins corners 0 and 2, diagonal 1 joins corners 1 and 3.
  int diagonal() const { return slot_of(dart()) % 2; }
  // +1 when arriving at corner 0 or 1, -1 at corner 2 or 3.
  int orientation() const { return slot_of(dart()) < 2 ? 1 : -1; }

  friend bool operator==(Transit, Transit) = default;
  friend auto operator<=>(Transit, Transit) = default;
};

// The same passage taken the other way.
Transit reversed(const Projection& p, Transit t);

// Leave the entered face at the antipodal boundary item and pass through it.
Transit successor(const Projection& p, Transit t);

struct Segment {
  int face = 0;
  int entry = 0;  // boundary positions
  int exit = 0;
  bool odd = false;
};

struct Axis {
  int id = 0;
  // Arrivals in traversal order for one of the two directions; the listed
  // direction starts at the smallest transit of the axis.
  std::vector<Transit> transits;
  std::vector<Segment> segments;
  bool simple = true;

  int length() const { return static_cast<int>(transits.size()); }
  int odd_segments() const;
};

// Every axis once, ordered by smallest transit. Throws NoCrossings on the
// unknot.
std::vector<Axis> trace_axes(const Projection& p);

int total_axis_length(const Projection& p);

// Non-simple iff the axis uses both diagonals of some crossing or two of its
// segments have interleaving endpoints on a face boundary.
bool is_simple(const Projection& p, const Axis& axis);

AxisPolynomial axis_polynomial(const std::vector<Axis>& axes);
AxisPolynomial axis_polynomial(const Projection& p);

}  // namespace axiskit
