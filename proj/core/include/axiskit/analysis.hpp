#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axiskit/axes.hpp"
#include "axiskit/polynomial.hpp"
#include "axiskit/projection.hpp"
#include "axiskit/words.hpp"

namespace axiskit {

// A crossing whose opposite corners lie in the same region.
std::optional<int> reducible_crossing(const Projection& p);
// Some word has a single letter or two cyclically adjacent equal letters.
bool has_reducible_word(const AxisSystem& s);

struct ReducibilityVerdict {
  bool reducible = false;
  std::optional<int> crossing;
};

// Decided from the regions around each crossing and again from the axis
// system; throws InvariantViolation if the two disagree.
ReducibilityVerdict is_reducible(const Projection& p);

// The literal axis system of the standard twist projection with n crossings,
// over the letters C0, (C1,) I, O, R0.., L0...
AxisSystem twist_template(int n);

// Closed form of the axis polynomial of the standard twist projection.
AxisPolynomial twist_polynomial(int n);

struct TwistVerdict {
  bool is_twist = false;
  std::optional<int> n;
  // letter of the projection -> letter of twist_template(n)
  std::optional<LetterMap> witness;
};

// Verdict from comparing axis systems only.
TwistVerdict recognize_twist_by_system(const Projection& p);
// Verdict from map isomorphism with build_twist(c).
bool recognize_twist_by_isomorphism(const Projection& p);
// Both routes; throws InvariantViolation if they disagree.
TwistVerdict recognize_twist(const Projection& p);

enum class SymmetryObstruction {
  None,
  NoSimpleAxis,
  SideStatistics,
  NoReflectiveIsomorphism,
  // Reserved: symmetry circles formed by a link component are not searched.
  LinkComponent,
};

const char* to_string(SymmetryObstruction o);

struct SymmetryVerdict {
  bool symmetric = false;
  std::optional<int> axis;  // id of the mirror axis
  SymmetryObstruction obstruction = SymmetryObstruction::None;
  // Orientation-reversing automorphism fixing the axis, when symmetric.
  std::optional<Isomorphism> reflection;
};

// Sizes of the regions strictly on either side of a simple axis, sorted.
struct AxisSides {
  std::vector<int> first;
  std::vector<int> second;
};
AxisSides axis_sides(const Projection& p, const Axis& axis);

// Mirror test about one simple axis of a knot projection. Throws
// NotSimpleAxis or NotKnotProjection when the preconditions fail.
SymmetryVerdict symmetry_about(const Projection& p, const Axis& axis);
inline bool is_symmetric_about(const Projection& p, const Axis& axis) { return symmetry_about(p, axis).symmetric; }

// Tries every simple axis, smallest id first.
SymmetryVerdict is_symmetric(const Projection& p);

}  // namespace axiskit
