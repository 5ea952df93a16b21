#include <algorithm>
#include <numeric>
#include <set>

#include "axiskit/analysis.hpp"
#include "axiskit/error.hpp"

namespace axiskit {

const char* to_string(SymmetryObstruction o) {
  switch (o) {
    case SymmetryObstruction::None: return "none";
    case SymmetryObstruction::NoSimpleAxis: return "no-simple-axis";
    case SymmetryObstruction::SideStatistics: return "side-statistics";
    case SymmetryObstruction::NoReflectiveIsomorphism: return "no-reflective-isomorphism";
    case SymmetryObstruction::LinkComponent: return "link-component";
  }
  return "unknown";
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

void require_knot_and_simple(const Projection& p, const Axis& axis) {
  if (p.is_unknot()) throw Error(ErrorCode::NoCrossings, "the crossingless unknot has no axes to reflect in");
  if (p.component_count() != 1) {
    throw Error(ErrorCode::NotKnotProjection,
                "symmetry is decided for knot projections only; this one has " + std::to_string(p.component_count()) +
                    " components");
  }
  if (!axis.simple) throw Error(ErrorCode::NotSimpleAxis, "axis " + std::to_string(axis.id) + " crosses itself");
}

}  // namespace

AxisSides axis_sides(const Projection& p, const Axis& axis) {
  const int items = 2 * p.dart_count();
  std::vector<bool> on_axis(items, false);
  std::vector<int> crossed_face(p.face_count(), -1);  // segment index per face
  for (size_t i = 0; i < axis.segments.size(); ++i) {
    const Segment& s = axis.segments[i];
    crossed_face[s.face] = static_cast<int>(i);
  }

  // Cut each face along its segment and glue the pieces across the parts of
  // the projection the axis does not meet.
  UnionFind uf(items);
  for (int f = 0; f < p.face_count(); ++f) {
    const FaceBoundary boundary = p.face_boundary(f);
    const int size = boundary.size();
    if (crossed_face[f] < 0) {
      for (int i = 1; i < size; ++i) uf.unite(boundary.items[0].id, boundary.items[i].id);
      continue;
    }
    const Segment& s = axis.segments[crossed_face[f]];
    on_axis[boundary.items[s.entry].id] = true;
    on_axis[boundary.items[s.exit].id] = true;
    for (int from : {s.entry, s.exit}) {
      const int to = from == s.entry ? s.exit : s.entry;
      int prev = -1;
      for (int pos = (from + 1) % size; pos != to; pos = (pos + 1) % size) {
        if (prev >= 0) uf.unite(prev, boundary.items[pos].id);
        prev = boundary.items[pos].id;
      }
    }
  }
  std::set<int> crossing_on_axis;
  for (const Transit& t : axis.transits) {
    if (t.is_crossing()) crossing_on_axis.insert(t.crossing());
  }
  for (int d = 0; d < p.dart_count(); ++d) {
    const int side = 2 * d + 1;
    const int other = 2 * p.mate(d) + 1;
    if (!on_axis[side] && !on_axis[other]) uf.unite(side, other);
  }
  for (int v = 0; v < p.crossing_count(); ++v) {
    if (crossing_on_axis.count(v)) continue;
    for (int j = 1; j < 4; ++j) uf.unite(2 * (4 * v), 2 * (4 * v + j));
  }

  std::vector<int> roots;
  for (int id = 0; id < items; ++id) {
    if (!on_axis[id]) roots.push_back(uf.find(id));
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  if (roots.size() != 2) {
    throw Error(ErrorCode::InvariantViolation,
                "simple axis splits the sphere into " + std::to_string(roots.size()) + " pieces");
  }
  AxisSides sides;
  for (int f = 0; f < p.face_count(); ++f) {
    if (crossed_face[f] >= 0) continue;
    const int root = uf.find(2 * p.face_darts(f).front());
    (root == roots[0] ? sides.first : sides.second).push_back(p.face_size(f));
  }
  std::sort(sides.first.begin(), sides.first.end());
  std::sort(sides.second.begin(), sides.second.end());
  return sides;
}

SymmetryVerdict symmetry_about(const Projection& p, const Axis& axis) {
  require_knot_and_simple(p, axis);
  SymmetryVerdict verdict;
  const AxisSides sides = axis_sides(p, axis);
  if (sides.first != sides.second) {
    verdict.obstruction = SymmetryObstruction::SideStatistics;
    return verdict;
  }

  // A reflection in the axis swaps the two halves of every edge the axis
  // crosses and the two sides of every crossing diagonal it runs along.
  auto fixed_image = [](const Projection& q, const Transit& t) {
    return t.is_edge() ? q.mate(t.dart()) : rot_next(t.dart());
  };
  const Transit seed = axis.transits.front();
  auto reflection = extend_map(p, p, seed.dart(), fixed_image(p, seed), true);
  bool fixes_axis = reflection.has_value();
  if (fixes_axis) {
    for (const Transit& t : axis.transits) {
      if (reflection->dart_map[t.dart()] != fixed_image(p, t)) {
        fixes_axis = false;
        break;
      }
    }
  }
  if (!fixes_axis) {
    verdict.obstruction = SymmetryObstruction::NoReflectiveIsomorphism;
    return verdict;
  }
  verdict.symmetric = true;
  verdict.axis = axis.id;
  verdict.reflection = std::move(reflection);
  return verdict;
}

SymmetryVerdict is_symmetric(const Projection& p) {
  if (p.is_unknot()) throw Error(ErrorCode::NoCrossings, "the crossingless unknot has no axes to reflect in");
  if (p.component_count() != 1) {
    throw Error(ErrorCode::NotKnotProjection,
                "symmetry is decided for knot projections only; this one has " + std::to_string(p.component_count()) +
                    " components");
  }
  SymmetryVerdict verdict;
  verdict.obstruction = SymmetryObstruction::NoSimpleAxis;
  bool all_side_failures = true;
  bool any_simple = false;
  for (const Axis& axis : trace_axes(p)) {
    if (!axis.simple) continue;
    any_simple = true;
    SymmetryVerdict attempt = symmetry_about(p, axis);
    if (attempt.symmetric) return attempt;
    if (attempt.obstruction != SymmetryObstruction::SideStatistics) all_side_failures = false;
  }
  if (any_simple) {
    verdict.obstruction =
        all_side_failures ? SymmetryObstruction::SideStatistics : SymmetryObstruction::NoReflectiveIsomorphism;
  }
  return verdict;
}

}  // namespace axiskit
