#include "axiskit/axes.hpp"

#include <map>
#include <numeric>

#include "axiskit/error.hpp"

namespace axiskit {

namespace {

BoundaryItem other_side(const Projection& p, BoundaryItem item) {
  const int d = item.dart();
  return item.is_corner() ? BoundaryItem{2 * opposite(d)} : BoundaryItem{2 * p.mate(d) + 1};
}

BoundaryItem item_at(const Projection& p, int face, int position) {
  const int d = p.face_darts(face)[position / 2];
  return BoundaryItem{2 * d + position % 2};
}

void require_crossings(const Projection& p) {
  if (p.is_unknot()) throw Error(ErrorCode::NoCrossings, "the crossingless unknot has a single point axis");
}

// Chords {a, b} and {c, d} of a cycle of the given size cross iff exactly
// one of c, d lies strictly between a and b.
bool interleave(int a, int b, int c, int d, int size) {
  auto inside = [&](int x) {
    const int span = (b - a + size) % size;
    const int off = (x - a + size) % size;
    return off > 0 && off < span;
  };
  if (c == a || c == b || d == a || d == b) return false;
  return inside(c) != inside(d);
}

}  // namespace

Transit reversed(const Projection& p, Transit t) { return Transit{other_side(p, t.arrival)}; }

Transit successor(const Projection& p, Transit t) {
  const int face = p.face_of(t.arrival);
  const int size = 2 * p.face_size(face);
  const int exit = (p.position_of(t.arrival) + size / 2) % size;
  return Transit{other_side(p, item_at(p, face, exit))};
}

int Axis::odd_segments() const {
  int count = 0;
  for (const auto& s : segments) count += s.odd ? 1 : 0;
  return count;
}

std::vector<Axis> trace_axes(const Projection& p) {
  require_crossings(p);
  const int items = 2 * p.dart_count();
  std::vector<int> orbit_of(items, -1);
  std::vector<Axis> axes;
  int orbit_count = 0;

  for (int id = 0; id < items; ++id) {
    if (orbit_of[id] >= 0) continue;
    Axis axis;
    axis.id = static_cast<int>(axes.size());
    const Transit start{BoundaryItem{id}};
    Transit t = start;
    const int forward = orbit_count++;
    do {
      orbit_of[t.arrival.id] = forward;
      axis.transits.push_back(t);
      t = successor(p, t);
    } while (t != start);

    const Transit back_start = reversed(p, start);
    if (orbit_of[back_start.arrival.id] >= 0) {
      throw Error(ErrorCode::InvariantViolation, "axis through transit " + std::to_string(id) + " is its own reversal");
    }
    const int backward = orbit_count++;
    t = back_start;
    do {
      if (orbit_of[t.arrival.id] >= 0) throw Error(ErrorCode::InvariantViolation, "reversed orbit overlaps another axis");
      orbit_of[t.arrival.id] = backward;
      t = successor(p, t);
    } while (t != back_start);

    for (const Transit& arrival : axis.transits) {
      const int face = p.face_of(arrival.arrival);
      const int size = 2 * p.face_size(face);
      const int entry = p.position_of(arrival.arrival);
      axis.segments.push_back(Segment{face, entry, (entry + size / 2) % size, p.face_size(face) % 2 == 1});
    }
    axis.simple = is_simple(p, axis);
    axes.push_back(std::move(axis));
  }
  return axes;
}

int total_axis_length(const Projection& p) {
  const auto axes = trace_axes(p);
  return std::accumulate(axes.begin(), axes.end(), 0, [](int sum, const Axis& a) { return sum + a.length(); });
}

bool is_simple(const Projection& p, const Axis& axis) {
  std::map<int, int> diagonals;  // crossing -> bitmask of used diagonals
  for (const Transit& t : axis.transits) {
    if (!t.is_crossing()) continue;
    int& mask = diagonals[t.crossing()];
    mask |= 1 << t.diagonal();
    if (mask == 3) return false;
  }
  std::map<int, std::vector<const Segment*>> by_face;
  for (const Segment& s : axis.segments) by_face[s.face].push_back(&s);
  for (const auto& [face, segments] : by_face) {
    const int size = 2 * p.face_size(face);
    for (size_t i = 0; i < segments.size(); ++i) {
      for (size_t j = i + 1; j < segments.size(); ++j) {
        if (interleave(segments[i]->entry, segments[i]->exit, segments[j]->entry, segments[j]->exit, size)) {
          return false;
        }
      }
    }
  }
  return true;
}

AxisPolynomial axis_polynomial(const std::vector<Axis>& axes) {
  AxisPolynomial out;
  for (const Axis& a : axes) {
    if (a.simple) {
      out.add_x(a.length());
    } else {
      out.add_y(a.length());
    }
  }
  return out;
}

AxisPolynomial axis_polynomial(const Projection& p) { return axis_polynomial(trace_axes(p)); }

}  // namespace axiskit
