#include "axiskit/generate.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "axiskit/error.hpp"

namespace axiskit {

namespace {

// Rotation system of a plane graph over half-edges 2e and 2e+1.
struct PlaneGraph {
  std::vector<int> next;  // counterclockwise successor around the vertex

  int half_edges() const { return static_cast<int>(next.size()); }

  // Corners are named by half-edge h: the angle between h and next[h].
  void insert_after(int corner, int h) {
    next[h] = next[corner];
    next[corner] = h;
  }

  int add_edge() {
    next.push_back(-1);
    next.push_back(-1);
    return half_edges() - 2;
  }

  // Corners visited walking around the face containing corner c.
  std::vector<int> face_corners(int c) const {
    std::vector<int> out;
    int x = c;
    do {
      out.push_back(x);
      x = next[x] ^ 1;
    } while (x != c);
    return out;
  }
};

PlaneGraph random_plane_graph(int edges, std::mt19937_64& rng) {
  PlaneGraph g;
  g.add_edge();
  g.next[0] = 0;
  g.next[1] = 1;
  while (g.half_edges() / 2 < edges) {
    const int corner = std::uniform_int_distribution<int>(0, g.half_edges() - 1)(rng);
    const int h = g.add_edge();
    if (std::bernoulli_distribution(0.4)(rng)) {
      // Pendant edge to a new vertex.
      g.insert_after(corner, h);
      g.next[h + 1] = h + 1;
    } else {
      // Chord between two corners of one face; equal corners make a loop.
      const auto corners = g.face_corners(corner);
      const int other = corners[std::uniform_int_distribution<size_t>(0, corners.size() - 1)(rng)];
      g.insert_after(corner, h);
      g.insert_after(other == corner ? h : other, h + 1);
    }
  }
  return g;
}

// Crossing e sits on edge e = {2e, 2e+1}. Seen from half-edge 2e at its
// tail, slots are NE, NW, SW, SE with the tail of 2e to the west.
int dart_toward_next(int h) { return 4 * (h / 2) + (h % 2 == 0 ? 1 : 3); }
int dart_toward_prev(int h) { return 4 * (h / 2) + (h % 2 == 0 ? 2 : 0); }

}  // namespace

Projection random_projection(int crossings, std::mt19937_64& rng) {
  if (crossings < 1) throw Error(ErrorCode::NoCrossings, "random projections need at least one crossing");
  const PlaneGraph g = random_plane_graph(crossings, rng);
  std::vector<int> mate(4 * crossings, -1);
  for (int h = 0; h < g.half_edges(); ++h) {
    const int a = dart_toward_next(h);
    const int b = dart_toward_prev(g.next[h]);
    mate[a] = b;
    mate[b] = a;
  }
  return Projection(std::move(mate));
}

Projection random_knot_projection(int crossings, std::mt19937_64& rng) {
  while (true) {
    Projection p = random_projection(crossings, rng);
    if (p.component_count() == 1) return p;
  }
}

Projection scrambled(const Projection& p, std::mt19937_64& rng, bool mirror) {
  if (p.is_unknot()) return p;
  const int c = p.crossing_count();
  std::vector<int> perm(c);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> shift(c);
  for (int& s : shift) s = std::uniform_int_distribution<int>(0, 3)(rng);
  auto image = [&](int d) {
    int slot = (slot_of(d) + shift[crossing_of(d)]) % 4;
    if (mirror) slot = (4 - slot) % 4;
    return 4 * perm[crossing_of(d)] + slot;
  };
  std::vector<int> mate(p.dart_count());
  for (int d = 0; d < p.dart_count(); ++d) mate[image(d)] = image(p.mate(d));
  return Projection(std::move(mate));
}

}  // namespace axiskit
