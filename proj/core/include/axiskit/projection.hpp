#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace axiskit {

// Darts are numbered 4*crossing + slot. Slots 0..3 run counterclockwise
// around the crossing as seen from outside the sphere, so the strand through
// slot s continues out of slot s+2. Corner j of a crossing is the angle
// between slot j and slot j+1.
inline constexpr int crossing_of(int dart) { return dart / 4; }
inline constexpr int slot_of(int dart) { return dart % 4; }
inline constexpr int rot_next(int dart) { return dart - slot_of(dart) + (slot_of(dart) + 1) % 4; }
inline constexpr int rot_prev(int dart) { return dart - slot_of(dart) + (slot_of(dart) + 3) % 4; }
inline constexpr int opposite(int dart) { return dart - slot_of(dart) + (slot_of(dart) + 2) % 4; }

// A corner instance or an edge side on a face boundary. Every dart d names
// exactly one of each: the corner (crossing_of(d), slot_of(d)) and the side
// of d's edge that lies to the left of d. Items are numbered 2*d (corner)
// and 2*d+1 (edge side).
struct BoundaryItem {
  int id = 0;

  bool is_corner() const { return id % 2 == 0; }
  bool is_edge_side() const { return id % 2 == 1; }
  int dart() const { return id / 2; }

  friend bool operator==(BoundaryItem, BoundaryItem) = default;
  friend auto operator<=>(BoundaryItem, BoundaryItem) = default;
};

struct FaceBoundary {
  int face = 0;
  // [corner0, side0, corner1, side1, ...]; a k-gon has 2k items.
  std::vector<BoundaryItem> items;

  int size() const { return static_cast<int>(items.size()); }
  int sides() const { return size() / 2; }
  BoundaryItem antipode(int position) const { return items[(position + sides()) % size()]; }
};

// A connected 4-regular plane multigraph given by its rotation system, with
// faces traced and named. Immutable after construction.
class Projection {
 public:
  // The crossingless unknot. Its axis system is empty and most invariants
  // report NoCrossings on it.
  static Projection unknot();

  // mate[d] is the dart paired with d by the edge involution; its size must
  // be a positive multiple of 4. Throws on any structural violation.
  explicit Projection(std::vector<int> mate);

  int crossing_count() const { return static_cast<int>(mate_.size()) / 4; }
  int dart_count() const { return static_cast<int>(mate_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  bool is_unknot() const { return mate_.empty(); }

  int mate(int dart) const { return mate_[dart]; }
  const std::vector<int>& mates() const { return mate_; }

  // Faces lie to the left of their darts; the darts are listed in boundary
  // order, i.e. the next dart after d is rot_prev(mate(d)).
  const std::vector<int>& face_darts(int face) const { return faces_[face]; }
  int face_of_dart(int dart) const { return face_of_dart_[dart]; }
  int face_of_corner(int crossing, int corner) const { return face_of_dart_[4 * crossing + corner]; }
  int face_size(int face) const { return static_cast<int>(faces_[face].size()); }
  int face_of(BoundaryItem item) const { return face_of_dart_[item.dart()]; }
  // Position of the item on its face boundary.
  int position_of(BoundaryItem item) const;

  // Edge ids follow the order of each edge's smallest dart.
  int edge_of_dart(int dart) const { return edge_of_dart_[dart]; }

  const std::string& label(int face) const { return labels_[face]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> face_by_label(std::string_view label) const;

  // Faces are re-indexed so that new face i is old face order[i] with the
  // given label. Face index order doubles as letter order in axis words.
  Projection relabeled(const std::vector<int>& order, std::vector<std::string> labels) const;

  int component_count() const;

  FaceBoundary face_boundary(int face) const;

 private:
  Projection() = default;
  void trace_faces();

  std::vector<int> mate_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> face_of_dart_;
  std::vector<int> index_in_face_;
  std::vector<int> edge_of_dart_;
  std::vector<std::string> labels_;
};

// Default face names: A..Z, then AA, AB, ...
std::string default_letter(int index);

// Whitespace separated X[a,b,c,d] records, labels listed counterclockwise.
// Commas between records, a PD[...] wrapper and # comments are accepted.
Projection parse_pd(std::string_view text);
// Normalized PD text: edges numbered 1..2c by smallest dart, one record per
// crossing, records sorted by their smallest label.
std::string emit_pd(const Projection& p);

// JSON document {"crossings": [[d0,d1,d2,d3], ...], "pairing": [[a,b], ...]}
// with arbitrary integer dart ids. An empty crossing list is the unknot.
Projection parse_map(std::string_view text);
std::string emit_map(const Projection& p);

// Reads a .pd or .json file, chosen by extension (default PD).
Projection load_projection(const std::string& path);

// Standard projection of the twist knot with n >= 4 crossings: a column of
// n-2 twists closed by a two-crossing clasp. Faces carry the names C0, C1
// (n even only), I, O, R0.., L0.., in that letter order.
Projection build_twist(int n);

struct Isomorphism {
  // dart of p -> dart of q
  std::vector<int> dart_map;
  bool reflection = false;
};

// The unique mate- and rotation-compatible dart map sending from -> to, if
// one exists. With reflection set, rotations are reversed.
std::optional<Isomorphism> extend_map(const Projection& p, const Projection& q, int from, int to, bool reflection);

// Rotation-system isomorphism allowing a global orientation reversal.
std::optional<Isomorphism> find_isomorphism(const Projection& p, const Projection& q);
inline bool is_isomorphic(const Projection& p, const Projection& q) { return find_isomorphism(p, q).has_value(); }

// All orientation-preserving and orientation-reversing automorphisms.
std::vector<Isomorphism> automorphisms(const Projection& p);

}  // namespace axiskit
