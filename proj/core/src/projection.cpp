#include "axiskit/projection.hpp"

#include <algorithm>
#include <numeric>

#include "axiskit/error.hpp"

namespace axiskit {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::string default_letter(int index) {
  std::string out;
  int n = index + 1;
  while (n > 0) {
    --n;
    out.insert(out.begin(), static_cast<char>('A' + n % 26));
    n /= 26;
  }
  return out;
}

Projection Projection::unknot() { return Projection(); }

Projection::Projection(std::vector<int> mate) : mate_(std::move(mate)) {
  const int n = dart_count();
  if (n == 0 || n % 4 != 0) {
    throw Error(ErrorCode::NotFourValent, "dart count must be a positive multiple of 4");
  }
  for (int d = 0; d < n; ++d) {
    const int m = mate_[d];
    if (m < 0 || m >= n || m == d || mate_[m] != d) {
      throw Error(ErrorCode::PairingNotInvolution, "dart " + std::to_string(d) + " is not paired with a distinct dart");
    }
  }

  std::vector<int> parent(crossing_count());
  std::iota(parent.begin(), parent.end(), 0);
  int components = crossing_count();
  for (int d = 0; d < n; ++d) {
    int a = find_root(parent, crossing_of(d));
    int b = find_root(parent, crossing_of(mate_[d]));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (components != 1) {
    throw Error(ErrorCode::SplitProjection, "projection has " + std::to_string(components) + " connected pieces");
  }

  trace_faces();
  if (face_count() != crossing_count() + 2) {
    throw Error(ErrorCode::EulerViolation, std::to_string(face_count()) + " faces for " +
                                               std::to_string(crossing_count()) + " crossings");
  }

  edge_of_dart_.assign(n, -1);
  int edges = 0;
  for (int d = 0; d < n; ++d) {
    if (edge_of_dart_[d] < 0) {
      edge_of_dart_[d] = edge_of_dart_[mate_[d]] = edges++;
    }
  }

  labels_.reserve(faces_.size());
  for (int f = 0; f < face_count(); ++f) labels_.push_back(default_letter(f));
}

void Projection::trace_faces() {
  const int n = dart_count();
  face_of_dart_.assign(n, -1);
  index_in_face_.assign(n, -1);
  faces_.clear();
  // Scanning darts in increasing order numbers faces by their smallest dart.
  for (int start = 0; start < n; ++start) {
    if (face_of_dart_[start] >= 0) continue;
    const int f = static_cast<int>(faces_.size());
    std::vector<int> cycle;
    int d = start;
    do {
      face_of_dart_[d] = f;
      index_in_face_[d] = static_cast<int>(cycle.size());
      cycle.push_back(d);
      d = rot_prev(mate_[d]);
    } while (d != start);
    faces_.push_back(std::move(cycle));
  }
}

int Projection::position_of(BoundaryItem item) const {
  return 2 * index_in_face_[item.dart()] + (item.is_edge_side() ? 1 : 0);
}

std::optional<int> Projection::face_by_label(std::string_view label) const {
  for (int f = 0; f < face_count(); ++f) {
    if (labels_[f] == label) return f;
  }
  return std::nullopt;
}

Projection Projection::relabeled(const std::vector<int>& order, std::vector<std::string> labels) const {
  if (order.size() != faces_.size() || labels.size() != faces_.size()) {
    throw Error(ErrorCode::InvariantViolation, "relabeling must cover every face");
  }
  Projection out = *this;
  std::vector<bool> seen(faces_.size(), false);
  for (size_t i = 0; i < order.size(); ++i) {
    const int old = order[i];
    if (old < 0 || old >= face_count() || seen[old]) {
      throw Error(ErrorCode::InvariantViolation, "face order is not a permutation");
    }
    seen[old] = true;
    out.faces_[i] = faces_[old];
    for (int d : out.faces_[i]) out.face_of_dart_[d] = static_cast<int>(i);
  }
  out.labels_ = std::move(labels);
  return out;
}

int Projection::component_count() const {
  std::vector<bool> seen(mate_.size(), false);
  int components = 0;
  for (int start = 0; start < dart_count(); ++start) {
    if (seen[start]) continue;
    ++components;
    // Walk the strand: leave through d, arrive at mate(d), continue straight.
    int d = start;
    do {
      seen[d] = true;
      seen[mate_[d]] = true;
      d = opposite(mate_[d]);
    } while (d != start);
  }
  return components;
}

FaceBoundary Projection::face_boundary(int face) const {
  FaceBoundary out;
  out.face = face;
  out.items.reserve(2 * faces_[face].size());
  for (int d : faces_[face]) {
    out.items.push_back(BoundaryItem{2 * d});
    out.items.push_back(BoundaryItem{2 * d + 1});
  }
  return out;
}

}  // namespace axiskit
