#include <vector>

#include "axiskit/projection.hpp"

namespace axiskit {

std::optional<Isomorphism> extend_map(const Projection& p, const Projection& q, int from, int to, bool reflection) {
  const int n = p.dart_count();
  if (n != q.dart_count()) return std::nullopt;
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::vector<int> stack{from};
  image[from] = to;
  used[to] = true;
  auto assign = [&](int d, int to) {
    if (image[d] >= 0) return image[d] == to;
    if (used[to]) return false;
    image[d] = to;
    used[to] = true;
    stack.push_back(d);
    return true;
  };
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    const int fd = image[d];
    if (!assign(p.mate(d), q.mate(fd))) return std::nullopt;
    if (!assign(rot_next(d), reflection ? rot_prev(fd) : rot_next(fd))) return std::nullopt;
  }
  return Isomorphism{std::move(image), reflection};
}

std::optional<Isomorphism> find_isomorphism(const Projection& p, const Projection& q) {
  if (p.crossing_count() != q.crossing_count() || p.face_count() != q.face_count()) return std::nullopt;
  if (p.is_unknot()) return Isomorphism{};
  for (bool reflection : {false, true}) {
    for (int target = 0; target < q.dart_count(); ++target) {
      if (auto iso = extend_map(p, q, 0, target, reflection)) return iso;
    }
  }
  return std::nullopt;
}

std::vector<Isomorphism> automorphisms(const Projection& p) {
  std::vector<Isomorphism> out;
  if (p.is_unknot()) return out;
  for (bool reflection : {false, true}) {
    for (int target = 0; target < p.dart_count(); ++target) {
      if (auto iso = extend_map(p, p, 0, target, reflection)) out.push_back(std::move(*iso));
    }
  }
  return out;
}

}  // namespace axiskit
