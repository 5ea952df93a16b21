#pragma once

// Slow reference implementations used to cross-check the library.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "axiskit/projection.hpp"
#include "axiskit/words.hpp"

namespace oracle {

// Faces as cycles of d -> rot_prev(mate(d)), computed without Projection.
inline int face_count(const std::vector<int>& mate) {
  std::vector<bool> seen(mate.size(), false);
  int faces = 0;
  for (size_t d = 0; d < mate.size(); ++d) {
    if (seen[d]) continue;
    ++faces;
    for (int x = static_cast<int>(d); !seen[x]; x = axiskit::rot_prev(mate[x])) seen[x] = true;
  }
  return faces;
}

// Isomorphism by trying every crossing permutation, rotation of slots at
// each crossing and both orientations. Only for a handful of crossings.
inline bool isomorphic(const axiskit::Projection& p, const axiskit::Projection& q) {
  const int c = p.crossing_count();
  if (c != q.crossing_count()) return false;
  std::vector<int> perm(c);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int mirror = 0; mirror < 2; ++mirror) {
      std::vector<int> shift(c, 0);
      while (true) {
        auto image = [&](int d) {
          const int v = d / 4, s = d % 4;
          const int t = mirror ? (4 - s) % 4 : s;
          return 4 * perm[v] + (t + shift[v]) % 4;
        };
        bool ok = true;
        for (int d = 0; d < 4 * c && ok; ++d) ok = q.mate(image(d)) == image(p.mate(d));
        if (ok) return true;
        int i = 0;
        while (i < c && ++shift[i] == 4) shift[i++] = 0;
        if (i == c) break;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// sigma/phi written from the definitions.
inline axiskit::AxisWord rotate(axiskit::AxisWord w, const std::vector<bool>& odd) {
  const int first = w.letters.front();
  w.letters.erase(w.letters.begin());
  w.letters.push_back(first);
  if (odd[first]) w.negative = !w.negative;
  return w;
}

inline std::set<axiskit::AxisWord> word_orbit(const axiskit::AxisWord& w, const std::vector<bool>& odd) {
  std::set<axiskit::AxisWord> out;
  std::vector<axiskit::AxisWord> todo{w};
  while (!todo.empty()) {
    axiskit::AxisWord x = todo.back();
    todo.pop_back();
    if (!out.insert(x).second) continue;
    todo.push_back(rotate(x, odd));
    axiskit::AxisWord r = x;
    std::reverse(r.letters.begin(), r.letters.end());
    todo.push_back(r);
  }
  return out;
}

// Systems equal up to relabeling, by trying every letter permutation.
inline bool systems_equal(const axiskit::AxisSystem& a, const axiskit::AxisSystem& b) {
  if (a.letter_count() != b.letter_count() || a.words.size() != b.words.size()) return false;
  const auto odd_b = b.odd_letters();
  std::multiset<axiskit::AxisWord> target;
  for (const auto& w : b.words) target.insert(*word_orbit(w, odd_b).begin());
  std::vector<int> perm(a.letter_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::multiset<axiskit::AxisWord> mapped;
    for (auto w : a.words) {
      for (int& l : w.letters) l = perm[l];
      mapped.insert(*word_orbit(w, odd_b).begin());
    }
    if (mapped == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}


// Four-cycles of face adjacency across edges whose diagonals are opposite
// corners of some crossing, found by trying every ordered quadruple.
inline int qualifying_cycle_count(const axiskit::Projection& p) {
  using Pair = std::pair<int, int>;
  auto key = [](int a, int b) { return Pair{std::min(a, b), std::max(a, b)}; };
  std::set<Pair> side, across;
  for (int v = 0; v < p.crossing_count(); ++v) {
    for (int j = 0; j < 4; ++j) {
      side.insert(key(p.face_of_corner(v, j), p.face_of_corner(v, (j + 1) % 4)));
      across.insert(key(p.face_of_corner(v, j), p.face_of_corner(v, (j + 2) % 4)));
    }
  }
  const int f = p.face_count();
  std::set<std::set<Pair>> cycles;
  for (int a = 0; a < f; ++a) {
    for (int b = 0; b < f; ++b) {
      for (int c = 0; c < f; ++c) {
        for (int d = 0; d < f; ++d) {
          if (std::set<int>{a, b, c, d}.size() < 4) continue;
          if (!side.count(key(a, b)) || !side.count(key(b, c)) || !side.count(key(c, d)) || !side.count(key(d, a))) continue;
          if (!across.count(key(a, c)) || !across.count(key(b, d))) continue;
          cycles.insert({key(a, b), key(b, c), key(c, d), key(d, a)});
        }
      }
    }
  }
  return static_cast<int>(cycles.size());
}

}  // namespace oracle
