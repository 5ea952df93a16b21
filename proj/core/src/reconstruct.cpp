#include <algorithm>
#include <map>
#include <optional>
#include <queue>

#include "axiskit/ce_graphs.hpp"
#include "axiskit/error.hpp"

namespace axiskit {

namespace {

struct Side {
  int tile = 0;
  int index = 0;  // side i runs from corner i to corner i+1 of the tile
};

using Gluing = std::vector<std::pair<Side, Side>>;

// Every perfect matching of one group of tile sides sharing a letter pair.
void matchings(std::vector<Side> sides, Gluing& current, std::vector<Gluing>& out) {
  if (sides.empty()) {
    out.push_back(current);
    return;
  }
  const Side first = sides.front();
  for (size_t j = 1; j < sides.size(); ++j) {
    std::vector<Side> rest;
    for (size_t k = 1; k < sides.size(); ++k) {
      if (k != j) rest.push_back(sides[k]);
    }
    current.emplace_back(first, sides[j]);
    matchings(rest, current, out);
    current.pop_back();
  }
}

struct Failure {
  ErrorCode code;
  std::string reason;
};

class Gluer {
 public:
  Gluer(const CeGraphs& g, std::vector<QuadCycle> tiles) : g_(g), tiles_(std::move(tiles)) {}

  // Projection for one choice of side pairing, or why it fails.
  std::optional<Projection> glue(const Gluing& gluing, Failure& failure) const {
    const int count = static_cast<int>(tiles_.size());
    std::vector<std::vector<std::pair<int, bool>>> links(count);  // (other tile, same orientation)
    for (const auto& [a, b] : gluing) {
      // Sides traversed the same way force opposite tile orientations.
      const bool same_direction = letter(a.tile, a.index) == letter(b.tile, b.index);
      links[a.tile].emplace_back(b.tile, !same_direction);
      links[b.tile].emplace_back(a.tile, !same_direction);
    }
    std::vector<int> orientation(count, 0);
    orientation[0] = 1;
    std::queue<int> queue;
    queue.push(0);
    while (!queue.empty()) {
      const int t = queue.front();
      queue.pop();
      for (auto [u, keep] : links[t]) {
        const int want = keep ? orientation[t] : -orientation[t];
        if (orientation[u] == 0) {
          orientation[u] = want;
          queue.push(u);
        } else if (orientation[u] != want) {
          failure = {ErrorCode::NonSpherical, "tiles cannot be oriented consistently"};
          return std::nullopt;
        }
      }
    }
    if (std::count(orientation.begin(), orientation.end(), 0) > 0) {
      failure = {ErrorCode::NonSpherical, "glued tiles fall apart into several pieces"};
      return std::nullopt;
    }

    auto dart = [&](Side s) {
      const int oriented = orientation[s.tile] > 0 ? s.index : (3 - s.index + 4) % 4;
      return 4 * s.tile + (oriented + 1) % 4;
    };
    std::vector<int> mate(4 * count, -1);
    for (const auto& [a, b] : gluing) {
      mate[dart(a)] = dart(b);
      mate[dart(b)] = dart(a);
    }

    std::optional<Projection> raw;
    try {
      raw.emplace(std::move(mate));
    } catch (const Error& e) {
      failure = {ErrorCode::NonSpherical, e.what()};
      return std::nullopt;
    }

    // Corner j of crossing t is region w_j of the oriented tile.
    const int letters = static_cast<int>(g_.vertices.size());
    std::vector<int> face_letter(raw->face_count(), -1);
    for (int t = 0; t < count; ++t) {
      for (int j = 0; j < 4; ++j) {
        const int l = orientation[t] > 0 ? tiles_[t].letters[j] : tiles_[t].letters[(4 - j) % 4];
        int& slot = face_letter[raw->face_of_corner(t, j)];
        if (slot >= 0 && slot != l) {
          failure = {ErrorCode::GluingInconsistent, "a glued region collects two different letters"};
          return std::nullopt;
        }
        slot = l;
      }
    }
    std::vector<int> order(letters, -1);
    for (int f = 0; f < raw->face_count(); ++f) {
      if (face_letter[f] < 0 || order[face_letter[f]] >= 0) {
        failure = {ErrorCode::GluingInconsistent, "glued regions do not match the letters one to one"};
        return std::nullopt;
      }
      order[face_letter[f]] = f;
    }
    Projection out = raw->relabeled(order, g_.vertices);
    if (!(ce_graphs(out) == g_)) {
      failure = {ErrorCode::GluingInconsistent, "glued projection has different c-graph or e-graph"};
      return std::nullopt;
    }
    return out;
  }

 private:
  int letter(int tile, int index) const { return tiles_[tile].letters[index]; }

  const CeGraphs& g_;
  std::vector<QuadCycle> tiles_;
};

constexpr long kMaxGluings = 100000;

}  // namespace

Projection reconstruct(const CeGraphs& g) {
  const auto tiles = quad_cycles(g);
  const int letters = static_cast<int>(g.vertices.size());
  if (static_cast<int>(tiles.size()) != letters - 2) {
    throw Error(ErrorCode::DummyPresent, std::to_string(tiles.size()) + " qualifying cycles for " +
                                             std::to_string(letters) + " letters; expected " +
                                             std::to_string(letters - 2));
  }
  if (tiles.empty()) throw Error(ErrorCode::NonSpherical, "no tiles to glue");

  std::map<LetterPair, std::vector<Side>> groups;
  for (int t = 0; t < static_cast<int>(tiles.size()); ++t) {
    for (int i = 0; i < 4; ++i) {
      const int a = tiles[t].letters[i];
      const int b = tiles[t].letters[(i + 1) % 4];
      groups[{std::min(a, b), std::max(a, b)}].push_back(Side{t, i});
    }
  }
  std::map<LetterPair, int> multiplicity;
  for (const auto& e : g.e_edges) ++multiplicity[e];
  for (const auto& [pair, k] : multiplicity) {
    const auto it = groups.find(pair);
    const size_t sides = it == groups.end() ? 0 : it->second.size();
    if (sides != static_cast<size_t>(2 * k)) {
      throw Error(ErrorCode::GluingInconsistent, "e-edge " + g.vertices[pair.first] + g.vertices[pair.second] +
                                                     " borders " + std::to_string(sides) + " tile sides, expected " +
                                                     std::to_string(2 * k));
    }
  }
  for (const auto& [pair, sides] : groups) {
    if (!multiplicity.count(pair)) {
      throw Error(ErrorCode::GluingInconsistent,
                  "tile side " + g.vertices[pair.first] + g.vertices[pair.second] + " is not an e-edge");
    }
  }

  std::vector<std::vector<Gluing>> options;
  long total = 1;
  for (const auto& [pair, sides] : groups) {
    std::vector<Gluing> group;
    Gluing current;
    matchings(sides, current, group);
    total *= static_cast<long>(group.size());
    if (total > kMaxGluings) throw Error(ErrorCode::GluingInconsistent, "too many candidate gluings to decide");
    options.push_back(std::move(group));
  }

  const Gluer gluer(g, tiles);
  std::vector<Projection> results;
  Failure failure{ErrorCode::GluingInconsistent, "no gluing"};
  std::vector<size_t> pick(options.size(), 0);
  while (true) {
    Gluing gluing;
    for (size_t i = 0; i < options.size(); ++i) {
      gluing.insert(gluing.end(), options[i][pick[i]].begin(), options[i][pick[i]].end());
    }
    if (auto p = gluer.glue(gluing, failure)) {
      const bool known = std::any_of(results.begin(), results.end(), [&](const Projection& q) { return is_isomorphic(q, *p); });
      if (!known) results.push_back(std::move(*p));
    }
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }

  if (results.empty()) throw Error(failure.code, failure.reason);
  if (results.size() > 1) {
    throw Error(ErrorCode::GluingInconsistent, std::to_string(results.size()) + " non-isomorphic gluings fit the graphs");
  }
  return std::move(results.front());
}

}  // namespace axiskit
