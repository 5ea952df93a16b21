#include "axiskit/ce_graphs.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "axiskit/error.hpp"

namespace axiskit {

namespace {

LetterPair ordered(int a, int b) { return a <= b ? LetterPair{a, b} : LetterPair{b, a}; }

int count_pair(const std::vector<LetterPair>& edges, int a, int b) {
  const auto key = ordered(a, b);
  const auto range = std::equal_range(edges.begin(), edges.end(), key);
  return static_cast<int>(range.second - range.first);
}

}  // namespace

int CeGraphs::c_multiplicity(int a, int b) const { return count_pair(c_edges, a, b); }
int CeGraphs::e_multiplicity(int a, int b) const { return count_pair(e_edges, a, b); }

CeGraphs ce_graphs(const Projection& p) {
  if (p.is_unknot()) throw Error(ErrorCode::NoCrossings, "the crossingless unknot has no c-graph or e-graph");
  CeGraphs g;
  g.vertices = p.labels();
  for (int v = 0; v < p.crossing_count(); ++v) {
    g.c_edges.push_back(ordered(p.face_of_corner(v, 0), p.face_of_corner(v, 2)));
    g.c_edges.push_back(ordered(p.face_of_corner(v, 1), p.face_of_corner(v, 3)));
  }
  for (int d = 0; d < p.dart_count(); ++d) {
    if (d < p.mate(d)) g.e_edges.push_back(ordered(p.face_of_dart(d), p.face_of_dart(p.mate(d))));
  }
  std::sort(g.c_edges.begin(), g.c_edges.end());
  std::sort(g.e_edges.begin(), g.e_edges.end());
  return g;
}

CeGraphs ce_graphs(const AxisSystem& s) {
  if (s.empty()) throw Error(ErrorCode::NoCrossings, "the empty axis system has no c-graph or e-graph");
  CeGraphs g;
  g.vertices = s.alphabet;
  for (const CeWord& w : ce_representation(s)) {
    const auto& letters = w.word.letters;
    const size_t len = letters.size();
    for (size_t i = 0; i < len; ++i) {
      const auto pair = ordered(letters[i], letters[(i + 1) % len]);
      (w.markers[i + 1] == 'c' ? g.c_edges : g.e_edges).push_back(pair);
    }
  }
  std::sort(g.c_edges.begin(), g.c_edges.end());
  std::sort(g.e_edges.begin(), g.e_edges.end());
  return g;
}

std::array<int, 4> dihedral_min(std::array<int, 4> cycle) {
  std::array<int, 4> best = cycle;
  for (int flip = 0; flip < 2; ++flip) {
    for (int r = 0; r < 4; ++r) {
      std::array<int, 4> cand{};
      for (int i = 0; i < 4; ++i) cand[i] = flip ? cycle[(r - i + 4) % 4] : cycle[(r + i) % 4];
      best = std::min(best, cand);
    }
  }
  return best;
}

std::vector<QuadCycle> quad_cycles(const CeGraphs& g) {
  const int n = static_cast<int>(g.vertices.size());
  std::vector<std::set<int>> e_adj(n);
  std::set<LetterPair> c_pairs(g.c_edges.begin(), g.c_edges.end());
  for (auto [a, b] : g.e_edges) {
    if (a == b) continue;
    e_adj[a].insert(b);
    e_adj[b].insert(a);
  }
  std::set<std::array<int, 4>> found;
  for (int a = 0; a < n; ++a) {
    for (int b : e_adj[a]) {
      for (int c : e_adj[b]) {
        if (c == a || !c_pairs.count(ordered(a, c))) continue;
        for (int d : e_adj[c]) {
          if (d == a || d == b || !e_adj[a].count(d) || !c_pairs.count(ordered(b, d))) continue;
          found.insert(dihedral_min({a, b, c, d}));
        }
      }
    }
  }
  std::vector<QuadCycle> out;
  for (const auto& cycle : found) out.push_back(QuadCycle{cycle, false});
  return out;
}

std::vector<std::array<int, 4>> crossing_quads(const Projection& p) {
  std::vector<std::array<int, 4>> out;
  for (int v = 0; v < p.crossing_count(); ++v) {
    std::array<int, 4> q{p.face_of_corner(v, 0), p.face_of_corner(v, 1), p.face_of_corner(v, 2),
                         p.face_of_corner(v, 3)};
    if (std::set<int>(q.begin(), q.end()).size() == 4) out.push_back(dihedral_min(q));
  }
  return out;
}

std::vector<QuadCycle> quad_cycles(const CeGraphs& g, const Projection& p) {
  auto cycles = quad_cycles(g);
  const auto quads = crossing_quads(p);
  const std::set<std::array<int, 4>> real(quads.begin(), quads.end());
  for (auto& c : cycles) c.dummy = !real.count(c.letters);
  return cycles;
}

bool is_planar(int vertex_count, const std::vector<LetterPair>& edges) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph graph(vertex_count);
  std::set<LetterPair> simple;
  for (auto [a, b] : edges) {
    if (a != b) simple.insert(ordered(a, b));
  }
  for (auto [a, b] : simple) boost::add_edge(a, b, graph);
  return boost::boyer_myrvold_planarity_test(graph);
}

std::string to_dot(const CeGraphs& g, GraphKind kind) {
  const bool c = kind == GraphKind::C;
  std::ostringstream out;
  out << "graph " << (c ? "c_graph" : "e_graph") << " {\n";
  out << "  edge [style=" << (c ? "solid" : "dashed") << "];\n";
  for (const auto& v : g.vertices) out << "  \"" << v << "\";\n";
  for (auto [a, b] : c ? g.c_edges : g.e_edges) {
    out << "  \"" << g.vertices[a] << "\" -- \"" << g.vertices[b] << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace axiskit
