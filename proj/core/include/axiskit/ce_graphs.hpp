#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "axiskit/projection.hpp"
#include "axiskit/words.hpp"

namespace axiskit {

using LetterPair = std::pair<int, int>;  // first <= second

// Multigraphs on region letters: c-edges join the two pairs of opposite
// regions at each crossing, e-edges join the two sides of each edge (the
// e-graph is the dual of the projection). Edge lists are sorted.
struct CeGraphs {
  std::vector<std::string> vertices;
  std::vector<LetterPair> c_edges;
  std::vector<LetterPair> e_edges;

  int c_multiplicity(int a, int b) const;
  int e_multiplicity(int a, int b) const;

  friend bool operator==(const CeGraphs&, const CeGraphs&) = default;
};

CeGraphs ce_graphs(const Projection& p);
// The same graphs read from the ce-representation: every cyclically
// adjacent letter pair contributes one edge of the marker's kind.
CeGraphs ce_graphs(const AxisSystem& s);

// Letters of a four-cycle ABCD of the e-graph whose diagonals AC and BD are
// c-edges, in the smallest of its eight rotations and reflections.
struct QuadCycle {
  std::array<int, 4> letters{};
  bool dummy = false;

  friend bool operator==(const QuadCycle&, const QuadCycle&) = default;
};

std::array<int, 4> dihedral_min(std::array<int, 4> cycle);

std::vector<QuadCycle> quad_cycles(const CeGraphs& g);
// Flags cycles that are not the region quadruple of any crossing of p.
// Vertex i of g must be face i of p.
std::vector<QuadCycle> quad_cycles(const CeGraphs& g, const Projection& p);
// Region quadruple around each crossing that has four distinct regions.
std::vector<std::array<int, 4>> crossing_quads(const Projection& p);

// Glues the qualifying cycles as quadrilateral tiles into the dual map and
// dualizes it. Faces of the result carry the vertex names. Throws
// DummyPresent when the cycle count is not the letter count minus two,
// GluingInconsistent when sides do not pair up or the gluing is ambiguous,
// and NonSpherical when the glued surface is not a sphere.
Projection reconstruct(const CeGraphs& g);

bool is_planar(int vertex_count, const std::vector<LetterPair>& edges);

enum class GraphKind { C, E };
// c-graph edges are drawn solid, e-graph edges dashed.
std::string to_dot(const CeGraphs& g, GraphKind kind);

}  // namespace axiskit
