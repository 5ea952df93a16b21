#include "axiskit/invariants.hpp"

#include <algorithm>
#include <set>

#include "axiskit/analysis.hpp"
#include "axiskit/ce_graphs.hpp"

namespace axiskit {

namespace {

InvariantCheck check(std::string name, bool passed, std::string detail) {
  return {std::move(name), passed, std::move(detail)};
}

std::string equation(long lhs, long rhs) {
  return std::to_string(lhs) + (lhs == rhs ? " = " : " != ") + std::to_string(rhs);
}

}  // namespace

std::vector<InvariantCheck> check_invariants(const Projection& p) {
  const long four_c = 4L * p.crossing_count();
  const auto axes = trace_axes(p);
  std::vector<InvariantCheck> out;

  long total = 0;
  for (const Axis& a : axes) total += a.length();
  out.push_back(check("axis-length-sum", total == four_c, equation(total, four_c) + " (4c)"));

  std::vector<int> odd_axes;
  for (const Axis& a : axes) {
    if (a.odd_segments() % 2 != 0) odd_axes.push_back(a.id);
  }
  std::string odd_detail = odd_axes.empty() ? "all axes even" : "odd count on axis";
  for (int id : odd_axes) odd_detail += " " + std::to_string(id);
  out.push_back(check("odd-segment-parity", odd_axes.empty(), odd_detail));

  std::vector<int> per_face(p.face_count(), 0);
  for (const Axis& a : axes) {
    for (const Segment& s : a.segments) ++per_face[s.face];
  }
  int bad_faces = 0;
  for (int f = 0; f < p.face_count(); ++f) bad_faces += per_face[f] != p.face_size(f);
  out.push_back(check("segments-per-region", bad_faces == 0,
                      bad_faces == 0 ? "every n-gon holds n segments"
                                     : std::to_string(bad_faces) + " regions with a wrong segment count"));

  const AxisPolynomial poly = axis_polynomial(axes);
  const long weighted = static_cast<long>(poly.weighted_sum());
  out.push_back(check("weighted-polynomial", weighted == four_c, equation(weighted, four_c) + " (4c)"));
  const long at_one = static_cast<long>(poly.eval(1, 1));
  const long count = static_cast<long>(axes.size());
  out.push_back(check("polynomial-axis-count", at_one == count, equation(at_one, count) + " axes"));

  const bool by_crossing = reducible_crossing(p).has_value();
  const bool by_word = has_reducible_word(axis_system(p));
  out.push_back(check("reducibility-agreement", by_crossing == by_word,
                      std::string("crossing test ") + (by_crossing ? "reducible" : "reduced") + ", word test " +
                          (by_word ? "reducible" : "reduced")));

  const CeGraphs g = ce_graphs(p);
  std::set<std::array<int, 4>> cycles;
  for (const QuadCycle& q : quad_cycles(g)) cycles.insert(q.letters);
  int missing = 0;
  for (const auto& quad : crossing_quads(p)) missing += !cycles.count(dihedral_min(quad));
  out.push_back(check("crossing-four-cycles", missing == 0,
                      missing == 0 ? "every crossing quadruple qualifies"
                                   : std::to_string(missing) + " crossing quadruples missing"));

  const long c_count = static_cast<long>(g.c_edges.size());
  const long e_count = static_cast<long>(g.e_edges.size());
  const long two_c = 2L * p.crossing_count();
  out.push_back(check("graph-edge-counts", c_count == two_c && e_count == two_c,
                      "|c| = " + std::to_string(c_count) + ", |e| = " + std::to_string(e_count) + ", 2c = " +
                          std::to_string(two_c)));
  return out;
}

}  // namespace axiskit
