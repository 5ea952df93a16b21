#include "axiskit/analysis.hpp"

#include <set>

#include "axiskit/error.hpp"

namespace axiskit {

std::optional<int> reducible_crossing(const Projection& p) {
  for (int v = 0; v < p.crossing_count(); ++v) {
    if (p.face_of_corner(v, 0) == p.face_of_corner(v, 2) || p.face_of_corner(v, 1) == p.face_of_corner(v, 3)) {
      return v;
    }
  }
  return std::nullopt;
}

bool has_reducible_word(const AxisSystem& s) {
  for (const auto& w : s.words) {
    if (w.length() == 1) return true;
    for (int i = 0; i < w.length(); ++i) {
      if (w.letters[i] == w.letters[(i + 1) % w.length()]) return true;
    }
  }
  return false;
}

ReducibilityVerdict is_reducible(const Projection& p) {
  if (p.is_unknot()) throw Error(ErrorCode::NoCrossings, "reducibility needs a crossing");
  ReducibilityVerdict out;
  out.crossing = reducible_crossing(p);
  out.reducible = out.crossing.has_value();
  if (out.reducible != has_reducible_word(axis_system(p))) {
    throw Error(ErrorCode::InvariantViolation, "crossing test and axis-word test disagree on reducibility");
  }
  return out;
}

AxisSystem twist_template(int n) {
  if (n < 4) throw Error(ErrorCode::TooFewCrossings, "twist knots need at least 4 crossings, got " + std::to_string(n));
  const bool even = n % 2 == 0;
  const int m = n / 2;
  const int top = even ? m - 2 : m - 1;  // largest R/L index

  std::vector<std::string> alphabet{"C0"};
  if (even) alphabet.push_back("C1");
  alphabet.push_back("I");
  alphabet.push_back("O");
  for (int i = 0; i <= top; ++i) alphabet.push_back("R" + std::to_string(i));
  for (int i = 0; i <= top; ++i) alphabet.push_back("L" + std::to_string(i));

  const int c0 = 0;
  const int c1 = even ? 1 : -1;
  const int in = even ? 2 : 1;
  const int out = in + 1;
  auto R = [&](int i) { return out + 1 + i; };
  auto L = [&](int i) { return out + 2 + top + i; };

  std::vector<AxisWord> words;
  AxisWord longest{true, {c0}};
  for (int i = 0; i <= top; ++i) longest.letters.push_back(R(i));
  if (even) longest.letters.push_back(c1);
  for (int i = top; i >= 0; --i) longest.letters.push_back(L(i));
  words.push_back(longest);

  if (even) {
    words.push_back({false, {c0, in, c1, out}});
    words.push_back({true, {L(0), R(0), in, out, R(0), L(0), out, in}});
    for (int i = 1; i <= m - 2; ++i) words.push_back({true, {R(i), in, out}});
    for (int i = 1; i <= m - 2; ++i) words.push_back({true, {L(i), in, out}});
  } else {
    words.push_back({false, {c0, in, out}});
    words.push_back({true, {L(0), R(0), in, L(m - 1), out, R(0), L(0), out, R(m - 1), in}});
    for (int i = 0; i < m - 1; ++i) words.push_back({false, {in, out}});
    for (int i = 1; i <= m - 2; ++i) words.push_back({true, {L(i), in, R(m - 1 - i), out}});
  }
  return make_system(std::move(alphabet), std::move(words));
}

AxisPolynomial twist_polynomial(int n) {
  if (n < 4) throw Error(ErrorCode::TooFewCrossings, "twist knots need at least 4 crossings, got " + std::to_string(n));
  AxisPolynomial out;
  out.add_x(n);
  if (n % 2 == 0) {
    out.add_x(4);
    out.add_x(3, n - 4);
    out.add_y(8);
  } else {
    out.add_x(3);
    out.add_x(4, (n - 5) / 2);
    out.add_x(2, (n - 3) / 2);
    out.add_y(10);
  }
  return out;
}

TwistVerdict recognize_twist_by_system(const Projection& p) {
  if (p.is_unknot()) throw Error(ErrorCode::NoCrossings, "the crossingless unknot is not a twist projection");
  TwistVerdict verdict;
  const int c = p.crossing_count();
  if (c < 4) return verdict;
  if (auto witness = systems_equal(axis_system(p), twist_template(c))) {
    verdict.is_twist = true;
    verdict.n = c;
    verdict.witness = std::move(witness);
  }
  return verdict;
}

bool recognize_twist_by_isomorphism(const Projection& p) {
  if (p.is_unknot()) throw Error(ErrorCode::NoCrossings, "the crossingless unknot is not a twist projection");
  return p.crossing_count() >= 4 && is_isomorphic(p, build_twist(p.crossing_count()));
}

TwistVerdict recognize_twist(const Projection& p) {
  TwistVerdict verdict = recognize_twist_by_system(p);
  if (verdict.is_twist != recognize_twist_by_isomorphism(p)) {
    throw Error(ErrorCode::InvariantViolation,
                std::string("axis system says ") + (verdict.is_twist ? "twist" : "not twist") +
                    " but map isomorphism with the standard twist projection disagrees");
  }
  return verdict;
}

}  // namespace axiskit
