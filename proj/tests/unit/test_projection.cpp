#include <algorithm>
#include <random>
#include <set>

#include "axiskit/error.hpp"
#include "axiskit/generate.hpp"
#include "axiskit/projection.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace axiskit;

namespace {

std::vector<int> face_sizes(const Projection& p) {
  std::vector<int> sizes;
  for (int f = 0; f < p.face_count(); ++f) sizes.push_back(p.face_size(f));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvariantViolation;
}

const char* kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

}  // namespace

TEST_CASE("one-crossing curve has two monogons and a bigon") {
  const Projection r = parse_pd("X[1,1,2,2]");
  CHECK(r.crossing_count() == 1);
  CHECK(r.face_count() == 3);
  CHECK(face_sizes(r) == std::vector<int>{1, 1, 2});
}

TEST_CASE("trefoil faces") {
  const Projection p = parse_pd(kTrefoil);
  CHECK(p.crossing_count() == 3);
  CHECK(p.edge_count() == 6);
  CHECK(face_sizes(p) == std::vector<int>{2, 2, 2, 3, 3});
  CHECK(p.component_count() == 1);
  CHECK(p.labels() == std::vector<std::string>{"A", "B", "C", "D", "E"});
}

TEST_CASE("PD syntax variants") {
  const Projection a = parse_pd(kTrefoil);
  CHECK(is_isomorphic(a, parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]")));
  CHECK(is_isomorphic(a, parse_pd("# trefoil\nX[1, 4, 2, 5]\n  X[3,6,4,1]  # middle\nX[5,2,6,3]\n")));
  CHECK(is_isomorphic(a, fixtures::load("trefoil.pd")));
}

TEST_CASE("PD errors") {
  CHECK(code_of([] { parse_pd(""); }) == ErrorCode::MalformedRecord);
  CHECK(code_of([] { parse_pd("# nothing here\n"); }) == ErrorCode::MalformedRecord);
  CHECK(code_of([] { parse_pd("X[1,2,3]"); }) == ErrorCode::NotFourValent);
  CHECK(code_of([] { parse_pd("X[1,2,3,4,5]"); }) == ErrorCode::NotFourValent);
  CHECK(code_of([] { parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,7]"); }) == ErrorCode::LabelCountError);
  CHECK(code_of([] { parse_pd("X[1,1,1,2]"); }) == ErrorCode::LabelCountError);
  CHECK(code_of([] { parse_pd("X[1,1,2,2] X[3,3,4,4]"); }) == ErrorCode::SplitProjection);
  CHECK(code_of([] { parse_pd("X[1,2,1,2]"); }) == ErrorCode::EulerViolation);
  CHECK(code_of([] { parse_pd("X[1,1,2,2"); }) == ErrorCode::MalformedRecord);
  CHECK(code_of([] { parse_pd("Y[1,1,2,2]"); }) == ErrorCode::MalformedRecord);
  CHECK(code_of([] { parse_pd("X[1,a,2,2]"); }) == ErrorCode::MalformedRecord);
  CHECK(code_of([] { parse_pd("X[0,0,2,2]"); }) == ErrorCode::MalformedRecord);
}

TEST_CASE("PD errors carry line numbers") {
  try {
    parse_pd("X[1,4,2,5]\nX[3,6,4,1]\nX[5,2,6]\n");
    FAIL("accepted a three-label record");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFourValent);
    CHECK(e.line() == 3);
  }
}

TEST_CASE("rotation-system documents") {
  const Projection r = parse_map(R"({"crossings": [[10, 11, 12, 13]], "pairing": [[10, 11], [12, 13]]})");
  CHECK(is_isomorphic(r, parse_pd("X[1,1,2,2]")));

  CHECK(code_of([] { parse_map(R"({"crossings": [[1,2,3,4]], "pairing": [[1,1], [2,3]]})"); }) ==
        ErrorCode::PairingNotInvolution);
  CHECK(code_of([] { parse_map(R"({"crossings": [[1,2,3,4]], "pairing": [[1,2]]})"); }) ==
        ErrorCode::PairingNotInvolution);
  CHECK(code_of([] { parse_map(R"({"crossings": [[1,2,3,4]], "pairing": [[1,2], [3,9]]})"); }) ==
        ErrorCode::PairingNotInvolution);
  CHECK(code_of([] { parse_map(R"({"crossings": [[1,2,3]], "pairing": []})"); }) == ErrorCode::NotFourValent);
  CHECK(code_of([] { parse_map("{not json"); }) == ErrorCode::MalformedRecord);

  // Two disjoint trefoils in one document.
  const Projection t = parse_pd(kTrefoil);
  std::string crossings, pairing;
  for (int copy = 0; copy < 2; ++copy) {
    for (int v = 0; v < 3; ++v) {
      crossings += std::string(crossings.empty() ? "" : ",") + "[";
      for (int s = 0; s < 4; ++s) crossings += (s ? "," : "") + std::to_string(100 * copy + 4 * v + s);
      crossings += "]";
    }
    for (int d = 0; d < 12; ++d) {
      if (t.mate(d) < d) continue;
      pairing += std::string(pairing.empty() ? "" : ",") + "[" + std::to_string(100 * copy + d) + "," +
                 std::to_string(100 * copy + t.mate(d)) + "]";
    }
  }
  const std::string doc = "{\"crossings\": [" + crossings + "], \"pairing\": [" + pairing + "]}";
  CHECK(code_of([&] { parse_map(doc); }) == ErrorCode::SplitProjection);

  CHECK(is_isomorphic(t, parse_map(emit_map(t))));
}

TEST_CASE("crossingless unknot") {
  const Projection o = parse_map(R"({"crossings": [], "pairing": []})");
  CHECK(o.is_unknot());
  CHECK(o.crossing_count() == 0);
  CHECK(fixtures::load("invalid/unknot.json").is_unknot());
  CHECK(code_of([] { fixtures::load("invalid/corrupt.json"); }) == ErrorCode::PairingNotInvolution);
}

TEST_CASE("default letters") {
  CHECK(default_letter(0) == "A");
  CHECK(default_letter(25) == "Z");
  CHECK(default_letter(26) == "AA");
  CHECK(default_letter(27) == "AB");
  CHECK(default_letter(52) == "BA");
}

TEST_CASE("face boundaries") {
  const Projection t = parse_pd(kTrefoil);
  for (int f = 0; f < t.face_count(); ++f) {
    const FaceBoundary b = t.face_boundary(f);
    CHECK(b.size() == 2 * t.face_size(f));
    for (int i = 0; i < b.size(); ++i) {
      CHECK(b.items[i].is_corner() == (i % 2 == 0));
      CHECK(t.face_of(b.items[i]) == f);
      CHECK(t.position_of(b.items[i]) == i);
    }
  }
  const Projection r = parse_pd("X[1,1,2,2]");
  int monogons = 0;
  for (int f = 0; f < r.face_count(); ++f) {
    if (r.face_size(f) == 1) {
      ++monogons;
      CHECK(r.face_boundary(f).size() == 2);
    }
  }
  CHECK(monogons == 2);
}

TEST_CASE("faces partition the darts") {
  for (const auto& [name, p] : fixtures::corpus()) {
    CAPTURE(name);
    std::multiset<int> darts;
    for (int f = 0; f < p.face_count(); ++f) darts.insert(p.face_darts(f).begin(), p.face_darts(f).end());
    CHECK(darts.size() == static_cast<size_t>(p.dart_count()));
    CHECK(std::set<int>(darts.begin(), darts.end()).size() == darts.size());
  }
}

TEST_CASE("Euler counts on random maps") {
  for (const Projection& p : fixtures::random_maps(300, 12, 11)) {
    CHECK(p.edge_count() == 2 * p.crossing_count());
    CHECK(p.face_count() == p.crossing_count() + 2);
    CHECK(oracle::face_count(p.mates()) == p.face_count());
  }
}

TEST_CASE("emit and parse round trip") {
  for (const auto& [name, p] : fixtures::corpus()) {
    CAPTURE(name);
    const Projection q = parse_pd(emit_pd(p));
    CHECK(is_isomorphic(p, q));
    CHECK(emit_pd(q) == emit_pd(parse_pd(emit_pd(q))));
  }
  for (const Projection& p : fixtures::random_maps(100, 9, 5)) CHECK(is_isomorphic(p, parse_pd(emit_pd(p))));
}

TEST_CASE("parsing is deterministic") {
  const Projection a = parse_pd(kTrefoil);
  const Projection b = parse_pd(kTrefoil);
  CHECK(a.mates() == b.mates());
  CHECK(a.labels() == b.labels());
  for (int f = 0; f < a.face_count(); ++f) CHECK(a.face_darts(f) == b.face_darts(f));
}

TEST_CASE("isomorphism examples") {
  const Projection t4 = build_twist(4);
  std::mt19937_64 rng(3);
  CHECK(is_isomorphic(t4, scrambled(t4, rng, true)));
  CHECK_FALSE(is_isomorphic(t4, build_twist(5)));
  // Trefoil with edge labels permuted and records rotated and reordered.
  const Projection t = parse_pd(kTrefoil);
  const Projection u = parse_pd("X[3,6,5,2] X[1,6,3,4] X[5,1,4,2]");
  CHECK(is_isomorphic(t, u));
  CHECK(oracle::isomorphic(t, u));
}

TEST_CASE("isomorphism agrees with brute force") {
  std::mt19937_64 rng(17);
  const auto maps = fixtures::random_maps(60, 4, 23);
  for (size_t i = 0; i < maps.size(); ++i) {
    const Projection& p = maps[i];
    const Projection q = scrambled(p, rng, i % 2 == 1);
    CHECK(is_isomorphic(p, q));
    CHECK(oracle::isomorphic(p, q));
    const Projection& other = maps[(i + 4) % maps.size()];
    CHECK(is_isomorphic(p, other) == oracle::isomorphic(p, other));
  }
}

TEST_CASE("automorphisms include the identity and close under composition") {
  const Projection t = parse_pd(kTrefoil);
  const auto autos = automorphisms(t);
  // Dihedral symmetry of order 6, doubled by the reflections.
  CHECK(autos.size() == 12);
  CHECK(std::count_if(autos.begin(), autos.end(), [](const Isomorphism& a) { return a.reflection; }) == 6);
  std::set<std::vector<int>> maps;
  for (const auto& a : autos) maps.insert(a.dart_map);
  std::vector<int> identity(t.dart_count());
  std::iota(identity.begin(), identity.end(), 0);
  CHECK(maps.count(identity) == 1);
  for (const auto& a : autos) {
    for (const auto& b : autos) {
      std::vector<int> ab(t.dart_count());
      for (int d = 0; d < t.dart_count(); ++d) ab[d] = a.dart_map[b.dart_map[d]];
      CHECK(maps.count(ab) == 1);
    }
  }
}

TEST_CASE("twist projections") {
  CHECK(code_of([] { build_twist(3); }) == ErrorCode::TooFewCrossings);
  for (int n = 4; n <= 12; ++n) {
    const Projection p = build_twist(n);
    CHECK(p.crossing_count() == n);
    CHECK(p.face_count() == n + 2);
    CHECK(p.component_count() == 1);
    CHECK(p.face_by_label("I").has_value());
    CHECK(p.face_by_label("C1").has_value() == (n % 2 == 0));
  }
  CHECK(build_twist(5).face_count() == 7);
}

TEST_CASE("relabeling keeps the map") {
  const Projection t = parse_pd(kTrefoil);
  const Projection u = t.relabeled({4, 3, 2, 1, 0}, {"V", "W", "X", "Y", "Z"});
  CHECK(u.label(0) == "V");
  CHECK(u.face_size(0) == t.face_size(4));
  CHECK(u.face_by_label("Z") == 4);
  CHECK(is_isomorphic(t, u));
}

TEST_CASE("link projections count components") {
  // Hopf link curve: two circles meeting twice.
  const Projection hopf = parse_pd("X[1,3,2,4] X[3,1,4,2]");
  CHECK(hopf.component_count() == 2);
  CHECK(parse_pd(kTrefoil).component_count() == 1);
}
