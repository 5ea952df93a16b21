#include <sstream>

#include "axiskit/commands.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace axiskit::cli;

namespace {

Outcome run_on(const std::string& command, const std::string& fixture, Options opt = {}) {
  return run(command, file_source(fixtures::path(fixture)), opt);
}

}  // namespace

TEST_CASE("axes listing") {
  const Outcome o = run_on("axes", "trefoil.pd");
  CHECK(o.exit_code == 0);
  CHECK(o.text.find("axis 3: length 3, simple") != std::string::npos);
  CHECK(o.json["axes"].size() == 4);

  const Outcome r = run("axes", pd_source("X[1,1,2,2]"), {});
  CHECK(r.json["axes"][0]["length"] == 3);
  CHECK(r.json["axes"][1]["length"] == 1);

  CHECK(run("axes", twist_source(6), {}).json["axes"].size() == 5);
}

TEST_CASE("system output") {
  CHECK(run_on("system", "trefoil.pd").text == "ACE\nBAD\nBCD\nBED\n");
  Options ce;
  ce.ce = true;
  const Outcome o = run_on("system", "trefoil.pd", ce);
  CHECK(o.json["ce"].size() == 4);
  CHECK(o.text.find("c") == 0);
  CHECK(run_on("system", "invalid/unknot.json").text == "∅\n");
}

TEST_CASE("polynomial output") {
  CHECK(run("poly", twist_source(5), {}).text == "x^2 + x^3 + x^5 + y^10\n");
  Options at;
  at.eval = {1, 1};
  CHECK(run_on("poly", "trefoil.pd", at).text == "4\n");
  at.eval = {1, 0};
  CHECK(run_on("poly", "6_3.pd", at).text == "0\n");
  const Outcome none = run_on("poly", "invalid/unknot.json");
  CHECK(none.exit_code == 2);
  CHECK(none.json["error"]["code"] == "NoCrossings");
}

TEST_CASE("graph commands") {
  Options cycles;
  cycles.cycles = true;
  const Outcome c = run_on("graphs", "6_3.pd", cycles);
  CHECK(c.json["cycles"].size() == 9);
  CHECK(c.json["dummies"] == 3);
  CHECK(c.text.find("9 cycles, 3 dummies") != std::string::npos);

  Options rec;
  rec.reconstruct = true;
  const Outcome back = run_on("graphs", "trefoil.pd", rec);
  CHECK(back.exit_code == 0);
  CHECK(back.json["isomorphic"] == true);
  const Outcome dummy = run_on("graphs", "6_3.pd", rec);
  CHECK(dummy.exit_code == 2);
  CHECK(dummy.json["error"]["code"] == "DummyPresent");

  Options dot;
  dot.dot = true;
  const Outcome d = run_on("graphs", "trefoil.pd", dot);
  CHECK(d.text.find("graph c_graph {") == 0);
  CHECK(d.text.find("graph e_graph {") != std::string::npos);
}

TEST_CASE("recognition output") {
  CHECK(run("recognize", twist_source(9), {}).text == "twist n=9\n");
  CHECK(run_on("recognize", "trefoil.pd").text == "not-twist\n");
  const Outcome o = run("recognize", twist_source(6), {});
  CHECK(o.json["witness"].size() == 8);
}

TEST_CASE("verify reports") {
  const Outcome o = run_on("verify", "8_17.pd");
  CHECK(o.exit_code == 0);
  CHECK(o.json["passed"] == true);
  CHECK(o.text.find("FAIL") == std::string::npos);
  CHECK(o.text.find("time-ms") == std::string::npos);
  Options timed;
  timed.timing = true;
  CHECK(run_on("verify", "8_17.pd", timed).text.find("time-ms") != std::string::npos);

  const Outcome corrupt = run_on("verify", "invalid/corrupt.json");
  CHECK(corrupt.exit_code == 1);
  CHECK(corrupt.json["error"]["code"] == "PairingNotInvolution");
  const Outcome bad = run_on("verify", "invalid/bad_label.pd");
  CHECK(bad.exit_code == 1);
  CHECK(bad.json["error"]["code"] == "LabelCountError");
}

TEST_CASE("parse errors carry line numbers") {
  const Outcome o = run("axes", pd_source("X[1,4,2,5]\nX[3,6,4]"), {});
  CHECK(o.exit_code == 1);
  CHECK(o.json["error"]["line"] == 2);
  CHECK(o.error.find("(line 2)") != std::string::npos);
}

TEST_CASE("symmetry and reducibility output") {
  CHECK(run_on("symmetry", "6_3.pd").text == "not-symmetric obstruction=no-simple-axis\n");
  CHECK(run("symmetry", twist_source(5), {}).json["length"] == 5);
  CHECK(run_on("reducible", "r1.pd").text == "reducible crossing=0\n");
  CHECK(run_on("reducible", "trefoil.pd").text == "reduced\n");
  CHECK(run("symmetry", pd_source("X[1,3,2,4] X[3,1,4,2]"), {}).exit_code == 2);
}

TEST_CASE("batch mode keeps input order and is deterministic") {
  const auto sources = expand_inputs({fixtures::dir()});
  CHECK(sources.size() == fixtures::all_names().size());
  for (size_t i = 1; i < sources.size(); ++i) CHECK(sources[i - 1].id < sources[i].id);
  Options json;
  json.json = true;
  for (const std::string command : {"axes", "system", "poly", "verify", "symmetry"}) {
    std::ostringstream a, b, err;
    CHECK(emit(run_batch(command, sources, json), json, a, err) == 0);
    CHECK(emit(run_batch(command, sources, json), json, b, err) == 0);
    CHECK(a.str() == b.str());
  }
  std::ostringstream out, err;
  CHECK(emit(run_batch("verify", sources, {}), {}, out, err) == 0);
  size_t headers = 0;
  for (size_t pos = 0; (pos = out.str().find("== ", pos)) != std::string::npos; ++pos) ++headers;
  CHECK(headers == sources.size());
}

TEST_CASE("worst exit code wins in a batch") {
  std::vector<Source> sources{file_source(fixtures::path("trefoil.pd")), file_source(fixtures::path("6_3.pd"))};
  Options rec;
  rec.reconstruct = true;
  std::ostringstream out, err;
  CHECK(emit(run_batch("graphs", sources, rec), rec, out, err) == 2);
  CHECK(err.str().find("DummyPresent") != std::string::npos);
}

TEST_CASE("comparison and collision search") {
  std::vector<Source> eights;
  for (const char* n : {"8_7.pd", "8_9.pd", "8_13.pd", "8_17.pd"}) eights.push_back(file_source(fixtures::path(n)));
  const Outcome o = compare(eights, {});
  for (const auto& row : o.json["inputs"]) CHECK(row["same_polynomial"] == true);

  const Outcome a = collide(5, 100, 7, {});
  const Outcome b = collide(5, 100, 7, {});
  CHECK(a.text == b.text);
  CHECK(a.json["distinct"].get<int>() > 1);
}
