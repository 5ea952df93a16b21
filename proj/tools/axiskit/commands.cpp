#include "axiskit/commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <future>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "axiskit/analysis.hpp"
#include "axiskit/ce_graphs.hpp"
#include "axiskit/error.hpp"
#include "axiskit/generate.hpp"
#include "axiskit/invariants.hpp"

namespace axiskit::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

Source file_source(const std::string& path) {
  return {path, [path] { return load_projection(path); }};
}

Source pd_source(const std::string& text) {
  return {"<pd>", [text] { return parse_pd(text); }};
}

Source twist_source(int n) {
  return {"twist-" + std::to_string(n), [n] { return build_twist(n); }};
}

std::vector<Source> expand_inputs(const std::vector<std::string>& paths) {
  std::vector<Source> out;
  for (const auto& path : paths) {
    if (!fs::is_directory(path)) {
      out.push_back(file_source(path));
      continue;
    }
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      const auto ext = entry.path().extension();
      if (entry.is_regular_file() && (ext == ".pd" || ext == ".json")) files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back(file_source(f));
  }
  return out;
}

namespace {

std::vector<bool> odd_faces(const Projection& p) {
  std::vector<bool> odd(p.face_count());
  for (int f = 0; f < p.face_count(); ++f) odd[f] = p.face_size(f) % 2 == 1;
  return odd;
}

std::string pair_text(const CeGraphs& g, LetterPair e) {
  const bool dotted = std::any_of(g.vertices.begin(), g.vertices.end(), [](const auto& v) { return v.size() > 1; });
  return g.vertices[e.first] + (dotted ? "." : "") + g.vertices[e.second];
}

std::string quad_text(const CeGraphs& g, const std::array<int, 4>& q) {
  const bool dotted = std::any_of(g.vertices.begin(), g.vertices.end(), [](const auto& v) { return v.size() > 1; });
  std::string s;
  for (int i = 0; i < 4; ++i) s += (i && dotted ? "." : "") + g.vertices[q[i]];
  return s;
}

void axes_command(const Projection& p, Outcome& o) {
  const auto odd = odd_faces(p);
  json list = json::array();
  std::ostringstream text;
  for (const Axis& a : trace_axes(p)) {
    const std::string word = format_word(canonical(word_of(p, a), odd), p.labels());
    text << "axis " << a.id << ": length " << a.length() << ", " << (a.simple ? "simple" : "non-simple")
         << ", odd segments " << a.odd_segments() << ", word " << word << "\n";
    list.push_back({{"id", a.id},
                    {"length", a.length()},
                    {"simple", a.simple},
                    {"odd_segments", a.odd_segments()},
                    {"word", word}});
  }
  o.text = text.str();
  o.json["axes"] = list;
}

void system_command(const Projection& p, const Options& opt, Outcome& o) {
  const AxisSystem s = axis_system(p);
  if (!opt.ce) {
    o.text = format_system(s);
    o.json["system"] = system_strings(s);
    return;
  }
  std::vector<std::pair<int, std::string>> rows;
  for (const CeWord& w : ce_representation(s)) rows.emplace_back(w.word.length(), format_ce(w, s.alphabet));
  std::sort(rows.begin(), rows.end());
  json list = json::array();
  for (const auto& [len, str] : rows) {
    o.text += str + "\n";
    list.push_back(str);
  }
  if (rows.empty()) o.text = "∅\n";
  o.json["ce"] = list;
}

void poly_command(const Projection& p, const Options& opt, Outcome& o) {
  const AxisPolynomial a = axis_polynomial(p);
  o.json["polynomial"] = a.to_string();
  json x = json::object(), y = json::object();
  for (const auto& [e, c] : a.x_terms()) x[std::to_string(e)] = c;
  for (const auto& [e, c] : a.y_terms()) y[std::to_string(e)] = c;
  o.json["x"] = x;
  o.json["y"] = y;
  if (opt.eval) {
    const long long v = a.eval(opt.eval->first, opt.eval->second);
    o.json["eval"] = {{"x", opt.eval->first}, {"y", opt.eval->second}, {"value", v}};
    o.text = std::to_string(v) + "\n";
  } else {
    o.text = a.to_string() + "\n";
  }
}

void graphs_command(const Projection& p, const Options& opt, Outcome& o) {
  const CeGraphs g = ce_graphs(p);
  std::ostringstream text;
  if (opt.dot) {
    text << to_dot(g, GraphKind::C) << to_dot(g, GraphKind::E);
  } else if (!opt.cycles && !opt.reconstruct) {
    text << "vertices " << g.vertices.size() << "\n";
    text << "c-edges " << g.c_edges.size() << ":";
    for (auto e : g.c_edges) text << " " << pair_text(g, e);
    text << "\ne-edges " << g.e_edges.size() << ":";
    for (auto e : g.e_edges) text << " " << pair_text(g, e);
    text << "\n";
  }
  json cj = json::array(), ej = json::array();
  for (auto e : g.c_edges) cj.push_back(pair_text(g, e));
  for (auto e : g.e_edges) ej.push_back(pair_text(g, e));
  o.json["vertices"] = g.vertices;
  o.json["c_edges"] = cj;
  o.json["e_edges"] = ej;
  if (opt.dot) o.json["dot"] = {{"c", to_dot(g, GraphKind::C)}, {"e", to_dot(g, GraphKind::E)}};

  if (opt.cycles) {
    const auto cycles = quad_cycles(g, p);
    const auto dummies = std::count_if(cycles.begin(), cycles.end(), [](const QuadCycle& q) { return q.dummy; });
    json list = json::array();
    for (const auto& q : cycles) {
      text << quad_text(g, q.letters) << (q.dummy ? " dummy" : " crossing") << "\n";
      list.push_back({{"letters", quad_text(g, q.letters)}, {"dummy", q.dummy}});
    }
    text << cycles.size() << " cycles, " << dummies << " dummies\n";
    o.json["cycles"] = list;
    o.json["dummies"] = dummies;
  }
  if (opt.reconstruct) {
    o.text = text.str();
    o.json["reconstructed"] = nullptr;
    const Projection q = reconstruct(g);
    const bool iso = is_isomorphic(p, q);
    text << emit_pd(q) << "isomorphic " << (iso ? "yes" : "no") << "\n";
    o.json["reconstructed"] = emit_pd(q);
    o.json["isomorphic"] = iso;
    if (!iso) {
      o.exit_code = 3;
      o.error = "reconstructed projection is not isomorphic to the input";
    }
  }
  o.text = text.str();
}

void recognize_command(const Projection& p, Outcome& o) {
  const TwistVerdict v = recognize_twist(p);
  o.json["twist"] = v.is_twist;
  o.json["n"] = v.n ? json(*v.n) : json(nullptr);
  if (v.is_twist) {
    o.text = "twist n=" + std::to_string(*v.n) + "\n";
    const AxisSystem t = twist_template(*v.n);
    json witness = json::object();
    for (size_t i = 0; i < v.witness->size(); ++i) witness[p.label(static_cast<int>(i))] = t.alphabet[(*v.witness)[i]];
    o.json["witness"] = witness;
  } else {
    o.text = "not-twist\n";
  }
}

void verify_command(const Projection& p, const Options& opt, Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto checks = check_invariants(p);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream text;
  text << "crossings " << p.crossing_count() << "\n";
  json list = json::array();
  int passed = 0;
  for (const auto& c : checks) {
    passed += c.passed;
    text << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  text << "summary " << passed << "/" << checks.size() << " passed\n";
  o.json["crossings"] = p.crossing_count();
  o.json["invariants"] = list;
  o.json["passed"] = passed == static_cast<int>(checks.size());
  if (opt.timing) {
    text << "time-ms " << std::fixed << std::setprecision(3) << ms << "\n";
    o.json["time_ms"] = ms;
  }
  o.text = text.str();
  if (passed != static_cast<int>(checks.size())) {
    o.exit_code = 3;
    o.error = std::to_string(checks.size() - passed) + " invariants failed";
  }
}

void symmetry_command(const Projection& p, Outcome& o) {
  const SymmetryVerdict v = is_symmetric(p);
  o.json["symmetric"] = v.symmetric;
  if (v.symmetric) {
    const int len = trace_axes(p)[*v.axis].length();
    o.text = "symmetric axis=" + std::to_string(*v.axis) + " length=" + std::to_string(len) + "\n";
    o.json["axis"] = *v.axis;
    o.json["length"] = len;
  } else {
    o.text = std::string("not-symmetric obstruction=") + to_string(v.obstruction) + "\n";
    o.json["obstruction"] = to_string(v.obstruction);
  }
}

void reducible_command(const Projection& p, Outcome& o) {
  const ReducibilityVerdict v = is_reducible(p);
  o.json["reducible"] = v.reducible;
  o.json["crossing"] = v.crossing ? json(*v.crossing) : json(nullptr);
  o.text = v.reducible ? "reducible crossing=" + std::to_string(*v.crossing) + "\n" : "reduced\n";
}

// what() carries the code name as a prefix.
std::string message_of(const Error& e) {
  const std::string prefix = std::string(to_string(e.code())) + ": ";
  const std::string what = e.what();
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

void fail(Outcome& o, int code, const std::string& kind, const std::string& message, int line) {
  o.exit_code = code;
  o.error = kind + ": " + message + (line > 0 ? " (line " + std::to_string(line) + ")" : "");
  o.json["error"] = {{"code", kind}, {"message", message}};
  if (line > 0) o.json["error"]["line"] = line;
}

}  // namespace

Outcome run(const std::string& command, const Source& source, const Options& options) {
  Outcome o;
  o.json["input"] = source.id;
  o.json["command"] = command;
  try {
    const Projection p = source.load();
    if (command == "system" && p.is_unknot()) {
      o.text = "∅\n";
      o.json[options.ce ? "ce" : "system"] = json::array();
      return o;
    }
    if (command == "axes") axes_command(p, o);
    else if (command == "system") system_command(p, options, o);
    else if (command == "poly") poly_command(p, options, o);
    else if (command == "graphs") graphs_command(p, options, o);
    else if (command == "recognize") recognize_command(p, o);
    else if (command == "verify") verify_command(p, options, o);
    else if (command == "symmetry") symmetry_command(p, o);
    else if (command == "reducible") reducible_command(p, o);
    else fail(o, 1, "UnknownCommand", command, 0);
  } catch (const Error& e) {
    fail(o, exit_code_for(e.code()), to_string(e.code()), message_of(e), e.line());
  } catch (const std::overflow_error& e) {
    fail(o, 2, "Overflow", e.what(), 0);
  }
  return o;
}

std::vector<Outcome> run_batch(const std::string& command, const std::vector<Source>& sources, const Options& options) {
  std::vector<std::future<Outcome>> pending;
  pending.reserve(sources.size());
  for (const auto& s : sources) {
    pending.push_back(std::async(std::launch::async, [&command, &s, &options] { return run(command, s, options); }));
  }
  std::vector<Outcome> out;
  out.reserve(sources.size());
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

Outcome compare(const std::vector<Source>& sources, const Options& options) {
  Outcome o;
  o.json["command"] = "compare";
  json rows = json::array();
  std::ostringstream text;
  std::optional<AxisPolynomial> first_poly;
  std::optional<AxisSystem> first_system;
  for (const auto& s : sources) {
    try {
      const Projection p = s.load();
      const AxisPolynomial a = axis_polynomial(p);
      const AxisSystem sys = axis_system(p);
      if (!first_poly) {
        first_poly = a;
        first_system = sys;
      }
      const bool same_poly = a == *first_poly;
      const bool same_system = systems_equal(sys, *first_system).has_value();
      text << s.id << ": " << a.to_string() << " polynomial " << (same_poly ? "same" : "differs") << ", system "
           << (same_system ? "same" : "differs") << "\n";
      rows.push_back({{"input", s.id},
                      {"polynomial", a.to_string()},
                      {"same_polynomial", same_poly},
                      {"same_system", same_system}});
    } catch (const Error& e) {
      fail(o, exit_code_for(e.code()), to_string(e.code()), s.id + ": " + message_of(e), e.line());
      return o;
    }
  }
  (void)options;
  o.text = text.str();
  o.json["inputs"] = rows;
  return o;
}

Outcome collide(int crossings, int samples, std::uint64_t seed, const Options& options) {
  Outcome o;
  o.json["command"] = "collide";
  o.json["crossings"] = crossings;
  o.json["samples"] = samples;
  o.json["seed"] = seed;
  if (crossings < 1 || samples < 1) {
    fail(o, 2, "Precondition", "need at least one crossing and one sample", 0);
    return o;
  }
  struct Entry {
    Projection p;
    AxisSystem s;
  };
  // Cheap relabeling-invariant key: polynomial, word lengths, letter degrees.
  auto key_of = [](const Projection& p, const AxisSystem& s) {
    std::vector<int> lengths, degrees = s.occurrences();
    for (const auto& w : s.words) lengths.push_back(w.length());
    std::sort(lengths.begin(), lengths.end());
    std::sort(degrees.begin(), degrees.end());
    std::string key = axis_polynomial(p).to_string() + "|";
    for (int l : lengths) key += std::to_string(l) + ",";
    key += "|";
    for (int d : degrees) key += std::to_string(d) + ",";
    return key;
  };
  std::mt19937_64 rng(seed);
  std::map<std::string, std::vector<Entry>> buckets;
  int distinct = 0;
  json pairs = json::array();
  std::ostringstream text;
  for (int i = 0; i < samples; ++i) {
    Projection p = random_knot_projection(crossings, rng);
    AxisSystem s = axis_system(p);
    auto& bucket = buckets[key_of(p, s)];
    if (std::any_of(bucket.begin(), bucket.end(), [&](const Entry& e) { return is_isomorphic(e.p, p); })) continue;
    for (const Entry& e : bucket) {
      if (systems_equal(e.s, s)) {
        pairs.push_back({emit_pd(e.p), emit_pd(p)});
        text << "collision\n  " << emit_pd(e.p) << "  " << emit_pd(p);
      }
    }
    bucket.push_back({std::move(p), std::move(s)});
    ++distinct;
  }
  text << "samples " << samples << ", distinct projections " << distinct << ", collisions " << pairs.size() << "\n";
  (void)options;
  o.text = text.str();
  o.json["distinct"] = distinct;
  o.json["collisions"] = pairs;
  return o;
}

int emit(const std::vector<Outcome>& outcomes, const Options& options, std::ostream& out, std::ostream& err) {
  int code = 0;
  for (const auto& o : outcomes) code = std::max(code, o.exit_code);
  if (options.json) {
    const json doc = outcomes.size() == 1 ? outcomes.front().json : [&] {
      json arr = json::array();
      for (const auto& o : outcomes) arr.push_back(o.json);
      return arr;
    }();
    out << doc.dump(2) << "\n";
    return code;
  }
  const bool batch = outcomes.size() > 1;
  for (const auto& o : outcomes) {
    if (batch && o.json.contains("input")) out << "== " << o.json["input"].get<std::string>() << "\n";
    out << o.text;
    if (!o.error.empty()) {
      if (batch) out << "error " << o.error << "\n";
      err << "error: " << (o.json.contains("input") ? o.json["input"].get<std::string>() + ": " : "") << o.error
          << "\n";
    }
  }
  return code;
}

}  // namespace axiskit::cli
