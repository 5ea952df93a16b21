#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "axiskit/projection.hpp"
#include "json.hpp"

namespace axiskit::cli {

// Where a projection comes from: a file, literal PD text or the twist
// generator. load() throws axiskit::Error on bad input.
struct Source {
  std::string id;
  std::function<Projection()> load;
};

Source file_source(const std::string& path);
Source pd_source(const std::string& text);
Source twist_source(int n);

// Files named on the command line, with directories expanded to their .pd
// and .json entries in sorted order.
std::vector<Source> expand_inputs(const std::vector<std::string>& paths);

struct Options {
  bool json = false;
  bool ce = false;
  std::optional<std::pair<long long, long long>> eval;
  bool dot = false;
  bool cycles = false;
  bool reconstruct = false;
  bool timing = false;
};

struct Outcome {
  int exit_code = 0;
  std::string text;   // stdout in text mode
  std::string error;  // diagnostic for stderr in text mode
  nlohmann::ordered_json json;
};

// Runs one of axes, system, poly, graphs, recognize, verify, symmetry,
// reducible on one source.
Outcome run(const std::string& command, const Source& source, const Options& options);

// Several sources processed concurrently; outcomes are in input order.
std::vector<Outcome> run_batch(const std::string& command, const std::vector<Source>& sources, const Options& options);

// Polynomial and axis-system comparison of every source against the first.
Outcome compare(const std::vector<Source>& sources, const Options& options);

// Samples random knot projections with the given crossing count and reports
// pairs that are not isomorphic but share an axis system.
Outcome collide(int crossings, int samples, std::uint64_t seed, const Options& options);

// Writes outcomes to the streams and returns the largest exit code.
int emit(const std::vector<Outcome>& outcomes, const Options& options, std::ostream& out, std::ostream& err);

}  // namespace axiskit::cli
