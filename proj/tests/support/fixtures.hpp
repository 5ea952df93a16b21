#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "axiskit/generate.hpp"
#include "axiskit/projection.hpp"

namespace fixtures {

inline std::string dir() {
  if (const char* env = std::getenv("AXISKIT_FIXTURES")) return env;
  return AXISKIT_FIXTURE_DIR;
}

inline std::string path(const std::string& name) { return dir() + "/" + name; }

inline axiskit::Projection load(const std::string& name) { return axiskit::load_projection(path(name)); }

inline const std::vector<std::string>& knot_tables() {
  static const std::vector<std::string> names{"6_3.pd", "8_7.pd", "8_9.pd", "8_13.pd", "8_17.pd"};
  return names;
}

inline std::vector<std::string> all_names() {
  std::vector<std::string> names{"trefoil.pd", "r1.pd"};
  for (const auto& n : knot_tables()) names.push_back(n);
  return names;
}

// Fixture corpus plus twists 4..12.
inline std::vector<std::pair<std::string, axiskit::Projection>> corpus() {
  std::vector<std::pair<std::string, axiskit::Projection>> out;
  for (const auto& n : all_names()) out.emplace_back(n, load(n));
  for (int n = 4; n <= 12; ++n) out.emplace_back("twist-" + std::to_string(n), axiskit::build_twist(n));
  return out;
}

// Reproducible random maps with 1..max_crossings crossings.
inline std::vector<axiskit::Projection> random_maps(int count, int max_crossings, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<axiskit::Projection> out;
  for (int i = 0; i < count; ++i) out.push_back(axiskit::random_projection(1 + i % max_crossings, rng));
  return out;
}

}  // namespace fixtures
