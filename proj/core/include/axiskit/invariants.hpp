#pragma once

#include <string>
#include <vector>

#include "axiskit/projection.hpp"

namespace axiskit {

struct InvariantCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Structural identities every projection with a crossing satisfies: axis
// lengths sum to 4c, every axis has an even number of odd segments, an n-gon
// holds n segments, the weighted polynomial coefficients sum to 4c, the
// polynomial at (1, 1) counts the axes, both reducibility tests agree, each
// crossing's regions form a qualifying four-cycle, and |c| = |e| = 2c.
// Checks never throw on a failed identity; they report it.
std::vector<InvariantCheck> check_invariants(const Projection& p);

}  // namespace axiskit
