#pragma once

#include <cstdint>
#include <random>

#include "axiskit/projection.hpp"

namespace axiskit {

// Medial map of a random connected plane multigraph with the given number of
// edges; every link projection arises this way. Each edge becomes a crossing.
Projection random_projection(int crossings, std::mt19937_64& rng);

// Rejection-samples random_projection until a single component remains.
Projection random_knot_projection(int crossings, std::mt19937_64& rng);

// Renumbers crossings, rotates each crossing's slots and optionally mirrors
// the whole map. The result is isomorphic to p.
Projection scrambled(const Projection& p, std::mt19937_64& rng, bool mirror);

}  // namespace axiskit
