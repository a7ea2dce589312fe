#pragma once

#include <random>
#include <vector>

#include "tlat/lattice.hpp"

namespace tlat {

// All lattices with exactly n elements, up to isomorphism (n <= 10 or so;
// the search extends meet-semilattices element by element).
std::vector<FiniteLattice> enumerate_lattices(int n);

// A uniformly-chosen step in the same extension process; deterministic
// for a given generator state.
FiniteLattice random_lattice(int n, std::mt19937& rng);

// Structure-preserving bijection test.
bool lattices_isomorphic(const FiniteLattice& a, const FiniteLattice& b);

}  // namespace tlat
