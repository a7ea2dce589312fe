#pragma once

#include <string>

#include "tlat/consistency.hpp"
#include "tlat/poset.hpp"

namespace tlat {

// Hasse diagram: covering edges drawn upward, solid style; node and edge
// order is deterministic (element index, then cover target).
std::string dot_hasse(const Poset& p);

// Consistency graph: solid edges for lower pairs, dashed for upper;
// edges concluded by an inference rule carry the rule name as a label.
std::string dot_consistency(const ConsistencyStructure& cs);

}  // namespace tlat
