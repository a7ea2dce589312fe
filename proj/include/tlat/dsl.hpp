#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlat/poset.hpp"

namespace tlat {

/// Parsed line-oriented input: a poset, declared consistency pairs, and
/// named chains.
///
/// Grammar (one statement per line, `#` starts a comment):
///   elem a b c            declare elements
///   le a b                order relation a <= b
///   bottom a | top b      make a (resp. b) comparable with everything
///   lower a b | upper a b consistency pair declarations
///   chain A a1 > a2 > a3  named chain; members are auto-declared
///   consistent-chains A B all cross pairs of two chains, both relations
struct DslResult {
  Poset poset;
  std::vector<std::pair<int, int>> lower, upper;
  std::map<std::string, std::vector<int>> chains;  // name -> element indices
};

// Throws ParseError with line/column on syntax errors and on references
// to undeclared elements or chains; order cycles surface as CycleError.
DslResult parse_dsl(const std::string& text);

}  // namespace tlat
