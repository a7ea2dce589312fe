#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlat/errors.hpp"

namespace tlat {

// Finite poset over labelled elements. The order is stored densely as a
// reflexive-transitive-antisymmetric boolean matrix; carriers stay small.
class Poset {
 public:
  Poset() = default;

  // Builds the reflexive-transitive closure of `relations` over `labels`.
  // Throws DuplicateLabel / UnknownGenerator / CycleError.
  static Poset from_relations(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& relations);

  // Carrier with an order already given as a matrix (must be a partial order).
  static Poset from_matrix(std::vector<std::string> labels,
                           std::vector<uint8_t> leq);

  int size() const { return static_cast<int>(labels_.size()); }
  bool leq(int x, int y) const { return leq_[static_cast<size_t>(x) * labels_.size() + y] != 0; }
  bool lt(int x, int y) const { return x != y && leq(x, y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;        // -1 if absent
  int require_index(const std::string& label) const;   // throws UnknownGenerator

  std::optional<int> bottom() const { return bottom_; }
  std::optional<int> top() const { return top_; }

  std::optional<int> try_meet(int x, int y) const;
  std::optional<int> try_join(int x, int y) const;

  // Upward covering pairs (x, y): x < y with nothing strictly between.
  std::vector<std::pair<int, int>> hasse_edges() const;

  bool operator==(const Poset& o) const {
    return labels_ == o.labels_ && leq_ == o.leq_;
  }

 private:
  void detect_bounds();
  void validate() const;

  std::vector<std::string> labels_;
  std::vector<uint8_t> leq_;  // row-major size*size
  std::optional<int> bottom_;
  std::optional<int> top_;
};

}  // namespace tlat
