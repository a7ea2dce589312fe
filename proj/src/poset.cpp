#include "tlat/poset.hpp"

#include <algorithm>
#include <unordered_map>

namespace tlat {

Poset Poset::from_relations(
    std::vector<std::string> labels,
    const std::vector<std::pair<std::string, std::string>>& relations) {
  Poset p;
  const int n = static_cast<int>(labels.size());
  {
    std::unordered_map<std::string, int> seen;
    for (int i = 0; i < n; ++i) {
      if (!seen.emplace(labels[i], i).second)
        throw DuplicateLabel("duplicate element label: " + labels[i]);
    }
  }
  p.labels_ = std::move(labels);
  p.leq_.assign(static_cast<size_t>(n) * n, 0);
  auto at = [&](int x, int y) -> uint8_t& {
    return p.leq_[static_cast<size_t>(x) * n + y];
  };
  for (int i = 0; i < n; ++i) at(i, i) = 1;
  for (const auto& [a, b] : relations) at(p.require_index(a), p.require_index(b)) = 1;
  // Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (at(i, k))
        for (int j = 0; j < n; ++j)
          if (at(k, j)) at(i, j) = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (at(i, j) && at(j, i))
        throw CycleError("order cycle through " + p.labels_[i] + " and " + p.labels_[j]);
  p.detect_bounds();
  return p;
}

Poset Poset::from_matrix(std::vector<std::string> labels, std::vector<uint8_t> leq) {
  Poset p;
  p.labels_ = std::move(labels);
  p.leq_ = std::move(leq);
  p.validate();
  p.detect_bounds();
  return p;
}

void Poset::validate() const {
  const int n = size();
  if (leq_.size() != static_cast<size_t>(n) * n)
    throw Error("order matrix has wrong size");
  for (int i = 0; i < n; ++i) {
    if (!leq(i, i)) throw Error("order not reflexive");
    for (int j = 0; j < n; ++j) {
      if (i != j && leq(i, j) && leq(j, i))
        throw CycleError("order not antisymmetric: " + labels_[i] + ", " + labels_[j]);
      for (int k = 0; k < n; ++k)
        if (leq(i, j) && leq(j, k) && !leq(i, k))
          throw Error("order not transitive");
    }
  }
}

void Poset::detect_bounds() {
  const int n = size();
  bottom_.reset();
  top_.reset();
  for (int i = 0; i < n; ++i) {
    bool is_bot = true, is_top = true;
    for (int j = 0; j < n; ++j) {
      if (!leq(i, j)) is_bot = false;
      if (!leq(j, i)) is_top = false;
    }
    if (is_bot) bottom_ = i;
    if (is_top) top_ = i;
  }
}

int Poset::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

int Poset::require_index(const std::string& label) const {
  int i = index_of(label);
  if (i < 0) throw UnknownGenerator("unknown element: " + label);
  return i;
}

std::optional<int> Poset::try_meet(int x, int y) const {
  const int n = size();
  // Greatest common lower bound, if any.
  int best = -1;
  for (int z = 0; z < n; ++z) {
    if (!leq(z, x) || !leq(z, y)) continue;
    if (best < 0 || leq(best, z)) best = z;
  }
  if (best < 0) return std::nullopt;
  for (int z = 0; z < n; ++z)
    if (leq(z, x) && leq(z, y) && !leq(z, best)) return std::nullopt;
  return best;
}

std::optional<int> Poset::try_join(int x, int y) const {
  const int n = size();
  int best = -1;
  for (int z = 0; z < n; ++z) {
    if (!leq(x, z) || !leq(y, z)) continue;
    if (best < 0 || leq(z, best)) best = z;
  }
  if (best < 0) return std::nullopt;
  for (int z = 0; z < n; ++z)
    if (leq(x, z) && leq(y, z) && !leq(best, z)) return std::nullopt;
  return best;
}

std::vector<std::pair<int, int>> Poset::hasse_edges() const {
  const int n = size();
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !leq(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < n && cover; ++z)
        if (z != x && z != y && leq(x, z) && leq(z, y)) cover = false;
      if (cover) edges.emplace_back(x, y);
    }
  return edges;
}

}  // namespace tlat
