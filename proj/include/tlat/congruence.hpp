#pragma once

#include <set>
#include <string>
#include <vector>

#include "tlat/consistency.hpp"
#include "tlat/lattice.hpp"
#include "tlat/term.hpp"

namespace tlat {

/// Partition of a finite lattice, closed (when generated here) under
/// translation by meet and join.
class Congruence {
 public:
  explicit Congruence(int n);

  int size() const { return static_cast<int>(parent_.size()); }
  int find(int x) const;
  bool same(int x, int y) const { return find(x) == find(y); }
  bool merge(int x, int y);  // true when two classes were joined

  // Classes as sorted element lists, ordered by least element.
  std::vector<std::vector<int>> classes() const;

  bool operator==(const Congruence& o) const;

 private:
  mutable std::vector<int> parent_;
};

// Least congruence containing the given pairs: fixpoint of union-find
// plus translation rounds.
Congruence generate_congruence(const FiniteLattice& L,
                               const std::vector<ElemPair>& pairs);

bool is_congruence(const FiniteLattice& L, const Congruence& c);

struct QuotientResult {
  FiniteLattice lattice;
  std::vector<int> class_of;  // element of L -> quotient index
};

// Quotient lattice with induced tables. Throws NotACongruence when the
// partition is not translation-closed.
QuotientResult quotient(const FiniteLattice& L, const Congruence& c);

struct StageStats {
  int stage = 0;
  size_t classes = 0;
  size_t lower_pairs = 0;
  size_t upper_pairs = 0;
  size_t merges = 0;
};

/// Bounded-depth staged construction of the universal lattice with
/// consistencies U(P): alternate consistency saturation with the
/// modularity congruence and quotient until nothing changes.
struct StagedUniversal {
  bool stabilized = false;
  bool truncated = false;   // stopped by maxDepth with changes pending
  bool is_lattice = false;  // final class poset carries total meets/joins
  int stages = 0;
  FiniteLattice lattice;  // valid when is_lattice
  std::vector<LatticeTerm> class_terms;  // representative term per element
  std::set<ElemPair> lower, upper;       // relations on lattice indices
  std::vector<StageStats> history;
  size_t derivations = 0;
};

StagedUniversal build_U_staged(const Poset& P,
                               const std::vector<ElemPair>& lower_rel,
                               const std::vector<ElemPair>& upper_rel,
                               int max_depth);

struct PsiResult {
  std::vector<int> image;  // U element -> enumerate_D element
  bool homomorphism = false;
  bool surjective = false;
  bool injective = false;
};

// Canonical map U(P) -> D(P): each class goes to the canonical form of a
// representative term. Throws NotStabilized unless the staged build
// stabilized to a lattice.
PsiResult psi(const StagedUniversal& U, const Poset& P);

}  // namespace tlat
