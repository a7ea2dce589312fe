#pragma once

#include <optional>
#include <vector>

#include "tlat/poset.hpp"

namespace tlat {

/// A finite lattice: a poset together with total meet/join tables.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  // Computes the tables from the order; nullopt when some pair lacks a
  // meet or a join.
  static std::optional<FiniteLattice> from_poset(const Poset& p);

  // Tables supplied directly (e.g. computed on a grid model). The poset
  // order must satisfy x <= y iff meet(x,y) = x.
  static FiniteLattice from_tables(Poset p, std::vector<int> meet,
                                   std::vector<int> join);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  bool leq(int x, int y) const { return poset_.leq(x, y); }
  int meet(int x, int y) const { return meet_[static_cast<size_t>(x) * size() + y]; }
  int join(int x, int y) const { return join_[static_cast<size_t>(x) * size() + y]; }
  int bottom() const { return *poset_.bottom(); }
  int top() const { return *poset_.top(); }
  const std::string& label(int x) const { return poset_.label(x); }

  bool operator==(const FiniteLattice& o) const {
    return poset_ == o.poset_ && meet_ == o.meet_ && join_ == o.join_;
  }

 private:
  Poset poset_;
  std::vector<int> meet_;
  std::vector<int> join_;
};

struct TripleWitness {
  int x = -1, y = -1, z = -1;
};

/// Result of the exhaustive law scan. Witnesses are the lexicographically
/// first failing triple in element-index order.
struct LawReport {
  bool idempotent = false;
  bool commutative = false;
  bool associative = false;
  bool absorptive = false;
  bool modular = false;
  bool distributive = false;
  bool dis1 = false;  // (x+y)z >= xz+yz, must hold in every lattice
  bool dis2 = false;  // x+yz <= (x+y)(x+z)
  bool ha = false;    // x <= z  =>  (x+y)z >= x+yz
  std::optional<TripleWitness> modular_witness;
  std::optional<TripleWitness> distributive_witness;

  bool postulates_ok() const {
    return idempotent && commutative && associative && absorptive;
  }
};

// OpenMP triple scan; check_laws_serial is the reference kernel kept for
// testing and benchmarking. Both produce identical reports.
LawReport check_laws(const FiniteLattice& L);
LawReport check_laws_serial(const FiniteLattice& L);

// All x != 0 such that x = a+b implies x = a or x = b.
std::vector<int> join_irreducibles(const FiniteLattice& L);

// Unique irredundant antichain of join-irreducibles with join x.
// Throws NotDistributive when the lattice fails the distributive law.
std::vector<int> birkhoff_decompose(const FiniteLattice& L, int x);

// Smallest sublattice containing gens together with 0 and 1.
FiniteLattice sublattice_closure(const FiniteLattice& L,
                                 const std::vector<int>& gens);

// Element indices of L inducing the sublattice, in ascending order.
std::vector<int> sublattice_closure_elements(const FiniteLattice& L,
                                             const std::vector<int>& gens);

struct ForbiddenSublattices {
  bool has_n5 = false;
  bool has_m3 = false;
  std::vector<int> n5_witness;  // 5 element indices when found
  std::vector<int> m3_witness;
};

// Scans 5-element subsets closed under meet/join. A finite lattice is
// distributive iff neither N5 nor M3 occurs, modular iff N5 does not.
ForbiddenSublattices find_forbidden_sublattices(const FiniteLattice& L);

}  // namespace tlat
