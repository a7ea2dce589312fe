#pragma once

#include <string>
#include <vector>

#include "tlat/lattice.hpp"
#include "tlat/poset.hpp"

namespace tlat {

/// Lattice term over the generators of a poset.
struct LatticeTerm {
  enum class Kind { Gen, Meet, Join, Top, Bottom };

  Kind kind = Kind::Bottom;
  int gen = -1;  // generator index when kind == Gen
  std::vector<LatticeTerm> children;

  static LatticeTerm generator(int g) {
    LatticeTerm t;
    t.kind = Kind::Gen;
    t.gen = g;
    return t;
  }
  static LatticeTerm top() {
    LatticeTerm t;
    t.kind = Kind::Top;
    return t;
  }
  static LatticeTerm bottom() { return LatticeTerm{}; }
  static LatticeTerm meet(std::vector<LatticeTerm> kids);
  static LatticeTerm join(std::vector<LatticeTerm> kids);
};

// Infix syntax: `*` meet, `+` join, `0`, `1`, parentheses; `*` binds
// tighter than `+`. Identifiers must name elements of P.
LatticeTerm parse_term(const std::string& text, const Poset& P);

std::string term_to_string(const LatticeTerm& t, const Poset& P);

/// Canonical join-of-meets normal form: an antichain of meet-sets, each
/// meet-set an antichain of generators under the order of P. The empty
/// clause list is 0; the single empty meet-set is 1.
struct CanonicalDNF {
  std::vector<std::vector<int>> clauses;

  bool operator==(const CanonicalDNF& o) const { return clauses == o.clauses; }
  bool operator<(const CanonicalDNF& o) const { return clauses < o.clauses; }

  static CanonicalDNF bottom() { return {}; }
  static CanonicalDNF top() { return {{{}}}; }
  bool is_bottom() const { return clauses.empty(); }
  bool is_top() const { return clauses.size() == 1 && clauses[0].empty(); }
};

CanonicalDNF to_dnf(const LatticeTerm& t, const Poset& P);

bool dnf_leq(const CanonicalDNF& d1, const CanonicalDNF& d2, const Poset& P);

CanonicalDNF dnf_meet(const CanonicalDNF& d1, const CanonicalDNF& d2,
                      const Poset& P);
CanonicalDNF dnf_join(const CanonicalDNF& d1, const CanonicalDNF& d2,
                      const Poset& P);

std::string dnf_to_string(const CanonicalDNF& d, const Poset& P);

// Reads a canonical form back as a term (join of meets).
LatticeTerm dnf_to_term(const CanonicalDNF& d);

// Two-valued homomorphic evaluation; v[i] in {0,1} must be monotone
// w.r.t. P, otherwise NonMonotoneValuation.
int eval_valuation(const LatticeTerm& t, const std::vector<int>& v,
                   const Poset& P);

// All order-preserving maps P -> {0,1} (characteristic vectors of up-sets),
// in a fixed deterministic order.
std::vector<std::vector<int>> monotone_valuations(const Poset& P);

// Word problem for D(P): equality of canonical forms.
bool terms_equal(const LatticeTerm& t1, const LatticeTerm& t2, const Poset& P);

/// D(P) with bounds adjoined, as a concrete finite lattice of canonical
/// forms. Guarded: at most 6 generators.
struct EnumeratedD {
  FiniteLattice lattice;
  std::vector<CanonicalDNF> element_forms;  // index-aligned with the lattice
  std::vector<int> generator_index;         // image of each generator of P
};

EnumeratedD enumerate_D(const Poset& P);

}  // namespace tlat
