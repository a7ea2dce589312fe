#pragma once

#include <string>
#include <vector>

#include "tlat/lattice.hpp"

namespace tlat {

/// A consistent pair of chains a_1 >= ... >= a_n and b_1 <= ... <= b_m,
/// extended internally with a_0 = 1, a_{n+1} = 0, b_0 = 0, b_{m+1} = 1.
/// The lattice they generate is modelled on the (m+1) x (n+1) grid of
/// cells x in [1, m+1], y in [1, n+1].
struct ChainPair {
  int n = 1;
  int m = 1;

  ChainPair(int n, int m) : n(n), m(m) {
    if (n < 1 || m < 1) throw IndexOutOfRange("chain lengths must be positive");
  }
  void check_u(int i, int j) const {
    if (i < 0 || i > n + 1 || j < 0 || j > m + 1)
      throw IndexOutOfRange("u index outside extended range");
  }
};

/// Down-closed grid subset stored as a non-increasing column-height
/// profile: h[x-1] in [0, n+1] for x in [1, m+1].
struct Staircase {
  std::vector<int> h;

  bool operator==(const Staircase& o) const { return h == o.h; }
  bool operator<(const Staircase& o) const { return h < o.h; }
  bool contains(const Staircase& o) const {
    for (size_t k = 0; k < h.size(); ++k)
      if (o.h[k] > h[k]) return false;
    return true;
  }
};

struct UPair {
  int i = 0;
  int j = 0;
  bool operator==(const UPair& o) const { return i == o.i && j == o.j; }
  bool operator<(const UPair& o) const { return i != o.i ? i < o.i : j < o.j; }
};

/// Sum u_{i1 j1} + ... + u_{ik jk} with strictly increasing i's and j's;
/// the empty list is 0.
struct UNormalForm {
  std::vector<UPair> terms;
  bool operator==(const UNormalForm& o) const { return terms == o.terms; }
};

// u_pq <= u_rs iff p >= r and q <= s (after discarding empty rectangles).
bool u_leq(const ChainPair& cp, UPair a, UPair b);

// Images of the generators. u_ij covers {x <= j, y <= n+1-i}; a_i and b_j
// are u_{i,m+1} and u_{0,j}; 0 and 1 are u_{n+1,*} and u_{0,m+1}.
Staircase embed_u(const ChainPair& cp, int i, int j);
Staircase embed_a(const ChainPair& cp, int i);
Staircase embed_b(const ChainPair& cp, int j);
Staircase embed_bottom(const ChainPair& cp);
Staircase embed_top(const ChainPair& cp);
Staircase embed_v(const ChainPair& cp, int i, int j);  // a_i + b_j

Staircase staircase_of(const ChainPair& cp, const UNormalForm& f);
UNormalForm form_of(const ChainPair& cp, const Staircase& s);

UNormalForm u_sum_normal_form(const ChainPair& cp, std::vector<UPair> terms);

UNormalForm form_meet(const ChainPair& cp, const UNormalForm& f1,
                      const UNormalForm& f2);
UNormalForm form_join(const ChainPair& cp, const UNormalForm& f1,
                      const UNormalForm& f2);

// r_IJ = a_{i1}(b_{j1}+a_{i2})...(b_{j_{k-1}}+a_{ik})b_{jk}, evaluated
// left to right in the staircase model. I and J are equal-length
// non-decreasing index lists.
UNormalForm r_term(const ChainPair& cp, const std::vector<int>& I,
                   const std::vector<int>& J);
// s_IJ = sum of u_{it jt}.
UNormalForm s_term(const ChainPair& cp, const std::vector<int>& I,
                   const std::vector<int>& J);

// v-product <-> u-sum conversion; both sides embed to the same staircase.
UNormalForm v_to_u(const ChainPair& cp, const std::vector<UPair>& v_factors);
std::vector<UPair> u_to_v(const ChainPair& cp, const UNormalForm& f);

std::string form_to_string(const UNormalForm& f);
std::string staircase_to_string(const Staircase& s);

/// The full lattice of staircases with its generator embedding.
struct GridLattice {
  FiniteLattice lattice;
  std::vector<Staircase> elements;            // index-aligned
  std::vector<std::vector<int>> u_index;      // [i][j] over extended ranges
  int index_of(const Staircase& s) const;
};

// All staircases of the grid; cardinality binomial(n+m+2, n+1).
// Guarded: n, m <= 6.
GridLattice enumerate_lattice(const ChainPair& cp);

// u_ij = u_{i+1,j} + u_{i,j-1} in the given lattice, where u_img maps
// extended (i,j) to lattice elements. False on the 0 element.
bool decomposable(const ChainPair& cp, const FiniteLattice& L,
                  const std::vector<std::vector<int>>& u_img, int i, int j);

// The column-height profile as a monotone step function (invertible
// re-encoding of the staircase).
std::vector<int> perversity_view(const ChainPair& cp, const Staircase& s);

}  // namespace tlat
