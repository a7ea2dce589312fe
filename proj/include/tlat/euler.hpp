#pragma once

#include <string>

namespace tlat {

/// Dimension vector of a two-vertex quiver representation U -> W (x) V,
/// with dim V fixed at 3.
struct QuiverRepDims {
  long long u = 0;
  long long w = 0;
  static constexpr long long vdim = 3;
};

// Euler pairing of line bundles on the projective plane:
// chi(O(a), O(b)) = (b-a+1)(b-a+2)/2.
long long chi_line(long long a, long long b);

// Euler characteristic of the two-term Hom complex
// U* (x) U' (+) W* (x) W'  ->  U* (x) W' (x) V*:
// u u' + w w' - 3 u w'.
long long homfp_euler(const QuiverRepDims& r1, const QuiverRepDims& r2);

struct AdmissibilityReport {
  long long w = 0;
  bool vacuous = false;        // w = 0: no constraint
  long long forced_w_prime = 0;  // solution of -w = -w * w'
  long long chi_fg = 0;        // -w, from the one-term Hom complex
  bool contradiction = false;  // forced w' = 1 clashes with w' != 1
  std::string narrative;
};

// Solves -w = -w*w' and flags the clash with the fact that no relevant
// indecomposable has w = 1.
AdmissibilityReport admissibility_contradiction(long long w);

}  // namespace tlat
