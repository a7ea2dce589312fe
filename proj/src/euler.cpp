#include "tlat/euler.hpp"

#include "tlat/errors.hpp"

namespace tlat {

long long chi_line(long long a, long long b) {
  const long long d = b - a;
  return (d + 1) * (d + 2) / 2;
}

long long homfp_euler(const QuiverRepDims& r1, const QuiverRepDims& r2) {
  return r1.u * r2.u + r1.w * r2.w - QuiverRepDims::vdim * r1.u * r2.w;
}

AdmissibilityReport admissibility_contradiction(long long w) {
  if (w < 0) throw Error("w must be non-negative");
  AdmissibilityReport rep;
  rep.w = w;
  rep.chi_fg = -w;
  if (w == 0) {
    rep.vacuous = true;
    rep.narrative = "w = 0: the equation -w = -w*w' is vacuous";
    return rep;
  }
  // -w = -w*w'  with w > 0 forces w' = 1.
  rep.forced_w_prime = 1;
  rep.contradiction = true;
  rep.narrative =
      "chi(F,G) = " + std::to_string(rep.chi_fg) +
      " must equal -w*w', forcing w' = 1; but no indecomposable with w' = 1 "
      "exists in the intersection category";
  return rep;
}

}  // namespace tlat
