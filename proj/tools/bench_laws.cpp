// Compares the parallel law scan against the serial reference kernel on
// grid lattices of growing size and reports wall-clock times.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <tuple>

#include "tlat/chains.hpp"
#include "tlat/lattice.hpp"

namespace {

template <typename F>
double time_ms(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

bool reports_equal(const tlat::LawReport& a, const tlat::LawReport& b) {
  auto wit = [](const std::optional<tlat::TripleWitness>& w) {
    return w ? std::tuple{w->x, w->y, w->z} : std::tuple{-1, -1, -1};
  };
  return a.idempotent == b.idempotent && a.commutative == b.commutative &&
         a.associative == b.associative && a.absorptive == b.absorptive &&
         a.modular == b.modular && a.distributive == b.distributive &&
         a.dis1 == b.dis1 && a.dis2 == b.dis2 && a.ha == b.ha &&
         wit(a.modular_witness) == wit(b.modular_witness) &&
         wit(a.distributive_witness) == wit(b.distributive_witness);
}

}  // namespace

int main(int argc, char** argv) {
  const int max_nm = argc > 1 ? std::atoi(argv[1]) : 4;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  std::cout << "n=m  size  parallel_ms  serial_ms  match\n";
  bool all_match = true;
  for (int nm = 1; nm <= max_nm; ++nm) {
    const tlat::ChainPair cp(nm, nm);
    const tlat::GridLattice G = tlat::enumerate_lattice(cp);
    const tlat::FiniteLattice& L = G.lattice;
    tlat::LawReport rp, rs;
    const double tp = time_ms([&] { rp = tlat::check_laws(L); }, reps);
    const double ts = time_ms([&] { rs = tlat::check_laws_serial(L); }, reps);
    const bool match = reports_equal(rp, rs);
    all_match &= match;
    std::cout << nm << "    " << L.size() << "  " << tp << "  " << ts << "  "
              << (match ? "yes" : "NO") << "\n";
  }
  return all_match ? 0 : 1;
}
