#include "tlat/lattice_enum.hpp"

#include <algorithm>
#include <cstdint>

namespace tlat {

namespace {

// Working state: down[i] = bitmask of elements <= i (including i).
using Mask = uint32_t;

FiniteLattice materialize(const std::vector<Mask>& down) {
  const int n = static_cast<int>(down.size());
  std::vector<std::string> labels(n);
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    labels[i] = "e" + std::to_string(i);
    for (int j = 0; j < n; ++j)
      leq[static_cast<size_t>(i) * n + j] = (down[j] >> i) & 1;
  }
  auto L = FiniteLattice::from_poset(
      Poset::from_matrix(std::move(labels), std::move(leq)));
  if (!L) throw Error("extension state is not a lattice");
  return *L;
}

// Valid strict down-sets for the next element: contain element 0, are
// down-closed, and keep every meet defined.
std::vector<Mask> valid_extensions(const std::vector<Mask>& down) {
  const int k = static_cast<int>(down.size());
  std::vector<Mask> out;
  for (Mask D = 1; D < (Mask(1) << k); D += 2) {  // always contains 0
    bool ok = true;
    for (int x = 0; x < k && ok; ++x)
      if ((D >> x) & 1 && (down[x] & ~D)) ok = false;  // down-closed
    for (int x = 0; x < k && ok; ++x) {
      const Mask common = D & down[x];
      bool has_greatest = false;
      for (int g = 0; g < k && !has_greatest; ++g)
        if ((common >> g) & 1 && (common & ~down[g]) == 0) has_greatest = true;
      if (!has_greatest) ok = false;
    }
    if (ok) out.push_back(D);
  }
  return out;
}

struct Invariant {
  std::vector<std::pair<int, int>> profile;  // sorted (|down|, |up|)
};

Invariant invariant_of(const std::vector<Mask>& down) {
  const int n = static_cast<int>(down.size());
  std::vector<int> up(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((down[j] >> i) & 1) ++up[i];
  Invariant inv;
  for (int i = 0; i < n; ++i)
    inv.profile.emplace_back(__builtin_popcount(down[i]), up[i]);
  std::sort(inv.profile.begin(), inv.profile.end());
  return inv;
}

bool iso_backtrack(const FiniteLattice& a, const FiniteLattice& b,
                   std::vector<int>& map, std::vector<bool>& used, int i) {
  const int n = a.size();
  if (i == n) return true;
  for (int j = 0; j < n; ++j) {
    if (used[j]) continue;
    bool ok = true;
    for (int p = 0; p < i && ok; ++p) {
      if (a.leq(p, i) != b.leq(map[p], j)) ok = false;
      if (a.leq(i, p) != b.leq(j, map[p])) ok = false;
    }
    if (!ok) continue;
    map[i] = j;
    used[j] = true;
    if (iso_backtrack(a, b, map, used, i + 1)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool lattices_isomorphic(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> map(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  return iso_backtrack(a, b, map, used, 0);
}

std::vector<FiniteLattice> enumerate_lattices(int n) {
  if (n < 1) return {};
  if (n > 10) throw SizeGuardExceeded("lattice enumeration guarded at 10");
  std::vector<FiniteLattice> reps;
  std::vector<Invariant> rep_inv;
  if (n == 1) {
    reps.push_back(materialize({Mask(1)}));
    return reps;
  }
  std::vector<Mask> down{Mask(1)};
  auto rec = [&](auto&& self) -> void {
    const int k = static_cast<int>(down.size());
    if (k == n - 1) {
      // Final element must be the top.
      const Mask all = (Mask(1) << k) - 1;
      auto exts = valid_extensions(down);
      if (std::find(exts.begin(), exts.end(), all) == exts.end()) return;
      down.push_back(all | (Mask(1) << k));
      const Invariant inv = invariant_of(down);
      FiniteLattice cand = materialize(down);
      bool fresh = true;
      for (size_t r = 0; r < reps.size(); ++r)
        if (rep_inv[r].profile == inv.profile &&
            lattices_isomorphic(reps[r], cand)) {
          fresh = false;
          break;
        }
      if (fresh) {
        reps.push_back(std::move(cand));
        rep_inv.push_back(inv);
      }
      down.pop_back();
      return;
    }
    for (Mask D : valid_extensions(down)) {
      down.push_back(D | (Mask(1) << k));
      self(self);
      down.pop_back();
    }
  };
  rec(rec);
  return reps;
}

FiniteLattice random_lattice(int n, std::mt19937& rng) {
  if (n < 1) throw Error("lattice size must be positive");
  std::vector<Mask> down{Mask(1)};
  for (int k = 1; k < n; ++k) {
    if (k == n - 1) {
      down.push_back((Mask(1) << (k + 1)) - 1);  // top
      continue;
    }
    auto exts = valid_extensions(down);
    const Mask D = exts[std::uniform_int_distribution<size_t>(
        0, exts.size() - 1)(rng)];
    down.push_back(D | (Mask(1) << k));
  }
  return materialize(down);
}

}  // namespace tlat
