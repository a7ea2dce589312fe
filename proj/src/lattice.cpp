#include "tlat/lattice.hpp"

#include <algorithm>
#include <climits>
#include <set>

namespace tlat {

std::optional<FiniteLattice> FiniteLattice::from_poset(const Poset& p) {
  const int n = p.size();
  if (n == 0) return std::nullopt;
  FiniteLattice L;
  L.poset_ = p;
  L.meet_.assign(static_cast<size_t>(n) * n, -1);
  L.join_.assign(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto m = p.try_meet(x, y);
      auto j = p.try_join(x, y);
      if (!m || !j) return std::nullopt;
      L.meet_[static_cast<size_t>(x) * n + y] = *m;
      L.join_[static_cast<size_t>(x) * n + y] = *j;
    }
  return L;
}

FiniteLattice FiniteLattice::from_tables(Poset p, std::vector<int> meet,
                                         std::vector<int> join) {
  FiniteLattice L;
  const int n = p.size();
  L.poset_ = std::move(p);
  L.meet_ = std::move(meet);
  L.join_ = std::move(join);
  if (L.meet_.size() != static_cast<size_t>(n) * n ||
      L.join_.size() != L.meet_.size())
    throw Error("lattice tables have wrong size");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (L.poset_.leq(x, y) != (L.meet(x, y) == x))
        throw Error("meet table disagrees with the order");
  return L;
}

namespace {

constexpr long long kNoFail = LLONG_MAX;

struct TripleScan {
  long long assoc = kNoFail;
  long long modular = kNoFail;
  long long distributive = kNoFail;
  long long dis1 = kNoFail;
  long long dis2 = kNoFail;
  long long ha = kNoFail;
};

// Shared per-triple body: returns failure flags for one (x,y,z).
inline void scan_triple(const FiniteLattice& L, int x, int y, int z,
                        long long idx, TripleScan& s) {
  const int xy_j = L.join(x, y), xy_m = L.meet(x, y);
  const int yz_j = L.join(y, z), yz_m = L.meet(y, z);
  if (L.meet(xy_m, z) != L.meet(x, yz_m) || L.join(xy_j, z) != L.join(x, yz_j))
    s.assoc = std::min(s.assoc, idx);
  const int lhs = L.meet(xy_j, z);  // (x+y)z
  if (L.meet(x, yz_j) != L.join(xy_m, L.meet(x, z)))
    s.distributive = std::min(s.distributive, idx);
  const int rhs1 = L.join(L.meet(x, z), L.meet(y, z));  // xz+yz
  if (L.meet(lhs, rhs1) != rhs1)  // lhs >= rhs1
    s.dis1 = std::min(s.dis1, idx);
  const int l2 = L.join(x, yz_m), r2 = L.meet(xy_j, L.join(x, z));
  if (L.meet(l2, r2) != l2)  // l2 <= r2
    s.dis2 = std::min(s.dis2, idx);
  if (L.leq(x, z)) {
    const int rhs = L.join(x, yz_m);  // x+yz
    if (L.meet(lhs, rhs) != rhs) s.ha = std::min(s.ha, idx);
    if (lhs != rhs) s.modular = std::min(s.modular, idx);
  }
}

LawReport assemble(const FiniteLattice& L, const TripleScan& s) {
  const int n = L.size();
  LawReport r;
  r.idempotent = true;
  for (int x = 0; x < n; ++x)
    if (L.meet(x, x) != x || L.join(x, x) != x) r.idempotent = false;
  r.commutative = true;
  r.absorptive = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (L.meet(x, y) != L.meet(y, x) || L.join(x, y) != L.join(y, x))
        r.commutative = false;
      if (L.meet(x, L.join(x, y)) != x || L.join(x, L.meet(x, y)) != x)
        r.absorptive = false;
    }
  r.associative = s.assoc == kNoFail;
  r.modular = s.modular == kNoFail;
  r.distributive = s.distributive == kNoFail;
  r.dis1 = s.dis1 == kNoFail;
  r.dis2 = s.dis2 == kNoFail;
  r.ha = s.ha == kNoFail;
  auto decode = [n](long long idx) {
    TripleWitness w;
    w.z = static_cast<int>(idx % n);
    w.y = static_cast<int>((idx / n) % n);
    w.x = static_cast<int>(idx / (static_cast<long long>(n) * n));
    return w;
  };
  if (!r.modular) r.modular_witness = decode(s.modular);
  if (!r.distributive) r.distributive_witness = decode(s.distributive);
  return r;
}

}  // namespace

LawReport check_laws_serial(const FiniteLattice& L) {
  const int n = L.size();
  TripleScan s;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        scan_triple(L, x, y, z,
                    (static_cast<long long>(x) * n + y) * n + z, s);
  return assemble(L, s);
}

LawReport check_laws(const FiniteLattice& L) {
  const int n = L.size();
  long long assoc = kNoFail, modular = kNoFail, distributive = kNoFail;
  long long dis1 = kNoFail, dis2 = kNoFail, ha = kNoFail;
#pragma omp parallel for schedule(static) \
    reduction(min : assoc, modular, distributive, dis1, dis2, ha)
  for (int x = 0; x < n; ++x) {
    TripleScan local;
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        scan_triple(L, x, y, z,
                    (static_cast<long long>(x) * n + y) * n + z, local);
    assoc = std::min(assoc, local.assoc);
    modular = std::min(modular, local.modular);
    distributive = std::min(distributive, local.distributive);
    dis1 = std::min(dis1, local.dis1);
    dis2 = std::min(dis2, local.dis2);
    ha = std::min(ha, local.ha);
  }
  TripleScan s;
  s.assoc = assoc;
  s.modular = modular;
  s.distributive = distributive;
  s.dis1 = dis1;
  s.dis2 = dis2;
  s.ha = ha;
  return assemble(L, s);
}

std::vector<int> join_irreducibles(const FiniteLattice& L) {
  const int n = L.size();
  const int bot = L.bottom();
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    if (x == bot) continue;
    bool irreducible = true;
    for (int a = 0; a < n && irreducible; ++a)
      for (int b = a + 1; b < n && irreducible; ++b)
        if (a != x && b != x && L.join(a, b) == x) irreducible = false;
    if (irreducible) out.push_back(x);
  }
  return out;
}

std::vector<int> birkhoff_decompose(const FiniteLattice& L, int x) {
  if (!check_laws(L).distributive)
    throw NotDistributive("birkhoff_decompose requires a distributive lattice");
  const auto irr = join_irreducibles(L);
  // Maximal join-irreducibles below x.
  std::vector<int> below;
  for (int j : irr)
    if (L.leq(j, x)) below.push_back(j);
  std::vector<int> anti;
  for (int j : below) {
    bool maximal = true;
    for (int k : below)
      if (k != j && L.leq(j, k)) maximal = false;
    if (maximal) anti.push_back(j);
  }
  int acc = L.bottom();
  for (int j : anti) acc = L.join(acc, j);
  if (acc != x) throw Error("decomposition does not reproduce the element");
  return anti;
}

std::vector<int> sublattice_closure_elements(const FiniteLattice& L,
                                             const std::vector<int>& gens) {
  std::set<int> s(gens.begin(), gens.end());
  s.insert(L.bottom());
  s.insert(L.top());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (size_t a = 0; a < cur.size(); ++a)
      for (size_t b = a; b < cur.size(); ++b) {
        if (s.insert(L.meet(cur[a], cur[b])).second) grew = true;
        if (s.insert(L.join(cur[a], cur[b])).second) grew = true;
      }
  }
  return {s.begin(), s.end()};
}

FiniteLattice sublattice_closure(const FiniteLattice& L,
                                 const std::vector<int>& gens) {
  const auto elems = sublattice_closure_elements(L, gens);
  const int k = static_cast<int>(elems.size());
  std::vector<std::string> labels(k);
  std::vector<uint8_t> leq(static_cast<size_t>(k) * k, 0);
  std::vector<int> meet(static_cast<size_t>(k) * k), join(meet.size());
  std::vector<int> pos(L.size(), -1);
  for (int i = 0; i < k; ++i) pos[elems[i]] = i;
  for (int i = 0; i < k; ++i) {
    labels[i] = L.label(elems[i]);
    for (int j = 0; j < k; ++j) {
      leq[static_cast<size_t>(i) * k + j] = L.leq(elems[i], elems[j]);
      meet[static_cast<size_t>(i) * k + j] = pos[L.meet(elems[i], elems[j])];
      join[static_cast<size_t>(i) * k + j] = pos[L.join(elems[i], elems[j])];
    }
  }
  return FiniteLattice::from_tables(Poset::from_matrix(std::move(labels), std::move(leq)),
                                    std::move(meet), std::move(join));
}

ForbiddenSublattices find_forbidden_sublattices(const FiniteLattice& L) {
  const int n = L.size();
  ForbiddenSublattices out;
  // All 5-subsets closed under meet and join; classify the induced lattice.
  auto classify = [&](const std::vector<int>& s) {
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) {
        if (!std::binary_search(s.begin(), s.end(), L.meet(s[a], s[b]))) return;
        if (!std::binary_search(s.begin(), s.end(), L.join(s[a], s[b]))) return;
      }
    // Closed. Nondistributive 5-element lattices are exactly N5 and M3;
    // N5 is the nonmodular one.
    int comparable = 0, middles = 0;
    int bot = s[0], top = s[0];
    for (int e : s) {
      if (L.leq(e, bot)) bot = e;
      if (L.leq(top, e)) top = e;
    }
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) {
        if (s[a] == bot || s[a] == top || s[b] == bot || s[b] == top) continue;
        if (L.leq(s[a], s[b]) || L.leq(s[b], s[a])) ++comparable;
      }
    for (int e : s)
      if (e != bot && e != top) ++middles;
    if (middles != 3) return;
    bool bounded_ok = true;
    for (int a = 0; a < 5 && bounded_ok; ++a)
      for (int b = a + 1; b < 5 && bounded_ok; ++b) {
        if (s[a] == bot || s[a] == top || s[b] == bot || s[b] == top) continue;
        if (L.leq(s[a], s[b]) || L.leq(s[b], s[a])) continue;
        if (L.meet(s[a], s[b]) != bot || L.join(s[a], s[b]) != top)
          bounded_ok = false;
      }
    if (!bounded_ok) return;
    if (comparable == 0) {
      if (!out.has_m3) out.m3_witness = s;
      out.has_m3 = true;
    } else if (comparable == 1) {
      if (!out.has_n5) out.n5_witness = s;
      out.has_n5 = true;
    }
  };
  std::vector<int> s(5);
  for (s[0] = 0; s[0] < n; ++s[0])
    for (s[1] = s[0] + 1; s[1] < n; ++s[1])
      for (s[2] = s[1] + 1; s[2] < n; ++s[2])
        for (s[3] = s[2] + 1; s[3] < n; ++s[3])
          for (s[4] = s[3] + 1; s[4] < n; ++s[4]) classify(s);
  return out;
}

}  // namespace tlat
