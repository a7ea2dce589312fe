#include "tlat/congruence.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

namespace tlat {

Congruence::Congruence(int n) : parent_(n) {
  for (int i = 0; i < n; ++i) parent_[i] = i;
}

int Congruence::find(int x) const {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool Congruence::merge(int x, int y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (x > y) std::swap(x, y);
  parent_[y] = x;  // the least element of a class stays its representative
  return true;
}

std::vector<std::vector<int>> Congruence::classes() const {
  std::map<int, std::vector<int>> by_rep;
  for (int i = 0; i < size(); ++i) by_rep[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  out.reserve(by_rep.size());
  for (auto& [rep, members] : by_rep) out.push_back(std::move(members));
  return out;
}

bool Congruence::operator==(const Congruence& o) const {
  if (size() != o.size()) return false;
  for (int i = 0; i < size(); ++i)
    if (find(i) != o.find(i)) return false;
  return true;
}

Congruence generate_congruence(const FiniteLattice& L,
                               const std::vector<ElemPair>& pairs) {
  const int n = L.size();
  Congruence c(n);
  for (auto [x, y] : pairs) c.merge(x, y);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        if (!c.same(x, y)) continue;
        for (int l = 0; l < n; ++l) {
          changed |= c.merge(L.meet(x, l), L.meet(y, l));
          changed |= c.merge(L.join(x, l), L.join(y, l));
        }
      }
  }
  return c;
}

bool is_congruence(const FiniteLattice& L, const Congruence& c) {
  const int n = L.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (!c.same(x, y)) continue;
      for (int l = 0; l < n; ++l)
        if (!c.same(L.meet(x, l), L.meet(y, l)) ||
            !c.same(L.join(x, l), L.join(y, l)))
          return false;
    }
  return true;
}

QuotientResult quotient(const FiniteLattice& L, const Congruence& c) {
  if (c.size() != L.size())
    throw NotACongruence("partition size does not match the lattice");
  if (!is_congruence(L, c))
    throw NotACongruence("partition is not closed under meet/join translation");
  const auto cls = c.classes();
  const int q = static_cast<int>(cls.size());
  std::vector<int> class_of(L.size(), -1);
  std::vector<int> rep(q);
  std::vector<std::string> labels(q);
  for (int a = 0; a < q; ++a) {
    rep[a] = cls[a].front();
    labels[a] = "[" + L.label(rep[a]) + "]";
    for (int x : cls[a]) class_of[x] = a;
  }
  std::vector<int> meet(static_cast<size_t>(q) * q), join(meet.size());
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      meet[static_cast<size_t>(a) * q + b] = class_of[L.meet(rep[a], rep[b])];
      join[static_cast<size_t>(a) * q + b] = class_of[L.join(rep[a], rep[b])];
    }
  std::vector<uint8_t> leq(static_cast<size_t>(q) * q, 0);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      leq[static_cast<size_t>(a) * q + b] =
          meet[static_cast<size_t>(a) * q + b] == a;
  QuotientResult out{FiniteLattice::from_tables(
                         Poset::from_matrix(std::move(labels), std::move(leq)),
                         std::move(meet), std::move(join)),
                     std::move(class_of)};
  return out;
}

namespace {

// ---- staged universal construction -----------------------------------
//
// A hash-consed universe of binary meet/join nodes over the generators,
// grown only by certificates of consistent pairs, with a union-find
// congruence and an order matrix recomputed from structural seeds
// (meet below kids, kids below join, generator order) closed under
// transitivity and the glb/lub rules.

enum class NK { Bot = 0, Top, Gen, Meet, Join };

struct Node {
  NK kind;
  int gen = -1;
  int k0 = -1, k1 = -1;  // child node ids for Meet/Join
};

constexpr size_t kNodeGuard = 50000;

struct Engine {
  const Poset& P;
  std::vector<Node> nodes;
  std::vector<int> uf;
  std::map<std::tuple<int, int, int>, int> cons;  // (kind, kid reps) -> id
  std::set<ElemPair> lower, upper;                // pairs of node ids
  size_t derivations = 0;
  size_t merges = 0;

  // Order snapshot from the last rebuild.
  std::vector<int> reps;       // sorted class representatives (min node id)
  std::vector<int> rep_slot;   // node id -> slot in reps, -1 for stale ids
  std::vector<uint8_t> leq;    // reps x reps

  explicit Engine(const Poset& p) : P(p) {
    nodes.push_back({NK::Bot});
    nodes.push_back({NK::Top});
    for (int g = 0; g < P.size(); ++g) nodes.push_back({NK::Gen, g});
    uf.resize(nodes.size());
    for (size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
  }

  int bot() const { return 0; }
  int top() const { return 1; }
  int gen_node(int g) const { return 2 + g; }

  int find(int x) {
    while (uf[x] != x) {
      uf[x] = uf[uf[x]];
      x = uf[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    uf[b] = a;
    ++merges;
    return true;
  }

  // Sound under-approximation of the class order; stale entries between
  // rebuilds only under-report.
  bool leq_known(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return true;
    if (x == find(bot()) || y == find(top())) return true;
    const int ix = x < static_cast<int>(rep_slot.size()) ? rep_slot[x] : -1;
    const int iy = y < static_cast<int>(rep_slot.size()) ? rep_slot[y] : -1;
    if (ix < 0 || iy < 0) return false;
    return leq[static_cast<size_t>(ix) * reps.size() + iy] != 0;
  }

  int mk(NK kind, int x, int y) {
    x = find(x);
    y = find(y);
    if (leq_known(x, y)) return kind == NK::Meet ? x : y;
    if (leq_known(y, x)) return kind == NK::Meet ? y : x;
    const int a = std::min(x, y), b = std::max(x, y);
    const auto key = std::make_tuple(static_cast<int>(kind), a, b);
    auto it = cons.find(key);
    if (it != cons.end()) return find(it->second);
    if (nodes.size() >= kNodeGuard)
      throw SizeGuardExceeded("term universe exceeded the node guard");
    const int id = static_cast<int>(nodes.size());
    nodes.push_back({kind, -1, a, b});
    uf.push_back(id);
    cons[key] = id;
    return id;
  }

  bool is_lower(int x, int y) { return lower.count({find(x), find(y)}) > 0; }
  bool is_upper(int x, int y) { return upper.count({find(x), find(y)}) > 0; }
  bool add_lower(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (!lower.insert({x, y}).second) return false;
    ++derivations;
    return true;
  }
  bool add_upper(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (!upper.insert({x, y}).second) return false;
    ++derivations;
    return true;
  }

  // Collapse composite nodes by order and re-hash-cons; true when classes
  // merged.
  bool canonical_pass() {
    bool merged = false;
    for (int id = 0; id < static_cast<int>(nodes.size()); ++id) {
      Node& nd = nodes[id];
      if (nd.kind != NK::Meet && nd.kind != NK::Join) continue;
      int a = find(nd.k0), b = find(nd.k1);
      int target = -1;
      if (a == b || leq_known(a, b)) target = nd.kind == NK::Meet ? a : b;
      else if (leq_known(b, a)) target = nd.kind == NK::Meet ? b : a;
      if (target >= 0) {
        merged |= unite(id, target);
        continue;
      }
      if (a > b) std::swap(a, b);
      nd.k0 = a;
      nd.k1 = b;
      const auto key = std::make_tuple(static_cast<int>(nd.kind), a, b);
      auto [it, fresh] = cons.emplace(key, id);
      if (!fresh && find(it->second) != find(id))
        merged |= unite(id, it->second);
    }
    return merged;
  }

  void compute_order() {
    reps.clear();
    rep_slot.assign(nodes.size(), -1);
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
      if (find(i) == i) reps.push_back(i);
    const int R = static_cast<int>(reps.size());
    for (int s = 0; s < R; ++s) rep_slot[reps[s]] = s;
    auto slot = [&](int id) { return rep_slot[find(id)]; };
    leq.assign(static_cast<size_t>(R) * R, 0);
    auto at = [&](int i, int j) -> uint8_t& {
      return leq[static_cast<size_t>(i) * R + j];
    };
    for (int s = 0; s < R; ++s) at(s, s) = 1;
    const int sb = slot(bot()), st = slot(top());
    for (int s = 0; s < R; ++s) {
      at(sb, s) = 1;
      at(s, st) = 1;
    }
    for (int x = 0; x < P.size(); ++x)
      for (int y = 0; y < P.size(); ++y)
        if (P.leq(x, y)) at(slot(gen_node(x)), slot(gen_node(y))) = 1;
    for (int id = 0; id < static_cast<int>(nodes.size()); ++id) {
      const Node& nd = nodes[id];
      if (nd.kind == NK::Meet) {
        at(slot(id), slot(nd.k0)) = 1;
        at(slot(id), slot(nd.k1)) = 1;
      } else if (nd.kind == NK::Join) {
        at(slot(nd.k0), slot(id)) = 1;
        at(slot(nd.k1), slot(id)) = 1;
      }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      // Transitive closure.
      for (int k = 0; k < R; ++k)
        for (int i = 0; i < R; ++i) {
          if (!at(i, k)) continue;
          for (int j = 0; j < R; ++j)
            if (at(k, j) && !at(i, j)) {
              at(i, j) = 1;
              changed = true;
            }
        }
      // Meets are greatest lower bounds, joins least upper bounds.
      for (int id = 0; id < static_cast<int>(nodes.size()); ++id) {
        const Node& nd = nodes[id];
        if (nd.kind != NK::Meet && nd.kind != NK::Join) continue;
        const int m = slot(id), a = slot(nd.k0), b = slot(nd.k1);
        for (int z = 0; z < R; ++z) {
          if (nd.kind == NK::Meet && at(z, a) && at(z, b) && !at(z, m)) {
            at(z, m) = 1;
            changed = true;
          }
          if (nd.kind == NK::Join && at(a, z) && at(b, z) && !at(m, z)) {
            at(m, z) = 1;
            changed = true;
          }
        }
      }
    }
  }

  bool antisym_merges() {
    const int R = static_cast<int>(reps.size());
    bool merged = false;
    for (int i = 0; i < R; ++i)
      for (int j = i + 1; j < R; ++j)
        if (leq[static_cast<size_t>(i) * R + j] &&
            leq[static_cast<size_t>(j) * R + i])
          merged |= unite(reps[i], reps[j]);
    return merged;
  }

  void canonicalize_relations() {
    std::set<ElemPair> lo, up;
    for (auto [x, y] : lower) {
      x = find(x);
      y = find(y);
      if (x != y) lo.insert({x, y});
    }
    for (auto [x, y] : upper) {
      x = find(x);
      y = find(y);
      if (x != y) up.insert({x, y});
    }
    lower = std::move(lo);
    upper = std::move(up);
  }

  void rebuild() {
    bool again = true;
    while (again) {
      again = canonical_pass();
      compute_order();
      again |= antisym_merges();
    }
    canonicalize_relations();
  }

  // One stage of relation growth: inference to fixpoint over the classes
  // existing at entry (certificates may create nodes, which join the scan
  // at the next stage).
  bool saturate_stage() {
    const std::vector<int> R0 = reps;
    bool any = false;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x : R0) {
        for (int b : {find(bot()), find(top())}) {
          changed |= add_lower(b, x);
          changed |= add_lower(x, b);
          changed |= add_upper(b, x);
          changed |= add_upper(x, b);
        }
      }
      for (int a : R0)
        for (int b : R0) {
          if (find(a) == find(b) || !leq_known(a, b)) continue;
          changed |= add_lower(a, b);
          changed |= add_lower(b, a);
          changed |= add_upper(a, b);
          changed |= add_upper(b, a);
        }
      for (int t1 : R0)
        for (int t2 : R0)
          for (int t3 : R0) {
            if (t1 == t2 || t1 == t3 || t2 == t3) continue;
            if (is_lower(t1, t2) && is_lower(t1, t3) && is_lower(t2, t3)) {
              changed |= add_lower(mk(NK::Meet, t1, t2), t3);
              changed |= add_lower(t1, mk(NK::Meet, t2, t3));
            }
            if (is_upper(t1, t2) && is_upper(t1, t3) && is_upper(t2, t3)) {
              changed |= add_upper(mk(NK::Join, t1, t2), t3);
              changed |= add_upper(t1, mk(NK::Join, t2, t3));
            }
            if (is_upper(t1, t2) && is_upper(t1, t3) && is_lower(t2, t3))
              changed |= add_upper(t1, mk(NK::Meet, t2, t3));
            if (is_lower(t1, t3) && is_lower(t2, t3) && is_upper(t1, t2))
              changed |= add_lower(mk(NK::Join, t1, t2), t3);
            if (leq_known(t1, t3)) {
              if (is_upper(t1, t2) && is_lower(t2, t3)) {
                changed |= add_lower(mk(NK::Join, t1, t2), t3);
                changed |= add_upper(t1, mk(NK::Meet, t2, t3));
              }
              if (is_upper(t1, t2) && is_lower(t3, t2)) {
                changed |= add_upper(t1, mk(NK::Meet, t3, t2));
                changed |= add_lower(t3, mk(NK::Join, t1, t2));
              }
              if (is_upper(t2, t1) && is_lower(t2, t3)) {
                changed |= add_upper(mk(NK::Meet, t2, t3), t1);
                changed |= add_lower(mk(NK::Join, t2, t1), t3);
              }
            }
          }
      any |= changed;
    }
    return any;
  }

  // Impose (t1+t2)*t3 = t1+t2*t3 on every triple matching a modularity
  // hypothesis under the current relations.
  bool modularity_stage() {
    const std::vector<int> R0 = reps;
    bool any = false;
    for (int t1 : R0)
      for (int t2 : R0)
        for (int t3 : R0) {
          if (t1 == t2 || t1 == t3 || t2 == t3) continue;
          if (!leq_known(t1, t3)) continue;
          const bool hyp = (is_upper(t1, t2) && is_lower(t2, t3)) ||
                           (is_upper(t1, t2) && is_lower(t3, t2)) ||
                           (is_upper(t2, t1) && is_lower(t2, t3));
          if (!hyp) continue;
          const int lhs = mk(NK::Meet, mk(NK::Join, t1, t2), t3);
          const int rhs = mk(NK::Join, t1, mk(NK::Meet, t2, t3));
          any |= unite(lhs, rhs);
        }
    return any;
  }

  std::string snapshot() {
    std::ostringstream os;
    os << reps.size() << ';';
    for (uint8_t v : leq) os << (v ? '1' : '0');
    os << ';';
    for (auto [x, y] : lower) os << rep_slot[x] << ',' << rep_slot[y] << ' ';
    os << ';';
    for (auto [x, y] : upper) os << rep_slot[x] << ',' << rep_slot[y] << ' ';
    return os.str();
  }

  LatticeTerm term_of(int slot, std::vector<std::optional<LatticeTerm>>& memo) {
    if (memo[slot]) return *memo[slot];
    const Node& nd = nodes[reps[slot]];  // class rep = least node id
    LatticeTerm t;
    switch (nd.kind) {
      case NK::Bot: t = LatticeTerm::bottom(); break;
      case NK::Top: t = LatticeTerm::top(); break;
      case NK::Gen: t = LatticeTerm::generator(nd.gen); break;
      case NK::Meet:
        t = LatticeTerm::meet({term_of(rep_slot[find(nd.k0)], memo),
                               term_of(rep_slot[find(nd.k1)], memo)});
        break;
      case NK::Join:
        t = LatticeTerm::join({term_of(rep_slot[find(nd.k0)], memo),
                               term_of(rep_slot[find(nd.k1)], memo)});
        break;
    }
    memo[slot] = t;
    return t;
  }
};

}  // namespace

StagedUniversal build_U_staged(const Poset& P,
                               const std::vector<ElemPair>& lower_rel,
                               const std::vector<ElemPair>& upper_rel,
                               int max_depth) {
  Engine e(P);
  for (auto [x, y] : lower_rel) e.add_lower(e.gen_node(x), e.gen_node(y));
  for (auto [x, y] : upper_rel) e.add_upper(e.gen_node(x), e.gen_node(y));
  e.rebuild();

  StagedUniversal out;
  std::string prev = e.snapshot();
  for (int stage = 0; stage < max_depth; ++stage) {
    const size_t merges_before = e.merges;
    e.saturate_stage();
    e.modularity_stage();
    e.rebuild();
    out.history.push_back({stage, e.reps.size(), e.lower.size(),
                           e.upper.size(), e.merges - merges_before});
    out.stages = stage + 1;
    std::string snap = e.snapshot();
    if (snap == prev) {
      out.stabilized = true;
      break;
    }
    prev = std::move(snap);
  }
  out.truncated = !out.stabilized;
  out.derivations = e.derivations;

  // Materialize the class poset, representative terms, and relations.
  const int R = static_cast<int>(e.reps.size());
  std::vector<std::optional<LatticeTerm>> memo(R);
  std::vector<std::string> labels(R);
  for (int s = 0; s < R; ++s)
    labels[s] = term_to_string(e.term_of(s, memo), P);
  {  // defensive: distinct classes should already print distinct terms
    std::map<std::string, int> seen;
    for (int s = 0; s < R; ++s)
      if (!seen.emplace(labels[s], s).second)
        labels[s] += "#" + std::to_string(s);
  }
  auto L = FiniteLattice::from_poset(Poset::from_matrix(labels, e.leq));
  if (L) {
    out.is_lattice = true;
    out.lattice = *L;
    for (int s = 0; s < R; ++s) out.class_terms.push_back(*memo[s]);
    for (auto [x, y] : e.lower)
      out.lower.insert({e.rep_slot[x], e.rep_slot[y]});
    for (auto [x, y] : e.upper)
      out.upper.insert({e.rep_slot[x], e.rep_slot[y]});
  }
  return out;
}

PsiResult psi(const StagedUniversal& U, const Poset& P) {
  if (!U.stabilized || !U.is_lattice)
    throw NotStabilized("staged construction did not stabilize to a lattice");
  const EnumeratedD D = enumerate_D(P);
  PsiResult r;
  const int n = U.lattice.size();
  std::map<CanonicalDNF, int> form_index;
  for (int i = 0; i < static_cast<int>(D.element_forms.size()); ++i)
    form_index[D.element_forms[i]] = i;
  for (int i = 0; i < n; ++i) {
    const CanonicalDNF f = to_dnf(U.class_terms[i], P);
    auto it = form_index.find(f);
    r.image.push_back(it == form_index.end() ? -1 : it->second);
  }
  r.homomorphism = true;
  for (int i = 0; i < n && r.homomorphism; ++i)
    for (int j = 0; j < n; ++j) {
      if (r.image[i] < 0 || r.image[j] < 0 ||
          r.image[U.lattice.meet(i, j)] !=
              D.lattice.meet(r.image[i], r.image[j]) ||
          r.image[U.lattice.join(i, j)] !=
              D.lattice.join(r.image[i], r.image[j])) {
        r.homomorphism = false;
        break;
      }
    }
  std::set<int> hit(r.image.begin(), r.image.end());
  const bool unknown = hit.count(-1) > 0;
  hit.erase(-1);
  r.surjective = static_cast<int>(hit.size()) == D.lattice.size();
  r.injective = !unknown && static_cast<int>(hit.size()) == n;
  return r;
}

}  // namespace tlat
