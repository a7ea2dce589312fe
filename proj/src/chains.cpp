#include "tlat/chains.hpp"

#include <algorithm>
#include <map>

namespace tlat {

namespace {

bool rect_empty(const ChainPair& cp, UPair p) {
  return p.i == cp.n + 1 || p.j == 0;
}

}  // namespace

bool u_leq(const ChainPair& cp, UPair a, UPair b) {
  cp.check_u(a.i, a.j);
  cp.check_u(b.i, b.j);
  if (rect_empty(cp, a)) return true;
  if (rect_empty(cp, b)) return false;
  return a.i >= b.i && a.j <= b.j;
}

Staircase embed_u(const ChainPair& cp, int i, int j) {
  cp.check_u(i, j);
  Staircase s;
  s.h.assign(cp.m + 1, 0);
  const int height = rect_empty(cp, {i, j}) ? 0 : cp.n + 1 - i;
  for (int x = 1; x <= j && x <= cp.m + 1; ++x) s.h[x - 1] = height;
  return s;
}

Staircase embed_a(const ChainPair& cp, int i) { return embed_u(cp, i, cp.m + 1); }
Staircase embed_b(const ChainPair& cp, int j) { return embed_u(cp, 0, j); }
Staircase embed_bottom(const ChainPair& cp) { return embed_u(cp, cp.n + 1, 0); }
Staircase embed_top(const ChainPair& cp) { return embed_u(cp, 0, cp.m + 1); }

Staircase embed_v(const ChainPair& cp, int i, int j) {
  cp.check_u(i, j);
  // rows(i) union columns(j)
  Staircase s;
  s.h.assign(cp.m + 1, cp.n + 1 - i);
  for (int x = 1; x <= j; ++x) s.h[x - 1] = cp.n + 1;
  return s;
}

Staircase staircase_of(const ChainPair& cp, const UNormalForm& f) {
  Staircase s;
  s.h.assign(cp.m + 1, 0);
  for (const auto& p : f.terms) {
    if (rect_empty(cp, p)) continue;
    for (int x = 1; x <= p.j; ++x)
      s.h[x - 1] = std::max(s.h[x - 1], cp.n + 1 - p.i);
  }
  return s;
}

UNormalForm form_of(const ChainPair& cp, const Staircase& s) {
  UNormalForm f;
  // Maximal cells of the region, scanned left to right, are exactly the
  // steps of the profile; each yields one rectangle generator.
  for (int x = 1; x <= cp.m + 1; ++x) {
    const int y = s.h[x - 1];
    if (y == 0) continue;
    const int next = x <= cp.m ? s.h[x] : 0;
    if (y > next) f.terms.push_back({cp.n + 1 - y, x});
  }
  return f;
}

UNormalForm u_sum_normal_form(const ChainPair& cp, std::vector<UPair> terms) {
  for (const auto& p : terms) cp.check_u(p.i, p.j);
  // Drop empty rectangles, dedupe, absorb dominated pairs.
  std::vector<UPair> live;
  for (const auto& p : terms)
    if (!rect_empty(cp, p)) live.push_back(p);
  std::sort(live.begin(), live.end());
  live.erase(std::unique(live.begin(), live.end()), live.end());
  UNormalForm f;
  for (size_t a = 0; a < live.size(); ++a) {
    bool absorbed = false;
    for (size_t b = 0; b < live.size(); ++b)
      if (a != b && u_leq(cp, live[a], live[b]) &&
          !(live[a] == live[b]))
        absorbed = true;
    if (!absorbed) f.terms.push_back(live[a]);
  }
  std::sort(f.terms.begin(), f.terms.end());
  return f;
}

UNormalForm form_meet(const ChainPair& cp, const UNormalForm& f1,
                      const UNormalForm& f2) {
  Staircase a = staircase_of(cp, f1), b = staircase_of(cp, f2);
  Staircase s;
  s.h.resize(cp.m + 1);
  for (int k = 0; k <= cp.m; ++k) s.h[k] = std::min(a.h[k], b.h[k]);
  return form_of(cp, s);
}

UNormalForm form_join(const ChainPair& cp, const UNormalForm& f1,
                      const UNormalForm& f2) {
  Staircase a = staircase_of(cp, f1), b = staircase_of(cp, f2);
  Staircase s;
  s.h.resize(cp.m + 1);
  for (int k = 0; k <= cp.m; ++k) s.h[k] = std::max(a.h[k], b.h[k]);
  return form_of(cp, s);
}

UNormalForm r_term(const ChainPair& cp, const std::vector<int>& I,
                   const std::vector<int>& J) {
  if (I.size() != J.size() || I.empty())
    throw LengthMismatch("r_term needs equal-length nonempty index lists");
  for (size_t t = 0; t + 1 < I.size(); ++t)
    if (I[t] > I[t + 1] || J[t] > J[t + 1])
      throw Error("index lists must be non-decreasing");
  const size_t k = I.size();
  Staircase acc = embed_a(cp, I[0]);
  auto intersect = [&](const Staircase& o) {
    for (int x = 0; x <= cp.m; ++x) acc.h[x] = std::min(acc.h[x], o.h[x]);
  };
  for (size_t t = 0; t + 1 < k; ++t) {
    // factor (b_{j_t} + a_{i_{t+1}})
    Staircase factor = embed_b(cp, J[t]);
    const Staircase arow = embed_a(cp, I[t + 1]);
    for (int x = 0; x <= cp.m; ++x)
      factor.h[x] = std::max(factor.h[x], arow.h[x]);
    intersect(factor);
  }
  intersect(embed_b(cp, J[k - 1]));
  return form_of(cp, acc);
}

UNormalForm s_term(const ChainPair& cp, const std::vector<int>& I,
                   const std::vector<int>& J) {
  if (I.size() != J.size() || I.empty())
    throw LengthMismatch("s_term needs equal-length nonempty index lists");
  std::vector<UPair> terms;
  for (size_t t = 0; t < I.size(); ++t) terms.push_back({I[t], J[t]});
  return u_sum_normal_form(cp, std::move(terms));
}

UNormalForm v_to_u(const ChainPair& cp, const std::vector<UPair>& v_factors) {
  Staircase acc = embed_top(cp);
  for (const auto& p : v_factors) {
    const Staircase f = embed_v(cp, p.i, p.j);
    for (int x = 0; x <= cp.m; ++x) acc.h[x] = std::min(acc.h[x], f.h[x]);
  }
  return form_of(cp, acc);
}

std::vector<UPair> u_to_v(const ChainPair& cp, const UNormalForm& f) {
  // u_{i1 j1}+...+u_{ik jk} = a_{i1}(b_{j1}+a_{i2})...(b_{j_{k-1}}+a_{ik})b_{jk}
  // with a_i = v_{i,0} and b_j = v_{n+1,j}.
  if (f.terms.empty()) return {{cp.n + 1, 0}};  // the 0 element
  std::vector<UPair> v;
  v.push_back({f.terms[0].i, 0});
  for (size_t t = 1; t < f.terms.size(); ++t)
    v.push_back({f.terms[t].i, f.terms[t - 1].j});
  v.push_back({cp.n + 1, f.terms.back().j});
  return v;
}

std::string form_to_string(const UNormalForm& f) {
  if (f.terms.empty()) return "0";
  std::string out;
  for (size_t t = 0; t < f.terms.size(); ++t) {
    if (t) out += "+";
    out += "u" + std::to_string(f.terms[t].i) + "," + std::to_string(f.terms[t].j);
  }
  return out;
}

std::string staircase_to_string(const Staircase& s) {
  std::string out;
  for (size_t k = 0; k < s.h.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(s.h[k]);
  }
  return out;
}

int GridLattice::index_of(const Staircase& s) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), s);
  if (it == elements.end() || !(*it == s)) throw Error("staircase not in lattice");
  return static_cast<int>(it - elements.begin());
}

GridLattice enumerate_lattice(const ChainPair& cp) {
  if (cp.n > 6 || cp.m > 6)
    throw SizeGuardExceeded("enumerate_lattice is guarded at n, m <= 6");
  GridLattice g;
  // All non-increasing profiles over [0, n+1]^(m+1), lexicographic order.
  std::vector<int> h(cp.m + 1);
  auto rec = [&](auto&& self, int x, int cap) -> void {
    if (x > cp.m) {
      Staircase s;
      s.h = h;
      g.elements.push_back(std::move(s));
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      h[x] = v;
      self(self, x + 1, v);
    }
  };
  rec(rec, 0, cp.n + 1);
  std::sort(g.elements.begin(), g.elements.end());
  const int k = static_cast<int>(g.elements.size());
  std::vector<std::string> labels(k);
  std::vector<uint8_t> leq(static_cast<size_t>(k) * k, 0);
  std::vector<int> meet(leq.size()), join(leq.size());
  std::map<Staircase, int> pos;
  for (int i = 0; i < k; ++i) pos[g.elements[i]] = i;
  for (int i = 0; i < k; ++i) {
    labels[i] = form_to_string(form_of(cp, g.elements[i]));
    for (int j = 0; j < k; ++j) {
      leq[static_cast<size_t>(i) * k + j] = g.elements[j].contains(g.elements[i]);
      Staircase lo, hi;
      lo.h.resize(cp.m + 1);
      hi.h.resize(cp.m + 1);
      for (int x = 0; x <= cp.m; ++x) {
        lo.h[x] = std::min(g.elements[i].h[x], g.elements[j].h[x]);
        hi.h[x] = std::max(g.elements[i].h[x], g.elements[j].h[x]);
      }
      meet[static_cast<size_t>(i) * k + j] = pos.at(lo);
      join[static_cast<size_t>(i) * k + j] = pos.at(hi);
    }
  }
  g.lattice = FiniteLattice::from_tables(
      Poset::from_matrix(std::move(labels), std::move(leq)), std::move(meet),
      std::move(join));
  g.u_index.assign(cp.n + 2, std::vector<int>(cp.m + 2));
  for (int i = 0; i <= cp.n + 1; ++i)
    for (int j = 0; j <= cp.m + 1; ++j)
      g.u_index[i][j] = pos.at(embed_u(cp, i, j));
  return g;
}

bool decomposable(const ChainPair& cp, const FiniteLattice& L,
                  const std::vector<std::vector<int>>& u_img, int i, int j) {
  cp.check_u(i, j);
  const int e = u_img[i][j];
  if (e == u_img[cp.n + 1][0]) return false;  // 0 excluded
  const int below_i = u_img[std::min(i + 1, cp.n + 1)][j];
  const int below_j = u_img[i][std::max(j - 1, 0)];
  return L.join(below_i, below_j) == e;
}

std::vector<int> perversity_view(const ChainPair& cp, const Staircase& s) {
  (void)cp;
  return s.h;
}

}  // namespace tlat
