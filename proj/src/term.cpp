#include "tlat/term.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace tlat {

LatticeTerm LatticeTerm::meet(std::vector<LatticeTerm> kids) {
  if (kids.size() == 1) return kids[0];
  if (kids.size() < 2) throw Error("meet needs at least two children");
  LatticeTerm t;
  t.kind = Kind::Meet;
  t.children = std::move(kids);
  return t;
}

LatticeTerm LatticeTerm::join(std::vector<LatticeTerm> kids) {
  if (kids.size() == 1) return kids[0];
  if (kids.size() < 2) throw Error("join needs at least two children");
  LatticeTerm t;
  t.kind = Kind::Join;
  t.children = std::move(kids);
  return t;
}

namespace {

// Keep the minimal generators: g is redundant in a meet-set when some
// other member lies below it.
std::vector<int> reduce_meet_set(std::vector<int> s, const Poset& P) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  std::vector<int> out;
  for (int g : s) {
    bool redundant = false;
    for (int h : s)
      if (h != g && P.leq(h, g)) redundant = true;
    if (!redundant) out.push_back(g);
  }
  return out;
}

// Meet-set order: S <= T iff every generator of T dominates some
// generator of S.
bool clause_leq(const std::vector<int>& S, const std::vector<int>& T,
                const Poset& P) {
  for (int t : T) {
    bool dominated = false;
    for (int s : S)
      if (P.leq(s, t)) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

CanonicalDNF absorb(std::vector<std::vector<int>> clauses, const Poset& P) {
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  CanonicalDNF d;
  for (size_t i = 0; i < clauses.size(); ++i) {
    bool absorbed = false;
    for (size_t j = 0; j < clauses.size(); ++j)
      if (i != j && clause_leq(clauses[i], clauses[j], P)) absorbed = true;
    if (!absorbed) d.clauses.push_back(clauses[i]);
  }
  return d;
}

}  // namespace

CanonicalDNF dnf_join(const CanonicalDNF& d1, const CanonicalDNF& d2,
                      const Poset& P) {
  std::vector<std::vector<int>> clauses = d1.clauses;
  clauses.insert(clauses.end(), d2.clauses.begin(), d2.clauses.end());
  return absorb(std::move(clauses), P);
}

CanonicalDNF dnf_meet(const CanonicalDNF& d1, const CanonicalDNF& d2,
                      const Poset& P) {
  std::vector<std::vector<int>> clauses;
  for (const auto& a : d1.clauses)
    for (const auto& b : d2.clauses) {
      std::vector<int> u = a;
      u.insert(u.end(), b.begin(), b.end());
      clauses.push_back(reduce_meet_set(std::move(u), P));
    }
  return absorb(std::move(clauses), P);
}

CanonicalDNF to_dnf(const LatticeTerm& t, const Poset& P) {
  switch (t.kind) {
    case LatticeTerm::Kind::Bottom:
      return CanonicalDNF::bottom();
    case LatticeTerm::Kind::Top:
      return CanonicalDNF::top();
    case LatticeTerm::Kind::Gen:
      if (t.gen < 0 || t.gen >= P.size())
        throw UnknownGenerator("generator index out of range");
      return CanonicalDNF{{{t.gen}}};
    case LatticeTerm::Kind::Meet: {
      CanonicalDNF acc = CanonicalDNF::top();
      for (const auto& c : t.children) acc = dnf_meet(acc, to_dnf(c, P), P);
      return acc;
    }
    case LatticeTerm::Kind::Join: {
      CanonicalDNF acc = CanonicalDNF::bottom();
      for (const auto& c : t.children) acc = dnf_join(acc, to_dnf(c, P), P);
      return acc;
    }
  }
  throw Error("bad term kind");
}

bool dnf_leq(const CanonicalDNF& d1, const CanonicalDNF& d2, const Poset& P) {
  for (const auto& c : d1.clauses) {
    bool below = false;
    for (const auto& e : d2.clauses)
      if (clause_leq(c, e, P)) {
        below = true;
        break;
      }
    if (!below) return false;
  }
  return true;
}

std::string dnf_to_string(const CanonicalDNF& d, const Poset& P) {
  if (d.is_bottom()) return "0";
  if (d.is_top()) return "1";
  std::string out;
  for (size_t i = 0; i < d.clauses.size(); ++i) {
    if (i) out += "+";
    for (size_t j = 0; j < d.clauses[i].size(); ++j) {
      if (j) out += "*";
      out += P.label(d.clauses[i][j]);
    }
  }
  return out;
}

LatticeTerm dnf_to_term(const CanonicalDNF& d) {
  if (d.is_bottom()) return LatticeTerm::bottom();
  if (d.is_top()) return LatticeTerm::top();
  std::vector<LatticeTerm> joins;
  for (const auto& c : d.clauses) {
    std::vector<LatticeTerm> meets;
    for (int g : c) meets.push_back(LatticeTerm::generator(g));
    joins.push_back(LatticeTerm::meet(std::move(meets)));
  }
  return LatticeTerm::join(std::move(joins));
}

int eval_valuation(const LatticeTerm& t, const std::vector<int>& v,
                   const Poset& P) {
  if (static_cast<int>(v.size()) != P.size())
    throw NonMonotoneValuation("valuation size mismatch");
  for (int i = 0; i < P.size(); ++i)
    for (int j = 0; j < P.size(); ++j)
      if (P.leq(i, j) && v[i] > v[j])
        throw NonMonotoneValuation("valuation not order-preserving at " +
                                   P.label(i) + " <= " + P.label(j));
  struct Eval {
    const std::vector<int>& v;
    int run(const LatticeTerm& t) const {
      switch (t.kind) {
        case LatticeTerm::Kind::Bottom:
          return 0;
        case LatticeTerm::Kind::Top:
          return 1;
        case LatticeTerm::Kind::Gen:
          return v[t.gen];
        case LatticeTerm::Kind::Meet: {
          int r = 1;
          for (const auto& c : t.children) r = std::min(r, run(c));
          return r;
        }
        case LatticeTerm::Kind::Join: {
          int r = 0;
          for (const auto& c : t.children) r = std::max(r, run(c));
          return r;
        }
      }
      return 0;
    }
  };
  return Eval{v}.run(t);
}

std::vector<std::vector<int>> monotone_valuations(const Poset& P) {
  const int n = P.size();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool upset = true;
    for (int i = 0; i < n && upset; ++i)
      for (int j = 0; j < n && upset; ++j)
        if ((mask >> i & 1) && P.leq(i, j) && !(mask >> j & 1)) upset = false;
    if (!upset) continue;
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = mask >> i & 1;
    out.push_back(std::move(v));
  }
  return out;
}

bool terms_equal(const LatticeTerm& t1, const LatticeTerm& t2,
                 const Poset& P) {
  return to_dnf(t1, P) == to_dnf(t2, P);
}

EnumeratedD enumerate_D(const Poset& P) {
  if (P.size() > 6)
    throw SizeGuardExceeded("enumerate_D is guarded at 6 generators");
  std::set<CanonicalDNF> forms;
  forms.insert(CanonicalDNF::bottom());
  forms.insert(CanonicalDNF::top());
  for (int g = 0; g < P.size(); ++g)
    forms.insert(to_dnf(LatticeTerm::generator(g), P));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<CanonicalDNF> cur(forms.begin(), forms.end());
    for (size_t a = 0; a < cur.size(); ++a)
      for (size_t b = a + 1; b < cur.size(); ++b) {
        if (forms.insert(dnf_meet(cur[a], cur[b], P)).second) grew = true;
        if (forms.insert(dnf_join(cur[a], cur[b], P)).second) grew = true;
      }
  }
  EnumeratedD out;
  out.element_forms.assign(forms.begin(), forms.end());
  const int k = static_cast<int>(out.element_forms.size());
  std::map<CanonicalDNF, int> pos;
  for (int i = 0; i < k; ++i) pos[out.element_forms[i]] = i;
  std::vector<std::string> labels(k);
  std::vector<uint8_t> leq(static_cast<size_t>(k) * k, 0);
  std::vector<int> meet(leq.size()), join(leq.size());
  for (int i = 0; i < k; ++i) {
    labels[i] = dnf_to_string(out.element_forms[i], P);
    for (int j = 0; j < k; ++j) {
      leq[static_cast<size_t>(i) * k + j] =
          dnf_leq(out.element_forms[i], out.element_forms[j], P);
      meet[static_cast<size_t>(i) * k + j] =
          pos.at(dnf_meet(out.element_forms[i], out.element_forms[j], P));
      join[static_cast<size_t>(i) * k + j] =
          pos.at(dnf_join(out.element_forms[i], out.element_forms[j], P));
    }
  }
  out.lattice = FiniteLattice::from_tables(
      Poset::from_matrix(std::move(labels), std::move(leq)), std::move(meet),
      std::move(join));
  out.generator_index.resize(P.size());
  for (int g = 0; g < P.size(); ++g)
    out.generator_index[g] = pos.at(to_dnf(LatticeTerm::generator(g), P));
  return out;
}

namespace {

struct TermParser {
  const std::string& s;
  const Poset& P;
  size_t i = 0;
  int line = 1, col = 1;

  void advance() {
    if (s[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  }
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      advance();
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(line, col, msg);
  }

  LatticeTerm parse_expr() {
    std::vector<LatticeTerm> kids{parse_factor_chain()};
    skip_ws();
    while (i < s.size() && s[i] == '+') {
      advance();
      kids.push_back(parse_factor_chain());
      skip_ws();
    }
    return LatticeTerm::join(std::move(kids));
  }
  LatticeTerm parse_factor_chain() {
    std::vector<LatticeTerm> kids{parse_atom()};
    skip_ws();
    while (i < s.size() && s[i] == '*') {
      advance();
      kids.push_back(parse_atom());
      skip_ws();
    }
    return LatticeTerm::meet(std::move(kids));
  }
  LatticeTerm parse_atom() {
    skip_ws();
    if (i >= s.size()) fail("unexpected end of term");
    if (s[i] == '(') {
      advance();
      LatticeTerm t = parse_expr();
      skip_ws();
      if (i >= s.size() || s[i] != ')') fail("expected ')'");
      advance();
      return t;
    }
    if (s[i] == '0') {
      advance();
      return LatticeTerm::bottom();
    }
    if (s[i] == '1') {
      advance();
      return LatticeTerm::top();
    }
    if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
      std::string name;
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' ||
              s[i] == '\'')) {
        name += s[i];
        advance();
      }
      int g = P.index_of(name);
      if (g < 0) fail("unknown generator: " + name);
      return LatticeTerm::generator(g);
    }
    fail(std::string("unexpected character '") + s[i] + "'");
  }
};

}  // namespace

LatticeTerm parse_term(const std::string& text, const Poset& P) {
  TermParser p{text, P};
  LatticeTerm t = p.parse_expr();
  p.skip_ws();
  if (p.i != text.size()) p.fail("trailing input after term");
  return t;
}

std::string term_to_string(const LatticeTerm& t, const Poset& P) {
  switch (t.kind) {
    case LatticeTerm::Kind::Bottom:
      return "0";
    case LatticeTerm::Kind::Top:
      return "1";
    case LatticeTerm::Kind::Gen:
      return P.label(t.gen);
    case LatticeTerm::Kind::Meet: {
      std::string out;
      for (size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += "*";
        const bool paren = t.children[i].kind == LatticeTerm::Kind::Join;
        out += paren ? "(" + term_to_string(t.children[i], P) + ")"
                     : term_to_string(t.children[i], P);
      }
      return out;
    }
    case LatticeTerm::Kind::Join: {
      std::string out;
      for (size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += "+";
        out += term_to_string(t.children[i], P);
      }
      return out;
    }
  }
  return "?";
}

}  // namespace tlat
