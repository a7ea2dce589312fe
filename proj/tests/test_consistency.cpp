#include "doctest.h"

#include <set>

#include "tlat/consistency.hpp"
#include "tlat/lattice.hpp"

using namespace tlat;

namespace {

Poset diamond() {
  return Poset::from_relations({"0", "a", "b", "1"},
                               {{"0", "a"}, {"0", "b"},
                                {"a", "1"}, {"b", "1"}});
}

Poset pentagon() {
  return Poset::from_relations(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"a", "1"}, {"0", "b"}, {"b", "c"}, {"c", "1"}});
}

Poset m3() {
  return Poset::from_relations(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"0", "b"}, {"0", "c"},
       {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

// Boolean cube on three atoms.
Poset cube() {
  return Poset::from_relations(
      {"0", "x", "y", "z", "xy", "xz", "yz", "1"},
      {{"0", "x"}, {"0", "y"}, {"0", "z"},
       {"x", "xy"}, {"x", "xz"}, {"y", "xy"}, {"y", "yz"},
       {"z", "xz"}, {"z", "yz"},
       {"xy", "1"}, {"xz", "1"}, {"yz", "1"}});
}

// Every ordered pair of distinct elements in both relations.
ConsistencyStructure full_labeling(const Poset& P) {
  std::vector<ElemPair> all;
  for (int x = 0; x < P.size(); ++x)
    for (int y = 0; y < P.size(); ++y)
      if (x != y) all.push_back({x, y});
  return ConsistencyStructure(P, all, all);
}

}  // namespace

TEST_CASE("the carrier must be bounded") {
  CHECK_THROWS_AS(
      ConsistencyStructure(Poset::from_relations({"a", "b"}, {}), {}, {}),
      Error);
}

TEST_CASE("0 and 1 are consistent with everything from the start") {
  const ConsistencyStructure cs(diamond(), {}, {});
  const Poset& P = cs.carrier();
  for (const char* l : {"a", "b"}) {
    const int x = P.require_index(l);
    CHECK(cs.is_lower(0, x));
    CHECK(cs.is_lower(x, 3));
    CHECK(cs.is_upper(3, x));
    CHECK(cs.is_upper(x, 0));
  }
  // The two incomparable midpoints are not related by default.
  CHECK_FALSE(cs.is_lower(1, 2));
  CHECK_FALSE(cs.is_upper(1, 2));
}

TEST_CASE("declaring a pair without the certifying bound is a conflict") {
  // Two incomparable elements over two incomparable lower bounds: a and b
  // have common lower bounds x, y but no greatest one.
  const Poset P = Poset::from_relations(
      {"0", "x", "y", "a", "b", "1"},
      {{"0", "x"}, {"0", "y"}, {"x", "a"}, {"x", "b"}, {"y", "a"},
       {"y", "b"}, {"a", "1"}, {"b", "1"}});
  const int a = P.require_index("a"), b = P.require_index("b");
  CHECK_THROWS_AS(ConsistencyStructure(P, {{a, b}}, {}), ConflictError);
  // As an upper pair the join (= 1) exists, so this is fine.
  CHECK_NOTHROW(ConsistencyStructure(P, {}, {{a, b}}));
}

TEST_CASE("certified operations come from the declaration table") {
  const Poset P = diamond();
  const int a = 1, b = 2;
  const ConsistencyStructure cs(P, {{a, b}}, {});
  CHECK(cs.certified_meet(a, b) == 0);
  CHECK(cs.certified_meet(b, a) == 0);  // unordered key
  CHECK(cs.certified_meet(a, a) == a);  // reflexive, no certificate needed
  CHECK_THROWS_AS(cs.certified_join(a, b), MissingCertificate);
}

TEST_CASE("saturation closes a chain under the order rule") {
  const Poset P = Poset::from_relations({"0", "c", "1"}, {{"0", "c"}, {"c", "1"}});
  const ConsistencyStructure cs = saturate(ConsistencyStructure(P, {}, {}));
  std::set<ElemPair> expect;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x != y) expect.insert({x, y});
  CHECK(cs.lower() == expect);
  CHECK(cs.upper() == expect);
  for (const auto& d : cs.log()) CHECK(d.rule == "SC1");
}

TEST_CASE("saturation derives a non-trivial intersection consistency") {
  // In the cube: x is upper consistent with x+y (comparable) and declared
  // upper consistent with y+z; x+y and y+z are declared lower consistent
  // with intersection y. The mixed rule then makes (x, y) upper consistent.
  const Poset P = cube();
  const int x = P.require_index("x"), y = P.require_index("y");
  const int xy = P.require_index("xy"), yz = P.require_index("yz");
  const ConsistencyStructure in(P, {{xy, yz}}, {{x, yz}});
  CHECK_FALSE(in.is_upper(x, y));
  const ConsistencyStructure out = saturate(in);
  CHECK(out.is_upper(x, y));
  bool logged = false;
  for (const auto& d : out.log())
    logged |= d.rule == "SC3" && d.conclusion == ElemPair{x, y};
  CHECK(logged);
}

TEST_CASE("saturation is idempotent, monotone and deterministic") {
  const Poset P = cube();
  const ConsistencyStructure in(
      P, {{P.require_index("xy"), P.require_index("yz")}},
      {{P.require_index("x"), P.require_index("yz")}});
  const ConsistencyStructure s1 = saturate(in);
  const ConsistencyStructure s2 = saturate(s1);
  CHECK(s1.lower() == s2.lower());
  CHECK(s1.upper() == s2.upper());
  for (const auto& p : in.lower()) CHECK(s1.lower().count(p) == 1);
  for (const auto& p : in.upper()) CHECK(s1.upper().count(p) == 1);
  const ConsistencyStructure again = saturate(in);
  CHECK(again.lower() == s1.lower());
  CHECK(again.log().size() == s1.log().size());
}

TEST_CASE("fully labelled distributive lattices satisfy every axiom") {
  for (const Poset& P : {diamond(), cube(), m3()}) {
    const AxiomReport rep = check_axioms(full_labeling(P));
    CHECK(rep.all_pass());
  }
}

TEST_CASE("the fully labelled pentagon fails the modularity axioms") {
  const Poset P = pentagon();
  const ConsistencyStructure cs = full_labeling(P);
  const AxiomReport rep = check_axioms(cs);
  CHECK(rep.sc1.pass);
  CHECK(rep.sc2.pass);
  CHECK(rep.sc2p.pass);
  CHECK(rep.sc3.pass);
  CHECK(rep.sc3p.pass);
  CHECK_FALSE(rep.sc4.pass);
  CHECK_FALSE(rep.sc5.pass);
  CHECK_FALSE(rep.sc5p.pass);
  // The witness genuinely breaks (t1+t2)t3 = t1+t2*t3 under t1 <= t3.
  REQUIRE(rep.sc4.witness.size() == 3);
  const int t1 = rep.sc4.witness[0], t2 = rep.sc4.witness[1],
            t3 = rep.sc4.witness[2];
  CHECK(P.leq(t1, t3));
  CHECK(cs.is_upper(t1, t2));
  CHECK(cs.is_lower(t2, t3));
  CHECK(cs.certified_meet(cs.certified_join(t1, t2), t3) !=
        cs.certified_join(t1, cs.certified_meet(t2, t3)));
}

TEST_CASE("ordered pairs commute") {
  ConsistencyStructure cs(diamond(), {}, {});
  const int a = 1;
  const Derivation d = derive_ordered_commute(cs, 3, a);  // order-insensitive
  CHECK(d.rule == "ORDERED-COMMUTE");
  CHECK(d.premises == std::vector<int>{a, 3});
  CHECK(cs.is_lower(a, 3));
  CHECK(cs.is_lower(3, a));
  CHECK(cs.is_upper(a, 3));
  CHECK(cs.is_upper(3, a));
  CHECK(cs.certified_meet(a, 3) == a);
  CHECK(cs.certified_join(a, 3) == 3);
  CHECK_THROWS_AS(derive_ordered_commute(cs, 1, 2), NotComparable);
  CHECK_THROWS_AS(derive_ordered_commute(cs, 1, 1), NotComparable);
}

TEST_CASE("expression planning: direct pairwise contraction") {
  const Poset P = diamond();
  const ConsistencyStructure with(P, {{1, 2}}, {});
  const ConsistencyStructure without(P, {}, {});
  const LatticeTerm meet_ab = parse_term("a*b", P);
  CHECK(plan_expression(with, meet_ab).defined);
  CHECK(plan_expression(with, meet_ab).value == 0);
  CHECK_FALSE(plan_expression(without, meet_ab).defined);
  CHECK_FALSE(plan_expression(with, parse_term("a+b", P)).defined);
  // Bounds and single generators always exist.
  const ExpressionPlan top = plan_expression(without, parse_term("1", P));
  CHECK(top.defined);
  CHECK(top.value == 3);
  CHECK(top.derivation.empty());
}

TEST_CASE("expression planning: regrouping via strengthened associativity") {
  const Poset P = cube();
  const int x = P.require_index("x"), y = P.require_index("y"),
            z = P.require_index("z"), xy = P.require_index("xy");
  // x+y and (x+y)+z are certified, y+z too, but x with y+z is not.
  const ConsistencyStructure cs(P, {}, {{x, y}, {xy, z}, {y, z}});
  const LatticeTerm t = parse_term("x+(y+z)", P);
  const ExpressionPlan plan = plan_expression(cs, t);
  CHECK(plan.defined);
  CHECK(plan.value == P.require_index("1"));
  bool regrouped = false;
  for (const auto& d : plan.derivation) regrouped |= d.rule == "STRASS";
  CHECK(regrouped);
  // Without the bridging pair no order chains.
  const ConsistencyStructure weak(P, {}, {{y, z}});
  CHECK_FALSE(plan_expression(weak, t).defined);
}
