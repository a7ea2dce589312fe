#include "tlat/dot.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tlat {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string dot_hasse(const Poset& p) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (int i = 0; i < p.size(); ++i)
    os << "  " << quote(p.label(i)) << ";\n";
  auto edges = p.hasse_edges();
  std::sort(edges.begin(), edges.end());
  for (auto [x, y] : edges)
    os << "  " << quote(p.label(x)) << " -> " << quote(p.label(y))
       << " [style=solid];\n";
  os << "}\n";
  return os.str();
}

std::string dot_consistency(const ConsistencyStructure& cs) {
  const Poset& p = cs.carrier();
  // Rule name of the first derivation concluding each pair, per kind.
  std::map<std::pair<ElemPair, bool>, std::string> rule_of;
  for (const auto& d : cs.log())
    rule_of.emplace(std::make_pair(d.conclusion, d.lower_kind), d.rule);
  std::ostringstream os;
  os << "digraph consistency {\n  node [shape=plaintext];\n";
  for (int i = 0; i < p.size(); ++i)
    os << "  " << quote(p.label(i)) << ";\n";
  auto emit = [&](const std::set<ElemPair>& rel, bool lower_kind) {
    for (auto [x, y] : rel) {
      os << "  " << quote(p.label(x)) << " -> " << quote(p.label(y))
         << " [style=" << (lower_kind ? "solid" : "dashed");
      auto it = rule_of.find({{x, y}, lower_kind});
      if (it != rule_of.end()) os << ", label=" << quote(it->second);
      os << "];\n";
    }
  };
  emit(cs.lower(), true);
  emit(cs.upper(), false);
  os << "}\n";
  return os.str();
}

}  // namespace tlat
