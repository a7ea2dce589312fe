#include "tlat/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tlat {

namespace {

struct Token {
  std::string text;
  int col = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

struct Builder {
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  std::vector<std::pair<std::string, std::string>> relations;
  std::vector<std::pair<std::string, std::string>> lower, upper;
  std::map<std::string, std::vector<std::string>> chains;
  std::vector<std::string> bottoms, tops;

  int declare(const std::string& name) {
    auto [it, fresh] = index.emplace(name, static_cast<int>(labels.size()));
    if (fresh) labels.push_back(name);
    return it->second;
  }

  void require(const std::string& name, int line, int col) {
    if (!index.count(name))
      throw ParseError(line, col, "unknown element '" + name + "'");
  }
};

}  // namespace

DslResult parse_dsl(const std::string& text) {
  Builder b;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    auto need = [&](size_t count) {
      if (toks.size() != count)
        throw ParseError(lineno, toks[0].col,
                         "'" + kw + "' expects " + std::to_string(count - 1) +
                             " argument(s)");
    };
    if (kw == "elem") {
      if (toks.size() < 2)
        throw ParseError(lineno, toks[0].col, "'elem' expects element names");
      for (size_t i = 1; i < toks.size(); ++i) {
        if (b.index.count(toks[i].text))
          throw ParseError(lineno, toks[i].col,
                           "duplicate element '" + toks[i].text + "'");
        b.declare(toks[i].text);
      }
    } else if (kw == "le") {
      need(3);
      b.require(toks[1].text, lineno, toks[1].col);
      b.require(toks[2].text, lineno, toks[2].col);
      b.relations.emplace_back(toks[1].text, toks[2].text);
    } else if (kw == "bottom" || kw == "top") {
      need(2);
      b.require(toks[1].text, lineno, toks[1].col);
      (kw == "bottom" ? b.bottoms : b.tops).push_back(toks[1].text);
    } else if (kw == "lower" || kw == "upper") {
      need(3);
      b.require(toks[1].text, lineno, toks[1].col);
      b.require(toks[2].text, lineno, toks[2].col);
      (kw == "lower" ? b.lower : b.upper)
          .emplace_back(toks[1].text, toks[2].text);
    } else if (kw == "chain") {
      // chain NAME e1 > e2 > ... (or <); members auto-declared.
      if (toks.size() < 3 || toks.size() % 2 != 1)
        throw ParseError(lineno, toks[0].col,
                         "'chain' expects a name and elements joined by > or <");
      const std::string& name = toks[1].text;
      if (b.chains.count(name))
        throw ParseError(lineno, toks[1].col, "duplicate chain '" + name + "'");
      std::vector<std::string> members;
      b.declare(toks[2].text);
      members.push_back(toks[2].text);
      for (size_t i = 3; i + 1 < toks.size(); i += 2) {
        const std::string& dir = toks[i].text;
        if (dir != ">" && dir != "<")
          throw ParseError(lineno, toks[i].col, "expected '>' or '<'");
        b.declare(toks[i + 1].text);
        const std::string &prev = members.back(), &next = toks[i + 1].text;
        if (dir == ">")
          b.relations.emplace_back(next, prev);
        else
          b.relations.emplace_back(prev, next);
        members.push_back(next);
      }
      b.chains[name] = std::move(members);
    } else if (kw == "consistent-chains") {
      need(3);
      for (int i : {1, 2})
        if (!b.chains.count(toks[i].text))
          throw ParseError(lineno, toks[i].col,
                           "unknown chain '" + toks[i].text + "'");
      for (const auto& x : b.chains[toks[1].text])
        for (const auto& y : b.chains[toks[2].text]) {
          b.lower.emplace_back(x, y);
          b.lower.emplace_back(y, x);
          b.upper.emplace_back(x, y);
          b.upper.emplace_back(y, x);
        }
    } else {
      throw ParseError(lineno, toks[0].col, "unknown directive '" + kw + "'");
    }
  }
  // bottom/top declarations make the element comparable with everything.
  for (const auto& bo : b.bottoms)
    for (const auto& l : b.labels) b.relations.emplace_back(bo, l);
  for (const auto& to : b.tops)
    for (const auto& l : b.labels) b.relations.emplace_back(l, to);

  DslResult out;
  out.poset = Poset::from_relations(b.labels, b.relations);
  for (const auto& [x, y] : b.lower)
    out.lower.emplace_back(out.poset.require_index(x),
                           out.poset.require_index(y));
  for (const auto& [x, y] : b.upper)
    out.upper.emplace_back(out.poset.require_index(x),
                           out.poset.require_index(y));
  for (const auto& [name, members] : b.chains) {
    std::vector<int> idx;
    for (const auto& mname : members) idx.push_back(out.poset.require_index(mname));
    out.chains[name] = std::move(idx);
  }
  return out;
}

}  // namespace tlat
