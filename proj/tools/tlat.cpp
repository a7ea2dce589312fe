// Command-line front end for the order/lattice toolkit.
//
// Exit codes: 0 all checks passed, 1 a law/axiom violation was found
// (witness in the output), 2 usage or parse error, 3 a size/depth guard
// was exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tlat/chains.hpp"
#include "tlat/congruence.hpp"
#include "tlat/consistency.hpp"
#include "tlat/dot.hpp"
#include "tlat/dsl.hpp"
#include "tlat/errors.hpp"
#include "tlat/euler.hpp"
#include "tlat/lattice.hpp"
#include "tlat/term.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kViolation = 1, kUsage = 2, kGuard = 3;

struct Options {
  std::string file;
  std::string format = "text";
  int max_size = 0;  // filled from TLAT_MAX_SIZE / --max-size
  unsigned seed = 0;
  int n = 1, m = 1, k = 3, depth = 8;
  long long w = 1;
  bool count_only = false;
  std::string graph = "hasse";
  std::string report_path;
  std::vector<std::string> pairs;
  std::vector<std::string> exprs;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tlat::Error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

tlat::DslResult load(const Options& opt) {
  if (opt.file.empty()) throw tlat::Error("missing input file (-f FILE)");
  auto r = tlat::parse_dsl(read_file(opt.file));
  if (r.poset.size() > opt.max_size)
    throw tlat::SizeGuardExceeded("input has " +
                                  std::to_string(r.poset.size()) +
                                  " elements, guard is " +
                                  std::to_string(opt.max_size));
  return r;
}

json pair_list(const std::set<tlat::ElemPair>& rel, const tlat::Poset& p) {
  json out = json::array();
  for (auto [x, y] : rel) out.push_back({p.label(x), p.label(y)});
  return out;
}

int cmd_poset_check(const Options& opt) {
  auto r = load(opt);
  const tlat::Poset& p = r.poset;
  auto covers = p.hasse_edges();
  std::sort(covers.begin(), covers.end());
  if (opt.format == "json") {
    json j{{"schema", 1}, {"elements", p.labels()}};
    j["bottom"] = p.bottom() ? json(p.label(*p.bottom())) : json(nullptr);
    j["top"] = p.top() ? json(p.label(*p.top())) : json(nullptr);
    j["covers"] = json::array();
    for (auto [x, y] : covers) j["covers"].push_back({p.label(x), p.label(y)});
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "elements: " << p.size() << "\n";
    std::cout << "bottom: " << (p.bottom() ? p.label(*p.bottom()) : "-")
              << "\n";
    std::cout << "top: " << (p.top() ? p.label(*p.top()) : "-") << "\n";
    for (auto [x, y] : covers)
      std::cout << "cover: " << p.label(x) << " < " << p.label(y) << "\n";
  }
  return kOk;
}

json witness_json(const tlat::FiniteLattice& L,
                  const std::optional<tlat::TripleWitness>& w) {
  if (!w) return nullptr;
  return json{L.label(w->x), L.label(w->y), L.label(w->z)};
}

int cmd_lattice_laws(const Options& opt) {
  auto r = load(opt);
  auto L = tlat::FiniteLattice::from_poset(r.poset);
  if (!L) {
    // Witness: the first pair without a meet or a join.
    const tlat::Poset& p = r.poset;
    for (int x = 0; x < p.size(); ++x)
      for (int y = x + 1; y < p.size(); ++y) {
        const char* miss = nullptr;
        if (!p.try_meet(x, y)) miss = "meet";
        else if (!p.try_join(x, y)) miss = "join";
        if (miss) {
          if (opt.format == "json") {
            json j{{"schema", 1},
                   {"lattice", false},
                   {"witness", {{"missing", miss},
                                {"pair", {p.label(x), p.label(y)}}}}};
            std::cout << j.dump(2) << "\n";
          } else {
            std::cout << "not a lattice: no " << miss << " for ("
                      << p.label(x) << ", " << p.label(y) << ")\n";
          }
          return kViolation;
        }
      }
    return kViolation;  // unreachable for valid inputs
  }
  const tlat::LawReport rep = tlat::check_laws(*L);
  const bool ok = rep.postulates_ok() && rep.modular && rep.distributive;
  if (opt.format == "json") {
    json j{{"schema", 1},
           {"lattice", true},
           {"idempotent", rep.idempotent},
           {"commutative", rep.commutative},
           {"associative", rep.associative},
           {"absorptive", rep.absorptive},
           {"modular", rep.modular},
           {"distributive", rep.distributive},
           {"dis1", rep.dis1},
           {"dis2", rep.dis2},
           {"ha", rep.ha},
           {"modular_witness", witness_json(*L, rep.modular_witness)},
           {"distributive_witness",
            witness_json(*L, rep.distributive_witness)}};
    std::cout << j.dump(2) << "\n";
  } else {
    auto line = [](const char* name, bool pass) {
      std::cout << name << ": " << (pass ? "pass" : "FAIL") << "\n";
    };
    line("idempotent", rep.idempotent);
    line("commutative", rep.commutative);
    line("associative", rep.associative);
    line("absorptive", rep.absorptive);
    line("modular", rep.modular);
    line("distributive", rep.distributive);
    line("dis1", rep.dis1);
    line("dis2", rep.dis2);
    line("ha", rep.ha);
    auto wline = [&](const char* name,
                     const std::optional<tlat::TripleWitness>& w) {
      if (w)
        std::cout << name << " witness: (" << L->label(w->x) << ", "
                  << L->label(w->y) << ", " << L->label(w->z) << ")\n";
    };
    wline("modular", rep.modular_witness);
    wline("distributive", rep.distributive_witness);
  }
  return ok ? kOk : kViolation;
}

tlat::ConsistencyStructure make_cs(const tlat::DslResult& r) {
  return tlat::ConsistencyStructure(r.poset, r.lower, r.upper);
}

int cmd_cons_check(const Options& opt) {
  auto r = load(opt);
  const tlat::ConsistencyStructure cs = make_cs(r);
  const tlat::AxiomReport rep = tlat::check_axioms(cs);
  auto emit = [&](const char* name, const tlat::AxiomResult& res, json& j) {
    if (opt.format == "json") {
      json e{{"pass", res.pass}};
      e["witness"] = json::array();
      for (int x : res.witness) e["witness"].push_back(r.poset.label(x));
      j[name] = e;
    } else {
      std::cout << name << ": " << (res.pass ? "pass" : "FAIL");
      if (!res.pass) {
        std::cout << " witness: (";
        for (size_t i = 0; i < res.witness.size(); ++i)
          std::cout << (i ? ", " : "") << r.poset.label(res.witness[i]);
        std::cout << ")";
      }
      std::cout << "\n";
    }
  };
  json j{{"schema", 1}};
  emit("SC1", rep.sc1, j);
  emit("SC2", rep.sc2, j);
  emit("SC2'", rep.sc2p, j);
  emit("SC3", rep.sc3, j);
  emit("SC3'", rep.sc3p, j);
  emit("SC4", rep.sc4, j);
  emit("SC5", rep.sc5, j);
  emit("SC5'", rep.sc5p, j);
  if (opt.format == "json") std::cout << j.dump(2) << "\n";
  return rep.all_pass() ? kOk : kViolation;
}

int cmd_cons_saturate(const Options& opt) {
  auto r = load(opt);
  const tlat::ConsistencyStructure cs = tlat::saturate(make_cs(r));
  if (opt.format == "dot") {
    std::cout << tlat::dot_consistency(cs);
  } else if (opt.format == "json") {
    json j{{"schema", 1},
           {"lower", pair_list(cs.lower(), r.poset)},
           {"upper", pair_list(cs.upper(), r.poset)}};
    j["log"] = json::array();
    for (const auto& d : cs.log())
      j["log"].push_back({{"rule", d.rule},
                          {"conclusion",
                           {r.poset.label(d.conclusion.first),
                            r.poset.label(d.conclusion.second)}},
                          {"kind", d.lower_kind ? "lower" : "upper"}});
    std::cout << j.dump(2) << "\n";
  } else {
    for (auto [x, y] : cs.lower())
      std::cout << "lower " << r.poset.label(x) << " " << r.poset.label(y)
                << "\n";
    for (auto [x, y] : cs.upper())
      std::cout << "upper " << r.poset.label(x) << " " << r.poset.label(y)
                << "\n";
    std::cout << "derivations: " << cs.log().size() << "\n";
  }
  return kOk;
}

int cmd_term_nf(const Options& opt) {
  auto r = load(opt);
  const tlat::LatticeTerm t = tlat::parse_term(opt.exprs.at(0), r.poset);
  const tlat::CanonicalDNF d = tlat::to_dnf(t, r.poset);
  if (opt.format == "json") {
    json j{{"schema", 1}, {"normal_form", tlat::dnf_to_string(d, r.poset)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << tlat::dnf_to_string(d, r.poset) << "\n";
  }
  return kOk;
}

int cmd_term_eq(const Options& opt) {
  auto r = load(opt);
  const tlat::LatticeTerm t1 = tlat::parse_term(opt.exprs.at(0), r.poset);
  const tlat::LatticeTerm t2 = tlat::parse_term(opt.exprs.at(1), r.poset);
  const bool eq = tlat::terms_equal(t1, t2, r.poset);
  if (opt.format == "json") {
    json j{{"schema", 1}, {"equal", eq}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (eq ? "equal" : "unequal") << "\n";
  }
  return kOk;
}

int cmd_chains_gen(const Options& opt) {
  const tlat::ChainPair cp(opt.n, opt.m);
  const tlat::GridLattice G = tlat::enumerate_lattice(cp);
  if (opt.count_only) {
    std::cout << G.lattice.size() << "\n";
    return kOk;
  }
  if (opt.format == "dot") {
    std::cout << tlat::dot_hasse(G.lattice.poset());
    return kOk;
  }
  if (opt.format == "json") {
    json j{{"schema", 1}, {"count", G.lattice.size()}};
    j["elements"] = json::array();
    for (int i = 0; i < G.lattice.size(); ++i)
      j["elements"].push_back(
          {{"profile", tlat::staircase_to_string(G.elements[i])},
           {"form", G.lattice.label(i)}});
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  for (int i = 0; i < G.lattice.size(); ++i)
    std::cout << tlat::staircase_to_string(G.elements[i]) << "  "
              << G.lattice.label(i) << "\n";
  return kOk;
}

int cmd_chains_identity(const Options& opt) {
  const tlat::ChainPair cp(opt.n, opt.m);
  // All non-decreasing index tuples I over [1,n], J over [1,m], 1<=k<=K.
  size_t checked = 0;
  for (int k = 1; k <= opt.k; ++k) {
    std::vector<int> I(k, 1), J(k, 1);
    auto bump = [&](std::vector<int>& v, int hi) {
      int i = k - 1;
      while (i >= 0) {
        if (v[i] < hi) {
          ++v[i];
          for (int j = i + 1; j < k; ++j) v[j] = v[i];
          return true;
        }
        --i;
      }
      return false;
    };
    bool more_i = true;
    while (more_i) {
      std::vector<int> Jv(k, 1);
      bool more_j = true;
      while (more_j) {
        const auto rr = tlat::r_term(cp, I, Jv);
        const auto ss = tlat::s_term(cp, I, Jv);
        ++checked;
        if (!(rr == ss)) {
          std::cout << "mismatch at I=";
          for (int x : I) std::cout << x << " ";
          std::cout << "J=";
          for (int x : Jv) std::cout << x << " ";
          std::cout << ": " << tlat::form_to_string(rr) << " vs "
                    << tlat::form_to_string(ss) << "\n";
          return kViolation;
        }
        more_j = bump(Jv, opt.m);
      }
      more_i = bump(I, opt.n);
    }
  }
  if (opt.format == "json") {
    json j{{"schema", 1}, {"checked", checked}, {"identity", true}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "checked " << checked << " index pairs: identity holds\n";
  }
  return kOk;
}

int cmd_chains_decomposables(const Options& opt) {
  const tlat::ChainPair cp(opt.n, opt.m);
  const tlat::GridLattice G = tlat::enumerate_lattice(cp);
  json arr = json::array();
  for (int i = 0; i <= cp.n + 1; ++i)
    for (int j = 0; j <= cp.m + 1; ++j) {
      if (i == cp.n + 1 || j == 0) continue;  // empty rectangle = 0
      const bool dec =
          tlat::decomposable(cp, G.lattice, G.u_index, i, j);
      if (opt.format == "json") {
        arr.push_back({{"i", i}, {"j", j}, {"decomposable", dec}});
      } else {
        std::cout << "u" << i << "," << j << ": "
                  << (dec ? "decomposable" : "indecomposable") << "\n";
      }
    }
  if (opt.format == "json") {
    json j{{"schema", 1}, {"cells", arr}};
    std::cout << j.dump(2) << "\n";
  }
  return kOk;
}

int cmd_cong_quotient(const Options& opt) {
  auto r = load(opt);
  auto L = tlat::FiniteLattice::from_poset(r.poset);
  if (!L) {
    std::cout << "input poset is not a lattice\n";
    return kViolation;
  }
  std::vector<tlat::ElemPair> pairs;
  for (const auto& spec : opt.pairs) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos)
      throw tlat::Error("--pair expects 'x,y', got: " + spec);
    pairs.emplace_back(r.poset.require_index(spec.substr(0, comma)),
                       r.poset.require_index(spec.substr(comma + 1)));
  }
  const tlat::Congruence c = tlat::generate_congruence(*L, pairs);
  const tlat::QuotientResult q = tlat::quotient(*L, c);
  const tlat::LawReport rep = tlat::check_laws(q.lattice);
  if (opt.format == "json") {
    json j{{"schema", 1},
           {"classes", json::array()},
           {"quotient_size", q.lattice.size()},
           {"postulates", rep.postulates_ok()}};
    for (const auto& cls : c.classes()) {
      json members = json::array();
      for (int x : cls) members.push_back(L->label(x));
      j["classes"].push_back(members);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& cls : c.classes()) {
      std::cout << "class:";
      for (int x : cls) std::cout << " " << L->label(x);
      std::cout << "\n";
    }
    std::cout << "quotient size: " << q.lattice.size() << "\n";
    std::cout << "postulates: " << (rep.postulates_ok() ? "pass" : "FAIL")
              << "\n";
  }
  return rep.postulates_ok() ? kOk : kViolation;
}

int cmd_universal_build(const Options& opt) {
  auto r = load(opt);
  const tlat::StagedUniversal u =
      tlat::build_U_staged(r.poset, r.lower, r.upper, opt.depth);
  json j{{"schema", 1},
         {"stabilized", u.stabilized},
         {"truncated", u.truncated},
         {"lattice", u.is_lattice},
         {"stages", json::array()},
         {"derivations", u.derivations},
         {"size", u.is_lattice ? u.lattice.size() : -1}};
  for (const auto& st : u.history)
    j["stages"].push_back({{"stage", st.stage},
                           {"classes", st.classes},
                           {"lower_pairs", st.lower_pairs},
                           {"upper_pairs", st.upper_pairs},
                           {"merges", st.merges}});
  if (!opt.report_path.empty()) {
    std::ofstream out(opt.report_path, std::ios::binary);
    out << j.dump(2) << "\n";
  }
  if (opt.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& st : u.history)
      std::cout << "stage " << st.stage << ": classes=" << st.classes
                << " lower=" << st.lower_pairs << " upper=" << st.upper_pairs
                << " merges=" << st.merges << "\n";
    std::cout << "stabilized: " << (u.stabilized ? "yes" : "no") << "\n";
    if (u.is_lattice) std::cout << "size: " << u.lattice.size() << "\n";
  }
  if (!u.stabilized) return kGuard;
  return u.is_lattice ? kOk : kViolation;
}

int cmd_euler_demo(const Options& opt) {
  const tlat::AdmissibilityReport rep =
      tlat::admissibility_contradiction(opt.w);
  if (opt.format == "json") {
    json j{{"schema", 1},
           {"w", rep.w},
           {"chi_fg", rep.chi_fg},
           {"vacuous", rep.vacuous},
           {"forced_w_prime", rep.forced_w_prime},
           {"contradiction", rep.contradiction},
           {"narrative", rep.narrative}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "w = " << rep.w << "\n";
    std::cout << "chi(F,G) = " << rep.chi_fg << "\n";
    if (rep.vacuous) {
      std::cout << "vacuous: no constraint\n";
    } else {
      std::cout << "forced w' = " << rep.forced_w_prime << "\n";
      std::cout << "contradiction: " << (rep.contradiction ? "yes" : "no")
                << "\n";
    }
    std::cout << rep.narrative << "\n";
  }
  return kOk;
}

int cmd_dot(const Options& opt) {
  auto r = load(opt);
  if (opt.graph == "cons") {
    std::cout << tlat::dot_consistency(make_cs(r));
  } else {
    std::cout << tlat::dot_hasse(r.poset);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"order and lattice toolkit"};
  app.require_subcommand(1);
  Options opt;
  const char* env_guard = std::getenv("TLAT_MAX_SIZE");
  opt.max_size = env_guard ? std::atoi(env_guard) : 256;
  app.add_option("--max-size", opt.max_size, "element-count guard")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for sampled sweeps");

  int (*run)(const Options&) = nullptr;
  auto with_file = [&](CLI::App* c) {
    c->add_option("-f,--file", opt.file, "input DSL file");
    return c;
  };
  auto with_format = [&](CLI::App* c, std::vector<std::string> allowed) {
    c->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember(allowed));
    return c;
  };
  auto bind = [&](CLI::App* c, int (*fn)(const Options&)) {
    c->callback([&run, fn] { run = fn; });
    return c;
  };

  auto* poset = app.add_subcommand("poset", "poset operations");
  bind(with_format(with_file(poset->add_subcommand("check",
                                                   "validate a poset file")),
                   {"text", "json"}),
       cmd_poset_check);

  auto* lattice = app.add_subcommand("lattice", "lattice operations");
  bind(with_format(with_file(lattice->add_subcommand(
                       "laws", "postulates, modularity, distributivity")),
                   {"text", "json"}),
       cmd_lattice_laws);

  auto* cons = app.add_subcommand("cons", "consistency structures");
  bind(with_format(with_file(cons->add_subcommand("check", "axiom checker")),
                   {"text", "json"}),
       cmd_cons_check);
  bind(with_format(with_file(cons->add_subcommand(
                       "saturate", "inference-rule fixpoint")),
                   {"text", "json", "dot"}),
       cmd_cons_saturate);

  auto* term = app.add_subcommand("term", "lattice terms");
  auto* nf = with_format(with_file(term->add_subcommand(
                             "nf", "canonical normal form")),
                         {"text", "json"});
  nf->add_option("expr", opt.exprs, "term expression")->expected(1);
  bind(nf, cmd_term_nf);
  auto* eq = with_format(with_file(term->add_subcommand(
                             "eq", "decide term equality")),
                         {"text", "json"});
  eq->add_option("expr", opt.exprs, "two term expressions")->expected(2);
  bind(eq, cmd_term_eq);

  auto* chains = app.add_subcommand("chains", "two consistent chains");
  auto add_nm = [&](CLI::App* c) {
    c->add_option("-n", opt.n, "length of the first chain")
        ->check(CLI::PositiveNumber);
    c->add_option("-m", opt.m, "length of the second chain")
        ->check(CLI::PositiveNumber);
    return c;
  };
  auto* gen = with_format(add_nm(chains->add_subcommand(
                              "gen", "generated lattice of staircases")),
                          {"text", "json", "dot"});
  gen->add_flag("--count", opt.count_only, "print only the cardinality");
  bind(gen, cmd_chains_gen);
  auto* ident = with_format(add_nm(chains->add_subcommand(
                                "identity", "product/sum form identity")),
                            {"text", "json"});
  ident->add_option("-k", opt.k, "maximum index-list length")
      ->check(CLI::PositiveNumber);
  bind(ident, cmd_chains_identity);
  bind(with_format(add_nm(chains->add_subcommand(
                       "decomposables", "cell decomposability table")),
                   {"text", "json"}),
       cmd_chains_decomposables);

  auto* cong = app.add_subcommand("cong", "congruences and quotients");
  auto* quot = with_format(with_file(cong->add_subcommand(
                               "quotient", "generated congruence quotient")),
                           {"text", "json"});
  quot->add_option("--pair", opt.pairs, "congruence generator 'x,y'");
  bind(quot, cmd_cong_quotient);

  auto* universal = app.add_subcommand("universal", "universal lattice");
  auto* ub = with_format(with_file(universal->add_subcommand(
                             "build", "staged bounded construction")),
                         {"text", "json"});
  ub->add_option("--depth", opt.depth, "stage bound")
      ->check(CLI::PositiveNumber);
  ub->add_option("--report", opt.report_path, "write a JSON report");
  bind(ub, cmd_universal_build);

  auto* euler = app.add_subcommand("euler", "pairing arithmetic");
  auto* demo = with_format(euler->add_subcommand(
                               "demo", "non-admissibility contradiction"),
                           {"text", "json"});
  demo->add_option("-w", opt.w, "dim W of the test object");
  bind(demo, cmd_euler_demo);

  auto* dot = with_file(app.add_subcommand("dot", "DOT graph output"));
  dot->add_option("--graph", opt.graph, "hasse or cons")
      ->check(CLI::IsMember({"hasse", "cons"}));
  bind(dot, cmd_dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  for (CLI::App* group : {poset, lattice, cons, term, chains, cong, universal,
                          euler})
    if (group->parsed() && run == nullptr) {
      std::cerr << group->get_name() << ": missing subcommand\n";
      return kUsage;
    }
  if (run == nullptr) return kUsage;

  try {
    return run(opt);
  } catch (const tlat::ConflictError& e) {
    std::cout << "violation: " << e.what() << "\n";
    return kViolation;
  } catch (const tlat::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const tlat::SizeGuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const tlat::DepthExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const tlat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
