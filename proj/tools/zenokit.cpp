// zenokit: Zeno and non-Zeno run detection for timed automata.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zenokit/io.hpp"
#include "zenokit/nonzeno.hpp"
#include "zenokit/oracle.hpp"
#include "zenokit/zeno.hpp"

namespace {

using namespace zenokit;

enum Exit { kOk = 0, kUsage = 1, kInput = 2, kResource = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TimedAutomaton load_ta(const std::string& path) {
  try {
    return parse_ta(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const ValidationError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::size_t default_node_limit() {
  if (const char* env = std::getenv("ZENOKIT_NODE_LIMIT")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed ZENOKIT_NODE_LIMIT='" << env << "'\n";
    }
  }
  return kDefaultNodeLimit;
}

AbstractionKind abstraction_or_throw(const std::string& name) {
  auto k = parse_abstraction(name);
  if (!k) throw CLI::ValidationError("--abstraction", "unknown abstraction '" + name + "'");
  return *k;
}

void print_witness(const Witness& w) {
  auto join = [](const std::vector<std::string>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + xs[i];
    return out;
  };
  std::cout << "prefix: " << join(w.prefix) << "\n";
  std::cout << "cycle: " << join(w.cycle) << "\n";
}

const std::vector<std::string> kAbstractionNames{"m", "m+", "lu", "lu+", "lbar-u", "lbar-u+", "l-ubar", "l-ubar+"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeno and non-Zeno run detection for timed automata"};
  app.require_subcommand(1);

  std::string file, property = "nonzeno", abstraction = "lu", annotate, lba_file, word, wrap;
  std::size_t node_limit = default_node_limit();
  bool witness = false, dot = false;

  auto* check = app.add_subcommand("check", "decide whether a (non-)Zeno run exists");
  check->add_option("--property", property, "nonzeno or zeno")->check(CLI::IsMember({"nonzeno", "zeno"}));
  check->add_option("--abstraction", abstraction, "zone abstraction")->check(CLI::IsMember(kAbstractionNames));
  check->add_option("--node-limit", node_limit, "maximal number of explored nodes");
  check->add_flag("--witness", witness, "print a lasso witness for YES answers");
  check->add_option("FILE", file, "timed automaton")->required();

  auto* graph = app.add_subcommand("graph", "dump a zone graph in Graphviz format");
  graph->add_option("--abstraction", abstraction, "zone abstraction")->check(CLI::IsMember(kAbstractionNames));
  graph->add_option("--annotate", annotate, "rgzg or szg")->check(CLI::IsMember({"rgzg", "szg"}));
  graph->add_option("--node-limit", node_limit, "maximal number of explored nodes");
  graph->add_flag("--dot", dot, "Graphviz output (the only format)")->required();
  graph->add_option("FILE", file, "timed automaton")->required();

  auto* gen = app.add_subcommand("gen", "generate automata from reductions");
  gen->require_subcommand(1);
  std::string cnf_file;
  auto* gen_nz = gen->add_subcommand("nz-3sat", "non-Zeno reduction of a 3CNF formula");
  gen_nz->add_option("CNFFILE", cnf_file, "DIMACS file")->required();
  auto* gen_z = gen->add_subcommand("z-3sat", "Zeno reduction of a 3CNF formula");
  gen_z->add_option("CNFFILE", cnf_file, "DIMACS file")->required();
  auto* gen_lba = gen->add_subcommand("lba", "timed automaton simulating an LBA on a word");
  gen_lba->add_option("LBAFILE", lba_file, "LBA description")->required();
  gen_lba->add_option("WORD", word, "input word, e.g. 121 or 1,2,1")->required();
  gen_lba->add_option("--wrap", wrap, "add accepting loops")->check(CLI::IsMember({"nonzeno", "zeno"}));

  auto* cross = app.add_subcommand("crosscheck", "compare verdicts across all abstractions");
  cross->add_option("--property", property, "nonzeno or zeno")->check(CLI::IsMember({"nonzeno", "zeno"}));
  cross->add_option("--node-limit", node_limit, "maximal number of explored nodes");
  cross->add_option("FILE", file, "timed automaton")->required();

  auto* weaken = app.add_subcommand("weaken", "replace x==0 guards by x<=0");
  weaken->add_option("FILE", file, "timed automaton")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) {
      const TimedAutomaton ta = load_ta(file);
      const AbstractionKind kind = abstraction_or_throw(abstraction);
      const Verdict v = property == "zeno" ? check_zeno(ta, kind, node_limit) : check_nonzeno(ta, kind, node_limit);
      std::cout << (v.answer ? "YES" : "NO") << "\n";
      if (witness && v.witness) print_witness(*v.witness);
    } else if (*graph) {
      const TimedAutomaton ta = load_ta(file);
      const AbstractionKind kind = abstraction_or_throw(abstraction);
      AnnotatedZoneGraph g;
      if (annotate == "rgzg")
        g = build_rgzg(ta, kind, node_limit);
      else if (annotate == "szg")
        g = build_szg(ta, kind, node_limit);
      else
        g = explore(ta, kind, node_limit);
      write_dot(std::cout, g, ta);
    } else if (*gen_nz || *gen_z) {
      Formula phi;
      try {
        phi = parse_cnf(read_file(cnf_file));
      } catch (const ParseError& e) {
        throw InputError(cnf_file + ": " + e.what());
      }
      std::cout << serialize_ta(*gen_nz ? gen_nz_automaton(phi) : gen_z_automaton(phi));
    } else if (*gen_lba) {
      Lba b;
      std::vector<int> w;
      try {
        b = parse_lba(read_file(lba_file));
      } catch (const std::exception& e) {
        throw InputError(lba_file + ": " + e.what());
      }
      try {
        w = parse_word(word);
        require_valid_word(b, w);
      } catch (const std::exception& e) {
        throw InputError("word '" + word + "': " + e.what());
      }
      TimedAutomaton ta = gen_lba_automaton(b, w);
      if (!wrap.empty())
        ta = wrap_accept_loops(ta, lba_accepting_states(b, w.size()),
                               wrap == "zeno" ? LoopFlavor::Zeno : LoopFlavor::NonZeno);
      std::cout << serialize_ta(ta);
    } else if (*cross) {
      const TimedAutomaton ta = load_ta(file);
      const std::vector<AbstractionKind> kinds(abstraction::kAll.begin(), abstraction::kAll.end());
      std::cout << cross_check(ta, *parse_property(property), kinds, node_limit).render();
    } else if (*weaken) {
      std::cout << serialize_ta(weaken_zero_checks(load_ta(file)));
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedAbstractionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  }
  return kOk;
}
