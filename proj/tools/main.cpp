#include "substdyn/corpus.hpp"
#include "substdyn/dot.hpp"
#include "substdyn/errors.hpp"
#include "substdyn/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace substdyn;

namespace {

constexpr int kExitError = 1;
constexpr int kExitEmpty = 2;
constexpr int kExitWild = 3;

Substitution load(const std::string& input) {
  if (input.rfind("corpus:", 0) == 0) {
    auto e = find_corpus(input.substr(7));
    if (!e) fail("unknown-corpus-entry", "no corpus entry named " + input.substr(7));
    return e->substitution();
  }
  std::stringstream buf;
  if (input == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(input);
    if (!in) fail("io-error", "cannot read " + input);
    buf << in.rdbuf();
  }
  return parse_substitution(buf.str());
}

std::optional<std::size_t> parse_radius(const std::string& text) {
  if (text == "auto") return std::nullopt;
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  fail("usage", "radius must be 'auto' or a non-negative integer");
}

std::size_t default_max_edges() {
  if (const char* env = std::getenv("SUBSTDYN_MAX_EDGES")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      fail("usage", "SUBSTDYN_MAX_EDGES is not a number");
    }
  }
  return 5000;
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail("io-error", "cannot write " + path);
  out << text;
}

// "b=a:4,5;c=d" -> injection b->a with positions {4,5}, c->d chosen greedily.
void parse_inject(const std::string& spec, std::map<std::string, std::string>& injection,
                  std::map<std::string, std::vector<std::size_t>>& positions) {
  std::stringstream entries(spec);
  std::string entry;
  while (std::getline(entries, entry, ';')) {
    if (entry.empty()) continue;
    auto eq = entry.find('=');
    if (eq == std::string::npos) fail("usage", "inject entry '" + entry + "' needs '='");
    std::string b = entry.substr(0, eq);
    std::string rest = entry.substr(eq + 1);
    auto colon = rest.find(':');
    injection[b] = rest.substr(0, colon);
    if (colon == std::string::npos) continue;
    std::stringstream list(rest.substr(colon + 1));
    std::string num;
    auto& pos = positions[b];
    while (std::getline(list, num, ',')) {
      try {
        pos.push_back(std::stoul(num));
      } catch (const std::exception&) {
        fail("usage", "bad position '" + num + "' in inject entry");
      }
    }
  }
}

TamenessReport require_tame(const Substitution& s) {
  TamenessReport tr = decide_tameness(s);
  if (tr.verdict == Verdict::empty_subshift) throw Error("empty-subshift", "the subshift is empty");
  if (tr.verdict == Verdict::wild) throw Error("wild-input", "the substitution is wild");
  return tr;
}

int exit_code_for(const Error& e) {
  if (e.kind() == "empty-subshift") return kExitEmpty;
  if (e.kind() == "wild-input") return kExitWild;
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Substitution subshifts, tiling-space cohomology and closed invariant sets"};
  app.require_subcommand(1);

  std::string input, input_b, output;
  std::string radius_text = "auto";
  std::size_t max_length = 8, verify_depth = 6;
  std::size_t max_edges = 0;
  std::string emit = "both", dot_path, inject;
  bool text = false;
  std::vector<std::string> names;

  auto add_radius = [&](CLI::App* c) {
    c->add_option("--radius", radius_text, "Collaring radius: auto (N_sigma) or an integer");
  };
  auto add_edges = [&](CLI::App* c) {
    c->add_option("--max-edges", max_edges, "Abort when the collared complex exceeds this size");
  };

  auto* analyze = app.add_subcommand("analyze", "Run the full pipeline");
  analyze->add_option("input", input, "Rule file, '-' or corpus:NAME")->required();
  add_radius(analyze);
  add_edges(analyze);
  analyze->add_option("--max-length", max_length, "Longest word in the language summary");
  analyze->add_option("--verify-depth", verify_depth, "Depth of the conjugacy check");
  analyze->add_option("-o,--output", output, "Write the report here instead of stdout");

  auto* classify = app.add_subcommand("classify", "Tame, wild or empty");
  classify->add_option("input", input)->required();

  auto* primitivize_cmd = app.add_subcommand("primitivize", "Derived and conjugate primitive substitutions");
  primitivize_cmd->add_option("input", input)->required();
  primitivize_cmd->add_option("--emit", emit, "psi, theta or both")
      ->check(CLI::IsMember({"psi", "theta", "both"}));
  primitivize_cmd->add_option("--verify-depth", verify_depth);
  primitivize_cmd->add_flag("--text", text, "Print rules instead of JSON");

  auto* complex_cmd = app.add_subcommand("complex", "Collared Anderson-Putnam complex");
  complex_cmd->add_option("input", input)->required();
  add_radius(complex_cmd);
  add_edges(complex_cmd);
  complex_cmd->add_option("--dot", dot_path, "Write the complex as DOT ('-' for stdout)");

  auto* cohomology = app.add_subcommand("cohomology", "First and zeroth cohomology");
  cohomology->add_option("input", input)->required();
  add_radius(cohomology);
  add_edges(cohomology);

  auto* cis = app.add_subcommand("cis", "Lattice of closed invariant subsets");
  cis->add_option("input", input)->required();
  add_edges(cis);
  cis->add_option("--dot", dot_path, "Write the Hasse diagram as DOT ('-' for stdout)");

  auto* extend = app.add_subcommand("extend", "Extend a primitive substitution by another");
  extend->add_option("base", input)->required();
  extend->add_option("psi", input_b)->required();
  extend->add_option("--inject", inject, "b=a[:p1,p2,...] entries separated by ';'")->required();
  extend->add_flag("--text", text, "Print rules instead of JSON");

  auto* compare = app.add_subcommand("compare", "Compare two lattices of closed invariant subsets");
  compare->add_option("first", input)->required();
  compare->add_option("second", input_b)->required();
  add_edges(compare);

  auto* corpus_cmd = app.add_subcommand("corpus", "Built-in example substitutions");
  corpus_cmd->require_subcommand(1);
  auto* corpus_list = corpus_cmd->add_subcommand("list", "List entries");
  auto* corpus_show = corpus_cmd->add_subcommand("show", "Print the rules of an entry");
  corpus_show->add_option("name", input)->required();
  auto* corpus_run = corpus_cmd->add_subcommand("run", "Analyze entries (all when none named)");
  corpus_run->add_option("names", names);
  add_edges(corpus_run);

  CLI11_PARSE(app, argc, argv);

  try {
    if (max_edges == 0) max_edges = default_max_edges();
    if (*analyze) {
      AnalysisOptions opt;
      opt.radius = parse_radius(radius_text);
      opt.max_length = max_length;
      opt.max_edges = max_edges;
      opt.verify_depth = verify_depth;
      Analysis a = substdyn::analyze(load(input), opt);
      if (output.empty()) std::cout << dump(a.report);
      else write_file(output, dump(a.report));
      return a.exit_code;
    }
    if (*classify) {
      Substitution s = load(input);
      TamenessReport tr = decide_tameness(s);
      std::cout << dump(to_json(tr, s.alphabet()));
      if (tr.verdict == Verdict::empty_subshift) return kExitEmpty;
      return tr.verdict == Verdict::wild ? kExitWild : 0;
    }
    if (*primitivize_cmd) {
      Substitution s = load(input);
      require_tame(s);
      Primitivization p = primitivize(s, verify_depth);
      if (text) {
        if (emit != "theta" && p.derived) std::cout << format_substitution(p.derived->psi);
        if (emit == "both" && p.derived) std::cout << "\n";
        if (emit != "psi") std::cout << format_substitution(p.conjugate.theta);
      } else {
        Json j = to_json(p, s.alphabet());
        if (emit == "psi") j.erase("theta");
        if (emit == "theta") j.erase("psi");
        std::cout << dump(j);
      }
      return p.report && !p.report->ok ? kExitError : 0;
    }
    if (*complex_cmd || *cohomology) {
      Substitution s = load(input);
      require_tame(s);
      InverseLimitPresentation p = inverse_limit_presentation(s, parse_radius(radius_text), max_edges);
      if (*complex_cmd) {
        if (!dot_path.empty()) write_file(dot_path, complex_to_dot(p));
        if (dot_path != "-") std::cout << dump(to_json(p));
      } else {
        H1Presentation h1 = h1_presentation(p.complex, p.map);
        DirectLimit h0 = direct_limit(component_matrix(p.complex.graph, p.map.vertex_map));
        std::cout << dump(Json{{"h1", to_json(h1)}, {"h0", to_json(h0)}});
      }
      return 0;
    }
    if (*cis) {
      Substitution s = load(input);
      require_tame(s);
      CisLattice l = enumerate_cis(s, max_edges);
      if (!dot_path.empty()) write_file(dot_path, lattice_to_dot(l));
      if (dot_path != "-") std::cout << dump(to_json(l));
      return 0;
    }
    if (*extend) {
      std::map<std::string, std::string> injection;
      std::map<std::string, std::vector<std::size_t>> positions;
      parse_inject(inject, injection, positions);
      Extension e = extend_substitution(load(input), load(input_b), injection, positions);
      if (text) std::cout << format_substitution(e.result);
      else std::cout << dump(to_json(e));
      return 0;
    }
    if (*compare) {
      Substitution a = load(input), b = load(input_b);
      require_tame(a);
      require_tame(b);
      DiagramComparison c = diagram_compare(enumerate_cis(a, max_edges), enumerate_cis(b, max_edges));
      std::cout << dump(to_json(c));
      return 0;
    }
    if (*corpus_list) {
      for (const auto& e : corpus()) std::cout << e.name << "\t" << e.description << "\n";
      return 0;
    }
    if (*corpus_show) {
      auto e = find_corpus(input);
      if (!e) fail("unknown-corpus-entry", "no corpus entry named " + input);
      std::cout << e->text;
      return 0;
    }
    if (*corpus_run) {
      if (names.empty())
        for (const auto& e : corpus()) names.push_back(e.name);
      Json all = Json::object();
      int worst = 0;
      for (const auto& name : names) {
        AnalysisOptions opt;
        opt.max_edges = max_edges;
        Analysis a = substdyn::analyze(load("corpus:" + name), opt);
        all[name] = {{"exit_code", a.exit_code}, {"report", a.report}};
        if (a.exit_code == kExitError) worst = kExitError;
      }
      std::cout << dump(all);
      return worst;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse-error: " << e.what() << "\n";
    return kExitError;
  } catch (const Error& e) {
    std::cerr << e.kind() << ": " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 0;
}
