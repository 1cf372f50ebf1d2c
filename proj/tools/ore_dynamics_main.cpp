#include <cctype>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ore/corpus.hpp"
#include "ore/errors.hpp"
#include "ore/io.hpp"
#include "ore/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitBound = 3;
constexpr int kExitUsage = 64;

const std::map<std::string, std::set<std::string>> kCommands{
    {"semigroup", {"check", "frac"}},
    {"map", {"compose", "verify-pa"}},
    {"graph", {"check", "dual", "invariant-sets"}},
    {"pgraph", {"verify", "aperiodicity", "report"}},
    {"qn", {"report"}},
    {"corpus", {"run"}},
};

std::size_t enumeration_bound() {
  const char* env = std::getenv("ORE_DYNAMICS_BOUND");
  if (env == nullptr || *env == '\0') return ore::default_enumeration_bound;
  try {
    std::size_t used = 0;
    const auto value = std::stoll(env, &used);
    if (used == std::string(env).size() && value >= 0) return static_cast<std::size_t>(value);
  } catch (const std::logic_error&) {
  }
  throw ore::FormatError("expected a nonnegative integer", "ORE_DYNAMICS_BOUND");
}

ore::OreSemigroup load_semigroup(const std::string& spec) {
  const std::string prefix = "group:";
  if (spec.rfind(prefix, 0) == 0) return ore::group_from_json(ore::read_json_file(spec.substr(prefix.size())));
  return ore::parse_semigroup_spec(spec);
}

// expr := term ('*' term)* ; term := '[' p ',' q ']' ('^-1')?
ore::Fraction parse_fraction_expression(const ore::OreSemigroup& s, const std::string& text) {
  std::size_t i = 0;
  const auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  const auto term = [&] {
    skip();
    if (i >= text.size() || text[i] != '[') throw ore::FormatError("expected '[' at offset " + std::to_string(i), "expression");
    ++i;
    std::vector<std::string> parts(1);
    int depth = 0;
    while (i < text.size() && !(text[i] == ']' && depth == 0)) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (text[i] == ',' && depth == 0) {
        parts.emplace_back();
      } else {
        parts.back() += text[i];
      }
      ++i;
    }
    if (i >= text.size()) throw ore::FormatError("unterminated fraction literal", "expression");
    ++i;
    if (parts.size() != 2) throw ore::FormatError("a fraction literal is [p,q]", "expression");
    ore::Fraction f = ore::make_fraction_unreduced(s, s.parse_element(parts[0]), s.parse_element(parts[1]));
    skip();
    if (text.compare(i, 3, "^-1") == 0) {
      i += 3;
      f = ore::frac_inv(s, f);
    }
    return f;
  };
  auto value = term();
  skip();
  while (i < text.size()) {
    if (text[i] != '*') throw ore::FormatError("expected '*' at offset " + std::to_string(i), "expression");
    ++i;
    value = ore::frac_mul(s, value, term());
    skip();
  }
  return value;
}

std::string multimap_text(const ore::MultiMap& f) {
  std::string out;
  for (std::size_t x = 0; x < f.domain_set().size(); ++x) {
    std::string targets;
    for (auto y : f.at(x)) targets += (targets.empty() ? "" : ",") + f.codomain_set().label(y);
    out += f.domain_set().label(x) + " -> " + (targets.empty() ? "{}" : targets) + "\n";
  }
  return out;
}

void emit_report(const ore::Report& report, bool json) {
  const auto j = ore::to_json(report);
  if (json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << ore::render_text(j);
  }
}

ore::Exponents parse_box(const std::string& text) {
  ore::Exponents box;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      box.push_back(std::stoll(item, &used));
      if (used != item.size() || box.back() < 0) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ore::FormatError("expected comma-separated nonnegative integers", "--box");
    }
  }
  return box;
}

int precheck(int argc, char** argv) {
  if (argc < 2 || argv[1][0] == '-') return kExitOk;
  const auto it = kCommands.find(argv[1]);
  if (it == kCommands.end()) {
    std::cerr << "unknown subcommand '" << argv[1] << "'\n";
    return kExitUsage;
  }
  if (argc >= 3 && argv[2][0] != '-' && !it->second.count(argv[2])) {
    std::cerr << "unknown subcommand '" << argv[1] << ' ' << argv[2] << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  if (const int status = precheck(argc, argv); status != kExitOk) return status;

  CLI::App app{"Decision procedures for dynamics of product systems over Ore semigroups"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print JSON instead of text");

  std::string file;
  std::string file2;
  std::string spec;
  std::string expression;
  std::string box_text;
  std::string free_text;
  std::size_t fmax = 3;
  bool force_search = false;
  std::int64_t qn_bound = 12;
  unsigned jobs = 1;

  const auto add_group = [&](const std::string& name, const std::string& help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->require_subcommand(1);
    cmd->fallthrough();
    return cmd;
  };
  const auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    auto* cmd = parent->add_subcommand(name, help);
    cmd->fallthrough();
    return cmd;
  };

  auto* semigroup = add_group("semigroup", "Ore semigroups and their groups of fractions");
  auto* semigroup_check = leaf(semigroup, "check", "Check the semigroup axioms");
  semigroup_check->add_option("spec", spec, "natadd:k, natmult, group:<file>, or a table file")->required();
  auto* semigroup_frac = leaf(semigroup, "frac", "Evaluate a fraction expression such as [2,3]*[5,7]^-1");
  semigroup_frac->add_option("spec", spec, "natadd:k, natmult or group:<file>")->required();
  semigroup_frac->add_option("expression", expression, "Fraction expression")->required();

  auto* map = add_group("map", "Multivalued maps and partial actions");
  auto* map_compose = leaf(map, "compose", "Print g o f");
  map_compose->add_option("g", file, "Outer map (JSON)")->required();
  map_compose->add_option("f", file2, "Inner map (JSON)")->required();
  auto* map_pa = leaf(map, "verify-pa", "Verify the partial action axioms");
  map_pa->add_option("file", file, "Partial action (JSON)")->required();
  map_pa->add_option("--free", free_text, "Comma-separated elements for the freeness test (default: all but e)");

  auto* graph = add_group("graph", "Finite directed graphs");
  auto* graph_check = leaf(graph, "check", "Regularity, aperiodicity, freeness, minimality");
  auto* graph_dual = leaf(graph, "dual", "Print the dual map v -> r(s^-1(v))");
  auto* graph_inv = leaf(graph, "invariant-sets", "List all V with X(V) = V");
  for (auto* cmd : {graph_check, graph_dual, graph_inv}) cmd->add_option("file", file, "Graph (JSON)")->required();

  auto* pgraph = add_group("pgraph", "Finite P-graphs");
  auto* pgraph_verify = leaf(pgraph, "verify", "Verify the factorization data");
  auto* pgraph_aper = leaf(pgraph, "aperiodicity", "Bounded aperiodicity search");
  auto* pgraph_report = leaf(pgraph, "report", "Simplicity report");
  for (auto* cmd : {pgraph_verify, pgraph_aper, pgraph_report}) {
    cmd->add_option("file", file, "P-graph (JSON)")->required();
  }
  for (auto* cmd : {pgraph_aper, pgraph_report}) {
    cmd->add_option("--box", box_text, "Per-generator degree bound, e.g. 4,4");
    cmd->add_option("--fmax", fmax, "Largest |F| searched")->check(CLI::PositiveNumber);
    cmd->add_flag("--force-search", force_search, "Run the bounded search even for rank one");
  }

  auto* qn = add_group("qn", "Roots-of-unity model of the Q_N dynamics");
  auto* qn_report = leaf(qn, "report", "Aperiodicity and minimality certificates");
  qn_report->add_option("--bound", qn_bound, "Largest m, n tabulated");

  auto* corpus = add_group("corpus", "Fixture suites");
  auto* corpus_run = leaf(corpus, "run", "Run a corpus and compare verdicts");
  corpus_run->add_option("file", file, "Corpus (JSON)")->required();
  corpus_run->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitMalformed;
  }

  try {
    const auto options = [&] {
      ore::AperiodicityOptions o;
      if (!box_text.empty()) o.box = parse_box(box_text);
      o.f_max = fmax;
      o.force_search = force_search;
      return o;
    };

    if (semigroup_check->parsed()) {
      if (spec.rfind("natadd:", 0) == 0 || spec == "natmult" || spec.rfind("group:", 0) == 0) {
        emit_report(ore::semigroup_report(load_semigroup(spec)), json);
      } else {
        const auto doc = ore::read_json_file(spec);
        if (!doc.contains("elements")) throw ore::FormatError("missing field", "elements");
        if (!doc.contains("table")) throw ore::FormatError("missing field", "table");
        const auto names = doc.at("elements").get<std::vector<std::string>>();
        emit_report(ore::table_report(ore::table_from_json(doc.at("table"), names), names), json);
      }
    } else if (semigroup_frac->parsed()) {
      const auto s = load_semigroup(spec);
      const auto parsed = parse_fraction_expression(s, expression);
      const auto value = ore::make_fraction(s, parsed.numerator(), parsed.denominator());
      const auto nf = ore::format_normal_form(s, value.normal_form());
      if (json) {
        std::cout << ore::Json{{"semigroup", s.describe()},
                               {"expression", expression},
                               {"fraction", {s.format_element(value.numerator()), s.format_element(value.denominator())}},
                               {"normal_form", nf}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << nf << '\n';
      }
    } else if (map_compose->parsed()) {
      const auto g = ore::multimap_from_json(ore::read_json_file(file));
      const auto f = ore::multimap_from_json(ore::read_json_file(file2));
      const auto h = ore::compose(g, f);
      std::cout << (json ? ore::multimap_to_json(h).dump(2) + "\n" : multimap_text(h));
    } else if (map_pa->parsed()) {
      const auto action = ore::partial_action_from_json(ore::read_json_file(file));
      std::vector<std::size_t> free_elements;
      if (free_text.empty()) {
        for (std::size_t g = 0; g < action.group().order(); ++g) {
          if (g != action.identity()) free_elements.push_back(g);
        }
      } else {
        std::stringstream in(free_text);
        std::string name;
        while (std::getline(in, name, ',')) {
          free_elements.push_back(static_cast<std::size_t>(action.group().parse_element(name).value[0]));
        }
      }
      emit_report(ore::partial_action_report(action, free_elements), json);
    } else if (graph_check->parsed()) {
      emit_report(ore::graph_report(ore::graph_from_json(ore::read_json_file(file)), enumeration_bound()), json);
    } else if (graph_dual->parsed()) {
      const auto d = ore::dual_map(ore::graph_from_json(ore::read_json_file(file)));
      std::cout << (json ? ore::multimap_to_json(d).dump(2) + "\n" : multimap_text(d));
    } else if (graph_inv->parsed()) {
      emit_report(ore::invariant_sets_report(ore::graph_from_json(ore::read_json_file(file)), enumeration_bound()),
                  json);
    } else if (pgraph_verify->parsed()) {
      emit_report(ore::pgraph_verify_report(ore::pgraph_from_json(ore::read_json_file(file))), json);
    } else if (pgraph_aper->parsed()) {
      emit_report(ore::pgraph_aperiodicity_report(ore::pgraph_from_json(ore::read_json_file(file)), options()), json);
    } else if (pgraph_report->parsed()) {
      emit_report(ore::pgraph_report(ore::pgraph_from_json(ore::read_json_file(file)), options(), enumeration_bound()),
                  json);
    } else if (qn_report->parsed()) {
      emit_report(ore::qn_full_report(qn_bound), json);
    } else if (corpus_run->parsed()) {
      const auto summary = ore::run_corpus(file, jobs);
      if (json) {
        std::cout << ore::to_json(summary).dump(2) << '\n';
      } else {
        for (const auto& r : summary.results) {
          std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << '\n';
          for (const auto& m : r.mismatches) std::cout << "  " << m << '\n';
        }
        for (const auto& w : summary.warnings) std::cout << "warning: " << w << '\n';
        std::cout << summary.results.size() << " fixture(s), " << summary.failures() << " failure(s)\n";
      }
      return summary.ok() ? kExitOk : kExitMismatch;
    }
    return kExitOk;
  } catch (const ore::BoundError& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return kExitBound;
  } catch (const ore::FormatError& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const ore::DomainError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
}
