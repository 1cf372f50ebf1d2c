#include "ore/report.hpp"

#include <algorithm>
#include <sstream>

#include "ore/errors.hpp"
#include "ore/io.hpp"

namespace ore {

namespace {

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string value_text(const Json& j, std::size_t max_items = 0) {
  if (j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); })) {
    if (max_items != 0 && j.size() > max_items) return "<" + std::to_string(j.size()) + " items>";
    std::string out;
    for (const auto& x : j) out += (out.empty() ? "" : ",") + scalar_text(x);
    return out;
  }
  if (j.is_primitive()) return scalar_text(j);
  return j.dump();
}

std::string witness_text(const Json& w) {
  if (!w.is_object()) return value_text(w);
  std::string out;
  for (const auto& [k, v] : w.items()) out += (out.empty() ? "" : "; ") + k + ": " + value_text(v);
  return out;
}

std::string row_text(const Json& row) {
  if (!row.is_object()) return value_text(row, 8);
  std::string out;
  for (const auto& [k, v] : row.items()) out += (out.empty() ? "" : "  ") + k + "=" + value_text(v, 8);
  return out;
}

std::vector<std::string> string_list(const Json& j, const char* name) {
  std::vector<std::string> out;
  if (!j.contains(name)) return out;
  for (const auto& x : j.at(name)) out.push_back(x.get<std::string>());
  return out;
}

void add_unmet(Report& report, const std::vector<std::string>& unmet) {
  if (!unmet.empty()) report.data["unmet"] = unmet;
}

Subset subset_from_labels(const PointSet& points, const Json& labels) {
  Subset out;
  for (const auto& l : labels) out.push_back(points.index_of(l.get<std::string>()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string axiom_of(const std::string& failure) {
  for (const char* name : {"closure", "associativity", "identity", "left cancellativity", "right cancellativity",
                           "directedness"}) {
    if (failure.rfind(name, 0) == 0) return name;
  }
  return "table";
}

}  // namespace

const Verdict* Report::find(const std::string& name) const {
  for (const auto& [n, v] : verdicts) {
    if (n == name) return &v;
  }
  return nullptr;
}

Json to_json(const Report& report) {
  Json verdicts = Json::object();
  for (const auto& [name, v] : report.verdicts) verdicts[name] = to_json(v);
  Json out{{"subject", report.subject}, {"verdicts", verdicts}};
  if (!report.conclusion.empty()) out["conclusion"] = report.conclusion;
  if (!report.notes.empty()) out["notes"] = report.notes;
  if (!report.warnings.empty()) out["warnings"] = report.warnings;
  if (!report.data.empty()) out["data"] = report.data;
  return out;
}

Report report_from_json(const Json& j) {
  Report report;
  try {
    report.subject = j.at("subject").get<std::string>();
    for (const auto& [name, v] : j.at("verdicts").items()) report.verdicts.emplace_back(name, verdict_from_json(v));
    report.conclusion = j.value("conclusion", std::string{});
    report.notes = string_list(j, "notes");
    report.warnings = string_list(j, "warnings");
    if (j.contains("data")) report.data = j.at("data");
  } catch (const Json::exception& e) {
    throw FormatError(e.what(), "report");
  }
  return report;
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  out << "subject: " << report.at("subject").get<std::string>() << '\n';
  for (const auto& [name, v] : report.at("verdicts").items()) {
    const auto outcome = v.at("outcome").get<std::string>();
    out << name << ": " << outcome;
    if (outcome == "Fails") out << " (" << witness_text(v.at("witness")) << ')';
    if (outcome == "Unknown") out << " (bound " << v.at("bound").dump() << ')';
    out << '\n';
    if (v.contains("note")) out << "  note: " << v.at("note").get<std::string>() << '\n';
    if (v.contains("caveats")) {
      for (const auto& c : v.at("caveats")) out << "  caveat: " << c.get<std::string>() << '\n';
    }
  }
  if (report.contains("conclusion")) out << "conclusion: " << report.at("conclusion").get<std::string>() << '\n';
  for (const char* key : {"notes", "warnings"}) {
    if (!report.contains(key)) continue;
    for (const auto& n : report.at(key)) {
      out << (std::string(key) == "notes" ? "note: " : "warning: ") << n.get<std::string>() << '\n';
    }
  }
  if (report.contains("data")) {
    for (const auto& [key, value] : report.at("data").items()) {
      if (value.is_array() && !value.empty() && !value.front().is_primitive()) {
        out << key << ":\n";
        for (const auto& row : value) out << "  " << row_text(row) << '\n';
      } else {
        out << key << ": " << value_text(value) << '\n';
      }
    }
  }
  return out.str();
}

Report graph_report(const Graph& graph, std::size_t bound) {
  const auto s = simplicity_report(graph, bound);
  Report report{"graph",
                {{"regularity", s.regularity},
                 {"aperiodicity", s.aperiodicity},
                 {"topological_freeness", s.topological_freeness},
                 {"minimality", s.minimality}},
                s.conclusion,
                {"aperiodicity implies topological freeness, not conversely"},
                {},
                Json::object()};
  add_unmet(report, s.unmet);
  return report;
}

Report invariant_sets_report(const Graph& graph, std::size_t bound) {
  const auto sets = invariant_sets(graph, bound);
  Json list = Json::array();
  for (const auto& v : sets) list.push_back(subset_to_json(graph.vertices(), v));
  Report report{"graph", {{"minimality", is_minimal(graph, bound)}}, {}, {}, {}, Json::object()};
  report.notes.emplace_back("sets V with X(V) = V, enumerated from the dual map and from the edge conditions");
  report.data["invariant_sets"] = list;
  return report;
}

Report pgraph_verify_report(const PGraph& pg) {
  const auto structure = verify_pgraph(pg);
  Report report{"pgraph", {}, {}, {}, {}, Json::object()};
  Json violations = Json::array();
  for (const auto& v : structure.violations) {
    Json row{{"defect", to_string(v.defect)}, {"message", v.message}};
    for (const auto& [k, val] : v.witness.items()) row[k] = val;
    violations.push_back(row);
  }
  if (structure.ok()) {
    report.verdicts.emplace_back("factorization", Verdict::holds("pgraph:factorization (square data is a consistent "
                                                                 "bijection)",
                                                                 std::to_string(pg.squares().size()) + " square(s)"));
    report.verdicts.emplace_back("semigroup_law", check_semigroup_law_box(pg, 1));
  } else {
    Json w = violations.front();
    w.erase("message");
    report.verdicts.emplace_back("factorization",
                                 Verdict::fails("pgraph:factorization (square data is a consistent bijection)", w,
                                                structure.violations.front().message));
    report.data["violations"] = violations;
  }
  const bool ok = std::all_of(report.verdicts.begin(), report.verdicts.end(),
                              [](const auto& nv) { return nv.second.is_holds(); });
  report.conclusion = ok ? "factorization data verified" : "not a P-graph: factorization data inconsistent";
  return report;
}

Report pgraph_aperiodicity_report(const PGraph& pg, const AperiodicityOptions& options) {
  return Report{"pgraph", {{"aperiodicity", check_aperiodicity(pg, options)}}, {}, {}, {}, Json::object()};
}

Report pgraph_report(const PGraph& pg, const AperiodicityOptions& options, std::size_t bound) {
  const auto s = simplicity_report_p(pg, options, bound);
  Report report{"pgraph", {{"factorization", s.factorization}}, s.conclusion, {}, {}, Json::object()};
  if (s.regularity) report.verdicts.emplace_back("regularity", *s.regularity);
  if (s.aperiodicity) report.verdicts.emplace_back("aperiodicity", *s.aperiodicity);
  if (s.minimality) report.verdicts.emplace_back("minimality", *s.minimality);
  if (pg.rank() > 1 || pg.semigroup().family() != Family::nat_add) {
    report.notes.emplace_back(
        "invariance under every degree is reduced to the generating degrees through the semigroup law, which is "
        "checked at runtime");
  }
  add_unmet(report, s.unmet);
  return report;
}

Report qn_full_report(std::int64_t bound) {
  const auto q = qn_report(bound);
  Report report{"qn",
                {{"aperiodicity", q.aperiodicity.verdict}, {"minimality", q.minimality}},
                q.conclusion,
                q.notes,
                q.warnings,
                Json::object()};
  report.data["relations"] = q.relations;
  Json table = Json::array();
  for (const auto& row : q.aperiodicity.table) {
    Json points = Json::array();
    for (const auto& z : coincidence_set(row.m, row.n)) points.push_back(to_string(z));
    table.push_back(Json{{"m", row.m}, {"n", row.n}, {"size", row.size}, {"points", points}});
  }
  report.data["coincidence_table"] = table;
  return report;
}

Report table_report(const Table& table, const std::vector<std::string>& names) {
  const auto t = verify_finite_table(table);
  Report report{"semigroup", {}, {}, {}, {}, Json::object()};
  const auto name_of = [&](std::size_t i) { return i < names.size() ? names[i] : std::to_string(i); };
  for (const char* axiom : {"closure", "associativity", "identity", "left cancellativity", "right cancellativity",
                            "directedness"}) {
    const auto it = std::find_if(t.failures.begin(), t.failures.end(),
                                 [&](const std::string& f) { return axiom_of(f) == axiom; });
    std::string key = axiom;
    std::replace(key.begin(), key.end(), ' ', '_');
    const auto rule = "semigroup:" + key;
    report.verdicts.emplace_back(key, it == t.failures.end() ? Verdict::holds(rule)
                                                             : Verdict::fails(rule, Json{{"detail", *it}}));
  }
  if (t.ok()) {
    report.conclusion = "semigroup of Ore type";
    report.data["identity"] = name_of(t.identity);
  } else {
    std::string list;
    for (const auto& [k, v] : report.verdicts) {
      if (v.is_fails()) list += (list.empty() ? "" : ", ") + k;
    }
    report.conclusion = "not of Ore type: " + list;
  }
  return report;
}

Report semigroup_report(const OreSemigroup& s, std::int64_t sample) {
  std::vector<Element> elements;
  if (s.family() == Family::nat_add) {
    const auto k = s.rank();
    const std::int64_t top = k >= 3 ? std::min<std::int64_t>(sample, 3) : sample;
    std::vector<std::int64_t> v(k, 0);
    while (true) {
      elements.push_back(Element{v});
      std::size_t i = 0;
      while (i < k && v[i] == top) v[i++] = 0;
      if (i == k) break;
      ++v[i];
    }
  } else if (s.family() == Family::nat_mult) {
    for (std::int64_t n = 1; n <= 6 * sample; ++n) elements.push_back(Element{{n}});
  } else {
    for (std::size_t g = 0; g < s.order(); ++g) elements.push_back(Element{{static_cast<std::int64_t>(g)}});
  }

  const auto fmt = [&](std::initializer_list<const Element*> xs) {
    Json out = Json::array();
    for (const auto* x : xs) out.push_back(s.format_element(*x));
    return Json{{"elements", out}};
  };
  std::optional<Json> assoc, left, right, lattice, residual;
  for (const auto& p : elements) {
    for (const auto& q : elements) {
      const auto pq = s.multiply(p, q);
      const auto j = s.join(p, q);
      if (!lattice && (!s.leq(p, j) || !s.leq(q, j))) lattice = fmt({&p, &q});
      if (!residual && s.leq(p, q) && s.multiply(p, s.residual(p, q)) != q) residual = fmt({&p, &q});
      for (const auto& r : elements) {
        if (!assoc && s.multiply(pq, r) != s.multiply(p, s.multiply(q, r))) assoc = fmt({&p, &q, &r});
        if (!left && q != r && s.multiply(p, q) == s.multiply(p, r)) left = fmt({&p, &q, &r});
        if (!right && q != r && s.multiply(q, p) == s.multiply(r, p)) right = fmt({&p, &q, &r});
        if (!lattice && s.family() != Family::finite_group && s.leq(p, r) && s.leq(q, r) && !s.leq(j, r)) {
          lattice = fmt({&p, &q, &r});
        }
      }
    }
  }
  const auto verdict = [](const std::string& rule, const std::optional<Json>& w) {
    return w ? Verdict::fails(rule, *w) : Verdict::holds(rule);
  };
  Report report{"semigroup",
                {{"associativity", verdict("semigroup:associativity", assoc)},
                 {"left_cancellativity", verdict("semigroup:left-cancellativity", left)},
                 {"right_cancellativity", verdict("semigroup:right-cancellativity", right)},
                 {"quasi_lattice", verdict("semigroup:join is the least common upper bound", lattice)},
                 {"residual", verdict("semigroup:p(p^-1 q) = q", residual)}},
                {},
                {"checked on " + std::to_string(elements.size()) + " sample element(s) of " + s.describe()},
                {},
                Json::object()};
  const bool ok = std::all_of(report.verdicts.begin(), report.verdicts.end(),
                              [](const auto& nv) { return nv.second.is_holds(); });
  report.conclusion = ok ? "semigroup of Ore type" : "axiom check failed";
  return report;
}

Report partial_action_report(const PartialAction& action, const std::vector<std::size_t>& free_elements) {
  const auto r = verify_partial_action(action);
  const auto& names = action.group().element_names();
  Report report{"multimap", {}, {}, {}, {}, Json::object()};
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back(Json{{"axiom", to_string(v.axiom)},
                              {"s", names[v.s]},
                              {"t", names[v.t]},
                              {"x", action.carrier().label(v.x)},
                              {"message", v.message}});
  }
  std::string broken;
  for (auto axiom : {Axiom::pa1, Axiom::bijection, Axiom::pa2, Axiom::pa3}) {
    const auto it = std::find_if(r.violations.begin(), r.violations.end(),
                                 [&](const PartialActionViolation& v) { return v.axiom == axiom; });
    const std::string name(to_string(axiom));
    const auto rule = "partial-action:" + name;
    if (it == r.violations.end()) {
      report.verdicts.emplace_back(name, Verdict::holds(rule));
    } else {
      report.verdicts.emplace_back(
          name, Verdict::fails(rule,
                               Json{{"s", names[it->s]}, {"t", names[it->t]}, {"x", action.carrier().label(it->x)}},
                               it->message));
      broken += (broken.empty() ? "" : ", ") + name;
    }
  }
  if (r.ok()) {
    if (!free_elements.empty()) {
      report.verdicts.emplace_back("topological_freeness", topologically_free(action, free_elements));
    }
    report.conclusion = "partial action";
  } else {
    report.conclusion = "not a partial action: " + broken;
    report.data["violations"] = violations;
  }
  return report;
}

bool witness_is_valid(const std::string& subject, const Json& input, const std::string& check, const Verdict& v) {
  if (!v.is_fails()) return true;
  const auto& w = v.witness;
  try {
    if (subject == "graph") {
      const auto graph = graph_from_json(input);
      if (check == "regularity") {
        return graph.in_degree(graph.vertices().index_of(w.at("vertex").get<std::string>())) == 0;
      }
      if (check == "aperiodicity" || check == "topological_freeness") {
        const auto& ids = w.at(check == "aperiodicity" ? "cycle" : "cycle_without_entries");
        Cycle cycle;
        for (const auto& id : ids) {
          const auto it = std::find_if(graph.edges().begin(), graph.edges().end(),
                                       [&](const Edge& e) { return e.id == id.get<std::string>(); });
          if (it == graph.edges().end()) return false;
          cycle.push_back(static_cast<std::size_t>(it - graph.edges().begin()));
        }
        return check == "aperiodicity" ? is_cycle(graph, cycle) : is_cycle_without_entries(graph, cycle);
      }
      if (check == "minimality") {
        const auto set = subset_from_labels(graph.vertices(), w.at("invariant_set"));
        return !set.empty() && set.size() < graph.vertex_count() && is_invariant_set(graph, set);
      }
      return false;
    }
    if (subject == "pgraph") {
      const auto pg = pgraph_from_json(input);
      if (check == "aperiodicity") return validate_aperiodicity_witness(pg, w);
      if (check == "regularity") {
        const auto d = pg.exponents(pg.semigroup().parse_element(w.at("degree").get<std::string>()));
        const auto g = static_cast<std::size_t>(std::find(d.begin(), d.end(), 1) - d.begin());
        if (g >= pg.rank()) return false;
        const auto vtx = pg.vertices().index_of(w.at("vertex").get<std::string>());
        return pg.generator_fiber(g).in_degree(vtx) == 0;
      }
      if (check == "minimality") {
        const auto set = subset_from_labels(pg.vertices(), w.at("invariant_set"));
        if (set.empty() || set.size() >= pg.vertices().size()) return false;
        for (std::size_t g = 0; g < pg.rank(); ++g) {
          if (dual_map(pg.generator_fiber(g)).apply(set) != set) return false;
        }
        return true;
      }
      if (check == "factorization") {
        if (w.contains("defect")) {
          for (const auto& viol : verify_pgraph(pg).violations) {
            Json expected{{"defect", to_string(viol.defect)}};
            for (const auto& [k, val] : viol.witness.items()) expected[k] = val;
            if (expected == w) return true;
          }
          return false;
        }
        const auto p = pg.exponents(pg.semigroup().parse_element(w.at("p").get<std::string>()));
        const auto q = pg.exponents(pg.semigroup().parse_element(w.at("q").get<std::string>()));
        const auto again = check_semigroup_law(pg, p, q);
        return again.is_fails() && again.witness == w;
      }
      if (check == "semigroup_law") {
        const auto p = pg.exponents(pg.semigroup().parse_element(w.at("p").get<std::string>()));
        const auto q = pg.exponents(pg.semigroup().parse_element(w.at("q").get<std::string>()));
        const auto again = check_semigroup_law(pg, p, q);
        return again.is_fails() && again.witness == w;
      }
      return false;
    }
    if (subject == "multimap") {
      const auto action = partial_action_from_json(input);
      const auto& names = action.group().element_names();
      const auto element = [&](const Json& name) {
        const auto it = std::find(names.begin(), names.end(), name.get<std::string>());
        if (it == names.end()) throw FormatError("unknown element");
        return static_cast<std::size_t>(it - names.begin());
      };
      if (check == "topological_freeness") {
        const auto t = element(w.at("element"));
        const auto x = action.carrier().index_of(w.at("point").get<std::string>());
        const auto y = action.theta(t)(x);
        return action.domain_mask(action.inverse(t))[x] && y && *y == x;
      }
      for (auto axiom : {Axiom::pa1, Axiom::bijection, Axiom::pa2, Axiom::pa3}) {
        if (check != to_string(axiom)) continue;
        const PartialActionViolation viol{axiom, element(w.at("s")), element(w.at("t")),
                                          action.carrier().index_of(w.at("x").get<std::string>()), {}};
        return violation_holds(action, viol);
      }
      return false;
    }
    if (subject == "semigroup") {
      const auto names = input.at("elements").get<std::vector<std::string>>();
      const auto t = verify_finite_table(table_from_json(input.at("table"), names));
      const auto detail = w.at("detail").get<std::string>();
      return std::find(t.failures.begin(), t.failures.end(), detail) != t.failures.end();
    }
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

}  // namespace ore
