#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ore/circle.hpp"
#include "ore/graph.hpp"
#include "ore/partial_action.hpp"
#include "ore/pgraph.hpp"
#include "ore/semigroup.hpp"
#include "ore/verdict.hpp"

namespace ore {

/// Named verdicts about one subject plus free-form evidence. JSON is the
/// canonical form; text is rendered from the JSON.
struct Report {
  /// graph | pgraph | qn | semigroup | multimap
  std::string subject;
  std::vector<std::pair<std::string, Verdict>> verdicts;
  std::string conclusion;
  std::vector<std::string> notes;
  std::vector<std::string> warnings;
  /// Tables and lists that back the verdicts.
  Json data = Json::object();

  const Verdict* find(const std::string& name) const;
  bool operator==(const Report&) const = default;
};

Json to_json(const Report& report);
Report report_from_json(const Json& j);

/// One line per verdict, "name: Outcome (witness)", then conclusion, notes,
/// warnings and data tables.
std::string render_text(const Json& report);

Report graph_report(const Graph& graph, std::size_t bound = default_enumeration_bound);
Report invariant_sets_report(const Graph& graph, std::size_t bound = default_enumeration_bound);
Report pgraph_verify_report(const PGraph& pgraph);
Report pgraph_aperiodicity_report(const PGraph& pgraph, const AperiodicityOptions& options);
Report pgraph_report(const PGraph& pgraph, const AperiodicityOptions& options,
                     std::size_t bound = default_enumeration_bound);
Report qn_full_report(std::int64_t bound);
/// Brute-force axioms of a finite table.
Report table_report(const Table& table, const std::vector<std::string>& names);
/// Axioms of a built-in family, checked on all elements with entries up to `sample`.
Report semigroup_report(const OreSemigroup& semigroup, std::int64_t sample = 6);
Report partial_action_report(const PartialAction& action, const std::vector<std::size_t>& free_elements);

/// Re-checks a failing verdict's witness against the subject it was computed
/// from. `input` is the subject's JSON document; `check` the verdict name.
/// Returns true for verdicts that are not Fails.
bool witness_is_valid(const std::string& subject, const Json& input, const std::string& check, const Verdict& v);

}  // namespace ore
