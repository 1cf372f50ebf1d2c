#pragma once

#include <string>
#include <vector>

#include "ore/verdict.hpp"

namespace ore {

struct FixtureResult {
  std::string name;
  std::string kind;
  bool passed = true;
  std::vector<std::string> mismatches;
  Json report;
};

struct CorpusSummary {
  std::vector<FixtureResult> results;
  std::vector<std::string> warnings;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

/// Runs a corpus file: {"fixtures": [{"name", "kind", "file", "expect": {...},
/// "options": {...}}]}. Kinds: graph, graph-invariant-sets, pgraph,
/// pgraph-verify, pgraph-aperiodicity, partial-action, semigroup-table, qn.
/// `expect` maps verdict names to outcomes, plus optional "conclusion" and
/// "invariant_sets" (a count). Files resolve relative to the corpus file.
/// Every Fails witness is re-validated. Results keep declaration order
/// whatever `jobs` is. Throws FormatError for a malformed corpus or a
/// missing fixture file.
CorpusSummary run_corpus(const std::string& path, unsigned jobs = 1);

Json to_json(const CorpusSummary& summary);

}  // namespace ore
