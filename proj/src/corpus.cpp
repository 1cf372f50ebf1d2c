#include "ore/corpus.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <thread>

#include "ore/errors.hpp"
#include "ore/io.hpp"
#include "ore/report.hpp"

namespace ore {

namespace {

struct Fixture {
  std::string name;
  std::string kind;
  std::string file;
  Json expect;
  Json options;
};

std::string subject_of(const std::string& kind) {
  if (kind.rfind("graph", 0) == 0) return "graph";
  if (kind.rfind("pgraph", 0) == 0) return "pgraph";
  if (kind == "partial-action") return "multimap";
  if (kind == "semigroup-table") return "semigroup";
  return "qn";
}

AperiodicityOptions aperiodicity_options(const Json& options) {
  AperiodicityOptions out;
  if (options.contains("box")) out.box = options.at("box").get<Exponents>();
  if (options.contains("fmax")) out.f_max = options.at("fmax").get<std::size_t>();
  return out;
}

Report run_fixture(const Fixture& f, const Json& input) {
  if (f.kind == "graph") return graph_report(graph_from_json(input));
  if (f.kind == "graph-invariant-sets") return invariant_sets_report(graph_from_json(input));
  if (f.kind == "pgraph") return pgraph_report(pgraph_from_json(input), aperiodicity_options(f.options));
  if (f.kind == "pgraph-verify") return pgraph_verify_report(pgraph_from_json(input));
  if (f.kind == "pgraph-aperiodicity") {
    return pgraph_aperiodicity_report(pgraph_from_json(input), aperiodicity_options(f.options));
  }
  if (f.kind == "partial-action") {
    const auto action = partial_action_from_json(input);
    std::vector<std::size_t> all;
    for (std::size_t g = 0; g < action.group().order(); ++g) {
      if (g != action.identity()) all.push_back(g);
    }
    return partial_action_report(action, all);
  }
  if (f.kind == "semigroup-table") {
    const auto names = input.at("elements").get<std::vector<std::string>>();
    return table_report(table_from_json(input.at("table"), names), names);
  }
  if (f.kind == "qn") return qn_full_report(input.value("bound", std::int64_t{12}));
  throw FormatError("unknown fixture kind '" + f.kind + "'", "kind");
}

FixtureResult evaluate(const Fixture& f, const Json& input) {
  FixtureResult result{f.name, f.kind, true, {}, Json()};
  try {
    const auto report = run_fixture(f, input);
    result.report = to_json(report);
    for (const auto& [key, expected] : f.expect.items()) {
      if (key == "conclusion") {
        if (report.conclusion != expected.get<std::string>()) {
          result.mismatches.push_back("conclusion: expected '" + expected.get<std::string>() + "', got '" +
                                      report.conclusion + "'");
        }
        continue;
      }
      if (key == "invariant_sets") {
        const auto got = report.data.contains("invariant_sets") ? report.data["invariant_sets"].size() : 0;
        if (got != expected.get<std::size_t>()) {
          result.mismatches.push_back("invariant_sets: expected " + expected.dump() + ", got " +
                                      std::to_string(got));
        }
        continue;
      }
      const auto* v = report.find(key);
      if (!v) {
        result.mismatches.push_back(key + ": no such verdict");
      } else if (std::string(to_string(v->outcome)) != expected.get<std::string>()) {
        result.mismatches.push_back(key + ": expected " + expected.get<std::string>() + ", got " +
                                    std::string(to_string(v->outcome)));
      }
    }
    for (const auto& [name, v] : report.verdicts) {
      if (!witness_is_valid(subject_of(f.kind), input, name, v)) {
        result.mismatches.push_back(name + ": witness does not re-validate");
      }
    }
  } catch (const std::exception& e) {
    result.mismatches.push_back(std::string("error: ") + e.what());
  }
  result.passed = result.mismatches.empty();
  return result;
}

}  // namespace

std::size_t CorpusSummary::failures() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.passed ? 0 : 1;
  return n;
}

CorpusSummary run_corpus(const std::string& path, unsigned jobs) {
  const auto doc = read_json_file(path);
  const auto base = std::filesystem::path(path).parent_path();
  if (!doc.is_object() || !doc.contains("fixtures") || !doc["fixtures"].is_array()) {
    throw FormatError("expected an array of fixtures", "fixtures");
  }
  std::vector<Fixture> fixtures;
  std::vector<Json> inputs;
  for (const auto& f : doc["fixtures"]) {
    Fixture fx;
    try {
      fx.name = f.at("name").get<std::string>();
      fx.kind = f.at("kind").get<std::string>();
      fx.file = f.value("file", std::string{});
      fx.expect = f.value("expect", Json::object());
      fx.options = f.value("options", Json::object());
    } catch (const Json::exception& e) {
      throw FormatError(e.what(), "fixtures");
    }
    if (fx.file.empty()) {
      if (fx.kind != "qn") throw FormatError("fixture '" + fx.name + "' names no file", "file");
      inputs.push_back(fx.options);
    } else {
      const auto file = (base / fx.file).string();
      if (!std::filesystem::exists(file)) throw FormatError("missing fixture file '" + file + "'", "file");
      inputs.push_back(read_json_file(file));
    }
    fixtures.push_back(std::move(fx));
  }

  CorpusSummary summary;
  summary.results.resize(fixtures.size());
  if (fixtures.empty()) summary.warnings.emplace_back("corpus declares no fixtures");

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < fixtures.size(); i = next++) summary.results[i] = evaluate(fixtures[i], inputs[i]);
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(fixtures.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return summary;
}

Json to_json(const CorpusSummary& summary) {
  Json results = Json::array();
  for (const auto& r : summary.results) {
    Json row{{"name", r.name}, {"kind", r.kind}, {"passed", r.passed}};
    if (!r.mismatches.empty()) row["mismatches"] = r.mismatches;
    results.push_back(row);
  }
  Json out{{"fixtures", summary.results.size()},
           {"failures", summary.failures()},
           {"results", results}};
  if (!summary.warnings.empty()) out["warnings"] = summary.warnings;
  return out;
}

}  // namespace ore
