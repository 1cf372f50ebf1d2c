#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace ore {

using Json = nlohmann::ordered_json;

enum class Outcome { holds, fails, unknown };

std::string_view to_string(Outcome outcome);
Outcome outcome_from_string(std::string_view text);

/// Three-valued result of a decision procedure.
///
/// A failing verdict always carries a witness; an unknown verdict always
/// carries the search bound that was exhausted. `rule` names the criterion
/// that produced the verdict.
struct Verdict {
  Outcome outcome = Outcome::holds;
  std::string rule;
  Json witness;
  std::optional<std::int64_t> bound;
  std::string note;
  std::vector<std::string> caveats;

  static Verdict holds(std::string rule, std::string note = {});
  static Verdict fails(std::string rule, Json witness, std::string note = {});
  static Verdict unknown(std::string rule, std::int64_t bound, std::string note = {});

  bool is_holds() const noexcept { return outcome == Outcome::holds; }
  bool is_fails() const noexcept { return outcome == Outcome::fails; }
  bool is_unknown() const noexcept { return outcome == Outcome::unknown; }

  bool operator==(const Verdict&) const = default;
};

Json to_json(const Verdict& verdict);
Verdict verdict_from_json(const Json& j);

}  // namespace ore
