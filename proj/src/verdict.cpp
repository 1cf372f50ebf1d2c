#include "ore/verdict.hpp"

#include <stdexcept>

#include "ore/errors.hpp"
#include "ore/rational.hpp"

namespace ore {

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::holds:
      return "Holds";
    case Outcome::fails:
      return "Fails";
    case Outcome::unknown:
      return "Unknown";
  }
  return "Unknown";
}

Outcome outcome_from_string(std::string_view text) {
  if (text == "Holds") return Outcome::holds;
  if (text == "Fails") return Outcome::fails;
  if (text == "Unknown") return Outcome::unknown;
  throw FormatError("unrecognised outcome '" + std::string(text) + "'", "outcome");
}

Verdict Verdict::holds(std::string rule, std::string note) {
  Verdict v;
  v.outcome = Outcome::holds;
  v.rule = std::move(rule);
  v.note = std::move(note);
  return v;
}

Verdict Verdict::fails(std::string rule, Json witness, std::string note) {
  if (witness.is_null()) throw std::invalid_argument("a failing verdict needs a witness");
  Verdict v;
  v.outcome = Outcome::fails;
  v.rule = std::move(rule);
  v.witness = std::move(witness);
  v.note = std::move(note);
  return v;
}

Verdict Verdict::unknown(std::string rule, std::int64_t bound, std::string note) {
  Verdict v;
  v.outcome = Outcome::unknown;
  v.rule = std::move(rule);
  v.bound = bound;
  v.note = std::move(note);
  return v;
}

Json to_json(const Verdict& verdict) {
  Json j;
  j["outcome"] = std::string(to_string(verdict.outcome));
  j["rule"] = verdict.rule;
  if (!verdict.witness.is_null()) j["witness"] = verdict.witness;
  if (verdict.bound) j["bound"] = *verdict.bound;
  if (!verdict.note.empty()) j["note"] = verdict.note;
  if (!verdict.caveats.empty()) j["caveats"] = verdict.caveats;
  return j;
}

Verdict verdict_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("verdict must be an object", "verdict");
  if (!j.contains("outcome") || !j["outcome"].is_string())
    throw FormatError("missing outcome", "outcome");
  Verdict v;
  v.outcome = outcome_from_string(j["outcome"].get<std::string>());
  v.rule = j.value("rule", std::string{});
  if (j.contains("witness")) v.witness = j["witness"];
  if (j.contains("bound")) v.bound = j["bound"].get<std::int64_t>();
  v.note = j.value("note", std::string{});
  if (j.contains("caveats")) v.caveats = j["caveats"].get<std::vector<std::string>>();
  if (v.is_fails() && v.witness.is_null()) throw FormatError("Fails verdict without witness", "witness");
  if (v.is_unknown() && !v.bound) throw FormatError("Unknown verdict without bound", "bound");
  return v;
}

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    const auto den = std::stoll(text.substr(slash + 1));
    if (den == 0) throw FormatError("zero denominator in '" + text + "'");
    return Rational(std::stoll(text.substr(0, slash)), den);
  } catch (const std::logic_error&) {
    throw FormatError("not a rational: '" + text + "'");
  }
}

}  // namespace ore
