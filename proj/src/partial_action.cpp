#include "ore/partial_action.hpp"

#include <algorithm>

#include "ore/errors.hpp"

namespace ore {

PartialBijection::PartialBijection(MultiMap map) : map_(std::move(map)) {
  lookup_.assign(map_.domain_set().size(), std::nullopt);
  std::vector<char> hit(map_.codomain_set().size(), 0);
  for (const auto& [x, y] : map_.pairs()) {
    if (lookup_[x]) throw DomainError("partial bijection sends point " + map_.domain_set().label(x) + " twice");
    if (hit[y]) throw DomainError("partial bijection hits point " + map_.codomain_set().label(y) + " twice");
    lookup_[x] = y;
    hit[y] = 1;
  }
}

PartialBijection PartialBijection::identity(PointSetPtr carrier) {
  return PartialBijection(MultiMap::identity(std::move(carrier)));
}

std::optional<std::size_t> PartialBijection::operator()(std::size_t x) const {
  if (x >= lookup_.size()) return std::nullopt;
  return lookup_[x];
}

PartialAction::PartialAction(PointSetPtr carrier, OreSemigroup group,
                             std::map<std::size_t, PartialBijection> theta)
    : carrier_(std::move(carrier)),
      group_(std::move(group)),
      theta_(std::move(theta)),
      empty_(MultiMap::empty(carrier_, carrier_)) {
  if (group_.family() != Family::finite_group) throw DomainError("partial actions need a finite group");
  for (const auto& [g, b] : theta_) {
    if (g >= group_.order()) throw DomainError("partial action names an element outside the group");
    if (!same_carrier(b.map().domain_set(), *carrier_) || !same_carrier(b.map().codomain_set(), *carrier_)) {
      throw DomainError("partial bijection over a different carrier");
    }
  }
  d_masks_.assign(group_.order(), std::vector<char>(carrier_->size(), 0));
  for (std::size_t g = 0; g < group_.order(); ++g) {
    for (auto y : this->theta(g).image()) d_masks_[g][y] = 1;
  }
}

std::size_t PartialAction::identity() const {
  return static_cast<std::size_t>(group_.identity().value[0]);
}

const PartialBijection& PartialAction::theta(std::size_t g) const {
  const auto it = theta_.find(g);
  return it == theta_.end() ? empty_ : it->second;
}

std::string_view to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::pa1:
      return "PA1";
    case Axiom::bijection:
      return "bijection";
    case Axiom::pa2:
      return "PA2";
    case Axiom::pa3:
      return "PA3";
  }
  return "";
}

namespace {

// Points of θ_t(D_{t⁻¹} ∩ D_s) and of D_t ∩ D_{ts}, as masks.
std::pair<std::vector<char>, std::vector<char>> pa2_sides(const PartialAction& a, std::size_t s,
                                                          std::size_t t) {
  const std::size_t n = a.carrier().size();
  const auto& d_tinv = a.domain_mask(a.inverse(t));
  const auto& d_s = a.domain_mask(s);
  const auto& d_t = a.domain_mask(t);
  const auto& d_ts = a.domain_mask(a.multiply(t, s));
  std::vector<char> left(n, 0);
  std::vector<char> right(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (d_tinv[x] && d_s[x]) {
      if (auto y = a.theta(t)(x)) left[*y] = 1;
    }
    right[x] = d_t[x] && d_ts[x];
  }
  return {std::move(left), std::move(right)};
}

bool pa3_broken(const PartialAction& a, std::size_t s, std::size_t t, std::size_t x) {
  const auto st = a.multiply(s, t);
  if (!a.domain_mask(a.inverse(t))[x] || !a.domain_mask(a.inverse(st))[x]) return false;
  const auto tx = a.theta(t)(x);
  const auto lhs = tx ? a.theta(s)(*tx) : std::nullopt;
  const auto rhs = a.theta(st)(x);
  return !lhs || !rhs || *lhs != *rhs;
}

bool bijection_broken(const PartialAction& a, std::size_t g, std::size_t x) {
  const bool in_domain = a.theta(g)(x).has_value();
  return in_domain != static_cast<bool>(a.domain_mask(a.inverse(g))[x]);
}

bool pa1_broken(const PartialAction& a, std::size_t x) {
  const auto y = a.theta(a.identity())(x);
  return !y || *y != x;
}

}  // namespace

PartialActionReport verify_partial_action(const PartialAction& action) {
  PartialActionReport report;
  const std::size_t n = action.carrier().size();
  const std::size_t order = action.group().order();
  const auto& names = action.group().element_names();
  const auto e = action.identity();
  const auto& label = [&](std::size_t x) -> const std::string& { return action.carrier().label(x); };

  for (std::size_t x = 0; x < n; ++x) {
    if (pa1_broken(action, x)) {
      report.violations.push_back({Axiom::pa1, e, e, x, "theta_e does not fix " + label(x)});
    }
  }

  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t x = 0; x < n; ++x) {
      if (bijection_broken(action, g, x)) {
        report.violations.push_back({Axiom::bijection, g, g, x,
                                     "domain of theta_" + names[g] + " differs from D_" +
                                         names[action.inverse(g)] + " at " + label(x)});
      }
    }
  }

  for (std::size_t s = 0; s < order; ++s) {
    for (std::size_t t = 0; t < order; ++t) {
      const auto [left, right] = pa2_sides(action, s, t);
      for (std::size_t y = 0; y < n; ++y) {
        if (left[y] != right[y]) {
          report.violations.push_back(
              {Axiom::pa2, s, t, y,
               "theta_" + names[t] + "(D_" + names[action.inverse(t)] + " & D_" + names[s] + ") and D_" +
                   names[t] + " & D_" + names[action.multiply(t, s)] + " disagree at " + label(y)});
        }
      }
    }
  }

  for (std::size_t s = 0; s < order; ++s) {
    for (std::size_t t = 0; t < order; ++t) {
      for (std::size_t x = 0; x < n; ++x) {
        if (pa3_broken(action, s, t, x)) {
          report.violations.push_back({Axiom::pa3, s, t, x,
                                       "theta_" + names[s] + "(theta_" + names[t] + "(" + label(x) +
                                           ")) differs from theta_" + names[action.multiply(s, t)] +
                                           "(" + label(x) + ")"});
        }
      }
    }
  }
  return report;
}

bool violation_holds(const PartialAction& action, const PartialActionViolation& v) {
  const auto order = action.group().order();
  if (v.s >= order || v.t >= order || v.x >= action.carrier().size()) return false;
  switch (v.axiom) {
    case Axiom::pa1:
      return pa1_broken(action, v.x);
    case Axiom::bijection:
      return bijection_broken(action, v.s, v.x);
    case Axiom::pa2: {
      const auto [left, right] = pa2_sides(action, v.s, v.t);
      return left[v.x] != right[v.x];
    }
    case Axiom::pa3:
      return pa3_broken(action, v.s, v.t, v.x);
  }
  return false;
}

Verdict topologically_free(const PartialAction& action, const std::vector<std::size_t>& elements) {
  const auto e = action.identity();
  for (auto t : elements) {
    if (t == e) throw DomainError("topological freeness is tested on non-identity elements only");
    if (t >= action.group().order()) throw DomainError("element outside the group");
  }
  const auto& names = action.group().element_names();
  for (std::size_t x = 0; x < action.carrier().size(); ++x) {
    for (auto t : elements) {
      if (!action.domain_mask(action.inverse(t))[x]) continue;
      if (auto y = action.theta(t)(x); y && *y == x) {
        return Verdict::fails("partial-action:topological-freeness",
                              Json{{"point", action.carrier().label(x)}, {"element", names[t]}},
                              "theta_" + names[t] + " fixes " + action.carrier().label(x) +
                                  "; singletons are open in a finite discrete carrier");
      }
    }
  }
  return Verdict::holds("partial-action:topological-freeness",
                        "no point of any D_{t^-1} is fixed by theta_t");
}

}  // namespace ore
