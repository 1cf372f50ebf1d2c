#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ore/multimap.hpp"
#include "ore/semigroup.hpp"
#include "ore/verdict.hpp"

namespace ore {

/// A multimap whose pairs form an injective partial function.
class PartialBijection {
 public:
  /// Throws DomainError if some source or target appears twice.
  explicit PartialBijection(MultiMap map);

  static PartialBijection identity(PointSetPtr carrier);

  std::optional<std::size_t> operator()(std::size_t x) const;
  Subset domain() const { return map_.domain(); }
  Subset image() const { return map_.image(); }
  const MultiMap& map() const noexcept { return map_; }

  friend bool operator==(const PartialBijection&, const PartialBijection&) = default;

 private:
  MultiMap map_;
  std::vector<std::optional<std::size_t>> lookup_;
};

/// A finite group (given by its Cayley table) acting by partial bijections
/// θ_g : D_{g⁻¹} → D_g of a finite carrier. D_g is the image of θ_g. Group
/// elements without a stored bijection act by the empty map.
class PartialAction {
 public:
  PartialAction(PointSetPtr carrier, OreSemigroup group, std::map<std::size_t, PartialBijection> theta);

  const PointSet& carrier() const noexcept { return *carrier_; }
  const PointSetPtr& carrier_ptr() const noexcept { return carrier_; }
  const OreSemigroup& group() const noexcept { return group_; }
  std::size_t identity() const;
  std::size_t multiply(std::size_t s, std::size_t t) const { return group_.table()[s][t]; }
  std::size_t inverse(std::size_t g) const { return group_.group_inverse(g); }

  const PartialBijection& theta(std::size_t g) const;
  bool has_theta(std::size_t g) const { return theta_.count(g) != 0; }
  /// D_g, as a membership mask over the carrier.
  const std::vector<char>& domain_mask(std::size_t g) const { return d_masks_.at(g); }

 private:
  PointSetPtr carrier_;
  OreSemigroup group_;
  std::map<std::size_t, PartialBijection> theta_;
  PartialBijection empty_;
  std::vector<std::vector<char>> d_masks_;
};

enum class Axiom { pa1, bijection, pa2, pa3 };

std::string_view to_string(Axiom axiom);

/// One violated instance. `s`, `t` are group indices and `x` a carrier point;
/// for PA1 and bijection violations only `s` (the offending element) and `x`
/// are meaningful and `t` repeats `s`.
struct PartialActionViolation {
  Axiom axiom;
  std::size_t s;
  std::size_t t;
  std::size_t x;
  std::string message;

  bool operator==(const PartialActionViolation&) const = default;
};

struct PartialActionReport {
  std::vector<PartialActionViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks every instance of:
///   PA1  θ_e is the identity on the whole carrier;
///   each θ_g is a bijection D_{g⁻¹} → D_g;
///   PA2  θ_t(D_{t⁻¹} ∩ D_s) = D_t ∩ D_{ts};
///   PA3  θ_s(θ_t(x)) = θ_{st}(x) for x ∈ D_{t⁻¹} ∩ D_{t⁻¹s⁻¹}.
PartialActionReport verify_partial_action(const PartialAction& action);

/// Re-checks a single reported instance directly against the action.
bool violation_holds(const PartialAction& action, const PartialActionViolation& v);

/// On a finite discrete carrier: Holds iff no x ∈ D_{t⁻¹} is fixed by θ_t for
/// t ∈ F. Fails carries the least (x, t). DomainError if F contains e.
Verdict topologically_free(const PartialAction& action, const std::vector<std::size_t>& elements);

}  // namespace ore
