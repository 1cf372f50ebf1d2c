#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ore/rational.hpp"

namespace ore {

/// A value of some built-in semigroup: a k-vector for NatAdd(k), a single
/// positive integer for NatMult, a single table index for a finite group.
/// Meaningful only together with the OreSemigroup that produced it.
struct Element {
  std::vector<std::int64_t> value;

  auto operator<=>(const Element&) const = default;
};

enum class Family { nat_add, nat_mult, finite_group };

using Table = std::vector<std::vector<std::size_t>>;

/// Outcome of brute-force axiom checks on a finite multiplication table.
struct TableReport {
  bool square = true;
  bool closed = true;
  bool associative = true;
  bool has_identity = false;
  std::size_t identity = 0;
  bool left_cancellative = true;
  bool right_cancellative = true;
  bool directed = true;
  /// One line per failed axiom, with the first witness found.
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Checks associativity, a two-sided identity, left/right cancellativity and
/// directedness (sP ∩ tP nonempty). Throws FormatError on a non-square table.
TableReport verify_finite_table(const Table& table);

class Fraction;

/// One of the built-in semigroups of Ore type: (ℕᵏ, +), (ℕ^×, ·), or a finite
/// group given by its Cayley table. All three are cancellative and
/// quasi-lattice ordered, so residuals and joins are computable exactly.
class OreSemigroup {
 public:
  static OreSemigroup nat_add(std::size_t k);
  static OreSemigroup nat_mult();
  /// Rejects tables that fail any axiom of verify_finite_table.
  static OreSemigroup finite_group(Table table, std::size_t identity,
                                   std::vector<std::string> names = {});

  Family family() const noexcept { return family_; }
  /// k for NatAdd(k); 1 otherwise.
  std::size_t rank() const noexcept { return rank_; }
  /// Group element count; 0 for the infinite families.
  std::size_t order() const noexcept { return table_.size(); }
  const std::vector<std::string>& element_names() const noexcept { return names_; }
  const Table& table() const noexcept { return table_; }

  /// "natadd:k", "natmult" or "group".
  std::string describe() const;

  Element identity() const;
  bool is_valid(const Element& p) const;
  /// Throws DomainError for an element outside the carrier.
  void require_valid(const Element& p) const;

  Element multiply(const Element& p, const Element& q) const;

  /// p ≤ q iff pr = q for some r.
  bool leq(const Element& p, const Element& q) const;
  /// The unique r with pr = q; NotComparableError unless p ≤ q.
  Element residual(const Element& p, const Element& q) const;
  /// Least common upper bound. For a finite group every element is an upper
  /// bound of everything and the second argument is returned.
  Element join(const Element& p, const Element& q) const;
  /// Canonical common upper bound, equal to join for the built-ins.
  Element directed_witness(const Element& p, const Element& q) const;
  /// p ∼_R q iff pr = qr for some r.
  bool sim_r(const Element& p, const Element& q) const;

  /// Group inverse index; finite groups only.
  std::size_t group_inverse(std::size_t g) const;

  Element parse_element(const std::string& text) const;
  std::string format_element(const Element& p) const;

  friend bool operator==(const OreSemigroup& a, const OreSemigroup& b) {
    return a.family_ == b.family_ && a.rank_ == b.rank_ && a.table_ == b.table_ &&
           a.identity_ == b.identity_;
  }

 private:
  OreSemigroup(Family family, std::size_t rank) : family_(family), rank_(rank) {}

  std::size_t group_index(const Element& p) const;

  Family family_;
  std::size_t rank_;
  Table table_;
  std::size_t identity_ = 0;
  std::vector<std::string> names_;
  std::vector<std::size_t> inverse_;
};

/// Parses "natadd:k" or "natmult". Group tables are loaded by the io layer.
OreSemigroup parse_semigroup_spec(const std::string& spec);

/// Canonical value of a fraction [p,q]: the ℤᵏ difference p − q, the reduced
/// positive rational p/q, or the group index of p·q⁻¹.
using NormalForm = std::variant<std::vector<std::int64_t>, Rational, std::size_t>;

/// An element [p,q] of the group of fractions G(P), thought of as pq⁻¹.
/// Equality is equality of normal forms.
class Fraction {
 public:
  const Element& numerator() const noexcept { return numerator_; }
  const Element& denominator() const noexcept { return denominator_; }
  const NormalForm& normal_form() const noexcept { return normal_form_; }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.normal_form_ == b.normal_form_;
  }

 private:
  friend Fraction make_fraction(const OreSemigroup& s, Element p, Element q);
  friend Fraction make_fraction_unreduced(const OreSemigroup& s, Element p, Element q);

  Element numerator_;
  Element denominator_;
  NormalForm normal_form_;
};

/// [p,q] with the representative reduced to the canonical one.
Fraction make_fraction(const OreSemigroup& s, Element p, Element q);
/// [p,q] keeping the given representative.
Fraction make_fraction_unreduced(const OreSemigroup& s, Element p, Element q);

NormalForm normal_form(const OreSemigroup& s, const Element& p, const Element& q);

/// [p₁,p₂]∘[q₁,q₂] = [p₁(p₂⁻¹s), q₂(q₁⁻¹s)] with s the canonical witness.
Fraction frac_mul(const OreSemigroup& s, const Fraction& a, const Fraction& b);
/// Same product evaluated at a caller-chosen upper bound `witness` of p₂, q₁.
Fraction frac_mul_at(const OreSemigroup& s, const Fraction& a, const Fraction& b,
                     const Element& witness);
Fraction frac_inv(const OreSemigroup& s, const Fraction& a);
/// ι(p) = [p,e].
Fraction embed(const OreSemigroup& s, const Element& p);
Fraction frac_identity(const OreSemigroup& s);

std::string format_normal_form(const OreSemigroup& s, const NormalForm& nf);

}  // namespace ore
