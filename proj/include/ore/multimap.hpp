#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ore {

/// Ordered list of distinct point labels: a finite discrete carrier.
class PointSet {
 public:
  PointSet() = default;
  /// Throws FormatError on duplicate labels.
  explicit PointSet(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const;
  /// Throws FormatError for an unknown label.
  std::size_t index_of(std::string_view label) const;

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

using PointSetPtr = std::shared_ptr<const PointSet>;

PointSetPtr make_point_set(std::vector<std::string> labels);
/// Points labelled "0", "1", ..., "n-1".
PointSetPtr numbered_point_set(std::size_t n);

/// Sorted, deduplicated point indices.
using Subset = std::vector<std::size_t>;

/// A finite relation viewed as a set-valued map. Pairs are kept sorted and
/// deduplicated, so equality is structural. The domain D(f) and the image are
/// derived on demand.
class MultiMap {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  MultiMap(PointSetPtr domain_set, PointSetPtr codomain_set, std::vector<Pair> pairs);

  static MultiMap identity(PointSetPtr carrier);
  static MultiMap empty(PointSetPtr domain_set, PointSetPtr codomain_set);

  const PointSet& domain_set() const noexcept { return *domain_; }
  const PointSet& codomain_set() const noexcept { return *codomain_; }
  const PointSetPtr& domain_ptr() const noexcept { return domain_; }
  const PointSetPtr& codomain_ptr() const noexcept { return codomain_; }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }

  /// f(x).
  Subset at(std::size_t x) const;
  /// f(A) = ⋃_{x∈A} f(x).
  Subset apply(const Subset& a) const;
  bool contains(std::size_t x, std::size_t y) const;
  /// D(f) = {x : f(x) ≠ ∅}.
  Subset domain() const;
  /// f(M).
  Subset image() const;
  bool is_endomap() const;

  friend bool operator==(const MultiMap& a, const MultiMap& b);

 private:
  PointSetPtr domain_;
  PointSetPtr codomain_;
  std::vector<Pair> pairs_;
};

bool same_carrier(const PointSet& a, const PointSet& b);

/// (g∘f)(x) = ⋃_{y∈f(x)} g(y). Requires codomain(f) = domain(g).
MultiMap compose(const MultiMap& g, const MultiMap& f);
/// y ∈ f⁻¹(x) iff x ∈ f(y).
MultiMap inverse(const MultiMap& f);
/// f⁻¹(B) = {x : f(x) ∩ B ≠ ∅}.
Subset preimage(const MultiMap& f, const Subset& b);
/// f∘f⁻¹. Its value at x is empty iff x is outside the image of f, and
/// contains x otherwise.
MultiMap round_trip(const MultiMap& f);
/// n-fold self-composition; iterate(f, 0) is the identity.
MultiMap iterate(const MultiMap& f, unsigned n);
/// {x : x ∈ fⁿ(x)}.
Subset periodic_points(const MultiMap& f, unsigned n);

}  // namespace ore
