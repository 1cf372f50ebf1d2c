#include "ore/multimap.hpp"

#include <algorithm>

#include "ore/errors.hpp"

namespace ore {

PointSet::PointSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw FormatError("duplicate point label '" + labels_[i] + "'", "points");
    }
  }
}

std::optional<std::size_t> PointSet::find(std::string_view label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PointSet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw FormatError("unknown point '" + std::string(label) + "'");
}

PointSetPtr make_point_set(std::vector<std::string> labels) {
  return std::make_shared<const PointSet>(std::move(labels));
}

PointSetPtr numbered_point_set(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return make_point_set(std::move(labels));
}

bool same_carrier(const PointSet& a, const PointSet& b) { return &a == &b || a == b; }

MultiMap::MultiMap(PointSetPtr domain_set, PointSetPtr codomain_set, std::vector<Pair> pairs)
    : domain_(std::move(domain_set)), codomain_(std::move(codomain_set)), pairs_(std::move(pairs)) {
  if (!domain_ || !codomain_) throw DomainError("multimap needs both carriers");
  for (const auto& [x, y] : pairs_) {
    if (x >= domain_->size() || y >= codomain_->size()) {
      throw DomainError("pair (" + std::to_string(x) + "," + std::to_string(y) +
                        ") lies outside the carriers");
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

MultiMap MultiMap::identity(PointSetPtr carrier) {
  std::vector<Pair> pairs;
  pairs.reserve(carrier->size());
  for (std::size_t i = 0; i < carrier->size(); ++i) pairs.emplace_back(i, i);
  return MultiMap(carrier, carrier, std::move(pairs));
}

MultiMap MultiMap::empty(PointSetPtr domain_set, PointSetPtr codomain_set) {
  return MultiMap(std::move(domain_set), std::move(codomain_set), {});
}

Subset MultiMap::at(std::size_t x) const {
  Subset out;
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), Pair{x, 0});
  for (; it != pairs_.end() && it->first == x; ++it) out.push_back(it->second);
  return out;
}

Subset MultiMap::apply(const Subset& a) const {
  Subset out;
  for (auto x : a) {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), Pair{x, 0});
    for (; it != pairs_.end() && it->first == x; ++it) out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool MultiMap::contains(std::size_t x, std::size_t y) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{x, y});
}

Subset MultiMap::domain() const {
  Subset out;
  for (const auto& p : pairs_) {
    if (out.empty() || out.back() != p.first) out.push_back(p.first);
  }
  return out;
}

Subset MultiMap::image() const {
  Subset out;
  out.reserve(pairs_.size());
  for (const auto& p : pairs_) out.push_back(p.second);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool MultiMap::is_endomap() const { return same_carrier(*domain_, *codomain_); }

bool operator==(const MultiMap& a, const MultiMap& b) {
  return same_carrier(*a.domain_, *b.domain_) && same_carrier(*a.codomain_, *b.codomain_) &&
         a.pairs_ == b.pairs_;
}

MultiMap compose(const MultiMap& g, const MultiMap& f) {
  if (!same_carrier(f.codomain_set(), g.domain_set())) {
    throw DomainError("compose: codomain of the inner map differs from domain of the outer map");
  }
  // Boolean-matrix product row by row: row x of g∘f is the OR of g's rows over f(x).
  const auto& gp = g.pairs();
  std::vector<MultiMap::Pair> out;
  const std::size_t width = g.codomain_set().size();
  std::vector<char> row(width, 0);
  const auto& fp = f.pairs();
  for (std::size_t i = 0; i < fp.size();) {
    const auto x = fp[i].first;
    std::size_t j = i;
    for (; j < fp.size() && fp[j].first == x; ++j) {
      auto it = std::lower_bound(gp.begin(), gp.end(), MultiMap::Pair{fp[j].second, 0});
      for (; it != gp.end() && it->first == fp[j].second; ++it) row[it->second] = 1;
    }
    for (std::size_t z = 0; z < width; ++z) {
      if (row[z]) {
        out.emplace_back(x, z);
        row[z] = 0;
      }
    }
    i = j;
  }
  return MultiMap(f.domain_ptr(), g.codomain_ptr(), std::move(out));
}

MultiMap inverse(const MultiMap& f) {
  std::vector<MultiMap::Pair> swapped;
  swapped.reserve(f.pairs().size());
  for (const auto& [x, y] : f.pairs()) swapped.emplace_back(y, x);
  return MultiMap(f.codomain_ptr(), f.domain_ptr(), std::move(swapped));
}

Subset preimage(const MultiMap& f, const Subset& b) {
  std::vector<char> in_b(f.codomain_set().size(), 0);
  for (auto y : b) {
    if (y >= in_b.size()) throw DomainError("preimage: subset leaves the codomain carrier");
    in_b[y] = 1;
  }
  Subset out;
  for (const auto& [x, y] : f.pairs()) {
    if (in_b[y] && (out.empty() || out.back() != x)) out.push_back(x);
  }
  return out;
}

MultiMap round_trip(const MultiMap& f) { return compose(f, inverse(f)); }

MultiMap iterate(const MultiMap& f, unsigned n) {
  if (!f.is_endomap()) throw DomainError("iterate needs a map from a carrier to itself");
  MultiMap out = MultiMap::identity(f.domain_ptr());
  for (unsigned i = 0; i < n; ++i) out = compose(f, out);
  return out;
}

Subset periodic_points(const MultiMap& f, unsigned n) {
  if (!f.is_endomap()) throw DomainError("periodic_points needs a map from a carrier to itself");
  if (n == 0) throw DomainError("periodic_points needs a positive period");
  const auto fn = iterate(f, n);
  Subset out;
  for (std::size_t x = 0; x < f.domain_set().size(); ++x) {
    if (fn.contains(x, x)) out.push_back(x);
  }
  return out;
}

}  // namespace ore
