#include "ore/semigroup.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "ore/errors.hpp"

namespace ore {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("integer overflow in semigroup arithmetic");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw DomainError("integer overflow in semigroup arithmetic");
  return out;
}

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

}  // namespace

TableReport verify_finite_table(const Table& table) {
  TableReport report;
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw FormatError("row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
                            " entries, expected " + std::to_string(n),
                        "table");
    }
  }
  if (n == 0) throw FormatError("empty table", "table");

  for (std::size_t a = 0; a < n && report.closed; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        report.closed = false;
        report.failures.push_back("closure fails: " + std::to_string(a) + "*" + std::to_string(b) +
                                  " = " + std::to_string(table[a][b]) + " is not an element");
        break;
      }
    }
  }
  if (!report.closed) {
    report.associative = report.left_cancellative = report.right_cancellative = report.directed =
        false;
    return report;
  }

  for (std::size_t a = 0; a < n && report.associative; ++a) {
    for (std::size_t b = 0; b < n && report.associative; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          report.associative = false;
          report.failures.push_back("associativity fails at (" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + ")");
          break;
        }
      }
    }
  }

  for (std::size_t e = 0; e < n && !report.has_identity; ++e) {
    bool two_sided = true;
    for (std::size_t x = 0; x < n && two_sided; ++x) two_sided = table[e][x] == x && table[x][e] == x;
    if (two_sided) {
      report.has_identity = true;
      report.identity = e;
    }
  }
  if (!report.has_identity) report.failures.push_back("identity fails: no two-sided identity element");

  for (std::size_t a = 0; a < n && report.left_cancellative; ++a) {
    for (std::size_t y = 0; y < n && report.left_cancellative; ++y) {
      for (std::size_t z = y + 1; z < n; ++z) {
        if (table[a][y] == table[a][z]) {
          report.left_cancellative = false;
          report.failures.push_back("left cancellativity fails: " + std::to_string(a) + "*" +
                                    std::to_string(y) + " = " + std::to_string(a) + "*" +
                                    std::to_string(z));
          break;
        }
      }
    }
  }

  for (std::size_t a = 0; a < n && report.right_cancellative; ++a) {
    for (std::size_t y = 0; y < n && report.right_cancellative; ++y) {
      for (std::size_t z = y + 1; z < n; ++z) {
        if (table[y][a] == table[z][a]) {
          report.right_cancellative = false;
          report.failures.push_back("right cancellativity fails: " + std::to_string(y) + "*" +
                                    std::to_string(a) + " = " + std::to_string(z) + "*" +
                                    std::to_string(a));
          break;
        }
      }
    }
  }

  for (std::size_t s = 0; s < n && report.directed; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      std::vector<bool> in_s(n, false);
      for (std::size_t x = 0; x < n; ++x) in_s[table[s][x]] = true;
      bool meet = false;
      for (std::size_t x = 0; x < n && !meet; ++x) meet = in_s[table[t][x]];
      if (!meet) {
        report.directed = false;
        report.failures.push_back("directedness fails: " + std::to_string(s) + "P and " +
                                  std::to_string(t) + "P are disjoint");
        break;
      }
    }
  }
  return report;
}

OreSemigroup OreSemigroup::nat_add(std::size_t k) {
  if (k == 0) throw DomainError("NatAdd(k) needs k >= 1");
  return OreSemigroup(Family::nat_add, k);
}

OreSemigroup OreSemigroup::nat_mult() { return OreSemigroup(Family::nat_mult, 1); }

OreSemigroup OreSemigroup::finite_group(Table table, std::size_t identity,
                                        std::vector<std::string> names) {
  const auto report = verify_finite_table(table);
  if (!report.ok()) throw DomainError("not a group table: " + report.failures.front());
  if (identity != report.identity) {
    throw DomainError("declared identity " + std::to_string(identity) +
                      " is not the identity of the table");
  }
  if (names.empty()) {
    for (std::size_t i = 0; i < table.size(); ++i) names.push_back("g" + std::to_string(i));
  }
  if (names.size() != table.size()) throw FormatError("element count does not match table", "elements");

  OreSemigroup s(Family::finite_group, 1);
  s.table_ = std::move(table);
  s.identity_ = identity;
  s.names_ = std::move(names);
  const std::size_t n = s.table_.size();
  s.inverse_.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) {
      if (s.table_[g][h] == identity) s.inverse_[g] = h;
    }
  }
  return s;
}

std::string OreSemigroup::describe() const {
  switch (family_) {
    case Family::nat_add:
      return "natadd:" + std::to_string(rank_);
    case Family::nat_mult:
      return "natmult";
    case Family::finite_group:
      return "group";
  }
  return {};
}

Element OreSemigroup::identity() const {
  switch (family_) {
    case Family::nat_add:
      return Element{std::vector<std::int64_t>(rank_, 0)};
    case Family::nat_mult:
      return Element{{1}};
    case Family::finite_group:
      return Element{{static_cast<std::int64_t>(identity_)}};
  }
  return {};
}

bool OreSemigroup::is_valid(const Element& p) const {
  switch (family_) {
    case Family::nat_add:
      return p.value.size() == rank_ &&
             std::all_of(p.value.begin(), p.value.end(), [](auto x) { return x >= 0; });
    case Family::nat_mult:
      return p.value.size() == 1 && p.value[0] >= 1;
    case Family::finite_group:
      return p.value.size() == 1 && p.value[0] >= 0 &&
             static_cast<std::size_t>(p.value[0]) < table_.size();
  }
  return false;
}

void OreSemigroup::require_valid(const Element& p) const {
  if (!is_valid(p)) {
    throw DomainError(join_ints(p.value) + " is not an element of " + describe());
  }
}

std::size_t OreSemigroup::group_index(const Element& p) const {
  return static_cast<std::size_t>(p.value[0]);
}

std::size_t OreSemigroup::group_inverse(std::size_t g) const {
  if (family_ != Family::finite_group || g >= inverse_.size()) {
    throw DomainError("group_inverse needs a finite group element");
  }
  return inverse_[g];
}

Element OreSemigroup::multiply(const Element& p, const Element& q) const {
  require_valid(p);
  require_valid(q);
  switch (family_) {
    case Family::nat_add: {
      Element r{p.value};
      for (std::size_t i = 0; i < rank_; ++i) r.value[i] = checked_add(r.value[i], q.value[i]);
      return r;
    }
    case Family::nat_mult:
      return Element{{checked_mul(p.value[0], q.value[0])}};
    case Family::finite_group:
      return Element{{static_cast<std::int64_t>(table_[group_index(p)][group_index(q)])}};
  }
  return {};
}

bool OreSemigroup::leq(const Element& p, const Element& q) const {
  require_valid(p);
  require_valid(q);
  switch (family_) {
    case Family::nat_add:
      for (std::size_t i = 0; i < rank_; ++i) {
        if (p.value[i] > q.value[i]) return false;
      }
      return true;
    case Family::nat_mult:
      return q.value[0] % p.value[0] == 0;
    case Family::finite_group:
      return true;
  }
  return false;
}

Element OreSemigroup::residual(const Element& p, const Element& q) const {
  if (!leq(p, q)) {
    throw NotComparableError(format_element(q) + " is not above " + format_element(p));
  }
  switch (family_) {
    case Family::nat_add: {
      Element r{q.value};
      for (std::size_t i = 0; i < rank_; ++i) r.value[i] -= p.value[i];
      return r;
    }
    case Family::nat_mult:
      return Element{{q.value[0] / p.value[0]}};
    case Family::finite_group: {
      const auto g = group_index(p);
      const auto target = group_index(q);
      for (std::size_t r = 0; r < table_.size(); ++r) {
        if (table_[g][r] == target) return Element{{static_cast<std::int64_t>(r)}};
      }
      break;
    }
  }
  throw NotComparableError("no residual");
}

Element OreSemigroup::join(const Element& p, const Element& q) const {
  require_valid(p);
  require_valid(q);
  switch (family_) {
    case Family::nat_add: {
      Element r{p.value};
      for (std::size_t i = 0; i < rank_; ++i) r.value[i] = std::max(r.value[i], q.value[i]);
      return r;
    }
    case Family::nat_mult: {
      const auto g = std::gcd(p.value[0], q.value[0]);
      return Element{{checked_mul(p.value[0] / g, q.value[0])}};
    }
    case Family::finite_group:
      return q;
  }
  return {};
}

Element OreSemigroup::directed_witness(const Element& p, const Element& q) const { return join(p, q); }

bool OreSemigroup::sim_r(const Element& p, const Element& q) const {
  require_valid(p);
  require_valid(q);
  if (family_ != Family::finite_group) return p == q;
  const auto a = group_index(p);
  const auto b = group_index(q);
  for (std::size_t r = 0; r < table_.size(); ++r) {
    if (table_[a][r] == table_[b][r]) return true;
  }
  return false;
}

Element OreSemigroup::parse_element(const std::string& text) const {
  auto trimmed = text;
  trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(), ::isspace), trimmed.end());
  if (trimmed.empty()) throw FormatError("empty element literal");
  Element p;
  if (family_ == Family::finite_group) {
    const auto it = std::find(names_.begin(), names_.end(), trimmed);
    if (it == names_.end()) throw FormatError("unknown group element '" + trimmed + "'");
    p.value = {static_cast<std::int64_t>(it - names_.begin())};
    return p;
  }
  std::string body = trimmed;
  if (body.front() == '(') {
    if (body.back() != ')') throw FormatError("unbalanced element literal '" + trimmed + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::stringstream in(body);
  std::string item;
  try {
    while (std::getline(in, item, ',')) {
      std::size_t used = 0;
      p.value.push_back(std::stoll(item, &used));
      if (used != item.size()) throw FormatError("bad integer '" + item + "'");
    }
  } catch (const std::logic_error&) {
    throw FormatError("bad element literal '" + trimmed + "'");
  }
  if (!is_valid(p)) throw FormatError("'" + trimmed + "' is not an element of " + describe());
  return p;
}

std::string OreSemigroup::format_element(const Element& p) const {
  if (family_ == Family::finite_group && is_valid(p)) return names_[group_index(p)];
  if (family_ == Family::nat_add && rank_ > 1) return join_ints(p.value);
  if (p.value.size() == 1) return std::to_string(p.value[0]);
  return join_ints(p.value);
}

OreSemigroup parse_semigroup_spec(const std::string& spec) {
  if (spec == "natmult") return OreSemigroup::nat_mult();
  const std::string prefix = "natadd:";
  if (spec.rfind(prefix, 0) == 0) {
    try {
      std::size_t used = 0;
      const auto k = std::stoll(spec.substr(prefix.size()), &used);
      if (used == spec.size() - prefix.size() && k >= 1) {
        return OreSemigroup::nat_add(static_cast<std::size_t>(k));
      }
    } catch (const std::logic_error&) {
    }
  }
  throw FormatError("expected natadd:k, natmult or group:<file>, got '" + spec + "'", "semigroup");
}

NormalForm normal_form(const OreSemigroup& s, const Element& p, const Element& q) {
  s.require_valid(p);
  s.require_valid(q);
  switch (s.family()) {
    case Family::nat_add: {
      std::vector<std::int64_t> d(p.value.size());
      for (std::size_t i = 0; i < d.size(); ++i) d[i] = p.value[i] - q.value[i];
      return d;
    }
    case Family::nat_mult:
      return Rational(p.value[0], q.value[0]);
    case Family::finite_group: {
      const auto qi = s.group_inverse(static_cast<std::size_t>(q.value[0]));
      return s.table()[static_cast<std::size_t>(p.value[0])][qi];
    }
  }
  return std::size_t{0};
}

Fraction make_fraction_unreduced(const OreSemigroup& s, Element p, Element q) {
  Fraction f;
  f.normal_form_ = normal_form(s, p, q);
  f.numerator_ = std::move(p);
  f.denominator_ = std::move(q);
  return f;
}

Fraction make_fraction(const OreSemigroup& s, Element p, Element q) {
  const auto nf = normal_form(s, p, q);
  Element num;
  Element den;
  switch (s.family()) {
    case Family::nat_add: {
      const auto& d = std::get<std::vector<std::int64_t>>(nf);
      for (auto x : d) {
        num.value.push_back(std::max<std::int64_t>(x, 0));
        den.value.push_back(std::max<std::int64_t>(-x, 0));
      }
      break;
    }
    case Family::nat_mult: {
      const auto& r = std::get<Rational>(nf);
      num.value = {r.numerator()};
      den.value = {r.denominator()};
      break;
    }
    case Family::finite_group:
      num.value = {static_cast<std::int64_t>(std::get<std::size_t>(nf))};
      den = s.identity();
      break;
  }
  return make_fraction_unreduced(s, std::move(num), std::move(den));
}

Fraction frac_mul_at(const OreSemigroup& s, const Fraction& a, const Fraction& b,
                     const Element& witness) {
  const auto& p1 = a.numerator();
  const auto& p2 = a.denominator();
  const auto& q1 = b.numerator();
  const auto& q2 = b.denominator();
  if (!s.leq(p2, witness) || !s.leq(q1, witness)) {
    throw DomainError("witness " + s.format_element(witness) + " is not above both " +
                      s.format_element(p2) + " and " + s.format_element(q1));
  }
  return make_fraction(s, s.multiply(p1, s.residual(p2, witness)),
                       s.multiply(q2, s.residual(q1, witness)));
}

Fraction frac_mul(const OreSemigroup& s, const Fraction& a, const Fraction& b) {
  return frac_mul_at(s, a, b, s.directed_witness(a.denominator(), b.numerator()));
}

Fraction frac_inv(const OreSemigroup& s, const Fraction& a) {
  return make_fraction(s, a.denominator(), a.numerator());
}

Fraction embed(const OreSemigroup& s, const Element& p) { return make_fraction(s, p, s.identity()); }

Fraction frac_identity(const OreSemigroup& s) { return make_fraction(s, s.identity(), s.identity()); }

std::string format_normal_form(const OreSemigroup& s, const NormalForm& nf) {
  switch (s.family()) {
    case Family::nat_add: {
      const auto& d = std::get<std::vector<std::int64_t>>(nf);
      return d.size() == 1 ? std::to_string(d[0]) : join_ints(d);
    }
    case Family::nat_mult:
      return to_string(std::get<Rational>(nf));
    case Family::finite_group:
      return s.element_names().at(std::get<std::size_t>(nf));
  }
  return {};
}

}  // namespace ore
