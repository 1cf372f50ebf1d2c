#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "ore/rational.hpp"
#include "ore/verdict.hpp"

namespace ore {

/// The root of unity e^{2πi·angle}, with the angle reduced into [0, 1).
class CirclePoint {
 public:
  CirclePoint() = default;
  explicit CirclePoint(Rational angle);

  const Rational& angle() const noexcept { return angle_; }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
  friend std::strong_ordering operator<=>(const CirclePoint& a, const CirclePoint& b) {
    if (a.angle_ < b.angle_) return std::strong_ordering::less;
    if (b.angle_ < a.angle_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational angle_{0};
};

using RootSet = std::set<CirclePoint>;

std::string to_string(const CirclePoint& z);

/// Ẋ_m(z) = {w : wᵐ = z}: the m angles (angle + j)/m. DomainError for m ≤ 0.
RootSet mth_roots(const CirclePoint& z, std::int64_t m);
/// Image of a finite set under Ẋ_m.
RootSet mth_roots(const RootSet& v, std::int64_t m);
/// zᵐ. DomainError for m ≤ 0.
CirclePoint power(const CirclePoint& z, std::int64_t m);

/// {z : zᵐ = zⁿ} = the |m − n|-th roots of unity. DomainError if m = n or
/// either is nonpositive.
RootSet coincidence_set(std::int64_t m, std::int64_t n);

struct CoincidenceRow {
  std::int64_t m;
  std::int64_t n;
  std::size_t size;
};

struct AperiodicityCertificate {
  Verdict verdict;
  std::vector<CoincidenceRow> table;
};

/// Tabulates |coincidence_set(m, n)| for 2 ≤ m < n ≤ bound, checks each row
/// pointwise, and returns Holds with the table. DomainError for bound < 2.
AperiodicityCertificate qn_aperiodicity_certificate(std::int64_t bound);

/// Certifies that no nonempty finite set V of roots of unity has Ẋ_m(V) = V
/// for 2 ≤ m ≤ bound, by the identity |Ẋ_m(V)| = m·|V|. DomainError for bound < 2.
Verdict qn_minimality_certificate(std::int64_t bound);

struct QnReport {
  std::int64_t bound;
  std::vector<std::string> relations;
  AperiodicityCertificate aperiodicity;
  Verdict minimality;
  std::vector<std::string> notes;
  std::vector<std::string> warnings;
  std::string conclusion;
};

QnReport qn_report(std::int64_t bound);

}  // namespace ore
