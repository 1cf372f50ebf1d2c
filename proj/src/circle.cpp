#include "ore/circle.hpp"

#include <stdexcept>

#include "ore/errors.hpp"

namespace ore {

namespace {

constexpr const char* kAperiodicityRule = "qn:aperiodicity (coincidence sets z^m = z^n are finite)";
constexpr const char* kMinimalityRule = "qn:minimality (no finite nonempty V with X_m(V) = V)";

Rational reduce_mod_one(Rational a) {
  const auto whole = a.numerator() / a.denominator();
  a -= whole;
  if (a < 0) a += 1;
  return a;
}

void require_positive(std::int64_t m, const char* what) {
  if (m <= 0) throw DomainError(std::string(what) + " must be a positive integer");
}

}  // namespace

CirclePoint::CirclePoint(Rational angle) : angle_(reduce_mod_one(angle)) {}

std::string to_string(const CirclePoint& z) { return to_string(z.angle()); }

RootSet mth_roots(const CirclePoint& z, std::int64_t m) {
  require_positive(m, "root order");
  RootSet out;
  for (std::int64_t j = 0; j < m; ++j) out.emplace((z.angle() + j) / m);
  return out;
}

RootSet mth_roots(const RootSet& v, std::int64_t m) {
  RootSet out;
  for (const auto& z : v) out.merge(mth_roots(z, m));
  return out;
}

CirclePoint power(const CirclePoint& z, std::int64_t m) {
  require_positive(m, "exponent");
  return CirclePoint(z.angle() * m);
}

RootSet coincidence_set(std::int64_t m, std::int64_t n) {
  require_positive(m, "m");
  require_positive(n, "n");
  if (m == n) throw DomainError("coincidence set needs m != n");
  const auto d = m > n ? m - n : n - m;
  RootSet out;
  for (std::int64_t j = 0; j < d; ++j) out.emplace(Rational(j, d));
  return out;
}

AperiodicityCertificate qn_aperiodicity_certificate(std::int64_t bound) {
  if (bound < 2) throw DomainError("certificate bound must be at least 2");
  AperiodicityCertificate cert;
  for (std::int64_t m = 2; m <= bound; ++m) {
    for (std::int64_t n = m + 1; n <= bound; ++n) {
      const auto set = coincidence_set(m, n);
      for (const auto& z : set) {
        if (power(z, m) != power(z, n) || !mth_roots(power(z, n), m).count(z)) {
          throw std::logic_error("coincidence point " + to_string(z) + " fails z^m = z^n");
        }
      }
      if (static_cast<std::int64_t>(set.size()) != n - m) {
        throw std::logic_error("coincidence set has the wrong size");
      }
      cert.table.push_back({m, n, set.size()});
    }
  }
  cert.verdict = Verdict::holds(
      kAperiodicityRule,
      "for m != n the points z with z in X_m(X_n^-1(z)) solve z^|m-n| = 1, a finite set, while every nonempty "
      "open arc contains infinitely many roots of unity; so no open set is covered and the system is "
      "topologically aperiodic (" + std::to_string(cert.table.size()) + " pairs tabulated)");
  return cert;
}

Verdict qn_minimality_certificate(std::int64_t bound) {
  if (bound < 2) throw DomainError("certificate bound must be at least 2");
  // Sample carrier: all angles with denominator at most 12.
  RootSet sample;
  for (std::int64_t d = 1; d <= 12; ++d) {
    for (std::int64_t j = 0; j < d; ++j) sample.emplace(Rational(j, d));
  }
  for (std::int64_t m = 2; m <= bound; ++m) {
    std::size_t total = 0;
    RootSet seen;
    for (const auto& z : sample) {
      const auto fibre = mth_roots(z, m);
      if (static_cast<std::int64_t>(fibre.size()) != m) throw std::logic_error("root fibre has the wrong size");
      for (const auto& w : fibre) {
        if (power(w, m) != z) throw std::logic_error("root fibre contains a point of the wrong power");
      }
      total += fibre.size();
      seen.merge(RootSet(fibre));
    }
    if (seen.size() != total) throw std::logic_error("root fibres of distinct points overlap");
  }
  return Verdict::holds(
      kMinimalityRule,
      "distinct points have disjoint m-th root fibres of exactly m points, so |X_m(V)| = m|V| > |V| for every "
      "finite nonempty V and m >= 2; checked on all angles with denominator <= 12 for m <= " +
          std::to_string(bound));
}

QnReport qn_report(std::int64_t bound) {
  QnReport report{bound,
                  {"(Q1) s_m s_n = s_{mn}", "(Q2) s_m u = u^m s_m",
                   "(Q3) Σ_{k=0}^{m−1} u^k s_m s_m* u^{−k} = 1"},
                  qn_aperiodicity_certificate(bound),
                  qn_minimality_certificate(bound),
                  {},
                  {},
                  {}};
  report.notes.emplace_back(
      "carrier: roots of unity (rational angles), a dense invariant subset of the circle; irrational points are "
      "not modeled, and density replaces the fact that nonempty open arcs are infinite");
  report.notes.emplace_back(
      "minimality is certified by counting root fibres on the finite carrier; the continuous argument via the "
      "transfer operator L_m is a different proof of the same statement");
  report.notes.emplace_back("the dual map of the degree-m fibre is z -> {w : w^m = z}");
  if (bound == 2) report.warnings.emplace_back("bound 2 leaves the coincidence table empty: aperiodicity is vacuous");
  report.conclusion = report.aperiodicity.verdict.is_holds() && report.minimality.is_holds()
                          ? "simplicity criterion satisfied: aperiodic and minimal, consistent with Q_N simple"
                          : "simplicity criterion not established";
  return report;
}

}  // namespace ore
