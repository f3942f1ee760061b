#pragma once

// Parameter arithmetic and necessary conditions for t-(v,b,l=cu,lambda)
// splitting designs. Everything here is exact.

#include "splitauth/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace splitauth {

struct DesignParams {
  int t = 0;
  int v = 0;
  std::int64_t b = 0;
  int c = 0;
  int u = 0;
  std::int64_t lambda = 0;

  int l() const { return c * u; }

  /// Throws ValidationError unless all fields are positive, t <= u and
  /// c*u <= v.
  void validate() const;

  /// "2-(9,9,4=2×2,1)"
  std::string to_string() const;

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

struct DerivedCounts {
  std::map<int, Rational> lambda_s;  // level s -> lambda_s, 1 <= s <= t
  Rational r() const { return lambda_s.at(1); }
};

enum class Check { kPass, kFail, kNotApplicable };

const char* to_string(Check check);

struct AdmissibilityReport {
  // Identities (a) bl = vr, (b) C(v,t) lambda = b c^t C(u,t),
  // (c) r c^{t-1} (u-1) = lambda_2 (v-1). (c) is not applicable for t < 2.
  std::array<Check, 3> identities{Check::kNotApplicable, Check::kNotApplicable,
                                  Check::kNotApplicable};
  std::vector<bool> divisibility;  // index s-1
  Check fisher = Check::kNotApplicable;
  std::vector<std::string> failures;

  bool identities_ok() const;
  bool divisibility_ok() const;
  bool all_pass() const;
};

/// C(n, k); 0 when k > n. Exact for any n (arbitrary precision).
BigInt binomial(std::int64_t n, std::int64_t k);

/// lambda_s = lambda C(v-s, t-s) / (c^{t-s} C(u-s, t-s)), not reduced to an
/// integer. Throws DomainError unless 1 <= s <= t.
Rational lambda_level(const DesignParams& params, int s);

DerivedCounts derived_counts(const DesignParams& params);

AdmissibilityReport check_identities(const DesignParams& params);

/// One entry per level s = 1..t: lambda C(v-s,t-s) == 0 mod c^{t-s} C(u-s,t-s).
AdmissibilityReport check_divisibility(const DesignParams& params);

/// b*u >= v; kNotApplicable for t < 2.
Check check_fisher(const DesignParams& params);

AdmissibilityReport admissible(const DesignParams& params);

}  // namespace splitauth
