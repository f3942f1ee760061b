#include "splitauth/design_core.hpp"

#include "splitauth/error.hpp"

#include <algorithm>

namespace splitauth {

void DesignParams::validate() const {
  if (t < 1 || v < 1 || b < 1 || c < 1 || u < 1 || lambda < 1) {
    throw ValidationError("design parameters must be positive: " + to_string());
  }
  if (t > u) throw ValidationError("strength t exceeds part count u: " + to_string());
  if (static_cast<std::int64_t>(c) * u > v) {
    throw ValidationError("block size c*u exceeds v: " + to_string());
  }
}

std::string DesignParams::to_string() const {
  return std::to_string(t) + "-(" + std::to_string(v) + "," + std::to_string(b) + "," +
         std::to_string(l()) + "=" + std::to_string(c) + "×" + std::to_string(u) + "," +
         std::to_string(lambda) + ")";
}

const char* to_string(Check check) {
  switch (check) {
    case Check::kPass: return "pass";
    case Check::kFail: return "fail";
    case Check::kNotApplicable: return "not-applicable";
  }
  return "?";
}

bool AdmissibilityReport::identities_ok() const {
  return std::none_of(identities.begin(), identities.end(),
                      [](Check c) { return c == Check::kFail; });
}

bool AdmissibilityReport::divisibility_ok() const {
  return std::all_of(divisibility.begin(), divisibility.end(), [](bool ok) { return ok; });
}

bool AdmissibilityReport::all_pass() const {
  return identities_ok() && divisibility_ok() && fisher != Check::kFail;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;  // exact: C(n-k+i, i) at every step
  }
  return result;
}

namespace {

BigInt power(int base, int exponent) {
  BigInt result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

Rational to_rational(std::int64_t value) { return Rational(BigInt(value)); }

}  // namespace

Rational lambda_level(const DesignParams& params, int s) {
  if (s < 1 || s > params.t) {
    throw DomainError("lambda level s=" + std::to_string(s) + " outside 1.." +
                      std::to_string(params.t));
  }
  const int d = params.t - s;
  const BigInt num = BigInt(params.lambda) * binomial(params.v - s, d);
  const BigInt den = power(params.c, d) * binomial(params.u - s, d);
  if (den == 0) throw DomainError("lambda level undefined: C(u-s, t-s) is zero");
  return Rational(num, den);
}

DerivedCounts derived_counts(const DesignParams& params) {
  DerivedCounts counts;
  for (int s = 1; s <= params.t; ++s) counts.lambda_s.emplace(s, lambda_level(params, s));
  return counts;
}

AdmissibilityReport check_identities(const DesignParams& params) {
  AdmissibilityReport report;
  const Rational r = lambda_level(params, 1);

  const Rational lhs_a = to_rational(params.b) * params.l();
  const Rational rhs_a = to_rational(params.v) * r;
  report.identities[0] = lhs_a == rhs_a ? Check::kPass : Check::kFail;
  if (report.identities[0] == Check::kFail) {
    report.failures.push_back("identity bl = vr: " + to_display_string(lhs_a) +
                              " != " + to_display_string(rhs_a));
  }

  const BigInt lhs_b = binomial(params.v, params.t) * params.lambda;
  const BigInt rhs_b = BigInt(params.b) * power(params.c, params.t) * binomial(params.u, params.t);
  report.identities[1] = lhs_b == rhs_b ? Check::kPass : Check::kFail;
  if (report.identities[1] == Check::kFail) {
    report.failures.push_back("identity C(v,t)*lambda = b*c^t*C(u,t): " + lhs_b.str() +
                              " != " + rhs_b.str());
  }

  if (params.t >= 2) {
    const Rational lhs_c = r * Rational(power(params.c, params.t - 1)) * (params.u - 1);
    const Rational rhs_c = lambda_level(params, 2) * (params.v - 1);
    report.identities[2] = lhs_c == rhs_c ? Check::kPass : Check::kFail;
    if (report.identities[2] == Check::kFail) {
      report.failures.push_back("identity r*c^(t-1)*(u-1) = lambda_2*(v-1): " +
                                to_display_string(lhs_c) + " != " + to_display_string(rhs_c));
    }
  }
  return report;
}

AdmissibilityReport check_divisibility(const DesignParams& params) {
  AdmissibilityReport report;
  for (int s = 1; s <= params.t; ++s) {
    const int d = params.t - s;
    const BigInt value = BigInt(params.lambda) * binomial(params.v - s, d);
    const BigInt modulus = power(params.c, d) * binomial(params.u - s, d);
    const bool ok = modulus != 0 && value % modulus == 0;
    report.divisibility.push_back(ok);
    if (!ok) {
      report.failures.push_back("divisibility at s=" + std::to_string(s) + ": " + value.str() +
                                " is not divisible by " + modulus.str());
    }
  }
  return report;
}

Check check_fisher(const DesignParams& params) {
  if (params.t < 2) return Check::kNotApplicable;
  return params.b * params.u >= params.v ? Check::kPass : Check::kFail;
}

AdmissibilityReport admissible(const DesignParams& params) {
  AdmissibilityReport report = check_identities(params);
  AdmissibilityReport divisibility = check_divisibility(params);
  report.divisibility = std::move(divisibility.divisibility);
  report.failures.insert(report.failures.end(), divisibility.failures.begin(),
                         divisibility.failures.end());
  report.fisher = check_fisher(params);
  if (report.fisher == Check::kFail) {
    report.failures.push_back("Fisher-type bound b*u >= v: " + std::to_string(params.b * params.u) +
                              " < " + std::to_string(params.v));
  }
  return report;
}

}  // namespace splitauth
