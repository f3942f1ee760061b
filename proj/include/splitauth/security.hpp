#pragma once

// Exact deception probabilities, lower bounds, optimality and Shannon
// perfect secrecy for splitting authentication codes.

#include "splitauth/acode.hpp"
#include "splitauth/design_core.hpp"
#include "splitauth/rational.hpp"
#include "splitauth/verify.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace splitauth {

// When does an inserted message m' count as a successful deception?
enum class SuccessRule {
  // m' is accepted under the key and decodes to a source state that is not
  // among the observed ones. Matches the bound with equality on the
  // optimal constructions.
  kFreshSource,
  // m' is accepted (valid under the key and not already observed).
  kAcceptOnly,
};

struct PosteriorTable {
  std::map<std::pair<int, int>, Rational> entries;  // (source, message) -> p(s|m)
  std::vector<Rational> priors;                     // by source
  std::map<int, Rational> message_marginals;        // message -> p(m)
  std::vector<int> unreachable_messages;            // p(m) = 0
};

struct SecrecyResult {
  PosteriorTable table;
  bool perfect = false;
};

Rational message_marginal(const SplittingACode& code, int message);

SecrecyResult perfect_secrecy_check(const SplittingACode& code);

/// Observed i-subsets of source states are drawn with probability
/// proportional to the product of their source weights.
/// Throws DomainError unless 0 <= i <= u.
Rational deception_probability(const SplittingACode& code, int order,
                               SuccessRule rule = SuccessRule::kFreshSource);

/// min_e (|M(e)| - i max_s |e(s)|) / (v - i). Throws DomainError unless
/// 0 <= i < v.
Rational theorem1_bound(const SplittingACode& code, int order);

/// Largest t <= i_max with P_di equal to the bound for every i <= t; -1 when
/// P_d0 already exceeds it.
int security_level(const SplittingACode& code, int i_max,
                   SuccessRule rule = SuccessRule::kFreshSource);

/// b == C(v,t) / (c^t C(u,t)). kNotApplicable unless the code is
/// (t-1)-fold secure.
Check optimality_check(const SplittingACode& code, int t);

/// Product over i < t of (v - i) / (|M(e)| - i max|e(s)|), minimized over
/// rules as in the deception bound.
Rational key_count_bound(const SplittingACode& code, int t);

struct SecurityReport {
  int i_max = 1;
  std::map<int, Rational> pd;
  std::map<int, Rational> bounds;
  int security_level = -1;
  Check optimal = Check::kNotApplicable;
  SecrecyResult secrecy;
};

SecurityReport analyze(const SplittingACode& code, int i_max = 1);

std::string fold_name(int level);  // 1 -> "one-fold"

std::string report_to_text(const SplittingACode& code, const SecurityReport& report);

// Full claim audit of a candidate code given as raw rules: structure,
// lambda = 1 uniformity at t = i_max + 1, bound equality up to i_max,
// optimality and perfect secrecy. Used by the analyze pipeline and mutation
// tests; a structurally broken table is a failed claim, not an exception.
struct AuditResult {
  std::vector<StructureDefect> defects;
  std::optional<VerificationResult> verification;
  std::optional<SecurityReport> report;
  std::vector<std::string> violations;  // names of failed properties

  bool passed() const { return violations.empty(); }
};

struct CodeTable {
  int v = 0;
  std::vector<Block> rules;
  std::optional<std::vector<Rational>> key_dist;
  std::optional<std::vector<Rational>> source_dist;
  std::optional<std::vector<std::vector<std::vector<Rational>>>> split_dist;
};

AuditResult audit(const CodeTable& table, int i_max = 1);

}  // namespace splitauth
