#include "splitauth/acode.hpp"
#include "splitauth/construct.hpp"
#include "splitauth/error.hpp"
#include "splitauth/security.hpp"

#include "doctest.h"
#include "golden.hpp"
#include "oracles.hpp"

#include <random>

using namespace splitauth;

namespace {

SplittingACode table1_code() { return code_from_design(develop_cyclic(family_u2(2, 1))); }
SplittingACode table2_code() { return code_from_design(develop_cyclic(family_u2(2, 2))); }

std::vector<Rational> uniform(std::size_t n) {
  return std::vector<Rational>(n, Rational(1, static_cast<long long>(n)));
}

std::vector<Rational> concentrated(std::size_t n, std::size_t at) {
  std::vector<Rational> w(n, Rational(0));
  w[at] = 1;
  return w;
}

std::vector<Rational> random_weights(std::mt19937& rng, std::size_t n, int max_weight) {
  std::vector<long long> raw(n);
  long long total = 0;
  do {
    total = 0;
    for (long long& w : raw) {
      w = std::uniform_int_distribution<int>(0, max_weight)(rng);
      total += w;
    }
  } while (total == 0);
  std::vector<Rational> out;
  for (long long w : raw) out.emplace_back(w, total);
  return out;
}

// Random code: b rules of u disjoint c-subsets of {1..v}.
std::vector<Block> random_rules(std::mt19937& rng, int v, int b, int c, int u) {
  std::vector<int> points(v);
  for (int i = 0; i < v; ++i) points[i] = i + 1;
  std::vector<Block> rules;
  for (int e = 0; e < b; ++e) {
    std::shuffle(points.begin(), points.end(), rng);
    Block rule;
    for (int s = 0; s < u; ++s) rule.emplace_back(points.begin() + s * c, points.begin() + (s + 1) * c);
    rules.push_back(std::move(rule));
  }
  return rules;
}

}  // namespace

TEST_CASE("message_marginal") {
  const SplittingACode one = table1_code();
  CHECK(oracle::coverage(golden::kTable1, {1}) * Rational(1, 36) == Rational(1, 9));
  for (int m = 1; m <= 9; ++m) CHECK(message_marginal(one, m) == Rational(1, 9));

  const SplittingACode two = table2_code();
  for (int m = 1; m <= 17; ++m) CHECK(message_marginal(two, m) == Rational(1, 17));

  const SplittingACode padded(10, golden::kTable1);
  CHECK(message_marginal(padded, 10) == 0);
  CHECK_THROWS_AS(message_marginal(padded, 11), DomainError);

  Rational total = 0;
  for (int m = 1; m <= 10; ++m) total += message_marginal(padded, m);
  CHECK(total == 1);
}

TEST_CASE("perfect secrecy on the reference codes") {
  for (const auto& [code, rules] : {std::pair{table1_code(), golden::kTable1},
                                    std::pair{table2_code(), golden::kTable2}}) {
    const SecrecyResult result = perfect_secrecy_check(code);
    CHECK(result.perfect);
    CHECK(result.table.entries.size() == static_cast<std::size_t>(2 * code.v()));
    for (const auto& [key, posterior] : result.table.entries) {
      CHECK(posterior == Rational(1, 2));
      CHECK(posterior == oracle::uniform_posterior(rules, key.first, key.second));
    }
  }
}

TEST_CASE("perfect secrecy fails when the key is known") {
  const SplittingACode code = table1_code().with_key_dist(concentrated(9, 0));
  const SecrecyResult result = perfect_secrecy_check(code);
  CHECK_FALSE(result.perfect);
  CHECK(result.table.entries.at({0, 1}) == 1);
  CHECK(result.table.entries.at({0, 2}) == 1);
  CHECK(result.table.unreachable_messages == std::vector<int>{4, 6, 7, 8, 9});
}

TEST_CASE("perfect secrecy fails on never-sent messages") {
  const SecrecyResult result = perfect_secrecy_check(SplittingACode(10, golden::kTable1));
  CHECK_FALSE(result.perfect);
  CHECK(result.table.unreachable_messages == std::vector<int>{10});
}

TEST_CASE("posterior rows sum to one") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rules = random_rules(rng, 7, 5, 2, 3);
    const SplittingACode code(7, rules, random_weights(rng, 5, 4), random_weights(rng, 3, 4));
    const SecrecyResult result = perfect_secrecy_check(code);
    Rational marginal_total = 0;
    for (const auto& [m, p] : result.table.message_marginals) {
      marginal_total += p;
      if (p == 0) continue;
      Rational row = 0;
      for (int s = 0; s < code.u(); ++s) row += result.table.entries.at({s, m});
      CHECK(row == 1);
    }
    CHECK(marginal_total == 1);
  }
}

TEST_CASE("deception probabilities of the reference codes") {
  // Oracle first: literal Bayes computation over ordered observations.
  const auto keys1 = uniform(9);
  const auto keys2 = uniform(34);
  const auto sources = uniform(2);
  CHECK(oracle::deception(golden::kTable1, 9, keys1, sources, 0) == Rational(4, 9));
  CHECK(oracle::deception(golden::kTable1, 9, keys1, sources, 1) == Rational(1, 4));
  CHECK(oracle::deception(golden::kTable2, 17, keys2, sources, 0) == Rational(4, 17));
  CHECK(oracle::deception(golden::kTable2, 17, keys2, sources, 1) == Rational(1, 8));

  const SplittingACode one = table1_code();
  const SplittingACode two = table2_code();
  CHECK(deception_probability(one, 0) == Rational(4, 9));
  CHECK(deception_probability(one, 1) == Rational(1, 4));
  CHECK(deception_probability(two, 0) == Rational(4, 17));
  CHECK(deception_probability(two, 1) == Rational(1, 8));
  CHECK(deception_probability(one, 2) == 0);
  CHECK_THROWS_AS(deception_probability(one, 3), DomainError);
  CHECK_THROWS_AS(deception_probability(one, -1), DomainError);
}

TEST_CASE("acceptance-only success semantics exceed the bound") {
  const SplittingACode one = table1_code();
  const Rational accept_only = deception_probability(one, 1, SuccessRule::kAcceptOnly);
  CHECK(accept_only == Rational(1, 2));
  CHECK(accept_only == oracle::deception(golden::kTable1, 9, uniform(9), uniform(2), 1, false));
  CHECK(security_level(one, 1, SuccessRule::kAcceptOnly) == 0);
  CHECK(deception_probability(one, 0, SuccessRule::kAcceptOnly) == Rational(4, 9));
}

TEST_CASE("theorem1_bound") {
  const SplittingACode one = table1_code();
  const SplittingACode two = table2_code();
  CHECK(theorem1_bound(one, 0) == Rational(4, 9));
  CHECK(theorem1_bound(one, 1) == Rational(1, 4));
  CHECK(theorem1_bound(two, 0) == Rational(4, 17));
  CHECK(theorem1_bound(two, 1) == Rational(1, 8));
  CHECK(theorem1_bound(one, 2) == 0);
  CHECK_THROWS_AS(theorem1_bound(one, 9), DomainError);
  for (int i = 0; i <= 2; ++i) {
    CHECK(theorem1_bound(two, i) == Rational(2 * (2 - i), 17 - i));
  }
}

TEST_CASE("security_level") {
  CHECK(security_level(table1_code(), 1) == 1);
  CHECK(security_level(table2_code(), 1) == 1);
  CHECK(security_level(table1_code(), 2) == 2);

  const SplittingACode known = table1_code().with_key_dist(concentrated(9, 0));
  CHECK(deception_probability(known, 0) == 1);
  CHECK(security_level(known, 1) == -1);
  CHECK_THROWS_AS(security_level(table1_code(), 3), DomainError);
}

TEST_CASE("optimality_check") {
  CHECK(optimality_check(table1_code(), 2) == Check::kPass);
  CHECK(optimality_check(table2_code(), 2) == Check::kPass);
  CHECK(key_count_bound(table1_code(), 2) == 9);
  CHECK(key_count_bound(table2_code(), 2) == 34);

  // Duplicate e1 and split its weight between the copies: still one-fold
  // secure, but ten rules exceed the bound of nine.
  std::vector<Block> rules = golden::kTable1;
  rules.push_back(rules.front());
  std::vector<Rational> keys(10, Rational(1, 9));
  keys[0] = keys[9] = Rational(1, 18);
  const SplittingACode duplicated(9, rules, keys);
  CHECK(security_level(duplicated, 1) == 1);
  CHECK(optimality_check(duplicated, 2) == Check::kFail);

  // Uniform keys over the ten rules break impersonation security first.
  const SplittingACode skewed(9, rules);
  CHECK(deception_probability(skewed, 0) == Rational(1, 2));
  CHECK(optimality_check(skewed, 2) == Check::kNotApplicable);

  CHECK_THROWS_AS(optimality_check(table1_code(), 3), DomainError);
}

TEST_CASE("analyze") {
  const SecurityReport one = analyze(table1_code());
  CHECK(one.pd.at(0) == Rational(4, 9));
  CHECK(one.pd.at(1) == Rational(1, 4));
  CHECK(one.bounds.at(0) == Rational(4, 9));
  CHECK(one.bounds.at(1) == Rational(1, 4));
  CHECK(one.security_level == 1);
  CHECK(one.optimal == Check::kPass);
  CHECK(one.secrecy.perfect);

  const SecurityReport two = analyze(table2_code());
  CHECK(two.pd.at(0) == Rational(4, 17));
  CHECK(two.pd.at(1) == Rational(1, 8));
  CHECK(two.security_level == 1);
  CHECK(two.optimal == Check::kPass);
  CHECK(two.secrecy.perfect);

  const SplittingACode family = code_from_design(develop_cyclic(family_u2(2, 3)));
  CHECK(family.v() == 25);
  CHECK(family.b() == 75);
  const SecurityReport three = analyze(family);
  CHECK(three.security_level == 1);
  CHECK(three.optimal == Check::kPass);
  CHECK(three.secrecy.perfect);

  const std::string text = report_to_text(table1_code(), one);
  CHECK(text.find("one-fold secure against spoofing") != std::string::npos);
  CHECK(text.find("optimal: yes") != std::string::npos);
  CHECK(text.find("perfect secrecy: yes") != std::string::npos);
}

TEST_CASE("codes from lambda = 1 designs meet the bounds with equality") {
  for (int c = 1; c <= 3; ++c) {
    for (int n = 1; n <= 2; ++n) {
      const SplittingACode code = code_from_design(develop_cyclic(family_u2(c, n)));
      const int u = code.u();
      const int v = code.v();
      CHECK(deception_probability(code, 0) == Rational(c * u, v));
      CHECK(deception_probability(code, 1) == Rational(c * (u - 1), v - 1));
    }
  }
}

TEST_CASE("engine agrees with the Bayes oracle on random codes") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int u = std::uniform_int_distribution<int>(1, 3)(rng);
    const int c = std::uniform_int_distribution<int>(1, 2)(rng);
    const int v = std::uniform_int_distribution<int>(c * u, 8)(rng);
    const int b = std::uniform_int_distribution<int>(1, 6)(rng);
    const auto rules = random_rules(rng, v, b, c, u);
    const auto keys = random_weights(rng, b, 3);
    const auto sources = random_weights(rng, u, 3);
    const SplittingACode code(v, rules, keys, sources);
    for (int i = 0; i <= u; ++i) {
      CAPTURE(trial);
      CAPTURE(i);
      Rational expected;
      bool oracle_defined = true;
      try {
        expected = oracle::deception(rules, v, keys, sources, i);
      } catch (const std::exception&) {
        oracle_defined = false;
      }
      // No i-subset of sources with positive weight.
      Rational positive = 0;
      oracle::for_each_subset(u, i, [&](const std::vector<int>& subset) {
        Rational w = 1;
        for (int s : subset) w *= sources[s - 1];
        positive += w;
      });
      if (positive == 0) {
        CHECK_THROWS_AS(deception_probability(code, i), DomainError);
        continue;
      }
      REQUIRE(oracle_defined);
      CHECK(deception_probability(code, i) == expected);
      CHECK(deception_probability(code, i, SuccessRule::kAcceptOnly) ==
            oracle::deception(rules, v, keys, sources, i, false));
    }
  }
}

TEST_CASE("deception never drops below the bound") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 120; ++trial) {
    const int u = std::uniform_int_distribution<int>(2, 3)(rng);
    const int c = std::uniform_int_distribution<int>(1, 2)(rng);
    const int v = std::uniform_int_distribution<int>(c * u + 1, 10)(rng);
    const int b = std::uniform_int_distribution<int>(1, 10)(rng);
    const SplittingACode code(v, random_rules(rng, v, b, c, u), random_weights(rng, b, 5),
                              uniform(u));
    for (int i = 0; i <= u && i < v; ++i) {
      CHECK(deception_probability(code, i) >= theorem1_bound(code, i));
    }
  }
}

TEST_CASE("reports do not depend on how weights were scaled") {
  const SplittingACode base = table2_code();
  std::mt19937 rng(12);
  std::vector<long long> raw(34);
  for (long long& w : raw) w = std::uniform_int_distribution<int>(1, 5)(rng);
  std::vector<SecurityReport> reports;
  for (long long scale : {1LL, 7LL, 1000LL}) {
    long long total = 0;
    for (long long w : raw) total += w * scale;
    std::vector<Rational> keys;
    for (long long w : raw) keys.emplace_back(w * scale, total);
    reports.push_back(analyze(base.with_key_dist(keys)));
  }
  for (const SecurityReport& report : reports) {
    CHECK(report.pd == reports[0].pd);
    CHECK(report.bounds == reports[0].bounds);
    CHECK(report.security_level == reports[0].security_level);
    CHECK(report.optimal == reports[0].optimal);
    CHECK(report.secrecy.perfect == reports[0].secrecy.perfect);
    CHECK(report.secrecy.table.entries == reports[0].secrecy.table.entries);
  }
}

TEST_CASE("audit passes the reference codes and catches every single-cell mutation") {
  for (const auto& [v, rules] : {std::pair{9, golden::kTable1}, std::pair{17, golden::kTable2}}) {
    CHECK(audit(CodeTable{v, rules, {}, {}, {}}).passed());
    int mutations = 0;
    for (std::size_t e = 0; e < rules.size(); ++e) {
      for (int s = 0; s < 2; ++s) {
        for (int k = 0; k < 2; ++k) {
          for (int replacement = 1; replacement <= v; ++replacement) {
            if (replacement == rules[e][s][k]) continue;
            CodeTable table{v, rules, {}, {}, {}};
            table.rules[e][s][k] = replacement;
            const AuditResult result = audit(table);
            CHECK_FALSE(result.passed());
            ++mutations;
          }
        }
      }
    }
    CHECK(mutations == static_cast<int>(rules.size()) * 4 * (v - 1));
  }
}

TEST_CASE("audit names structural violations") {
  CodeTable table{9, golden::kTable1, {}, {}, {}};
  table.rules[0][1][0] = 1;
  const AuditResult result = audit(table);
  CHECK(result.violations == std::vector<std::string>{"structure"});
  CHECK_FALSE(result.report);

  CodeTable known{9, golden::kTable1, concentrated(9, 0), {}, {}};
  const AuditResult leaked = audit(known);
  CHECK(std::find(leaked.violations.begin(), leaked.violations.end(), "perfect secrecy") !=
        leaked.violations.end());
  CHECK(std::find(leaked.violations.begin(), leaked.violations.end(), "P_d0 equality") !=
        leaked.violations.end());
}
