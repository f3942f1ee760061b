#include "splitauth/security.hpp"

#include "splitauth/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace splitauth {

namespace {

// One way the opponent can end up seeing a given transcript: the key, which
// source states were sent (bitmask), and the joint probability.
struct Explanation {
  std::size_t rule;
  std::uint64_t sources;
  Rational weight;
};

std::vector<std::vector<int>> source_subsets(int u, int size) {
  std::vector<std::vector<int>> subsets;
  std::vector<bool> select(u, false);
  std::fill(select.begin(), select.begin() + size, true);
  do {
    std::vector<int> subset;
    for (int s = 0; s < u; ++s) {
      if (select[s]) subset.push_back(s);
    }
    subsets.push_back(std::move(subset));
  } while (std::prev_permutation(select.begin(), select.end()));
  return subsets;
}

bool succeeds(const SplittingACode& code, const Explanation& x, int candidate, SuccessRule rule) {
  const std::optional<int> source = code.source_of(x.rule, candidate);
  if (!source) return false;
  if (rule == SuccessRule::kAcceptOnly) return true;
  return (x.sources >> *source & 1U) == 0;
}

}  // namespace

Rational message_marginal(const SplittingACode& code, int message) {
  if (message < 1 || message > code.v()) {
    throw DomainError("message " + std::to_string(message) + " outside 1.." +
                      std::to_string(code.v()));
  }
  Rational total = 0;
  for (std::size_t e = 0; e < code.b(); ++e) {
    const std::optional<int> s = code.source_of(e, message);
    if (!s) continue;
    total += code.key_dist()[e] * code.source_dist()[*s] *
             code.split_weight_of_message(e, *s, message);
  }
  return total;
}

SecrecyResult perfect_secrecy_check(const SplittingACode& code) {
  SecrecyResult result;
  PosteriorTable& table = result.table;
  table.priors = code.source_dist();

  std::vector<std::vector<Rational>> joint(code.v() + 1, std::vector<Rational>(code.u(), 0));
  for (std::size_t e = 0; e < code.b(); ++e) {
    for (int s = 0; s < code.u(); ++s) {
      for (int m : code.cell(e, s)) {
        joint[m][s] += code.key_dist()[e] * code.source_dist()[s] *
                       code.split_weight_of_message(e, s, m);
      }
    }
  }

  result.perfect = true;
  for (int m = 1; m <= code.v(); ++m) {
    const Rational marginal = std::accumulate(joint[m].begin(), joint[m].end(), Rational(0));
    table.message_marginals.emplace(m, marginal);
    if (marginal == 0) {
      table.unreachable_messages.push_back(m);
      result.perfect = false;
      continue;
    }
    for (int s = 0; s < code.u(); ++s) {
      Rational posterior = joint[m][s] / marginal;
      if (posterior != table.priors[s]) result.perfect = false;
      table.entries.emplace(std::make_pair(s, m), std::move(posterior));
    }
  }
  return result;
}

Rational deception_probability(const SplittingACode& code, int order, SuccessRule rule) {
  if (order < 0 || order > code.u()) {
    throw DomainError("deception order i=" + std::to_string(order) + " outside 0.." +
                      std::to_string(code.u()));
  }
  if (code.u() > 63) throw DomainError("deception analysis supports at most 63 source states");

  const auto subsets = source_subsets(code.u(), order);
  std::vector<Rational> subset_weight;
  Rational normalizer = 0;
  for (const auto& subset : subsets) {
    Rational w = 1;
    for (int s : subset) w *= code.source_dist()[s];
    normalizer += w;
    subset_weight.push_back(std::move(w));
  }
  if (normalizer == 0) {
    throw DomainError("no set of " + std::to_string(order) +
                      " source states has positive probability");
  }

  // Group every (key, sources, splitting) outcome by the unordered set of
  // messages the opponent observes.
  std::map<std::vector<int>, std::vector<Explanation>> transcripts;
  std::vector<int> split(order);
  std::vector<int> observed(order);
  for (std::size_t e = 0; e < code.b(); ++e) {
    if (code.key_dist()[e] == 0) continue;
    for (std::size_t k = 0; k < subsets.size(); ++k) {
      if (subset_weight[k] == 0) continue;
      const std::vector<int>& subset = subsets[k];
      std::uint64_t mask = 0;
      for (int s : subset) mask |= std::uint64_t{1} << s;
      const Rational base = code.key_dist()[e] * subset_weight[k] / normalizer;
      std::fill(split.begin(), split.end(), 0);
      while (true) {
        Rational w = base;
        for (int m = 0; m < order; ++m) {
          w *= code.split_weight(e, subset[m], split[m]);
          observed[m] = encode(code, e, subset[m], split[m]);
        }
        if (w != 0) {
          std::vector<int> key = observed;
          std::sort(key.begin(), key.end());
          transcripts[std::move(key)].push_back({e, mask, std::move(w)});
        }
        int m = order - 1;
        while (m >= 0 && split[m] == code.c() - 1) split[m--] = 0;
        if (m < 0) break;
        ++split[m];
      }
    }
  }

  Rational total = 0;
  for (const auto& [seen, explanations] : transcripts) {
    Rational best = 0;
    for (int candidate = 1; candidate <= code.v(); ++candidate) {
      if (std::binary_search(seen.begin(), seen.end(), candidate)) continue;
      Rational hit = 0;
      for (const Explanation& x : explanations) {
        if (succeeds(code, x, candidate, rule)) hit += x.weight;
      }
      if (hit > best) best = std::move(hit);
    }
    total += best;
  }
  return total;
}

Rational theorem1_bound(const SplittingACode& code, int order) {
  if (order < 0 || order >= code.v()) {
    throw DomainError("bound order i=" + std::to_string(order) + " outside 0.." +
                      std::to_string(code.v() - 1));
  }
  std::optional<Rational> best;
  for (const Block& rule : code.rules()) {
    long long valid = 0;
    long long widest = 0;
    for (const Part& part : rule) {
      valid += static_cast<long long>(part.size());
      widest = std::max(widest, static_cast<long long>(part.size()));
    }
    Rational value(valid - order * widest, code.v() - order);
    if (!best || value < *best) best = std::move(value);
  }
  return *best;
}

int security_level(const SplittingACode& code, int i_max, SuccessRule rule) {
  if (i_max < 0 || i_max > code.u() || i_max >= code.v()) {
    throw DomainError("i_max=" + std::to_string(i_max) + " outside 0..min(u, v-1)");
  }
  for (int i = 0; i <= i_max; ++i) {
    if (deception_probability(code, i, rule) != theorem1_bound(code, i)) return i - 1;
  }
  return i_max;
}

Rational key_count_bound(const SplittingACode& code, int t) {
  if (t < 1 || t > code.u() || t > code.v()) throw DomainError("key bound needs 1 <= t <= u");
  Rational product = 1;
  for (int i = 0; i < t; ++i) {
    // All rules share one shape, so any rule gives the same factor.
    const long long denominator = static_cast<long long>(code.c()) * (code.u() - i);
    product *= Rational(code.v() - i, denominator);
  }
  return product;
}

Check optimality_check(const SplittingACode& code, int t) {
  if (t < 1 || t > code.u() || t > code.v()) {
    throw DomainError("optimality needs 1 <= t <= u, got t=" + std::to_string(t));
  }
  if (security_level(code, t - 1) < t - 1) return Check::kNotApplicable;
  BigInt c_pow = 1;
  for (int i = 0; i < t; ++i) c_pow *= code.c();
  const Rational bound(binomial(code.v(), t), c_pow * binomial(code.u(), t));
  return Rational(BigInt(code.b())) == bound ? Check::kPass : Check::kFail;
}

SecurityReport analyze(const SplittingACode& code, int i_max) {
  SecurityReport report;
  report.i_max = i_max;
  if (i_max < 0 || i_max > code.u() || i_max >= code.v()) {
    throw DomainError("i_max=" + std::to_string(i_max) + " outside 0..min(u, v-1)");
  }
  report.security_level = i_max;
  for (int i = 0; i <= i_max; ++i) {
    report.pd.emplace(i, deception_probability(code, i));
    report.bounds.emplace(i, theorem1_bound(code, i));
    if (report.security_level == i_max && report.pd.at(i) != report.bounds.at(i)) {
      report.security_level = i - 1;
    }
  }
  const int t = i_max + 1;
  if (t <= code.u() && t <= code.v() && report.security_level >= t - 1) {
    BigInt c_pow = 1;
    for (int i = 0; i < t; ++i) c_pow *= code.c();
    const Rational bound(binomial(code.v(), t), c_pow * binomial(code.u(), t));
    report.optimal = Rational(BigInt(code.b())) == bound ? Check::kPass : Check::kFail;
  }
  report.secrecy = perfect_secrecy_check(code);
  return report;
}

std::string fold_name(int level) {
  static const char* const kNames[] = {"zero-fold", "one-fold", "two-fold", "three-fold",
                                       "four-fold", "five-fold"};
  if (level >= 0 && level < 6) return kNames[level];
  return std::to_string(level) + "-fold";
}

std::string report_to_text(const SplittingACode& code, const SecurityReport& report) {
  std::ostringstream out;
  for (const auto& [i, pd] : report.pd) {
    out << "P_d" << i << " = " << to_display_string(pd) << "  (bound "
        << to_display_string(report.bounds.at(i)) << ")\n";
  }
  if (report.security_level >= 0) {
    out << "security: " << fold_name(report.security_level) << " secure against spoofing\n";
  } else {
    out << "security: P_d0 exceeds the lower bound (not zero-fold secure)\n";
  }
  const int t = report.i_max + 1;
  switch (report.optimal) {
    case Check::kPass:
      out << "optimal: yes (b = " << code.b() << " = C(" << code.v() << "," << t << ")/(" << code.c()
          << "^" << t << "·C(" << code.u() << "," << t << ")))\n";
      break;
    case Check::kFail:
      out << "optimal: no (b = " << code.b() << " exceeds C(" << code.v() << "," << t << ")/("
          << code.c() << "^" << t << "·C(" << code.u() << "," << t << ")))\n";
      break;
    case Check::kNotApplicable:
      out << "optimal: not applicable (code is not " << fold_name(t - 1) << " secure)\n";
      break;
  }
  if (report.secrecy.perfect) {
    out << "perfect secrecy: yes (p(s|m) = p(s) for all " << report.secrecy.table.entries.size()
        << " source/message pairs)\n";
  } else if (!report.secrecy.table.unreachable_messages.empty()) {
    out << "perfect secrecy: no (" << report.secrecy.table.unreachable_messages.size()
        << " messages are never sent)\n";
  } else {
    for (const auto& [key, posterior] : report.secrecy.table.entries) {
      if (posterior != report.secrecy.table.priors[key.first]) {
        out << "perfect secrecy: no (p(s" << subscript(key.first + 1) << "|" << key.second
            << ") = " << to_display_string(posterior) << " != "
            << to_display_string(report.secrecy.table.priors[key.first]) << ")\n";
        break;
      }
    }
  }
  return out.str();
}

AuditResult audit(const CodeTable& table, int i_max) {
  AuditResult result;
  const SplittingDesign design{table.v, i_max + 1, table.rules, std::nullopt};
  result.defects = check_structure(design);
  if (!result.defects.empty()) {
    result.violations.push_back("structure");
    return result;
  }
  const int u = static_cast<int>(table.rules.front().size());
  const int t = i_max + 1;
  if (t < 2 || t > u) {
    result.violations.push_back("strength");
  } else {
    result.verification = verify_design(design, t);
    if (!result.verification->ok) {
      result.violations.push_back("lambda-uniformity");
    } else if (result.verification->params->lambda != 1) {
      result.violations.push_back("lambda=1");
    }
  }

  const SplittingACode code(table.v, table.rules, table.key_dist, table.source_dist,
                            table.split_dist);
  result.report = analyze(code, i_max);
  if (result.report->security_level < i_max) {
    result.violations.push_back("P_d" + std::to_string(result.report->security_level + 1) +
                                " equality");
  }
  if (result.report->optimal != Check::kPass) result.violations.push_back("optimality");
  if (!result.report->secrecy.perfect) result.violations.push_back("perfect secrecy");
  return result;
}

}  // namespace splitauth
