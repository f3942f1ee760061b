#pragma once

// Brute-force reference computations used to check the library. They follow
// the definitions literally and share nothing with the optimized code paths
// except the Rational type.

#include "splitauth/construct.hpp"
#include "splitauth/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using splitauth::Block;
using splitauth::Rational;

inline int part_index(const Block& block, int point) {
  for (std::size_t j = 0; j < block.size(); ++j) {
    for (int x : block[j]) {
      if (x == point) return static_cast<int>(j);
    }
  }
  return -1;
}

// Blocks whose parts separate the given points.
inline long long coverage(const std::vector<Block>& blocks, const std::vector<int>& points) {
  long long count = 0;
  for (const Block& block : blocks) {
    std::set<int> parts;
    bool ok = true;
    for (int x : points) {
      const int j = part_index(block, x);
      if (j < 0 || !parts.insert(j).second) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

inline void for_each_subset(int v, int size, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> current;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(current.size()) == size) {
      f(current);
      return;
    }
    for (int x = next; x <= v; ++x) {
      current.push_back(x);
      rec(x + 1);
      current.pop_back();
    }
  };
  rec(1);
}

// Distinct coverage counts over all s-subsets of {1..v}.
inline std::set<long long> coverage_profile(const std::vector<Block>& blocks, int v, int s) {
  std::set<long long> counts;
  for_each_subset(v, s, [&](const std::vector<int>& subset) { counts.insert(coverage(blocks, subset)); });
  return counts;
}

// Deception probability by Bayes' rule over ordered observation sequences.
// Source subsets are weighted by the normalized product of source weights;
// each ordering of a subset carries an equal share.
inline Rational deception(const std::vector<Block>& rules, int v, const std::vector<Rational>& keys,
                          const std::vector<Rational>& sources, int order, bool fresh_source = true) {
  const int u = static_cast<int>(rules.front().size());
  struct Outcome {
    std::size_t rule;
    std::set<int> sent;
    Rational p;
  };
  std::map<std::set<int>, std::vector<Outcome>> by_transcript;

  Rational normalizer = 0;
  for_each_subset(u, order, [&](const std::vector<int>& subset) {
    Rational w = 1;
    for (int s : subset) w *= sources[s - 1];
    normalizer += w;
  });

  long long orderings = 1;
  for (int k = 2; k <= order; ++k) orderings *= k;

  std::vector<int> sequence;
  std::vector<bool> used(u, false);
  std::function<void(std::size_t)> sequences = [&](std::size_t e) {
    if (static_cast<int>(sequence.size()) == order) {
      Rational p = keys[e] / normalizer / orderings;
      for (int s : sequence) p *= sources[s];
      if (p == 0) return;
      // Every splitting choice is equally likely.
      std::vector<std::size_t> pick(order, 0);
      const std::size_t c = rules[e].front().size();
      while (true) {
        std::set<int> seen;
        Rational q = p;
        for (int k = 0; k < order; ++k) {
          seen.insert(rules[e][sequence[k]][pick[k]]);
          q /= static_cast<long long>(c);
        }
        by_transcript[seen].push_back({e, std::set<int>(sequence.begin(), sequence.end()), q});
        int k = order - 1;
        while (k >= 0 && pick[k] == c - 1) pick[k--] = 0;
        if (k < 0) break;
        ++pick[k];
      }
      return;
    }
    for (int s = 0; s < u; ++s) {
      if (used[s]) continue;
      used[s] = true;
      sequence.push_back(s);
      sequences(e);
      sequence.pop_back();
      used[s] = false;
    }
  };
  for (std::size_t e = 0; e < rules.size(); ++e) sequences(e);

  Rational total = 0;
  for (const auto& [seen, outcomes] : by_transcript) {
    Rational p_transcript = 0;
    for (const Outcome& o : outcomes) p_transcript += o.p;
    Rational best = 0;
    for (int candidate = 1; candidate <= v; ++candidate) {
      if (seen.count(candidate)) continue;
      Rational posterior_success = 0;
      for (const Outcome& o : outcomes) {
        const int j = part_index(rules[o.rule], candidate);
        if (j < 0) continue;
        if (fresh_source && o.sent.count(j)) continue;
        posterior_success += o.p / p_transcript;
      }
      best = std::max(best, posterior_success);
    }
    total += p_transcript * best;
  }
  return total;
}

// p(s | m) for uniform keys, sources and splitting, by counting rows.
inline Rational uniform_posterior(const std::vector<Block>& rules, int source, int message) {
  long long in_source = 0;
  long long total = 0;
  for (const Block& rule : rules) {
    const int j = part_index(rule, message);
    if (j < 0) continue;
    ++total;
    if (j == source) ++in_source;
  }
  return total == 0 ? Rational(0) : Rational(in_source, total);
}

}  // namespace oracle
