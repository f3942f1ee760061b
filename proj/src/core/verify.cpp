#include "splitauth/verify.hpp"

#include "splitauth/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace splitauth {

namespace {

constexpr std::uint64_t kMaxSubsets = 200'000'000;

// Colexicographic rank of a strictly increasing 0-based combination.
std::uint64_t colex_rank(const std::vector<int>& sorted_points,
                         const std::vector<std::vector<std::uint64_t>>& choose) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < sorted_points.size(); ++i) {
    rank += choose[sorted_points[i]][i + 1];
  }
  return rank;
}

// Advances a 0-based increasing combination of {0..n-1} in lexicographic
// order. Returns false after the last one.
bool next_combination(std::vector<int>& combo, int n) {
  const int k = static_cast<int>(combo.size());
  int i = k - 1;
  while (i >= 0 && combo[i] == n - k + i) --i;
  if (i < 0) return false;
  ++combo[i];
  for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  return true;
}

std::string format_subset(const std::vector<int>& points) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < points.size(); ++i) out << (i ? "," : "") << points[i];
  out << '}';
  return out.str();
}

}  // namespace

std::string VerificationResult::summary() const {
  if (ok) {
    return params->to_string() + ", λ=" + std::to_string(params->lambda);
  }
  if (!defects.empty()) {
    const StructureDefect& d = defects.front();
    return "not a splitting design: block " + std::to_string(d.block_index + 1) + " violates " +
           d.clause + " (" + d.detail + ")";
  }
  if (witness) {
    return "not a splitting design: subset " + format_subset(witness->points) + " is covered " +
           std::to_string(witness->actual) + " times, expected " +
           std::to_string(witness->expected);
  }
  return "not a splitting design";
}

std::vector<StructureDefect> check_structure(const SplittingDesign& design) {
  std::vector<StructureDefect> defects;
  if (design.v < 1) {
    defects.push_back({0, "point set", "v must be positive"});
    return defects;
  }
  if (design.blocks.empty()) {
    defects.push_back({0, "block count", "design has no blocks"});
    return defects;
  }
  const std::size_t u = design.blocks.front().size();
  const std::size_t c = u ? design.blocks.front().front().size() : 0;
  if (u == 0 || c == 0) {
    defects.push_back({0, "part size", "first block has an empty part list or empty part"});
    return defects;
  }
  std::vector<std::size_t> owner(design.v + 1);
  for (std::size_t i = 0; i < design.blocks.size(); ++i) {
    const Block& block = design.blocks[i];
    if (block.size() != u) {
      defects.push_back({i, "part count", "has " + std::to_string(block.size()) +
                                              " parts, expected u=" + std::to_string(u)});
      continue;
    }
    std::fill(owner.begin(), owner.end(), 0);
    std::size_t union_size = 0;
    for (std::size_t j = 0; j < block.size(); ++j) {
      const Part& part = block[j];
      if (part.size() != c) {
        defects.push_back({i, "part size", "part " + std::to_string(j + 1) + " has size " +
                                               std::to_string(part.size()) + ", expected c=" +
                                               std::to_string(c)});
      }
      for (int x : part) {
        if (x < 1 || x > design.v) {
          defects.push_back({i, "point range", "point " + std::to_string(x) + " outside 1.." +
                                                   std::to_string(design.v)});
          continue;
        }
        if (owner[x] != 0) {
          defects.push_back({i, owner[x] == j + 1 ? "part size" : "disjointness",
                             "point " + std::to_string(x) + " appears twice (parts " +
                                 std::to_string(owner[x]) + " and " + std::to_string(j + 1) +
                                 ")"});
          continue;
        }
        owner[x] = j + 1;
        ++union_size;
      }
    }
    if (union_size != c * u &&
        (defects.empty() || defects.back().block_index != i)) {
      defects.push_back({i, "block size", "union has " + std::to_string(union_size) +
                                              " points, expected l=" + std::to_string(c * u)});
    }
  }
  return defects;
}

std::int64_t count_covering_blocks(const SplittingDesign& design, const std::vector<int>& points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] < 1 || points[i] > design.v) {
      throw DomainError("point " + std::to_string(points[i]) + " outside 1.." +
                        std::to_string(design.v));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i] == points[j]) throw DomainError("points must be distinct");
    }
  }
  std::int64_t count = 0;
  for (const Block& block : design.blocks) {
    std::vector<int> parts_used;
    bool covers = true;
    for (int x : points) {
      int found = -1;
      for (std::size_t j = 0; j < block.size() && found < 0; ++j) {
        if (std::find(block[j].begin(), block[j].end(), x) != block[j].end()) {
          found = static_cast<int>(j);
        }
      }
      if (found < 0 || std::find(parts_used.begin(), parts_used.end(), found) != parts_used.end()) {
        covers = false;
        break;
      }
      parts_used.push_back(found);
    }
    if (covers) ++count;
  }
  return count;
}

VerificationResult verify_design(const SplittingDesign& design, int t) {
  if (t < 1) throw DomainError("strength t must be at least 1");
  if (!design.blocks.empty() && t > static_cast<int>(design.blocks.front().size())) {
    throw DomainError("strength t=" + std::to_string(t) + " exceeds part count u=" +
                      std::to_string(design.blocks.front().size()));
  }
  VerificationResult result;
  result.defects = check_structure(design);
  if (!result.defects.empty()) return result;

  const int v = design.v;
  const int u = static_cast<int>(design.blocks.front().size());
  const int c = static_cast<int>(design.blocks.front().front().size());
  if (t > v) throw DomainError("strength t exceeds v");

  std::vector<std::vector<std::uint64_t>> choose(v + 1, std::vector<std::uint64_t>(t + 1, 0));
  for (int n = 0; n <= v; ++n) {
    choose[n][0] = 1;
    for (int k = 1; k <= std::min(n, t); ++k) {
      choose[n][k] = choose[n - 1][k - 1] + (k <= n - 1 ? choose[n - 1][k] : 0);
      if (choose[n][k] > kMaxSubsets) {
        throw DomainError("C(v,t) too large for exhaustive verification");
      }
    }
  }
  std::vector<std::int64_t> counts(choose[v][t], 0);

  // Each block covers exactly the t-subsets that pick one point from each of
  // t distinct parts.
  std::vector<int> part_choice(t);
  std::vector<int> point_choice(t);
  std::vector<int> subset(t);
  for (const Block& block : design.blocks) {
    std::iota(part_choice.begin(), part_choice.end(), 0);
    do {
      std::fill(point_choice.begin(), point_choice.end(), 0);
      while (true) {
        for (int m = 0; m < t; ++m) subset[m] = block[part_choice[m]][point_choice[m]] - 1;
        std::sort(subset.begin(), subset.end());
        ++counts[colex_rank(subset, choose)];
        int m = t - 1;
        while (m >= 0 && point_choice[m] == c - 1) point_choice[m--] = 0;
        if (m < 0) break;
        ++point_choice[m];
      }
    } while (next_combination(part_choice, u));
  }

  std::vector<int> combo(t);
  std::iota(combo.begin(), combo.end(), 0);
  const std::int64_t expected = counts[colex_rank(combo, choose)];
  do {
    const std::int64_t actual = counts[colex_rank(combo, choose)];
    if (actual != expected || actual == 0) {
      CoverageWitness witness;
      for (int x : combo) witness.points.push_back(x + 1);
      witness.actual = actual;
      witness.expected = expected == 0 ? 1 : expected;
      result.witness = std::move(witness);
      return result;
    }
  } while (next_combination(combo, v));

  result.ok = true;
  result.params = DesignParams{t, v, static_cast<std::int64_t>(design.blocks.size()), c, u, expected};
  return result;
}

bool downgrade_check(const SplittingDesign& design, int t) {
  const VerificationResult top = verify_design(design, t);
  if (!top.ok) return false;
  for (int s = 1; s < t; ++s) {
    const VerificationResult lower = verify_design(design, s);
    if (!lower.ok) return false;
    if (Rational(BigInt(lower.params->lambda)) != lambda_level(*top.params, s)) return false;
  }
  return true;
}

}  // namespace splitauth
