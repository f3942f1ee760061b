#pragma once

#include "splitauth/construct.hpp"
#include "splitauth/design_core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace splitauth {

struct StructureDefect {
  std::size_t block_index = 0;
  std::string clause;  // "part count", "part size", "disjointness", "point range", ...
  std::string detail;
};

struct CoverageWitness {
  std::vector<int> points;  // lexicographically first failing t-subset
  std::int64_t actual = 0;
  std::int64_t expected = 0;
};

struct VerificationResult {
  bool ok = false;
  std::optional<DesignParams> params;
  std::vector<StructureDefect> defects;
  std::optional<CoverageWitness> witness;

  std::string summary() const;
};

/// Shape (c, u) inferred from the first block; every block is compared to it.
std::vector<StructureDefect> check_structure(const SplittingDesign& design);

/// Blocks in which the given points fall into mutually distinct parts,
/// counted with multiplicity. Throws DomainError for repeated or
/// out-of-range points.
std::int64_t count_covering_blocks(const SplittingDesign& design,
                                   const std::vector<int>& points);

/// Throws DomainError when t < 1 or t > u.
VerificationResult verify_design(const SplittingDesign& design, int t);

/// For every s < t, strength-s verification succeeds with lambda_level(s).
bool downgrade_check(const SplittingDesign& design, int t);

}  // namespace splitauth
