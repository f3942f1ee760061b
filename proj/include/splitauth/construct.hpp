#pragma once

// Cyclic development of base blocks over Z_v. Points are 1-based residues
// 1..v everywhere in this API; translation wraps v -> 1.

#include <optional>
#include <string>
#include <vector>

namespace splitauth {

using Part = std::vector<int>;
using Block = std::vector<Part>;  // ordered list of u parts

struct BaseBlockFamily {
  int v = 0;
  int u = 0;
  int c = 0;
  std::vector<Block> base_blocks;

  /// Throws ValidationError naming the first offending base block.
  void validate() const;
};

struct OrbitInfo {
  std::size_t base_index = 0;
  int length = 0;
  bool is_full = false;
};

struct Provenance {
  BaseBlockFamily family;
  std::vector<OrbitInfo> orbits;  // one per base block, in family order
};

struct SplittingDesign {
  int v = 0;
  int t = 2;  // intended strength; metadata only
  std::vector<Block> blocks;
  std::optional<Provenance> provenance;

  std::size_t b() const { return blocks.size(); }
};

/// Part-unordered normal form: each part sorted, parts sorted.
Block canonical_block(const Block& block);

Block translate_block(const Block& block, int shift, int v);

struct Orbit {
  OrbitInfo info;
  std::vector<Block> translates;  // shifts 0, 1, ..., length-1
};

Orbit orbit_of(const Block& block, int v);

/// All translates of base block 1, then base block 2, and so on.
SplittingDesign develop_cyclic(const BaseBlockFamily& family, int t = 2);

enum class Congruence { kOne, kL, kNeither };

const char* to_string(Congruence value);

/// Classifies v mod u(u-1)c^2. Throws DomainError for u < 2.
Congruence congruence_condition(int v, int c, int u);

/// Base blocks {{1..c}, {a, a+c, ..., a+c(c-1)}} with a = 2c^2 h - (2c^2-c) + 1,
/// h = 1..n, over v = 2c^2 n + 1.
BaseBlockFamily family_u2(int c, int n);

/// True when the block multiset is unchanged by x -> x+1 mod v.
bool is_cyclic(const SplittingDesign& design);

}  // namespace splitauth
