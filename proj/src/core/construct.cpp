#include "splitauth/construct.hpp"

#include "splitauth/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace splitauth {

namespace {

std::string block_label(std::size_t index) { return "base block " + std::to_string(index + 1); }

}  // namespace

void BaseBlockFamily::validate() const {
  if (v < 1) throw ValidationError("family modulus v must be positive");
  if (u < 1 || c < 1) throw ValidationError("family shape needs u >= 1 and c >= 1");
  for (std::size_t i = 0; i < base_blocks.size(); ++i) {
    const Block& block = base_blocks[i];
    if (static_cast<int>(block.size()) != u) {
      throw ValidationError(block_label(i) + " has " + std::to_string(block.size()) +
                            " parts, expected u=" + std::to_string(u));
    }
    std::set<int> seen;
    for (const Part& part : block) {
      if (static_cast<int>(part.size()) != c) {
        throw ValidationError(block_label(i) + " has a part of size " +
                              std::to_string(part.size()) + ", expected c=" + std::to_string(c));
      }
      for (int x : part) {
        if (x < 1 || x > v) {
          throw ValidationError(block_label(i) + " has point " + std::to_string(x) +
                                " outside 1.." + std::to_string(v));
        }
        if (!seen.insert(x).second) {
          throw ValidationError(block_label(i) + " repeats point " + std::to_string(x));
        }
      }
    }
  }
}

Block canonical_block(const Block& block) {
  Block result = block;
  for (Part& part : result) std::sort(part.begin(), part.end());
  std::sort(result.begin(), result.end());
  return result;
}

Block translate_block(const Block& block, int shift, int v) {
  const int offset = ((shift % v) + v) % v;
  Block result = block;
  for (Part& part : result) {
    for (int& x : part) x = (x - 1 + offset) % v + 1;
  }
  return result;
}

Orbit orbit_of(const Block& block, int v) {
  Orbit orbit;
  const Block base = canonical_block(block);
  orbit.translates.push_back(block);
  // The stabilizer of a block in Z_v is a subgroup, so the first shift that
  // reproduces the block is the orbit length.
  for (int j = 1; j < v; ++j) {
    Block moved = translate_block(block, j, v);
    if (canonical_block(moved) == base) break;
    orbit.translates.push_back(std::move(moved));
  }
  orbit.info.length = static_cast<int>(orbit.translates.size());
  orbit.info.is_full = orbit.info.length == v;
  return orbit;
}

SplittingDesign develop_cyclic(const BaseBlockFamily& family, int t) {
  family.validate();
  SplittingDesign design;
  design.v = family.v;
  design.t = t;
  Provenance provenance;
  provenance.family = family;
  for (std::size_t i = 0; i < family.base_blocks.size(); ++i) {
    Orbit orbit = orbit_of(family.base_blocks[i], family.v);
    orbit.info.base_index = i;
    provenance.orbits.push_back(orbit.info);
    for (Block& block : orbit.translates) design.blocks.push_back(std::move(block));
  }
  design.provenance = std::move(provenance);
  return design;
}

const char* to_string(Congruence value) {
  switch (value) {
    case Congruence::kOne: return "1";
    case Congruence::kL: return "l";
    case Congruence::kNeither: return "neither";
  }
  return "?";
}

Congruence congruence_condition(int v, int c, int u) {
  if (u < 2) throw DomainError("congruence condition needs u >= 2");
  const long long modulus = static_cast<long long>(u) * (u - 1) * c * c;
  const long long residue = v % modulus;
  if (residue == 1 % modulus) return Congruence::kOne;
  if (residue == (static_cast<long long>(c) * u) % modulus) return Congruence::kL;
  return Congruence::kNeither;
}

BaseBlockFamily family_u2(int c, int n) {
  if (c < 1 || n < 1) throw DomainError("family_u2 needs c >= 1 and n >= 1");
  const int step = 2 * c * c;
  BaseBlockFamily family;
  family.v = step * n + 1;
  family.u = 2;
  family.c = c;
  Part first(c);
  for (int k = 0; k < c; ++k) first[k] = k + 1;
  for (int h = 1; h <= n; ++h) {
    const int start = step * h - (step - c) + 1;
    Part second(c);
    for (int k = 0; k < c; ++k) second[k] = start + k * c;
    family.base_blocks.push_back({first, second});
  }
  return family;
}

bool is_cyclic(const SplittingDesign& design) {
  if (design.v < 1) return design.blocks.empty();
  std::map<Block, long long> balance;
  for (const Block& block : design.blocks) {
    ++balance[canonical_block(block)];
    --balance[canonical_block(translate_block(block, 1, design.v))];
  }
  return std::all_of(balance.begin(), balance.end(),
                     [](const auto& entry) { return entry.second == 0; });
}

}  // namespace splitauth
