#include "splitauth/acode.hpp"

#include "splitauth/error.hpp"
#include "splitauth/verify.hpp"

#include <algorithm>
#include <sstream>

namespace splitauth {

namespace {

std::vector<Rational> uniform(std::size_t n) {
  return std::vector<Rational>(n, Rational(1, static_cast<long long>(n)));
}

void check_distribution(const std::vector<Rational>& weights, std::size_t expected_size,
                        const std::string& name) {
  if (weights.size() != expected_size) {
    throw ValidationError(name + " has " + std::to_string(weights.size()) + " weights, expected " +
                          std::to_string(expected_size));
  }
  Rational total = 0;
  for (const Rational& w : weights) {
    if (w < 0) throw ValidationError(name + " has a negative weight");
    total += w;
  }
  if (total != 1) {
    throw ValidationError(name + " sums to " + to_display_string(total) + ", expected 1");
  }
}

Part ascending(const Part& part) {
  Part sorted = part;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

}  // namespace

SplittingACode::SplittingACode(
    int v, std::vector<Block> rules, std::optional<std::vector<Rational>> key_dist,
    std::optional<std::vector<Rational>> source_dist,
    std::optional<std::vector<std::vector<std::vector<Rational>>>> split_dist)
    : v_(v), rules_(std::move(rules)) {
  if (rules_.empty()) throw ValidationError("a code needs at least one encoding rule");
  SplittingDesign as_design{v_, 2, rules_, std::nullopt};
  const std::vector<StructureDefect> defects = check_structure(as_design);
  if (!defects.empty()) {
    throw ValidationError("encoding rule e" + std::to_string(defects.front().block_index + 1) +
                          " violates " + defects.front().clause + ": " + defects.front().detail);
  }
  u_ = static_cast<int>(rules_.front().size());
  c_ = static_cast<int>(rules_.front().front().size());

  key_dist_ = key_dist ? std::move(*key_dist) : uniform(rules_.size());
  check_distribution(key_dist_, rules_.size(), "key_dist");
  source_dist_ = source_dist ? std::move(*source_dist) : uniform(u_);
  check_distribution(source_dist_, u_, "source_dist");

  if (split_dist) {
    if (split_dist->size() != rules_.size()) {
      throw ValidationError("split_dist needs one entry per encoding rule");
    }
    for (std::size_t e = 0; e < rules_.size(); ++e) {
      if ((*split_dist)[e].size() != static_cast<std::size_t>(u_)) {
        throw ValidationError("split_dist needs one entry per source state");
      }
      for (int s = 0; s < u_; ++s) {
        check_distribution((*split_dist)[e][s], c_,
                           "split_dist[e" + std::to_string(e + 1) + "][s" + std::to_string(s + 1) + "]");
      }
    }
    split_dist_ = std::move(*split_dist);
  } else {
    split_dist_.assign(rules_.size(),
                       std::vector<std::vector<Rational>>(u_, uniform(c_)));
  }
  index_messages();
}

void SplittingACode::index_messages() {
  source_lookup_.assign(rules_.size(), std::vector<int>(v_ + 1, -1));
  for (std::size_t e = 0; e < rules_.size(); ++e) {
    for (int s = 0; s < u_; ++s) {
      for (int m : rules_[e][s]) source_lookup_[e][m] = s;
    }
  }
}

const Part& SplittingACode::cell(std::size_t rule, int source) const {
  if (rule >= rules_.size() || source < 0 || source >= u_) {
    throw DomainError("cell index out of range");
  }
  return rules_[rule][source];
}

const Rational& SplittingACode::split_weight(std::size_t rule, int source, int index) const {
  if (rule >= rules_.size() || source < 0 || source >= u_ || index < 0 || index >= c_) {
    throw DomainError("splitting index out of range");
  }
  return split_dist_[rule][source][index];
}

bool SplittingACode::split_is_uniform() const {
  const Rational expected(1, c_);
  for (const auto& per_rule : split_dist_) {
    for (const auto& per_source : per_rule) {
      for (const Rational& w : per_source) {
        if (w != expected) return false;
      }
    }
  }
  return true;
}

Rational SplittingACode::split_weight_of_message(std::size_t rule, int source, int message) const {
  const Part sorted = ascending(cell(rule, source));
  const auto it = std::find(sorted.begin(), sorted.end(), message);
  if (it == sorted.end()) return 0;
  return split_dist_[rule][source][it - sorted.begin()];
}

std::optional<int> SplittingACode::source_of(std::size_t rule, int message) const {
  if (rule >= rules_.size()) throw DomainError("rule index out of range");
  if (message < 1 || message > v_) return std::nullopt;
  const int s = source_lookup_[rule][message];
  if (s < 0) return std::nullopt;
  return s;
}

void SplittingACode::set_orbit_starts(std::vector<std::size_t> starts) {
  orbit_starts_ = std::move(starts);
}

SplittingACode SplittingACode::with_key_dist(std::vector<Rational> key_dist) const {
  SplittingACode copy(v_, rules_, std::move(key_dist), source_dist_, split_dist_);
  copy.orbit_starts_ = orbit_starts_;
  return copy;
}

SplittingACode SplittingACode::with_source_dist(std::vector<Rational> source_dist) const {
  SplittingACode copy(v_, rules_, key_dist_, std::move(source_dist), split_dist_);
  copy.orbit_starts_ = orbit_starts_;
  return copy;
}

SplittingACode code_from_design(const SplittingDesign& design, int t) {
  if (design.blocks.empty()) throw ValidationError("cannot build a code from an empty design");
  if (t < 2) throw DomainError("code construction needs strength t >= 2");
  const VerificationResult verified = verify_design(design, t);
  if (!verified.ok) throw ValidationError("design does not verify: " + verified.summary());
  if (verified.params->lambda != 1) {
    throw ValidationError("code construction needs lambda = 1, got " +
                          std::to_string(verified.params->lambda));
  }
  SplittingACode code(design.v, design.blocks);
  if (design.provenance) {
    std::vector<std::size_t> starts;
    std::size_t row = 0;
    for (const OrbitInfo& orbit : design.provenance->orbits) {
      if (row > 0) starts.push_back(row);
      row += orbit.length;
    }
    code.set_orbit_starts(std::move(starts));
  }
  return code;
}

SplittingDesign design_from_code(const SplittingACode& code, int t) {
  return SplittingDesign{code.v(), t, code.rules(), std::nullopt};
}

int encode(const SplittingACode& code, std::size_t rule, int source, int r) {
  const Part& cell = code.cell(rule, source);
  if (r < 0 || r >= code.c()) throw DomainError("splitting index out of range");
  return ascending(cell)[r];
}

std::optional<int> decode(const SplittingACode& code, std::size_t rule, int message) {
  return code.source_of(rule, message);
}

std::vector<int> valid_messages(const SplittingACode& code, std::size_t rule) {
  if (rule >= code.b()) throw DomainError("rule index out of range");
  std::vector<int> messages;
  for (const Part& part : code.rules()[rule]) messages.insert(messages.end(), part.begin(), part.end());
  std::sort(messages.begin(), messages.end());
  return messages;
}

std::string subscript(std::size_t n) {
  static const char* const kDigits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  const std::string decimal = std::to_string(n);
  std::string out;
  for (char d : decimal) out += kDigits[d - '0'];
  return out;
}

std::string format_part(const Part& part) {
  std::string out = "{";
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(part[i]);
  }
  return out + "}";
}

EncodingMatrix render_matrix(const SplittingACode& code) {
  EncodingMatrix matrix;
  for (int s = 0; s < code.u(); ++s) matrix.col_labels.push_back("s" + subscript(s + 1));
  for (std::size_t e = 0; e < code.b(); ++e) {
    matrix.row_labels.push_back("e" + subscript(e + 1));
    std::vector<std::string> row;
    for (const Part& part : code.rules()[e]) row.push_back(format_part(part));
    matrix.cells.push_back(std::move(row));
  }
  matrix.orbit_starts = code.orbit_starts();
  return matrix;
}

std::string matrix_to_text(const EncodingMatrix& matrix) {
  std::ostringstream out;
  for (std::size_t e = 0; e < matrix.cells.size(); ++e) {
    if (std::find(matrix.orbit_starts.begin(), matrix.orbit_starts.end(), e) !=
        matrix.orbit_starts.end()) {
      out << "- - -\n";
    }
    out << matrix.row_labels[e];
    for (const std::string& cell : matrix.cells[e]) out << ' ' << cell;
    out << '\n';
  }
  return out.str();
}

std::string matrix_to_markdown(const EncodingMatrix& matrix) {
  std::ostringstream out;
  out << "| |";
  for (const std::string& label : matrix.col_labels) out << ' ' << label << " |";
  out << "\n|---|";
  for (std::size_t s = 0; s < matrix.col_labels.size(); ++s) out << "---|";
  out << '\n';
  for (std::size_t e = 0; e < matrix.cells.size(); ++e) {
    out << "| " << matrix.row_labels[e] << " |";
    for (const std::string& cell : matrix.cells[e]) out << ' ' << cell << " |";
    out << '\n';
  }
  return out.str();
}

std::string matrix_to_csv(const EncodingMatrix& matrix) {
  std::ostringstream out;
  out << "rule";
  for (std::size_t s = 0; s < matrix.col_labels.size(); ++s) out << ",s" << s + 1;
  out << '\n';
  for (std::size_t e = 0; e < matrix.cells.size(); ++e) {
    out << 'e' << e + 1;
    for (const std::string& cell : matrix.cells[e]) out << ",\"" << cell << '"';
    out << '\n';
  }
  return out.str();
}

}  // namespace splitauth
