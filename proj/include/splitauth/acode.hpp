#pragma once

// c-splitting authentication codes. A rule (key) e maps source state s to the
// c-subset e(s) of the message space {1..v}; the sets e(s) of one rule are
// pairwise disjoint. Rule, source and splitting indices are 0-based, message
// labels are 1-based.

#include "splitauth/construct.hpp"
#include "splitauth/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace splitauth {

class SplittingACode {
 public:
  // split_weights[e][s][k] is the probability of the k-th smallest message of
  // e(s). Empty optionals mean uniform.
  SplittingACode(int v, std::vector<Block> rules,
                 std::optional<std::vector<Rational>> key_dist = std::nullopt,
                 std::optional<std::vector<Rational>> source_dist = std::nullopt,
                 std::optional<std::vector<std::vector<std::vector<Rational>>>>
                     split_dist = std::nullopt);

  int v() const { return v_; }
  int u() const { return u_; }
  int c() const { return c_; }
  std::size_t b() const { return rules_.size(); }

  const std::vector<Block>& rules() const { return rules_; }
  const Part& cell(std::size_t rule, int source) const;

  const std::vector<Rational>& key_dist() const { return key_dist_; }
  const std::vector<Rational>& source_dist() const { return source_dist_; }
  const Rational& split_weight(std::size_t rule, int source, int index) const;
  const std::vector<std::vector<std::vector<Rational>>>& split_dist() const {
    return split_dist_;
  }
  bool split_is_uniform() const;

  /// Weight of message m inside e(s); 0 if m is not in the cell.
  Rational split_weight_of_message(std::size_t rule, int source, int message) const;

  /// Source index of message m under rule e, or nullopt when m is not in M(e).
  std::optional<int> source_of(std::size_t rule, int message) const;

  // Rows after which a new orbit starts (display only).
  const std::vector<std::size_t>& orbit_starts() const { return orbit_starts_; }
  void set_orbit_starts(std::vector<std::size_t> starts);

  SplittingACode with_key_dist(std::vector<Rational> key_dist) const;
  SplittingACode with_source_dist(std::vector<Rational> source_dist) const;

 private:
  void index_messages();

  int v_ = 0;
  int u_ = 0;
  int c_ = 0;
  std::vector<Block> rules_;
  std::vector<Rational> key_dist_;
  std::vector<Rational> source_dist_;
  std::vector<std::vector<std::vector<Rational>>> split_dist_;
  std::vector<std::vector<int>> source_lookup_;  // [rule][message] -> source or -1
  std::vector<std::size_t> orbit_starts_;
};

/// Rejects designs that do not verify at strength t >= 2 with lambda = 1.
SplittingACode code_from_design(const SplittingDesign& design, int t = 2);

/// Blocks of the code as a design (inverse of code_from_design).
SplittingDesign design_from_code(const SplittingACode& code, int t = 2);

/// r-th (0-based) message of e(s) in ascending order.
int encode(const SplittingACode& code, std::size_t rule, int source, int r);

/// nullopt is REJECT.
std::optional<int> decode(const SplittingACode& code, std::size_t rule, int message);

/// M(e), ascending.
std::vector<int> valid_messages(const SplittingACode& code, std::size_t rule);

struct EncodingMatrix {
  std::vector<std::string> row_labels;  // e₁ ...
  std::vector<std::string> col_labels;  // s₁ ...
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> orbit_starts;
};

/// Cells keep the stored part order, e.g. {9,1}.
EncodingMatrix render_matrix(const SplittingACode& code);

std::string matrix_to_text(const EncodingMatrix& matrix);
std::string matrix_to_markdown(const EncodingMatrix& matrix);
std::string matrix_to_csv(const EncodingMatrix& matrix);

/// "{9,1}"
std::string format_part(const Part& part);

/// Unicode subscript digits: subscript(17) == "₁₇".
std::string subscript(std::size_t n);

}  // namespace splitauth
