// Pattern representation and structural analysis: doubled/balanced predicates,
// balanced-factor extraction, doubled reduction, and the two tight families.
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pav {

/// A pattern is a non-empty word over the variable alphabet A..Z.
/// Variables are kept in alphabetical order; multiplicities count how often
/// each variable appears in the text.
class Pattern {
public:
  static Pattern parse(std::string_view text);

  const std::string& text() const { return text_; }
  int length() const { return static_cast<int>(text_.size()); }
  int variable_count() const { return static_cast<int>(vars_.size()); }

  /// Distinct variables, sorted A < B < ... < Z.
  const std::vector<char>& variables() const { return vars_; }
  /// Occurrence counts, aligned with variables().
  const std::vector<int>& multiplicities() const { return mult_; }

  int multiplicity(char v) const;
  /// Index of v in variables(), or -1 when absent.
  int variable_index(char v) const;

  bool operator==(const Pattern& other) const { return text_ == other.text_; }

private:
  Pattern() = default;
  std::string text_;
  std::vector<char> vars_;
  std::vector<int> mult_;
};

struct PatternClass {
  bool doubled = false;
  bool balanced = false;
  int k = 0;
  long long q_k = 0;  // 3 * 2^(k-1)
};

/// 3 * 2^(k-1), the 2-avoidability length threshold for k variables.
long long q_threshold(int k);

PatternClass classify(const Pattern& p);

/// Returns a balanced contiguous factor p' of p with k' variables and
/// |p'| >= f * 2^(k'-1). Requires f >= 2 and |p| >= f * 2^(k-1).
/// When p itself is not balanced, recurses on a half of length floor(|p|/2)
/// missing some variable, trying the prefix half first.
Pattern extract_balanced_factor(const Pattern& p, int f);

/// Requires p doubled. While some variable appears four or more times,
/// replaces the first and third occurrence of the alphabetically smallest
/// such variable with a fresh variable (smallest unused letter). The result
/// has the same length and every variable appearing exactly 2 or 3 times.
Pattern reduce_doubled(const Pattern& p);

/// A, ABA, ABACABA, ...; length 2^k - 1. Requires 1 <= k <= 26.
Pattern zimin(int k);

/// AA, AABAA, AABAACAABAA, ...; length 3 * 2^(k-1) - 1. Requires 1 <= k <= 26.
Pattern aa_family(int k);

}  // namespace pav
