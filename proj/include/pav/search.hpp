// Exhaustive backtracking over sigma-ary words that avoid a pattern: either
// the tree dies out (with the exact maximal avoiding length) or a witness of
// the requested depth is found.
#pragma once

#include <optional>

#include "pav/occurrence.hpp"
#include "pav/pattern.hpp"
#include "pav/word.hpp"

namespace pav {

struct SearchOutcome {
  enum class Kind { Exhausted, DepthReached, BudgetExceeded };

  Kind kind = Kind::Exhausted;
  /// Exhausted: exact maximum length of a word avoiding p.
  /// BudgetExceeded: deepest length seen before the budget ran out.
  int max_len = 0;
  /// Exhausted only: number of avoiding words of length max_len.
  unsigned long long maximal_word_count = 0;
  /// DepthReached only: lexicographically first witness of length max_depth.
  std::optional<Word> witness;
  unsigned long long nodes_visited = 0;
  double seconds = 0;
};

/// Depth-first search over words with the first letter fixed to 0 (counts
/// are scaled back by sigma). A word is extended only when the new letter
/// does not complete an occurrence of p. Budget overruns yield an explicit
/// BudgetExceeded outcome.
SearchOutcome backtrack_avoid(const Pattern& p, int sigma, int max_depth,
                              unsigned long long node_budget = 1ULL << 62);

/// True iff every word of the given length over sigma letters contains an
/// instance of p; nullopt when the node budget was exhausted first.
std::optional<bool> unavoidability_probe(const Pattern& p, int sigma, int length,
                                         unsigned long long node_budget = 1ULL << 62);

}  // namespace pav
