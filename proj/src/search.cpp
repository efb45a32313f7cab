#include "pav/search.hpp"

#include <chrono>
#include <stdexcept>
#include <vector>

namespace pav {

namespace {

struct Dfs {
  const Pattern& p;
  int sigma;
  int max_depth;
  unsigned long long budget;

  HashedWord w;
  std::vector<unsigned long long> depth_count;
  unsigned long long nodes = 0;
  bool budget_hit = false;
  bool witness_found = false;

  enum class Step { Continue, Stop };

  Step visit(int depth) {
    ++nodes;
    ++depth_count[depth];
    if (depth == max_depth) {
      witness_found = true;
      return Step::Stop;
    }
    if (nodes > budget) {
      budget_hit = true;
      return Step::Stop;
    }
    int first = depth == 0 ? 1 : sigma;  // symmetry: root child fixed to 0
    for (int letter = 0; letter < first; ++letter) {
      w.push(static_cast<uint8_t>(letter));
      bool pruned = has_suffix_occurrence(w, p, w.size());
      if (!pruned && visit(depth + 1) == Step::Stop) return Step::Stop;
      w.pop(1);
    }
    return Step::Continue;
  }
};

}  // namespace

SearchOutcome backtrack_avoid(const Pattern& p, int sigma, int max_depth,
                              unsigned long long node_budget) {
  if (sigma < 1) throw std::invalid_argument("backtrack_avoid: sigma must be >= 1");
  if (max_depth < 1) throw std::invalid_argument("backtrack_avoid: max_depth must be >= 1");

  auto start = std::chrono::steady_clock::now();
  Dfs dfs{p, sigma, max_depth, node_budget, HashedWord(), {}, 0, false, false};
  dfs.w.clear(sigma);
  dfs.depth_count.assign(static_cast<size_t>(max_depth) + 1, 0);
  dfs.visit(0);

  SearchOutcome out;
  out.nodes_visited = dfs.nodes;
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();

  if (dfs.witness_found) {
    out.kind = SearchOutcome::Kind::DepthReached;
    out.max_len = max_depth;
    out.witness = dfs.w.word();
    return out;
  }

  int deepest = 0;
  for (int d = max_depth; d >= 0; --d) {
    if (dfs.depth_count[d] > 0) { deepest = d; break; }
  }
  out.max_len = deepest;

  if (dfs.budget_hit) {
    out.kind = SearchOutcome::Kind::BudgetExceeded;
    return out;
  }

  out.kind = SearchOutcome::Kind::Exhausted;
  out.maximal_word_count =
      deepest == 0 ? 1
                   : dfs.depth_count[deepest] * static_cast<unsigned long long>(sigma);
  return out;
}

std::optional<bool> unavoidability_probe(const Pattern& p, int sigma, int length,
                                         unsigned long long node_budget) {
  if (length < 1) return true;  // the empty word is the only word, vacuous
  SearchOutcome out = backtrack_avoid(p, sigma, length, node_budget);
  switch (out.kind) {
    case SearchOutcome::Kind::DepthReached: return false;
    case SearchOutcome::Kind::Exhausted: return true;
    case SearchOutcome::Kind::BudgetExceeded: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace pav
