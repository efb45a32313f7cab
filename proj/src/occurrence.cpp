#include "pav/occurrence.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace pav {

std::optional<Occurrence> instance_check(const Word& f, const Pattern& p,
                                         std::span<const long long> lengths) {
  int k = p.variable_count();
  if (static_cast<int>(lengths.size()) != k) {
    throw std::invalid_argument("instance_check: one length per variable expected");
  }
  long long total = 0;
  for (int j = 0; j < k; ++j) {
    if (lengths[j] < 1) throw std::invalid_argument("instance_check: lengths must be >= 1");
    total += static_cast<long long>(p.multiplicities()[j]) * lengths[j];
  }
  if (total != static_cast<long long>(f.size())) {
    throw std::invalid_argument("instance_check: length sum does not match |f|");
  }

  std::vector<std::vector<uint8_t>> bindings(k);
  size_t off = 0;
  for (char c : p.text()) {
    int v = p.variable_index(c);
    size_t len = static_cast<size_t>(lengths[v]);
    if (bindings[v].empty()) {
      bindings[v].assign(f.letters.begin() + off, f.letters.begin() + off + len);
    } else if (!std::equal(bindings[v].begin(), bindings[v].end(),
                           f.letters.begin() + off)) {
      return std::nullopt;
    }
    off += len;
  }

  Occurrence occ;
  occ.lengths.assign(lengths.begin(), lengths.end());
  occ.bindings = std::move(bindings);
  occ.total_length = total;
  long long sum = 0;
  for (int j = 0; j + 1 < k; ++j) {
    sum += lengths[j];
    occ.prefix_sums.push_back(sum);
  }
  return occ;
}

namespace {

// Matches the pattern against suffixes of w[0..end), consuming the pattern
// text from its last letter leftward. Variable lengths are fixed lazily:
// a maximal run of first occurrences forms a block, and only the block total
// is enumerated when the walk has to cross it. Individual lengths inside a
// block are enumerated once a later occurrence of that variable needs them.
// Content checks use rolling hashes; every accepted assignment is verified
// exactly before it counts.
class SuffixMatcher {
 public:
  enum class Mode { kExists, kCollect };

  SuffixMatcher(const HashedWord& w, const Pattern& p, size_t end, Mode mode)
      : w_(w), p_(p), end_(end), mode_(mode),
        k_(p.variable_count()), m_(p.length()) {
    rt_.resize(m_);
    for (int i = 0; i < m_; ++i) rt_[i] = p.variable_index(p.text()[m_ - 1 - i]);
    cnt_after_.assign(static_cast<size_t>(m_ + 1) * k_, 0);
    for (int i = m_ - 1; i >= 0; --i) {
      for (int v = 0; v < k_; ++v) {
        cnt_after_[i * k_ + v] = cnt_after_[(i + 1) * k_ + v];
      }
      ++cnt_after_[i * k_ + rt_[i]];
    }
    block_of_.assign(k_, -1);
    idx_in_block_.assign(k_, -1);
    blocks_.reserve(k_);
    frontier_ = end_;
  }

  void run() {
    if (end_ < static_cast<size_t>(m_)) return;
    walk(0);
  }

  bool found() const { return found_; }
  std::vector<Occurrence>& results() { return results_; }

 private:
  struct Block {
    std::vector<int> members;       // variable ids, rightmost segment first
    std::vector<long long> cut;     // cut[i] = sum of member lengths [0, i); -1 unknown
    size_t right_end = 0;
    bool closed = false;            // closed <=> cut[members.size()] known
  };

  long long len_or_unknown(int v) const {
    int bi = block_of_[v];
    if (bi < 0) return -1;
    const Block& blk = blocks_[bi];
    int j = idx_in_block_[v];
    if (blk.cut[j] < 0 || blk.cut[j + 1] < 0) return -1;
    return blk.cut[j + 1] - blk.cut[j];
  }

  // Absolute end of v's binding segment; requires cut[idx(v)] known.
  long long binding_end(int v) const {
    const Block& blk = blocks_[block_of_[v]];
    return static_cast<long long>(blk.right_end) - blk.cut[idx_in_block_[v]];
  }

  // Lower bound on the total length still needed by positions pos..m-1.
  long long min_rest(int pos) const {
    long long total = 0;
    const int* row = &cnt_after_[static_cast<size_t>(pos) * k_];
    for (int v = 0; v < k_; ++v) {
      if (!row[v]) continue;
      long long len = len_or_unknown(v);
      total += static_cast<long long>(row[v]) * (len < 0 ? 1 : len);
    }
    return total;
  }

  // Return value true means: stop the whole search (existence satisfied).
  bool walk(int pos) {
    if (pos == m_) return accept();
    int v = rt_[pos];
    if (block_of_[v] < 0) return push_new(pos, v);
    if (!blocks_.empty() && !blocks_.back().closed) return close_and_process(pos, v);
    return process_seen(pos, v);
  }

  bool push_new(int pos, int v) {
    if (blocks_.empty() || blocks_.back().closed) {
      blocks_.emplace_back();
      Block& blk = blocks_.back();
      blk.right_end = frontier_;
      blk.cut.assign(1, 0);
    }
    int bi = static_cast<int>(blocks_.size()) - 1;
    block_of_[v] = bi;
    idx_in_block_[v] = static_cast<int>(blocks_[bi].members.size());
    blocks_[bi].members.push_back(v);
    blocks_[bi].cut.push_back(-1);

    bool stop = walk(pos + 1);

    blocks_[bi].members.pop_back();
    blocks_[bi].cut.pop_back();
    block_of_[v] = -1;
    idx_in_block_[v] = -1;
    if (blocks_[bi].members.empty()) blocks_.pop_back();
    return stop;
  }

  // The walk reached a non-new event while the last block is open: enumerate
  // the block total, then handle the event.
  bool close_and_process(int pos, int v) {
    int bi = static_cast<int>(blocks_.size()) - 1;
    long long members = static_cast<long long>(blocks_[bi].members.size());
    long long t_max = static_cast<long long>(frontier_) - min_rest(pos);
    if (t_max < members) return false;

    // When the event is a content check of a long segment with a fixed
    // binding, only block totals placing the frontier at an occurrence of
    // that binding can survive; jump straight to them via the fingerprint
    // index instead of scanning every total.
    int vb = block_of_[v];
    int j = idx_in_block_[v];
    if (vb != bi && blocks_[vb].cut[j] >= 0 && blocks_[vb].cut[j + 1] >= 0 &&
        blocks_[vb].cut[j + 1] - blocks_[vb].cut[j] >=
            static_cast<long long>(kFingerprint)) {
      size_t bend = static_cast<size_t>(binding_end(v));
      size_t right = blocks_[bi].right_end;
      const std::vector<int>* positions = finger_lookup(bend);
      if (!positions) return false;
      size_t e_lo = right - static_cast<size_t>(t_max);
      size_t e_hi = right - static_cast<size_t>(members);
      auto it = std::lower_bound(positions->begin(), positions->end(),
                                 static_cast<int>(e_lo));
      bool stop = false;
      for (; it != positions->end() && static_cast<size_t>(*it) <= e_hi && !stop;
           ++it) {
        size_t e = static_cast<size_t>(*it);
        Block& blk = blocks_[bi];
        blk.cut.back() = static_cast<long long>(right - e);
        blk.closed = true;
        size_t saved = frontier_;
        frontier_ = e;
        stop = process_seen(pos, v);
        frontier_ = saved;
        blocks_[bi].closed = false;
        blocks_[bi].cut.back() = -1;
      }
      return stop;
    }

    bool stop = false;
    for (long long t = members; t <= t_max && !stop; ++t) {
      Block& blk = blocks_[bi];
      blk.cut.back() = t;
      blk.closed = true;
      size_t saved = frontier_;
      frontier_ = blk.right_end - static_cast<size_t>(t);
      stop = process_seen(pos, v);
      frontier_ = saved;
      blocks_[bi].closed = false;
      blocks_[bi].cut.back() = -1;
    }
    return stop;
  }

  // Positions e whose preceding kFingerprint letters hash like the ones
  // before bend; a superset of the true matches, built on first use.
  const std::vector<int>* finger_lookup(size_t bend) {
    if (!finger_built_) {
      for (size_t e = kFingerprint; e <= end_; ++e) {
        finger_[w_.hash(e - kFingerprint, e)].push_back(static_cast<int>(e));
      }
      finger_built_ = true;
    }
    auto it = finger_.find(w_.hash(bend - kFingerprint, bend));
    return it == finger_.end() ? nullptr : &it->second;
  }

  bool process_seen(int pos, int v) {
    int bi = block_of_[v];
    int j = idx_in_block_[v];
    if (blocks_[bi].cut[j] >= 0) return with_lower_cut(pos, v);

    int lo = j, hi = j + 1;
    while (blocks_[bi].cut[lo] < 0) --lo;
    while (blocks_[bi].cut[hi] < 0) ++hi;
    long long base = blocks_[bi].cut[lo];
    long long s_max = (blocks_[bi].cut[hi] - base) - (hi - j);
    bool stop = false;
    for (long long s = j - lo; s <= s_max && !stop; ++s) {
      blocks_[bi].cut[j] = base + s;
      stop = with_lower_cut(pos, v);
      blocks_[bi].cut[j] = -1;
    }
    return stop;
  }

  // cut[idx(v)] is known; fix cut[idx(v)+1] if needed, check content at the
  // frontier, and continue the walk.
  bool with_lower_cut(int pos, int v) {
    int bi = block_of_[v];
    int j = idx_in_block_[v];
    long long bend = binding_end(v);

    if (blocks_[bi].cut[j + 1] >= 0) {
      long long c = blocks_[bi].cut[j + 1] - blocks_[bi].cut[j];
      if (c < 1 || static_cast<long long>(frontier_) < c) return false;
      if (w_.at(frontier_ - 1) != w_.at(static_cast<size_t>(bend) - 1)) return false;
      if (!w_.hash_equal(frontier_ - c, static_cast<size_t>(bend - c),
                         static_cast<size_t>(c))) {
        return false;
      }
      if (static_cast<long long>(frontier_) - c < min_rest(pos + 1)) return false;
      frontier_ -= static_cast<size_t>(c);
      bool stop = walk(pos + 1);
      frontier_ += static_cast<size_t>(c);
      return stop;
    }

    int hi = j + 2;
    while (blocks_[bi].cut[hi] < 0) ++hi;
    long long block_bound =
        (blocks_[bi].cut[hi] - blocks_[bi].cut[j]) - (hi - (j + 1));
    int later = cnt_after_[static_cast<size_t>(pos + 1) * k_ + v];
    long long base_others = min_rest(pos + 1) - later;
    long long budget_bound =
        (static_cast<long long>(frontier_) - base_others) / (1 + later);
    long long cap = std::min(block_bound, budget_bound);
    if (cap < 1) return false;
    // Every c up to the common-suffix length passes the content check.
    long long lcs = static_cast<long long>(
        w_.common_suffix(frontier_, static_cast<size_t>(bend),
                         static_cast<size_t>(cap)));
    bool stop = false;
    for (long long c = 1; c <= lcs && !stop; ++c) {
      blocks_[bi].cut[j + 1] = blocks_[bi].cut[j] + c;
      frontier_ -= static_cast<size_t>(c);
      stop = walk(pos + 1);
      frontier_ += static_cast<size_t>(c);
      blocks_[bi].cut[j + 1] = -1;
    }
    return stop;
  }

  bool accept() {
    // A trailing open block holds single-occurrence variables; its total is
    // still free. Closed blocks may have unreferenced interior cuts.
    if (!blocks_.empty() && !blocks_.back().closed) {
      int bi = static_cast<int>(blocks_.size()) - 1;
      long long members = static_cast<long long>(blocks_[bi].members.size());
      if (static_cast<long long>(frontier_) < members) return false;
      if (mode_ == Mode::kExists) {
        blocks_[bi].cut.back() = members;
        blocks_[bi].closed = true;
        bool stop = fill_gaps(0);
        blocks_[bi].closed = false;
        blocks_[bi].cut.back() = -1;
        return stop;
      }
      bool stop = false;
      for (long long t = members;
           t <= static_cast<long long>(frontier_) && !stop; ++t) {
        blocks_[bi].cut.back() = t;
        blocks_[bi].closed = true;
        stop = fill_gaps(0);
        blocks_[bi].closed = false;
        blocks_[bi].cut.back() = -1;
      }
      return stop;
    }
    return fill_gaps(0);
  }

  // Enumerates (or, in existence mode, canonically fills) the still-unknown
  // cuts, then finalizes the assignment.
  bool fill_gaps(size_t flat_index) {
    for (size_t bi = 0; bi < blocks_.size(); ++bi) {
      Block& blk = blocks_[bi];
      for (size_t ci = 0; ci < blk.cut.size(); ++ci) {
        if (blk.cut[ci] >= 0) continue;
        size_t key = bi * 64 + ci;
        if (key < flat_index) continue;
        size_t lo = ci - 1;
        while (blk.cut[lo] < 0) --lo;
        size_t hi = ci + 1;
        while (blk.cut[hi] < 0) ++hi;
        long long first = blk.cut[lo] + static_cast<long long>(ci - lo);
        long long last = blk.cut[hi] - static_cast<long long>(hi - ci);
        if (mode_ == Mode::kExists) {
          blk.cut[ci] = first;
          bool stop = fill_gaps(key + 1);
          blk.cut[ci] = -1;
          return stop;
        }
        bool stop = false;
        for (long long val = first; val <= last && !stop; ++val) {
          blk.cut[ci] = val;
          stop = fill_gaps(key + 1);
          blk.cut[ci] = -1;
        }
        return stop;
      }
    }
    return finalize_candidate();
  }

  bool finalize_candidate() {
    std::vector<long long> lens(k_);
    std::vector<long long> bstart(k_);
    long long total = 0;
    for (int v = 0; v < k_; ++v) {
      const Block& blk = blocks_[block_of_[v]];
      int j = idx_in_block_[v];
      lens[v] = blk.cut[j + 1] - blk.cut[j];
      bstart[v] = static_cast<long long>(blk.right_end) - blk.cut[j + 1];
      total += static_cast<long long>(p_.multiplicities()[v]) * lens[v];
    }
    long long start = static_cast<long long>(end_) - total;
    if (start < 0) return false;

    // Exact verification: the hash checks along the way may have lied.
    long long off = start;
    for (char c : p_.text()) {
      int v = p_.variable_index(c);
      if (!w_.equal(static_cast<size_t>(off), static_cast<size_t>(bstart[v]),
                    static_cast<size_t>(lens[v]))) {
        return false;
      }
      off += lens[v];
    }

    if (mode_ == Mode::kExists) {
      found_ = true;
      return true;
    }

    Occurrence occ;
    occ.lengths = lens;
    occ.total_length = total;
    occ.bindings.resize(k_);
    for (int v = 0; v < k_; ++v) {
      auto b = w_.letters().begin() + bstart[v];
      occ.bindings[v].assign(b, b + lens[v]);
    }
    long long sum = 0;
    for (int j = 0; j + 1 < k_; ++j) {
      sum += lens[j];
      occ.prefix_sums.push_back(sum);
    }
    results_.push_back(std::move(occ));
    return false;
  }

  static constexpr size_t kFingerprint = 24;

  const HashedWord& w_;
  const Pattern& p_;
  size_t end_;
  Mode mode_;
  int k_, m_;
  std::vector<int> rt_;
  std::vector<int> cnt_after_;
  std::vector<int> block_of_;
  std::vector<int> idx_in_block_;
  std::vector<Block> blocks_;
  size_t frontier_ = 0;
  bool found_ = false;
  std::vector<Occurrence> results_;
  bool finger_built_ = false;
  std::unordered_map<uint64_t, std::vector<int>> finger_;
};

void sort_occurrences(std::vector<Occurrence>& occs) {
  std::sort(occs.begin(), occs.end(), [](const Occurrence& a, const Occurrence& b) {
    if (a.total_length != b.total_length) return a.total_length < b.total_length;
    return a.lengths < b.lengths;
  });
}

}  // namespace

std::vector<Occurrence> find_suffix_occurrences(const HashedWord& w,
                                                const Pattern& p, size_t end) {
  SuffixMatcher matcher(w, p, end, SuffixMatcher::Mode::kCollect);
  matcher.run();
  sort_occurrences(matcher.results());
  return std::move(matcher.results());
}

std::vector<Occurrence> find_suffix_occurrences(const Word& w, const Pattern& p) {
  HashedWord hw(w);
  return find_suffix_occurrences(hw, p, w.size());
}

std::optional<Occurrence> first_suffix_occurrence(const HashedWord& w,
                                                  const Pattern& p, size_t end) {
  auto occs = find_suffix_occurrences(w, p, end);
  if (occs.empty()) return std::nullopt;
  return std::move(occs.front());
}

std::optional<Occurrence> first_suffix_occurrence(const Word& w, const Pattern& p) {
  HashedWord hw(w);
  return first_suffix_occurrence(hw, p, w.size());
}

bool has_suffix_occurrence(const HashedWord& w, const Pattern& p, size_t end) {
  SuffixMatcher matcher(w, p, end, SuffixMatcher::Mode::kExists);
  matcher.run();
  return matcher.found();
}

bool has_suffix_occurrence(const Word& w, const Pattern& p) {
  HashedWord hw(w);
  return has_suffix_occurrence(hw, p, w.size());
}

std::optional<std::pair<long long, Occurrence>> contains_instance(const Word& w,
                                                                  const Pattern& p) {
  HashedWord hw(w);
  for (size_t end = p.length(); end <= w.size(); ++end) {
    if (has_suffix_occurrence(hw, p, end)) {
      auto occ = first_suffix_occurrence(hw, p, end);
      return std::make_pair(static_cast<long long>(end), std::move(*occ));
    }
  }
  return std::nullopt;
}

}  // namespace pav
