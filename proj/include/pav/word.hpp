// Words over a finite alphabet {0, ..., sigma-1} and a hashed view used by
// the occurrence matcher.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pav {

struct Word {
  std::vector<uint8_t> letters;
  int sigma = 2;

  Word() = default;
  Word(std::vector<uint8_t> l, int s);

  /// Parses a digit string; each digit must be < sigma (sigma <= 10).
  static Word from_string(std::string_view s, int sigma);

  std::string to_string() const;
  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  bool operator==(const Word&) const = default;
};

/// A word plus rolling polynomial hashes of its prefixes. Supports cheap
/// push/pop at the end, O(1) probabilistic segment comparison and binary
/// searched longest-common-suffix queries. Hash equality can produce false
/// positives, so callers re-verify accepted matches exactly.
///
/// Also keeps a fingerprint index: for every position e, the hash of the
/// kFingerprint letters ending at e, mapped to the ascending list of such
/// positions. The occurrence matcher uses it to jump to the candidate
/// placements of long fixed segments.
class HashedWord {
public:
  static constexpr size_t kFingerprint = 24;

  HashedWord() = default;
  explicit HashedWord(const Word& w) { assign(w); }

  void assign(const Word& w);
  void clear(int sigma);
  void push(uint8_t letter);
  void pop(size_t count);

  /// Positions with the given fingerprint hash; nullptr when none.
  const std::vector<int>* finger_positions(uint64_t key) const {
    auto it = finger_.find(key);
    return it == finger_.end() ? nullptr : &it->second;
  }

  size_t size() const { return letters_.size(); }
  uint8_t at(size_t i) const { return letters_[i]; }
  int sigma() const { return sigma_; }
  const std::vector<uint8_t>& letters() const { return letters_; }
  Word word() const { return Word(letters_, sigma_); }

  /// Hash of letters [a, b).
  uint64_t hash(size_t a, size_t b) const {
    return pref_[b] - pref_[a] * pow_[b - a];
  }
  bool hash_equal(size_t a1, size_t a2, size_t len) const {
    return hash(a1, a1 + len) == hash(a2, a2 + len);
  }
  /// Exact comparison of letters [a1, a1+len) and [a2, a2+len).
  bool equal(size_t a1, size_t a2, size_t len) const;

  /// Length of the longest common suffix of the prefixes ending at e1 and
  /// e2, capped at cap. Based on hashes (may overshoot on collision).
  size_t common_suffix(size_t e1, size_t e2, size_t cap) const;

private:
  static constexpr uint64_t kBase = 0x100000001b3ULL;
  std::vector<uint8_t> letters_;
  std::vector<uint64_t> pref_{0};  // pref_[i] = hash of first i letters
  std::vector<uint64_t> pow_{1};
  std::unordered_map<uint64_t, std::vector<int>> finger_;
  int sigma_ = 2;
};

}  // namespace pav
