#include "pav/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace pav {

namespace {

void check_sigma(int sigma) {
  if (sigma < 1 || sigma > 10) {
    throw std::invalid_argument("word: sigma must be in [1, 10]");
  }
}

}  // namespace

Word::Word(std::vector<uint8_t> l, int s) : letters(std::move(l)), sigma(s) {
  check_sigma(sigma);
  for (uint8_t x : letters) {
    if (x >= sigma) throw std::invalid_argument("word: letter out of alphabet");
  }
}

Word Word::from_string(std::string_view s, int sigma) {
  check_sigma(sigma);
  std::vector<uint8_t> letters;
  letters.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9') {
      throw std::invalid_argument("word: invalid character at position " +
                                  std::to_string(i + 1));
    }
    letters.push_back(static_cast<uint8_t>(c - '0'));
  }
  return Word(std::move(letters), sigma);
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters.size());
  for (uint8_t x : letters) s.push_back(static_cast<char>('0' + x));
  return s;
}

void HashedWord::assign(const Word& w) {
  clear(w.sigma);
  for (uint8_t x : w.letters) push(x);
}

void HashedWord::clear(int sigma) {
  check_sigma(sigma);
  sigma_ = sigma;
  letters_.clear();
  pref_.assign(1, 0);
  pow_.assign(1, 1);
  finger_.clear();
}

void HashedWord::push(uint8_t letter) {
  letters_.push_back(letter);
  pref_.push_back(pref_.back() * kBase + letter + 1);
  pow_.push_back(pow_.back() * kBase);
  size_t e = letters_.size();
  if (e >= kFingerprint) {
    finger_[hash(e - kFingerprint, e)].push_back(static_cast<int>(e));
  }
}

void HashedWord::pop(size_t count) {
  for (size_t e = letters_.size(); e > letters_.size() - count; --e) {
    if (e < kFingerprint) break;
    auto it = finger_.find(hash(e - kFingerprint, e));
    it->second.pop_back();
    if (it->second.empty()) finger_.erase(it);
  }
  letters_.resize(letters_.size() - count);
  pref_.resize(letters_.size() + 1);
  pow_.resize(letters_.size() + 1);
}

bool HashedWord::equal(size_t a1, size_t a2, size_t len) const {
  return std::equal(letters_.begin() + a1, letters_.begin() + a1 + len,
                    letters_.begin() + a2);
}

size_t HashedWord::common_suffix(size_t e1, size_t e2, size_t cap) const {
  size_t hi = std::min({cap, e1, e2});
  if (hi == 0 || letters_[e1 - 1] != letters_[e2 - 1]) return 0;
  size_t lo = 1;
  while (lo < hi) {
    size_t mid = lo + (hi - lo + 1) / 2;
    if (hash(e1 - mid, e1) == hash(e2 - mid, e2)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace pav
