#include "pav/pattern.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace pav {

Pattern Pattern::parse(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("pattern: empty input");
  }
  std::array<int, 26> counts{};
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c < 'A' || c > 'Z') {
      throw std::invalid_argument("pattern: invalid character at position " +
                                  std::to_string(i + 1) +
                                  " (expected A-Z)");
    }
    ++counts[c - 'A'];
  }
  Pattern p;
  p.text_.assign(text);
  for (int i = 0; i < 26; ++i) {
    if (counts[i] > 0) {
      p.vars_.push_back(static_cast<char>('A' + i));
      p.mult_.push_back(counts[i]);
    }
  }
  return p;
}

int Pattern::multiplicity(char v) const {
  int i = variable_index(v);
  return i < 0 ? 0 : mult_[i];
}

int Pattern::variable_index(char v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) return -1;
  return static_cast<int>(it - vars_.begin());
}

long long q_threshold(int k) {
  if (k < 1 || k > 60) throw std::invalid_argument("q_threshold: k out of range");
  return 3LL << (k - 1);
}

namespace {

bool window_has_all_vars(std::string_view text, size_t begin, size_t len,
                         const std::vector<char>& vars) {
  std::array<bool, 26> seen{};
  for (size_t i = begin; i < begin + len; ++i) seen[text[i] - 'A'] = true;
  for (char v : vars) {
    if (!seen[v - 'A']) return false;
  }
  return true;
}

bool is_balanced(const Pattern& p) {
  for (int m : p.multiplicities()) {
    if (m < 2) return false;
  }
  size_t half = p.text().size() / 2;
  if (half == 0) return false;
  return window_has_all_vars(p.text(), 0, half, p.variables()) &&
         window_has_all_vars(p.text(), p.text().size() - half, half,
                             p.variables());
}

}  // namespace

PatternClass classify(const Pattern& p) {
  PatternClass c;
  c.k = p.variable_count();
  c.q_k = q_threshold(c.k);
  c.doubled = true;
  for (int m : p.multiplicities()) {
    if (m < 2) c.doubled = false;
  }
  c.balanced = c.doubled && is_balanced(p);
  return c;
}

Pattern extract_balanced_factor(const Pattern& p, int f) {
  if (f < 2) throw std::invalid_argument("extract_balanced_factor: f must be >= 2");
  long long need = static_cast<long long>(f) << (p.variable_count() - 1);
  if (p.length() < need) {
    throw std::invalid_argument(
        "extract_balanced_factor: pattern too short: |p| < f * 2^(k-1)");
  }
  if (is_balanced(p)) return p;

  // Not balanced, so some variable misses the prefix or the suffix half.
  size_t half = p.text().size() / 2;
  if (!window_has_all_vars(p.text(), 0, half, p.variables())) {
    return extract_balanced_factor(Pattern::parse(p.text().substr(0, half)), f);
  }
  return extract_balanced_factor(
      Pattern::parse(p.text().substr(p.text().size() - half, half)), f);
}

Pattern reduce_doubled(const Pattern& p) {
  if (!classify(p).doubled) {
    throw std::invalid_argument("reduce_doubled: pattern is not doubled");
  }
  std::string text = p.text();
  for (;;) {
    std::array<int, 26> counts{};
    for (char c : text) ++counts[c - 'A'];

    int target = -1;
    for (int i = 0; i < 26; ++i) {
      if (counts[i] >= 4) { target = i; break; }
    }
    if (target < 0) break;

    int fresh = -1;
    for (int i = 0; i < 26; ++i) {
      if (counts[i] == 0) { fresh = i; break; }
    }
    if (fresh < 0) {
      throw std::length_error("reduce_doubled: more than 26 variables needed");
    }

    // Replace the first and third occurrence of the target variable.
    int seen = 0;
    for (char& c : text) {
      if (c - 'A' == target) {
        ++seen;
        if (seen == 1 || seen == 3) c = static_cast<char>('A' + fresh);
        if (seen == 3) break;
      }
    }
  }
  return Pattern::parse(text);
}

namespace {

Pattern recursive_family(int k, const char* base, const char* name) {
  if (k < 1 || k > 26) {
    throw std::invalid_argument(std::string(name) + ": k out of range [1, 26]");
  }
  std::string text = base;
  for (int i = 2; i <= k; ++i) {
    char mid = static_cast<char>('A' + i - 1);
    text = text + mid + text;
  }
  return Pattern::parse(text);
}

}  // namespace

Pattern zimin(int k) { return recursive_family(k, "A", "zimin"); }

Pattern aa_family(int k) { return recursive_family(k, "AA", "aa_family"); }

}  // namespace pav
