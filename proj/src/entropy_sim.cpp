#include "pav/entropy_sim.hpp"

#include <algorithm>
#include <numeric>

#include "pav/rng.hpp"

namespace pav {

AvoidPatternSim::AvoidPatternSim(const Pattern& p, int sigma)
    : p_(p), sigma_(sigma) {
  if (!classify(p).doubled) {
    throw std::invalid_argument("simulator requires a doubled pattern");
  }
  if (sigma < 2) {
    throw std::invalid_argument("simulator requires sigma >= 2");
  }
  w_.clear(sigma);
}

void AvoidPatternSim::step(uint8_t letter) {
  if (letter >= sigma_) throw std::invalid_argument("step: letter out of alphabet");
  w_.push(letter);
  record_.d.push_back('0');
  ++steps_;

  auto occ = first_suffix_occurrence(w_, p_, w_.size());
  if (!occ) return;

  long long len = occ->total_length;
  record_.d.append(static_cast<size_t>(len), '1');
  record_.l_sets.push_back(occ->prefix_sums);

  // X': concatenated bindings padded with zeros to floor(len/2). The pattern
  // being doubled guarantees the bindings fit.
  std::vector<uint8_t> padded;
  padded.reserve(static_cast<size_t>(len / 2));
  for (const auto& b : occ->bindings) padded.insert(padded.end(), b.begin(), b.end());
  padded.resize(static_cast<size_t>(len / 2), 0);
  record_.x_words.push_back(std::move(padded));

  erased_lengths_.push_back(len);
  w_.pop(static_cast<size_t>(len));
}

SimTrace AvoidPatternSim::trace() const {
  SimTrace t;
  t.steps = steps_;
  t.erasure_count = static_cast<long long>(erased_lengths_.size());
  t.erased_lengths = erased_lengths_;
  t.final_word_length = static_cast<long long>(w_.size());
  return t;
}

SimResult run_avoid_pattern(const Pattern& p, int sigma, const Word& input) {
  if (input.sigma != sigma) {
    throw std::invalid_argument("run_avoid_pattern: input vector alphabet mismatch");
  }
  AvoidPatternSim sim(p, sigma);
  for (uint8_t letter : input.letters) sim.step(letter);
  return SimResult{sim.record(), sim.word(), sim.trace()};
}

Word decode_record(const Record& r, const Word& w_final, const Pattern& p,
                   int sigma) {
  int k = p.variable_count();
  const auto& mult = p.multiplicities();

  std::vector<uint8_t> w = w_final.letters;
  std::vector<uint8_t> v_rev;
  size_t di = r.d.size();
  size_t li = r.l_sets.size();
  size_t xi = r.x_words.size();

  while (di > 0) {
    if (r.d[di - 1] == '0') {
      if (w.empty()) throw CorruptRecordError("append step with empty word");
      v_rev.push_back(w.back());
      w.pop_back();
      --di;
      continue;
    }

    // Descent: the step appended one letter and erased a factor of length l.
    long long len = 0;
    while (di > 0 && r.d[di - 1] == '1') { ++len; --di; }
    if (di == 0 || r.d[di - 1] != '0') {
      throw CorruptRecordError("descent without preceding append");
    }
    --di;
    if (li == 0 || xi == 0) throw CorruptRecordError("descent without L/X entry");
    const auto& lset = r.l_sets[--li];
    const auto& xw = r.x_words[--xi];

    if (static_cast<int>(lset.size()) != k - 1) {
      throw CorruptRecordError("L entry has wrong size");
    }
    std::vector<long long> lens(k);
    long long prev = 0;
    long long used = 0;
    for (int j = 0; j + 1 < k; ++j) {
      long long cur = lset[j];
      lens[j] = cur - prev;
      if (lens[j] < 1) throw CorruptRecordError("non-positive variable length");
      used += mult[j] * lens[j];
      prev = cur;
    }
    long long rest = len - used;
    if (rest < mult[k - 1] || rest % mult[k - 1] != 0) {
      throw CorruptRecordError("last variable length not a positive integer");
    }
    lens[k - 1] = rest / mult[k - 1];

    long long bind_total = std::accumulate(lens.begin(), lens.end(), 0LL);
    if (bind_total > static_cast<long long>(xw.size())) {
      throw CorruptRecordError("X entry shorter than the bindings");
    }

    std::vector<std::pair<size_t, size_t>> binding(k);  // offset, length in xw
    size_t off = 0;
    for (int j = 0; j < k; ++j) {
      binding[j] = {off, static_cast<size_t>(lens[j])};
      off += static_cast<size_t>(lens[j]);
    }

    // Rebuild the erased factor and unwind the step.
    std::vector<uint8_t> factor;
    factor.reserve(static_cast<size_t>(len));
    for (char c : p.text()) {
      auto [boff, blen] = binding[p.variable_index(c)];
      factor.insert(factor.end(), xw.begin() + boff, xw.begin() + boff + blen);
    }
    if (factor.empty()) throw CorruptRecordError("rebuilt factor is empty");
    for (uint8_t letter : factor) {
      if (letter >= sigma) throw CorruptRecordError("factor letter out of alphabet");
    }

    v_rev.push_back(factor.back());
    w.insert(w.end(), factor.begin(), factor.end() - 1);
  }

  if (li != 0 || xi != 0) throw CorruptRecordError("unmatched L/X entries");
  if (!w.empty()) throw CorruptRecordError("leftover letters after unwinding");

  std::reverse(v_rev.begin(), v_rev.end());
  return Word(std::move(v_rev), sigma);
}

SimOutcome simulate_until(const Pattern& p, int sigma, long long target_n,
                          uint64_t seed, long long max_steps) {
  AvoidPatternSim sim(p, sigma);
  SplitMix64 rng(seed);
  SimOutcome out;
  out.seed = seed;

  bool reached = static_cast<long long>(sim.word_size()) >= target_n;
  for (long long step = 0; step < max_steps && !reached; ++step) {
    sim.step(static_cast<uint8_t>(rng.below(static_cast<uint64_t>(sigma))));
    reached = static_cast<long long>(sim.word_size()) >= target_n;
  }

  out.reached = reached;
  out.word = sim.word();
  out.record = sim.record();
  out.trace = sim.trace();
  return out;
}

std::vector<std::string> verify_record(const Record& r, const Pattern& p) {
  std::vector<std::string> violations;
  int k = p.variable_count();
  const auto& mult = p.multiplicities();
  long long q_k = q_threshold(k);

  // Prefix balance and descent structure.
  long long zeros = 0, ones = 0;
  std::vector<long long> descents;
  long long run = 0;
  for (size_t i = 0; i < r.d.size(); ++i) {
    char c = r.d[i];
    if (c != '0' && c != '1') {
      violations.push_back("D contains a character other than 0/1");
      return violations;
    }
    if (c == '0') {
      ++zeros;
      if (run > 0) { descents.push_back(run); run = 0; }
    } else {
      ++ones;
      ++run;
      if (ones > zeros) {
        violations.push_back("prefix with more 1s than 0s at position " +
                             std::to_string(i + 1));
        return violations;
      }
    }
  }
  if (run > 0) descents.push_back(run);

  if (descents.size() != r.l_sets.size() || descents.size() != r.x_words.size()) {
    violations.push_back("descent count does not match L/X entry count");
    return violations;
  }

  for (size_t i = 0; i < descents.size(); ++i) {
    long long len = descents[i];
    std::string tag = "descent " + std::to_string(i + 1);
    if (len < p.length()) {
      violations.push_back(tag + ": length below |p|");
    }
    if (p.length() >= q_k && len < q_k) {
      violations.push_back(tag + ": length below q(k)");
    }

    const auto& lset = r.l_sets[i];
    const auto& xw = r.x_words[i];
    if (static_cast<int>(lset.size()) != k - 1) {
      violations.push_back(tag + ": L entry size is not k-1");
      continue;
    }
    bool ok = true;
    long long prev = 0;
    for (long long cur : lset) {
      if (cur <= prev) { ok = false; break; }
      prev = cur;
    }
    if (!ok) {
      violations.push_back(tag + ": L entry not strictly increasing positives");
      continue;
    }
    if (!lset.empty() && lset.back() >= len) {
      violations.push_back(tag + ": L entry element not below the factor length");
    }
    if (static_cast<long long>(xw.size()) != len / 2) {
      violations.push_back(tag + ": X entry length is not floor(l/2)");
    }

    // Derive the variable lengths and check the zero padding.
    std::vector<long long> lens(k);
    long long used = 0;
    prev = 0;
    for (int j = 0; j + 1 < k; ++j) {
      lens[j] = lset[j] - prev;
      used += mult[j] * lens[j];
      prev = lset[j];
    }
    long long rest = len - used;
    if (rest < mult[k - 1] || rest % mult[k - 1] != 0) {
      violations.push_back(tag + ": last variable length not a positive integer");
      continue;
    }
    lens[k - 1] = rest / mult[k - 1];
    long long bind_total = std::accumulate(lens.begin(), lens.end(), 0LL);
    if (bind_total > static_cast<long long>(xw.size())) {
      violations.push_back(tag + ": bindings do not fit in the X entry");
      continue;
    }
    for (size_t j = static_cast<size_t>(bind_total); j < xw.size(); ++j) {
      if (xw[j] != 0) {
        violations.push_back(tag + ": non-zero padding in the X entry");
        break;
      }
    }
  }

  return violations;
}

}  // namespace pav
