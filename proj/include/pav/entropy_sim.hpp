// The word-building algorithm that appends input letters and erases pattern
// occurrences, its lossless record (D, L, X), the decoder reconstructing the
// input from (record, final word), and a seeded simulation harness.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pav/occurrence.hpp"
#include "pav/pattern.hpp"
#include "pav/word.hpp"

namespace pav {

class CorruptRecordError : public std::runtime_error {
 public:
  explicit CorruptRecordError(const std::string& msg)
      : std::runtime_error("corrupt record: " + msg) {}
};

/// Data appended to the record for one erased factor of length l.
struct ErasureEntry {
  std::vector<long long> prefix_set;      // L': k-1 strictly increasing positives
  std::vector<uint8_t> padded_bindings;   // X': bindings + zero padding, floor(l/2)
  long long erased_length = 0;
};

/// The run record. D holds one '0' per appended letter and one '1' per
/// erased letter; entries of L and X pair up with the descents of D in order.
struct Record {
  std::string d;
  std::vector<std::vector<long long>> l_sets;
  std::vector<std::vector<uint8_t>> x_words;

  bool operator==(const Record&) const = default;
};

struct SimTrace {
  long long steps = 0;
  long long erasure_count = 0;
  std::vector<long long> erased_lengths;
  long long final_word_length = 0;
};

struct SimResult {
  Record record;
  Word word;
  SimTrace trace;
};

/// Step-by-step simulator. Feed letters; the current word always avoids the
/// pattern. Requires a doubled pattern (so the bindings fit in floor(l/2))
/// and sigma >= 2.
class AvoidPatternSim {
 public:
  AvoidPatternSim(const Pattern& p, int sigma);

  /// Appends one letter; detects a suffix occurrence (smallest total length,
  /// then lexicographically smallest lengths tuple), erases it and extends
  /// the record if present.
  void step(uint8_t letter);

  size_t word_size() const { return w_.size(); }
  Word word() const { return w_.word(); }
  const Record& record() const { return record_; }
  SimTrace trace() const;
  const Pattern& pattern() const { return p_; }

 private:
  Pattern p_;
  int sigma_;
  HashedWord w_;
  Record record_;
  long long steps_ = 0;
  std::vector<long long> erased_lengths_;
};

/// Runs the algorithm on the full input vector and returns record, final
/// word and trace.
SimResult run_avoid_pattern(const Pattern& p, int sigma, const Word& input);

/// Reconstructs the input vector from (record, final word) by unwinding the
/// record back to front. Throws CorruptRecordError on inconsistent records.
Word decode_record(const Record& r, const Word& w_final, const Pattern& p,
                   int sigma);

struct SimOutcome {
  bool reached = false;    // word grew to target_n within the step budget
  Word word;
  Record record;
  SimTrace trace;
  uint64_t seed = 0;
};

/// Drives the simulator with letters from SplitMix64(seed) until the word
/// reaches target_n letters or max_steps steps were executed.
SimOutcome simulate_until(const Pattern& p, int sigma, long long target_n,
                          uint64_t seed, long long max_steps);

/// Structural invariant check; returns human-readable violations (empty when
/// the record is well-formed for p).
std::vector<std::string> verify_record(const Record& r, const Pattern& p);

}  // namespace pav
