// Detecting pattern instances in words: verifying a given length assignment
// and enumerating occurrences that form a suffix of a word.
#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pav/pattern.hpp"
#include "pav/word.hpp"

namespace pav {

/// One way a pattern maps onto a factor: a non-erasing morphism given by
/// per-variable lengths and bindings (in variables() order).
struct Occurrence {
  std::vector<long long> lengths;
  std::vector<std::vector<uint8_t>> bindings;
  long long total_length = 0;             // sum of a_j * lengths_j
  std::vector<long long> prefix_sums;     // L_1 .. L_{k-1}

  bool operator==(const Occurrence&) const = default;
};

/// Checks whether cutting f according to p with the given per-variable
/// lengths yields consistent bindings. Requires sum a_j * lengths_j == |f|.
std::optional<Occurrence> instance_check(const Word& f, const Pattern& p,
                                         std::span<const long long> lengths);

/// All occurrences whose factor is a suffix of w, ordered by total length
/// ascending, then lexicographically by the lengths tuple.
std::vector<Occurrence> find_suffix_occurrences(const Word& w, const Pattern& p);
std::vector<Occurrence> find_suffix_occurrences(const HashedWord& w, const Pattern& p,
                                                size_t end);

/// First element of find_suffix_occurrences, without keeping the rest.
std::optional<Occurrence> first_suffix_occurrence(const Word& w, const Pattern& p);
std::optional<Occurrence> first_suffix_occurrence(const HashedWord& w, const Pattern& p,
                                                  size_t end);

bool has_suffix_occurrence(const Word& w, const Pattern& p);
bool has_suffix_occurrence(const HashedWord& w, const Pattern& p, size_t end);

/// First occurrence over all prefixes of w: smallest end position, then
/// suffix-occurrence order. Returns (end_position, occurrence).
std::optional<std::pair<long long, Occurrence>> contains_instance(const Word& w,
                                                                  const Pattern& p);

}  // namespace pav
