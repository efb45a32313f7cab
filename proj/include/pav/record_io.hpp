// Record document serialization. One JSON document per run with fields
// pattern, sigma, t, D, L, X, final_word and an optional seed.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pav/entropy_sim.hpp"

namespace pav {

struct RecordDocument {
  std::string pattern;
  int sigma = 2;
  long long t = 0;                 // steps, i.e. number of 0s in D
  Record record;
  std::string final_word;
  std::optional<uint64_t> seed;
};

std::string record_document_to_json(const RecordDocument& doc);
RecordDocument record_document_from_json(const std::string& json_text);

void save_record_document(const RecordDocument& doc, const std::string& path);
RecordDocument load_record_document(const std::string& path);

}  // namespace pav
