#include "pav/record_io.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace pav {

namespace {

std::string letters_to_string(const std::vector<uint8_t>& letters) {
  std::string s;
  s.reserve(letters.size());
  for (uint8_t x : letters) s.push_back(static_cast<char>('0' + x));
  return s;
}

std::vector<uint8_t> letters_from_string(const std::string& s) {
  std::vector<uint8_t> letters;
  letters.reserve(s.size());
  for (char c : s) {
    if (c < '0' || c > '9') throw CorruptRecordError("invalid letter in document");
    letters.push_back(static_cast<uint8_t>(c - '0'));
  }
  return letters;
}

}  // namespace

std::string record_document_to_json(const RecordDocument& doc) {
  nlohmann::json j;
  j["pattern"] = doc.pattern;
  j["sigma"] = doc.sigma;
  j["t"] = doc.t;
  j["D"] = doc.record.d;
  j["L"] = doc.record.l_sets;
  nlohmann::json x = nlohmann::json::array();
  for (const auto& xw : doc.record.x_words) x.push_back(letters_to_string(xw));
  j["X"] = std::move(x);
  j["final_word"] = doc.final_word;
  if (doc.seed) j["seed"] = *doc.seed;
  return j.dump(2) + "\n";
}

RecordDocument record_document_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw CorruptRecordError(std::string("invalid JSON: ") + e.what());
  }
  RecordDocument doc;
  try {
    doc.pattern = j.at("pattern").get<std::string>();
    doc.sigma = j.at("sigma").get<int>();
    doc.t = j.at("t").get<long long>();
    doc.record.d = j.at("D").get<std::string>();
    doc.record.l_sets = j.at("L").get<std::vector<std::vector<long long>>>();
    for (const auto& xs : j.at("X")) {
      doc.record.x_words.push_back(letters_from_string(xs.get<std::string>()));
    }
    doc.final_word = j.at("final_word").get<std::string>();
    if (j.contains("seed")) doc.seed = j.at("seed").get<uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw CorruptRecordError(std::string("missing or malformed field: ") + e.what());
  }
  long long zeros = std::count(doc.record.d.begin(), doc.record.d.end(), '0');
  if (zeros != doc.t) {
    throw CorruptRecordError("t does not match the number of 0s in D");
  }
  return doc;
}

void save_record_document(const RecordDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << record_document_to_json(doc);
}

RecordDocument load_record_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return record_document_from_json(text);
}

}  // namespace pav
