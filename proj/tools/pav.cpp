// Command-line interface. Every command prints one self-describing JSON
// document on stdout; exit codes: 0 success/conclusive, 2 inconclusive
// (budget exhausted), 1 error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pav/bounds.hpp"
#include "pav/entropy_sim.hpp"
#include "pav/occurrence.hpp"
#include "pav/ogf.hpp"
#include "pav/pattern.hpp"
#include "pav/record_io.hpp"
#include "pav/rng.hpp"
#include "pav/search.hpp"

namespace {

using nlohmann::json;

void emit(const std::string& command, const json& parameters, const json& payload,
          const std::string& status) {
  json doc;
  doc["command"] = command;
  doc["parameters"] = parameters;
  doc["payload"] = payload;
  doc["status"] = status;
  std::cout << doc.dump(2) << "\n";
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string rat_string(const pav::BigRat& q) {
  return numerator(q).convert_to<std::string>() + "/" +
         denominator(q).convert_to<std::string>();
}

int cmd_analyze(const std::string& pattern_text) {
  pav::Pattern p = pav::Pattern::parse(pattern_text);
  pav::PatternClass cls = pav::classify(p);

  json payload;
  payload["pattern"] = p.text();
  payload["k"] = cls.k;
  payload["length"] = p.length();
  payload["doubled"] = cls.doubled;
  payload["balanced"] = cls.balanced;
  payload["q_k"] = cls.q_k;
  json mult = json::object();
  for (int j = 0; j < cls.k; ++j) {
    mult[std::string(1, p.variables()[j])] = p.multiplicities()[j];
  }
  payload["multiplicities"] = mult;
  for (int f : {2, 3}) {
    std::string key = "balanced_factor_f" + std::to_string(f);
    long long need = static_cast<long long>(f) << (cls.k - 1);
    if (p.length() >= need) {
      payload[key] = pav::extract_balanced_factor(p, f).text();
    } else {
      payload[key] = nullptr;
    }
  }
  payload["reduced"] = cls.doubled ? json(pav::reduce_doubled(p).text()) : json(nullptr);

  emit("analyze", {{"pattern", pattern_text}}, payload, "ok");
  return 0;
}

int cmd_simulate(const std::string& pattern_text, int sigma, long long target,
                 uint64_t seed, long long max_steps,
                 const std::string& record_path) {
  pav::Pattern p = pav::Pattern::parse(pattern_text);
  pav::SimOutcome out = pav::simulate_until(p, sigma, target, seed, max_steps);

  // The run must decode back to the exact pseudo-random input.
  pav::Word input(std::vector<uint8_t>{}, sigma);
  pav::SplitMix64 rng(seed);
  for (long long i = 0; i < out.trace.steps; ++i) {
    input.letters.push_back(static_cast<uint8_t>(rng.below(sigma)));
  }
  pav::Word decoded = pav::decode_record(out.record, out.word, p, sigma);
  if (!(decoded == input)) {
    throw std::logic_error("simulate: decode round-trip failed");
  }

  if (!record_path.empty()) {
    pav::RecordDocument doc;
    doc.pattern = p.text();
    doc.sigma = sigma;
    doc.t = out.trace.steps;
    doc.record = out.record;
    doc.final_word = out.word.to_string();
    doc.seed = seed;
    pav::save_record_document(doc, record_path);
  }

  json payload;
  payload["outcome"] = out.reached ? "reached" : "budget_exhausted";
  payload["steps"] = out.trace.steps;
  payload["erasures"] = out.trace.erasure_count;
  payload["erased_letters"] = out.trace.steps - out.trace.final_word_length;
  payload["final_word_length"] = out.trace.final_word_length;
  payload["final_word"] = out.word.to_string();
  payload["roundtrip"] = "ok";

  json params{{"pattern", pattern_text}, {"sigma", sigma},   {"target", target},
              {"seed", seed},            {"max_steps", max_steps}};
  if (!record_path.empty()) params["emit_record"] = record_path;
  emit("simulate", params, payload, out.reached ? "ok" : "inconclusive");
  return out.reached ? 0 : 2;
}

int cmd_decode(const std::string& path) {
  pav::RecordDocument doc = pav::load_record_document(path);
  pav::Pattern p = pav::Pattern::parse(doc.pattern);
  pav::Word w_final = pav::Word::from_string(doc.final_word, doc.sigma);
  pav::Word v = pav::decode_record(doc.record, w_final, p, doc.sigma);

  json payload;
  payload["pattern"] = doc.pattern;
  payload["sigma"] = doc.sigma;
  payload["t"] = doc.t;
  payload["v"] = v.to_string();
  emit("decode", {{"record", path}}, payload, "ok");
  return 0;
}

int cmd_gamma(int d, const std::string& eps_text) {
  pav::BigRat eps(eps_text);
  pav::GammaBound g = pav::gamma_upper(d, eps);

  json payload;
  payload["d"] = d;
  payload["upper_decimal"] = pav::decimal_string(g.upper, 6, /*round_up=*/true);
  payload["upper_rational"] = rat_string(g.upper);
  payload["x_star"] = rat_string(g.x_star);
  payload["tau_lo"] = pav::decimal_string(g.tau_lo, 9, /*round_up=*/false);
  payload["tau_hi"] = pav::decimal_string(g.tau_hi, 9, /*round_up=*/true);
  payload["rounding"] = "upper_decimal rounded up; certified upper bound";
  payload["statement"] = "gamma_" + std::to_string(d) + " <= " +
                         pav::decimal_string(g.upper, 6, true) + " certified";
  emit("gamma", {{"d", d}, {"eps", eps_text}}, payload, "ok");
  return 0;
}

int cmd_dyck(long long t, long long d, std::optional<long long> r) {
  pav::BigInt count =
      r ? pav::partial_dyck_count(t, *r, d) : pav::dyck_count(t, d);
  json payload;
  payload["t"] = t;
  payload["d"] = d;
  if (r) payload["r"] = *r;
  payload["count"] = count.convert_to<std::string>();
  json params{{"t", t}, {"d", d}};
  if (r) params["r"] = *r;
  emit("dyck", params, payload, "ok");
  return 0;
}

int cmd_gbar(int k, long long ell) {
  double value = pav::gbar(k, ell);
  json payload;
  payload["k"] = k;
  payload["ell"] = ell;
  payload["core_rational"] = rat_string(pav::gbar_core(k, ell));
  payload["value"] = fixed6(value);
  payload["rounding"] = "value rounded up (smallest double g with g^ell >= core)";
  emit("gbar", {{"k", k}, {"ell", ell}}, payload, "ok");
  return 0;
}

int cmd_ogf_sweep(int len_min, int len_max, int order, const std::string& csv_path) {
  pav::SweepReport report = pav::g4_sweep(len_min, len_max, order);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw std::runtime_error("cannot open for writing: " + csv_path);
    out << pav::sweep_report_csv(report);
  }

  json payload;
  payload["len_min"] = report.len_min;
  payload["len_max"] = report.len_max;
  payload["order"] = report.order;
  payload["argmax_p_len"] = report.argmax_p_len;
  payload["argmax_multiset"] = report.argmax_multiset;
  payload["argmax_ell"] = report.argmax_ell;
  payload["argmax_b"] = report.argmax_b.convert_to<std::string>();
  payload["max_value"] = fixed6(report.max_value);
  payload["binomial_bound_ok"] = report.binomial_bound_ok;
  payload["series_built"] = report.series_built;
  payload["table_rows"] = report.table.size();

  json params{{"min", len_min}, {"max", len_max}, {"order", order}};
  if (!csv_path.empty()) params["csv"] = csv_path;
  emit("ogf-sweep", params, payload, "ok");
  return 0;
}

int cmd_search(const std::string& pattern_text, int sigma, int depth,
               unsigned long long budget) {
  pav::Pattern p = pav::Pattern::parse(pattern_text);
  pav::SearchOutcome out = pav::backtrack_avoid(p, sigma, depth, budget);

  json payload;
  payload["pattern"] = pattern_text;
  payload["sigma"] = sigma;
  payload["nodes"] = out.nodes_visited;
  payload["seconds"] = fixed6(out.seconds);
  std::string status = "ok";
  switch (out.kind) {
    case pav::SearchOutcome::Kind::Exhausted:
      payload["outcome"] = "exhausted";
      payload["max_len"] = out.max_len;
      payload["maximal_word_count"] = out.maximal_word_count;
      break;
    case pav::SearchOutcome::Kind::DepthReached:
      payload["outcome"] = "depth_reached";
      payload["witness"] = out.witness->to_string();
      payload["depth"] = out.max_len;
      break;
    case pav::SearchOutcome::Kind::BudgetExceeded:
      payload["outcome"] = "budget_exceeded";
      payload["deepest_seen"] = out.max_len;
      status = "inconclusive";
      break;
  }
  emit("search",
       {{"pattern", pattern_text}, {"sigma", sigma}, {"depth", depth}, {"budget", budget}},
       payload, status);
  return status == "inconclusive" ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pattern avoidance toolkit"};
  app.require_subcommand(1);

  std::string pattern_text, record_path, csv_path, eps_text = "1/100000000";
  int sigma = 2, depth = 100, d = 24, k = 5;
  long long target = 100, max_steps = 1000000, t = 3, dyck_d = 1, ell = 48;
  std::optional<long long> r;
  uint64_t seed = 1;
  unsigned long long budget = 1ULL << 62;
  int len_min = 24, len_max = 99, order = 100;

  auto* analyze = app.add_subcommand("analyze", "structural report for a pattern");
  analyze->add_option("pattern", pattern_text)->required();

  auto* simulate = app.add_subcommand("simulate", "seeded run of the avoid-erase loop");
  simulate->add_option("pattern", pattern_text)->required();
  simulate->add_option("--sigma", sigma, "alphabet size")->default_val(2);
  simulate->add_option("--target", target, "stop when the word reaches this length")
      ->required();
  simulate->add_option("--seed", seed)->default_val(1);
  simulate->add_option("--max-steps", max_steps)->default_val(1000000);
  simulate->add_option("--emit-record", record_path, "write the record document here");

  auto* decode = app.add_subcommand("decode", "recover the input from a record document");
  decode->add_option("record", record_path)->required();

  auto* gamma = app.add_subcommand("gamma", "certified upper bound on gamma_d");
  gamma->add_option("d", d)->required();
  gamma->add_option("--eps", eps_text, "tightness, exact rational like 1/100000000");

  auto* dyck = app.add_subcommand("dyck", "descent-constrained Dyck word count");
  dyck->add_option("t", t)->required();
  dyck->add_option("d", dyck_d)->required();
  dyck->add_option("--r", r, "count partial words ending at height r");

  auto* gbar = app.add_subcommand("gbar", "closed-form bound gbar_k(ell)");
  gbar->add_option("k", k)->required();
  gbar->add_option("ell", ell)->required();

  auto* sweep = app.add_subcommand("ogf-sweep", "rank b_ell^(1/ell) over 4-part multisets");
  sweep->add_option("--min", len_min)->default_val(24);
  sweep->add_option("--max", len_max)->default_val(99);
  sweep->add_option("--order", order)->default_val(100);
  sweep->add_option("--csv", csv_path, "write the full table as CSV");

  auto* search = app.add_subcommand("search", "exhaustive avoiding-word search");
  search->add_option("pattern", pattern_text)->required();
  search->add_option("--sigma", sigma)->default_val(2);
  search->add_option("--depth", depth)->default_val(100);
  search->add_option("--budget", budget, "node budget before giving up");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(pattern_text);
    if (app.got_subcommand(simulate))
      return cmd_simulate(pattern_text, sigma, target, seed, max_steps, record_path);
    if (app.got_subcommand(decode)) return cmd_decode(record_path);
    if (app.got_subcommand(gamma)) return cmd_gamma(d, eps_text);
    if (app.got_subcommand(dyck)) return cmd_dyck(t, dyck_d, r);
    if (app.got_subcommand(gbar)) return cmd_gbar(k, ell);
    if (app.got_subcommand(sweep)) return cmd_ogf_sweep(len_min, len_max, order, csv_path);
    if (app.got_subcommand(search)) return cmd_search(pattern_text, sigma, depth, budget);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
