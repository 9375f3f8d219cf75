#pragma once

// JSON forms of the CLI outputs. Every document parses back into the same
// struct, and re-rendering yields identical bytes (keys are emitted sorted).

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "calamity/anchor_systems.hpp"
#include "calamity/calendar.hpp"
#include "calamity/doomyears.hpp"
#include "calamity/method.hpp"
#include "calamity/metrics.hpp"
#include "calamity/verify.hpp"

namespace calamity {

using json = nlohmann::json;

inline Direction direction_from_string(std::string_view s) {
  if (s == "forward") return Direction::forward;
  if (s == "backward") return Direction::backward;
  throw DomainError("unknown direction '" + std::string(s) + "'");
}

inline json weekday_json(Weekday w) { return {{"index", w.index()}, {"name", w.name()}}; }

inline Weekday weekday_from_json(const json& j) { return Weekday(j.at("index").get<int>()); }

inline json trace_json(const StepTrace& t) {
  return {
      {"century_anchor", t.century_anchor},
      {"year",
       {{"anchor", t.year.anchor},
        {"distance", t.year.distance},
        {"direction", to_string(t.year.direction)},
        {"digit", t.year.digit}}},
      {"month_code", t.month_code.str()},
      {"target",
       {{"direction", to_string(t.target.direction)},
        {"gap", t.target.gap},
        {"digit", t.target.digit},
        {"offset", t.target.signed_offset()}}},
      {"final", weekday_json(t.final)},
  };
}

inline StepTrace trace_from_json(const json& j) {
  StepTrace t;
  t.century_anchor = j.at("century_anchor").get<int>();
  const json& y = j.at("year");
  t.year = {y.at("anchor").get<int>(), y.at("distance").get<int>(),
            direction_from_string(y.at("direction").get<std::string>()), y.at("digit").get<int>()};
  t.month_code = VectorCode::from_value(std::stoi(j.at("month_code").get<std::string>()));
  const json& g = j.at("target");
  t.target.direction = direction_from_string(g.at("direction").get<std::string>());
  t.target.gap = g.at("gap").get<int>();
  t.target.digit = g.at("digit").get<int>();
  t.target.offset = std::abs(g.at("offset").get<int>());
  t.final = weekday_from_json(j.at("final"));
  return t;
}

/// Output of `weekday`.
struct WeekdayResult {
  std::string date;
  std::string method;
  Weekday weekday;
  std::optional<StepTrace> trace;

  friend bool operator==(const WeekdayResult&, const WeekdayResult&) = default;
};

inline json to_json_doc(const WeekdayResult& r) {
  json j = {{"date", r.date}, {"method", r.method}, {"weekday", weekday_json(r.weekday)}};
  if (r.trace) j["trace"] = trace_json(*r.trace);
  return j;
}

inline WeekdayResult weekday_result_from_json(const json& j) {
  WeekdayResult r{j.at("date").get<std::string>(), j.at("method").get<std::string>(),
                  weekday_from_json(j.at("weekday")), std::nullopt};
  if (j.contains("trace")) r.trace = trace_from_json(j.at("trace"));
  return r;
}

/// Output of `tables`: one system's month codes, the Doomyear table, and the
/// system's century anchors.
struct TablesResult {
  int k = 0;
  bool leap = false;
  std::vector<int> doomsday_residues;  // (d_m + k) mod 7 per month
  std::vector<std::string> codes;      // two-digit codes per month
  std::vector<Doomyear> doomyears;
  std::vector<std::pair<int, int>> century_anchors;  // (first year of century, anchor)

  friend bool operator==(const TablesResult&, const TablesResult&) = default;
};

inline TablesResult make_tables(int k, bool leap) {
  const AnchorSystem s = system(k, leap);
  TablesResult t;
  t.k = k;
  t.leap = leap;
  for (int m = 1; m <= 12; ++m) {
    t.doomsday_residues.push_back(s.residues[static_cast<std::size_t>(m - 1)]);
    t.codes.push_back(s.code(m).str());
  }
  for (const Doomyear& dy : doomyear_table()) t.doomyears.push_back(dy);
  for (int century = 1600; century <= 1900; century += 100) {
    t.century_anchors.emplace_back(century, s.century_anchor(century));
  }
  return t;
}

inline json to_json_doc(const TablesResult& t) {
  json dys = json::array();
  for (const Doomyear& d : t.doomyears) {
    dys.push_back({{"d", d.distance}, {"F", d.forward_packed()}, {"B", d.backward_packed()}, {"D", d.packed()}});
  }
  json centuries = json::array();
  for (const auto& [year, anchor] : t.century_anchors) centuries.push_back({{"century", year}, {"anchor", anchor}});
  return {{"k", t.k},           {"leap", t.leap},           {"residues", t.doomsday_residues},
          {"codes", t.codes},   {"doomyears", dys},          {"century_anchors", centuries}};
}

inline TablesResult tables_result_from_json(const json& j) {
  TablesResult t;
  t.k = j.at("k").get<int>();
  t.leap = j.at("leap").get<bool>();
  t.doomsday_residues = j.at("residues").get<std::vector<int>>();
  t.codes = j.at("codes").get<std::vector<std::string>>();
  for (const json& d : j.at("doomyears")) t.doomyears.push_back(unpack_doomyear(d.at("D").get<int>()));
  for (const json& c : j.at("century_anchors")) {
    t.century_anchors.emplace_back(c.at("century").get<int>(), c.at("anchor").get<int>());
  }
  return t;
}

/// Output of `classify`.
struct ClassifyResult {
  std::optional<int> k;
  std::vector<int> offending_months;
  std::vector<std::string> codes;

  friend bool operator==(const ClassifyResult&, const ClassifyResult&) = default;
};

inline json to_json_doc(const ClassifyResult& r) {
  json j = {{"uniform", r.k.has_value()}, {"offending_months", r.offending_months}, {"codes", r.codes}};
  j["k"] = r.k ? json(*r.k) : json(nullptr);
  return j;
}

inline ClassifyResult classify_result_from_json(const json& j) {
  ClassifyResult r;
  if (!j.at("k").is_null()) r.k = j.at("k").get<int>();
  r.offending_months = j.at("offending_months").get<std::vector<int>>();
  r.codes = j.at("codes").get<std::vector<std::string>>();
  return r;
}

inline json to_json_doc(const VerifyResult& r) {
  return {{"first_year", r.first_year}, {"last_year", r.last_year},     {"checks_run", r.checks_run},
          {"dates_tested", r.dates_tested}, {"failures", r.failures}, {"counterexamples", r.counterexamples}};
}

inline VerifyResult verify_result_from_json(const json& j) {
  return {j.at("first_year").get<int>(),    j.at("last_year").get<int>(), j.at("checks_run").get<long>(),
          j.at("dates_tested").get<long>(), j.at("failures").get<long>(),
          j.at("counterexamples").get<std::vector<std::string>>()};
}

inline json stats_json(const MethodStats& s) {
  json counts = json::object();
  json maxima = json::object();
  for (const auto& [k, v] : s.counts_per_date) counts[std::string(to_string(k))] = v;
  for (const auto& [k, v] : s.max_by_kind) maxima[std::string(to_string(k))] = v;
  return {{"dates", s.dates},
          {"counts_per_date", counts},
          {"uniform", s.uniform},
          {"total_per_date", s.total_per_date},
          {"divisions_per_date", s.divisions_per_date},
          {"large_mod_reductions_per_date", s.large_mod_reductions_per_date},
          {"serial_depth", s.serial_depth},
          {"independent_chains", s.independent_chains},
          {"dependency", s.serial() ? "serial" : "independent"},
          {"max_intermediate", s.max_intermediate},
          {"max_by_kind", maxima},
          {"weekday_mismatches", s.weekday_mismatches}};
}

inline MethodStats stats_from_json(const json& j) {
  MethodStats s;
  s.dates = j.at("dates").get<long>();
  for (const auto& [k, v] : j.at("counts_per_date").items()) s.counts_per_date[op_kind_from_string(k)] = v.get<int>();
  s.uniform = j.at("uniform").get<bool>();
  s.total_per_date = j.at("total_per_date").get<int>();
  s.divisions_per_date = j.at("divisions_per_date").get<int>();
  s.large_mod_reductions_per_date = j.at("large_mod_reductions_per_date").get<int>();
  s.serial_depth = j.at("serial_depth").get<int>();
  s.independent_chains = j.at("independent_chains").get<int>();
  s.max_intermediate = j.at("max_intermediate").get<int>();
  for (const auto& [k, v] : j.at("max_by_kind").items()) s.max_by_kind[op_kind_from_string(k)] = v.get<int>();
  s.weekday_mismatches = j.at("weekday_mismatches").get<long>();
  return s;
}

inline json to_json_doc(const ComparisonReport& r) {
  return {{"first", to_iso(r.first)},
          {"last", to_iso(r.last)},
          {"standard", stats_json(r.standard)},
          {"calamity", stats_json(r.calamity)}};
}

inline ComparisonReport comparison_from_json(const json& j) {
  return {parse_iso(j.at("first").get<std::string>()), parse_iso(j.at("last").get<std::string>()),
          stats_from_json(j.at("standard")), stats_from_json(j.at("calamity"))};
}

inline std::string render_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace calamity
