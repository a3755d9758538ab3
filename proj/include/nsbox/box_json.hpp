#pragma once

#include <nsbox/box.hpp>

#include <json.hpp>

#include <string>

namespace nsbox {

using Json = nlohmann::ordered_json;

inline Json scenario_to_json(const BellScenario& s) {
  return Json{{"parties", s.parties()}, {"inputs", s.inputs()}, {"outputs", s.outputs()}};
}

inline BellScenario scenario_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("parties") || !j.contains("inputs") || !j.contains("outputs"))
    throw std::invalid_argument("scenario JSON must have parties/inputs/outputs");
  return BellScenario(j.at("parties").get<int>(), j.at("inputs").get<std::vector<int>>(),
                      j.at("outputs").get<std::vector<int>>());
}

/// Bit-exact box format: entries are canonical "p/q" strings in canonical
/// event order (index = X * prod k_j + A, party 1 most significant).
inline Json box_to_json(const Box& b) {
  Json entries = Json::array();
  for (const Rational& r : b.entries) entries.push_back(r.str());
  return Json{{"scenario", scenario_to_json(b.scenario)}, {"entries", std::move(entries)}};
}

inline Box box_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("scenario") || !j.contains("entries"))
    throw std::invalid_argument("box JSON must have scenario and entries");
  BellScenario s = scenario_from_json(j.at("scenario"));
  const Json& ev = j.at("entries");
  if (!ev.is_array() || ev.size() != s.event_count())
    throw std::invalid_argument("box JSON: entries must be an array of length " +
                                std::to_string(s.event_count()));
  std::vector<Rational> entries;
  entries.reserve(ev.size());
  for (const Json& item : ev) {
    if (!item.is_string()) throw std::invalid_argument("box JSON: entries must be strings");
    entries.push_back(parse_rational(item.get<std::string>()));
  }
  return Box(std::move(s), std::move(entries));
}

inline Json validation_report_to_json(const ValidationReport& rep) {
  Json j{{"ok", rep.ok()},
         {"nonnegative", rep.nonnegative},
         {"normalized", rep.normalized},
         {"no_signaling", rep.no_signaling}};
  if (!rep.nonnegative) j["nonnegative_issue"] = rep.nonnegative_issue;
  if (!rep.normalized) j["normalized_issue"] = rep.normalized_issue;
  if (!rep.no_signaling) j["no_signaling_issue"] = rep.no_signaling_issue;
  return j;
}

} // namespace nsbox
