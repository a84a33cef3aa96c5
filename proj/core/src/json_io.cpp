#include "prism/json_io.hpp"

#include <json.hpp>

#include "prism/error.hpp"

namespace prism {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json names_array(const std::vector<std::string>& names) {
  ordered_json arr = ordered_json::array();
  for (const auto& n : names) arr.push_back(n);
  return arr;
}

ordered_json pairs_array(const Relation& r) {
  ordered_json arr = ordered_json::array();
  for (const auto& [a, b] : r.pairs()) arr.push_back(ordered_json::array({a, b}));
  return arr;
}

StateSpace space_from(const ordered_json& j) {
  if (!j.contains("space") || !j["space"].is_array())
    throw usage_error("JSON value lacks a \"space\" array");
  std::vector<std::string> names;
  for (const auto& n : j["space"]) names.push_back(n.get<std::string>());
  return StateSpace(std::move(names));
}

std::vector<std::pair<std::string, std::string>> pairs_from(const ordered_json& arr) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& pr : arr) {
    if (!pr.is_array() || pr.size() != 2)
      throw usage_error("relation pairs must be two-element arrays");
    pairs.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
  }
  return pairs;
}

ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw usage_error(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string to_json(const Program& p) {
  ordered_json j;
  j["space"] = names_array(p.space().names());
  j["pre"] = names_array(p.pre().names());
  j["post"] = pairs_array(p.post());
  return j.dump();
}

std::string to_json(const Relation& r) {
  ordered_json j;
  j["space"] = names_array(r.space().names());
  j["pairs"] = pairs_array(r);
  return j.dump();
}

std::string to_json(const Condition& c) {
  ordered_json j;
  j["space"] = names_array(c.space().names());
  j["members"] = names_array(c.names());
  return j.dump();
}

Program program_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  const StateSpace space = space_from(j);
  if (!j.contains("pre") || !j.contains("post"))
    throw usage_error("program JSON needs \"pre\" and \"post\"");
  std::vector<std::string> pre;
  for (const auto& n : j["pre"]) pre.push_back(n.get<std::string>());
  return make_program(space, Condition::of(space, pre),
                      Relation::of(space, pairs_from(j["post"])));
}

Relation relation_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  const StateSpace space = space_from(j);
  if (!j.contains("pairs")) throw usage_error("relation JSON needs \"pairs\"");
  return Relation::of(space, pairs_from(j["pairs"]));
}

Condition condition_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  const StateSpace space = space_from(j);
  if (!j.contains("members")) throw usage_error("condition JSON needs \"members\"");
  std::vector<std::string> members;
  for (const auto& n : j["members"]) members.push_back(n.get<std::string>());
  return Condition::of(space, members);
}

}  // namespace prism
