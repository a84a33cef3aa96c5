#pragma once

#include <string>

#include "prism/program.hpp"

namespace prism {

/// Canonical interchange formats. All emitters produce compact JSON with
/// a fixed key order and canonically sorted states and pairs, so equal
/// values serialize to identical bytes.
///
/// Program:   {"space":[...],"pre":[...],"post":[["a","b"],...]}
/// Relation:  {"space":[...],"pairs":[["a","b"],...]}
/// Condition: {"space":[...],"members":[...]}

std::string to_json(const Program& p);
std::string to_json(const Relation& r);
std::string to_json(const Condition& c);

Program program_from_json(const std::string& text);
Relation relation_from_json(const std::string& text);
Condition condition_from_json(const std::string& text);

}  // namespace prism
