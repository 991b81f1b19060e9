#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vnlab/check.hpp"

namespace vnlab {

using Json = nlohmann::ordered_json;

/// The JSON document every command emits. Key order and number formatting
/// are fixed, so equal inputs give byte-identical output.
struct Report {
  std::string command;
  Json parameters = Json::object();
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  /// Command-specific payload; omitted when null.
  Json result;

  void add(Check c) { checks.push_back(std::move(c)); }
  void add(const std::vector<Check>& cs, const std::string& prefix = "");

  std::size_t passed_count() const;
  bool passed() const { return passed_count() == checks.size(); }

  Json to_json() const;
  std::string dump() const { return to_json().dump(2) + "\n"; }
};

Json to_json(const Check& c);

/// Collapses checks that share a name into one: the entry with the largest
/// deviation relative to its tolerance, passing only if all of them pass.
/// The name gains the number of merged cases. First-appearance order is kept.
std::vector<Check> summarize(const std::vector<Check>& checks);

std::string version();

}  // namespace vnlab
