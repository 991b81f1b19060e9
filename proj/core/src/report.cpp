#include "vnlab/report.hpp"

#include <cmath>
#include <map>

namespace vnlab {

std::string version() { return VNLAB_VERSION; }

namespace {
// NaN and infinities have no JSON literal; they are written as strings so a
// failed check still serializes faithfully.
Json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}
}  // namespace

Json to_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["lhs"] = number(c.lhs);
  j["rhs"] = number(c.rhs);
  j["tolerance"] = number(c.tolerance);
  j["deviation"] = number(c.deviation);
  return j;
}

void Report::add(const std::vector<Check>& cs, const std::string& prefix) {
  for (Check c : cs) {
    if (!prefix.empty()) c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
}

std::size_t Report::passed_count() const {
  std::size_t n = 0;
  for (const Check& c : checks) n += c.passed ? 1 : 0;
  return n;
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["version"] = version();
  j["seed"] = seed;
  j["parameters"] = parameters;
  Json cs = Json::array();
  for (const Check& c : checks) cs.push_back(vnlab::to_json(c));
  j["checks"] = std::move(cs);
  const std::size_t ok = passed_count();
  j["summary"] = {{"total", checks.size()}, {"passed", ok}, {"failed", checks.size() - ok}};
  if (!result.is_null()) j["result"] = result;
  return j;
}

std::vector<Check> summarize(const std::vector<Check>& checks) {
  struct Group {
    Check worst;
    double score = -1.0;
    bool all = true;
    std::size_t count = 0;
  };
  std::vector<Group> groups;
  std::map<std::string, std::size_t> where;
  for (const Check& c : checks) {
    auto [it, fresh] = where.emplace(c.name, groups.size());
    if (fresh) groups.emplace_back();
    Group& g = groups[it->second];
    const double score = std::isnan(c.deviation) ? INFINITY : c.deviation / std::max(c.tolerance, 1e-300);
    if (score > g.score || (!c.passed && g.all)) {
      g.worst = c;
      g.score = score;
    }
    g.all = g.all && c.passed;
    ++g.count;
  }
  std::vector<Check> out;
  out.reserve(groups.size());
  for (Group& g : groups) {
    g.worst.passed = g.all;
    g.worst.name += " (" + std::to_string(g.count) + (g.count == 1 ? " case)" : " cases)");
    out.push_back(std::move(g.worst));
  }
  return out;
}

}  // namespace vnlab
