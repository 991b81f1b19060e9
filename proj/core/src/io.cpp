#include "vnlab/io.hpp"

#include <fstream>
#include <sstream>

#include "vnlab/error.hpp"

namespace vnlab {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw ParseError("invalid input at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

Element element_from_json(const FiniteAbelianGroup& group, const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of residues");
  if (j.size() != group.factors()) {
    std::ostringstream msg;
    msg << "tuple of length " << j.size() << " for a group with " << group.factors() << " factors";
    throw ShapeMismatch("invalid input at " + where + ": " + msg.str());
  }
  Element e;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) schema_error(where + "/" + std::to_string(i), "expected an integer");
    e.push_back(j[i].get<int>());
  }
  group.validate(e);
  return e;
}

}  // namespace

Json load_json(const std::string& inline_or_path) {
  std::string text;
  const auto first = inline_or_path.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (inline_or_path[first] == '{' || inline_or_path[first] == '[')) {
    text = inline_or_path;
  } else {
    std::ifstream in(inline_or_path);
    if (!in) throw ParseError("cannot read '" + inline_or_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::ostringstream msg;
    msg << "malformed JSON at byte " << e.byte << ": " << e.what();
    throw ParseError(msg.str());
  }
}

Lattice lattice_from_json(const FiniteAbelianGroup& group, const Json& j) {
  if (!j.is_object()) schema_error("", "expected an object");
  for (const auto& [key, value] : j.items())
    if (key != "generators") schema_error("/" + key, "unknown key");
  if (!j.contains("generators")) schema_error("", "missing 'generators'");
  const Json& gens = j["generators"];
  if (!gens.is_array()) schema_error("/generators", "expected an array");
  std::vector<PhasePoint> points;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "/generators/" + std::to_string(i);
    if (!gens[i].is_array() || gens[i].size() != 2) schema_error(where, "expected a pair [x, omega]");
    points.push_back({element_from_json(group, gens[i][0], where + "/0"), element_from_json(group, gens[i][1], where + "/1")});
  }
  return Lattice::from_generators(group, std::move(points));
}

Lattice parse_lattice(const FiniteAbelianGroup& group, const std::string& inline_or_path) {
  return lattice_from_json(group, load_json(inline_or_path));
}

Window window_from_json(const FiniteAbelianGroup& group, const Json& j) {
  if (!j.is_object() || !j.contains("values")) schema_error("", "expected an object with 'values'");
  const Json& vals = j["values"];
  if (!vals.is_array()) schema_error("/values", "expected an array");
  if (static_cast<std::int64_t>(vals.size()) != group.size()) {
    std::ostringstream msg;
    msg << "invalid input at /values: " << vals.size() << " values for a group of order " << group.size();
    throw ShapeMismatch(msg.str());
  }
  Vector v(group.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const Json& x = vals[i];
    const std::string where = "/values/" + std::to_string(i);
    if (x.is_number()) {
      v(static_cast<Index>(i)) = x.get<double>();
    } else if (x.is_array() && x.size() == 2 && x[0].is_number() && x[1].is_number()) {
      v(static_cast<Index>(i)) = cplx(x[0].get<double>(), x[1].get<double>());
    } else {
      schema_error(where, "expected a number or a [re, im] pair");
    }
  }
  return Window(group, std::move(v));
}

Window parse_window(const FiniteAbelianGroup& group, const std::string& inline_or_path) {
  return window_from_json(group, load_json(inline_or_path));
}

Json to_json(const PhasePoint& z) { return Json::array({z.x, z.omega}); }

Json to_json(const Lattice& lattice) {
  Json j;
  j["size"] = lattice.size();
  j["covolume"] = covolume(lattice).str();
  Json gens = Json::array();
  for (const PhasePoint& z : lattice.generators()) gens.push_back(to_json(z));
  j["generators"] = std::move(gens);
  Json elems = Json::array();
  for (const PhasePoint& z : lattice.elements()) elems.push_back(to_json(z));
  j["elements"] = std::move(elems);
  return j;
}

}  // namespace vnlab
