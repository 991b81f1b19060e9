#pragma once

#include <string>

#include "vnlab/gabor.hpp"
#include "vnlab/report.hpp"

namespace vnlab {

/// Inline JSON (text starting with '{') or the path of a JSON file.
/// Syntax errors become ParseError naming the byte offset.
Json load_json(const std::string& inline_or_path);

/// {"generators": [[[x...], [w...]], ...]}; tuple lengths must match the group.
Lattice lattice_from_json(const FiniteAbelianGroup& group, const Json& j);
Lattice parse_lattice(const FiniteAbelianGroup& group, const std::string& inline_or_path);

/// {"values": [v_0, ..., v_{|G|-1}]} with each v a number or a [re, im] pair,
/// in the lexicographic order of G.
Window window_from_json(const FiniteAbelianGroup& group, const Json& j);
Window parse_window(const FiniteAbelianGroup& group, const std::string& inline_or_path);

Json to_json(const PhasePoint& z);
/// size, covolume, generators and elements.
Json to_json(const Lattice& lattice);

}  // namespace vnlab
