#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "idiom/lattice.hpp"
#include "idiom/nucleus.hpp"

namespace idiom {

/// Structured analysis output; renders identically as text and JSON.
using Report = nlohmann::ordered_json;

/// Lattice text format, line-oriented UTF-8:
///   lattice <name>
///   elements: <space-separated labels>
///   <label> < <label>        (one cover per line)
/// Comments run from '#' to end of line.
Lattice parse_lattice(const std::string& text);

/// Emits the format above; parse . emit is the identity on the lattice data.
std::string emit_lattice(const Lattice& L);

/// DOT digraph of the Hasse diagram; optional nucleus fixed points filled.
std::string emit_dot(const Lattice& L, const Nucleus* highlight = nullptr);

std::string render_json(const Report& r);
std::string render_text(const Report& r);

Report report_idiom_check(const Lattice& L);

}  // namespace idiom
