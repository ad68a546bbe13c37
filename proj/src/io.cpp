#include "idiom/io.hpp"

#include <sstream>

#include "idiom/errors.hpp"

namespace idiom {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Lattice parse_lattice(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  std::string name;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  int stage = 0;  // 0: want header, 1: want elements, 2: covers

  while (std::getline(in, raw)) {
    ++lineno;
    auto toks = split_ws(strip_comment(raw));
    if (toks.empty()) continue;
    if (stage == 0) {
      if (toks.size() != 2 || toks[0] != "lattice")
        throw ParseError(lineno, 1, "expected 'lattice <name>'");
      name = toks[1];
      stage = 1;
    } else if (stage == 1) {
      if (toks[0] != "elements:" || toks.size() < 2)
        throw ParseError(lineno, 1, "expected 'elements: <labels>'");
      labels.assign(toks.begin() + 1, toks.end());
      stage = 2;
    } else {
      if (toks.size() != 3 || toks[1] != "<")
        throw ParseError(lineno, 1, "expected '<label> < <label>'");
      covers.emplace_back(toks[0], toks[2]);
    }
  }
  if (stage == 0) throw ParseError(lineno + 1, 1, "missing 'lattice' header");
  if (stage == 1) throw ParseError(lineno + 1, 1, "missing 'elements:' line");
  return build_lattice(std::move(name), labels, covers);
}

std::string emit_lattice(const Lattice& L) {
  std::string out = "lattice " + L.name + "\nelements:";
  for (const auto& l : L.labels) out += " " + l;
  out += "\n";
  for (Elem lo = 0; lo < L.size; ++lo)
    for (Elem hi = 0; hi < L.size; ++hi)
      if (L.covers(lo, hi))
        out += L.label(lo) + " < " + L.label(hi) + "\n";
  return out;
}

std::string emit_dot(const Lattice& L, const Nucleus* highlight) {
  std::string out = "digraph \"" + L.name + "\" {\n  rankdir=BT;\n";
  for (Elem x = 0; x < L.size; ++x) {
    out += "  \"" + L.label(x) + "\"";
    if (highlight && highlight->table[x] == x)
      out += " [style=filled, fillcolor=lightgrey]";
    out += ";\n";
  }
  for (Elem lo = 0; lo < L.size; ++lo)
    for (Elem hi = 0; hi < L.size; ++hi)
      if (L.covers(lo, hi))
        out += "  \"" + L.label(lo) + "\" -> \"" + L.label(hi) + "\";\n";
  out += "}\n";
  return out;
}

std::string render_json(const Report& r) { return r.dump(2) + "\n"; }

namespace {

void render_node(const Report& r, const std::string& prefix, std::string& out) {
  if (r.is_object()) {
    for (auto it = r.begin(); it != r.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        out += prefix + it.key() + ":\n";
        render_node(it.value(), prefix + "  ", out);
      } else {
        out += prefix + it.key() + ": " + it.value().dump() + "\n";
      }
    }
  } else if (r.is_array()) {
    for (const auto& v : r) {
      if (v.is_object() || v.is_array()) {
        out += prefix + "-\n";
        render_node(v, prefix + "  ", out);
      } else {
        out += prefix + "- " + v.dump() + "\n";
      }
    }
  } else {
    out += prefix + r.dump() + "\n";
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::string out;
  render_node(r, "", out);
  return out;
}

Report report_idiom_check(const Lattice& L) {
  IdiomReport v = validate_idiom(L);
  Report r;
  r["lattice"] = L.name;
  r["size"] = L.size;
  r["is_lattice"] = v.is_lattice;
  r["is_modular"] = v.is_modular;
  r["is_distributive"] = v.is_distributive;
  r["is_boolean"] = v.is_boolean;
  if (v.first_violation) {
    const auto& w = *v.first_violation;
    r["witness"] = {L.label(w.a), L.label(w.b), L.label(w.c)};
  }
  return r;
}

}  // namespace idiom
