#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "idiom/corpus.hpp"
#include "idiom/errors.hpp"
#include "idiom/goldie.hpp"
#include "idiom/io.hpp"
#include "idiom/quotient.hpp"
#include "idiom/reproduce.hpp"

namespace {

using namespace idiom;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

/// Loads from a file path, falling back to the built-in corpus by name.
Lattice load_lattice(const std::string& source) {
  std::ifstream in(source);
  if (in) {
    std::ostringstream text;
    text << in.rdbuf();
    return parse_lattice(text.str());
  }
  if (corpus_has(source)) return corpus_lattice(source);
  fail(Err::Syntax,
       "cannot open '" + source + "' and no built-in lattice has that name");
}

void require_idiom(const Lattice& L) {
  IdiomReport r = validate_idiom(L);
  if (!r.is_lattice || !r.is_modular)
    fail(Err::NotALattice, L.name + " is not a modular lattice");
}

Report interval_set_report(const Lattice& L, const IntervalIndex& idx,
                           const IntervalSet& S) {
  Report out = Report::array();
  for (int i : S.members())
    if (!idx.at(i).trivial()) out.push_back(format_interval(L, idx.at(i)));
  return out;
}

Report nucleus_report(const Lattice& L, const Nucleus& j) {
  Report out;
  for (Elem x = 0; x < L.size; ++x) out[L.label(x)] = L.label(j(x));
  return out;
}

Nucleus parse_nucleus_spec(const Lattice& L, const IntervalIndex& idx,
                           const AssemblyFrame& assembly,
                           const std::vector<std::string>& spec) {
  if (spec.empty()) fail(Err::Syntax, "empty nucleus spec");
  if (spec[0] == "zeta") {
    if (spec.size() != 1) fail(Err::Syntax, "zeta takes no arguments");
    return chi(L, assembly, L.bottom, L.top);
  }
  if (spec[0] == "chi" || spec[0] == "xi") {
    if (spec.size() != 3)
      fail(Err::Syntax, spec[0] + " takes two element labels");
    Elem a = L.require(spec[1]);
    Elem b = L.require(spec[2]);
    return spec[0] == "chi" ? chi(L, assembly, a, b) : xi(L, idx, a, b);
  }
  // Explicit value table: one label=label entry per element.
  std::vector<Elem> table(L.size, -1);
  for (const std::string& entry : spec) {
    auto eq = entry.find('=');
    if (eq == std::string::npos)
      fail(Err::Syntax, "expected label=label, got '" + entry + "'");
    table[L.require(entry.substr(0, eq))] = L.require(entry.substr(eq + 1));
  }
  for (Elem x = 0; x < L.size; ++x)
    if (table[x] < 0)
      fail(Err::Syntax, "nucleus table misses element " + L.label(x));
  if (!is_nucleus(L, table))
    fail(Err::NotAFreeSeed, "the given table is not a nucleus");
  return Nucleus{std::move(table)};
}

Report goldie_report(const Lattice& L, const IntervalIndex& idx,
                     const GoldieAnalysis& g) {
  Report out;
  out["lattice"] = L.name;
  out["zeta"] = nucleus_report(L, g.zeta);
  out["division set"] = interval_set_report(L, idx, g.dset);
  out["free set"] = interval_set_report(L, idx, g.fset);
  out["goldman nucleus"] = nucleus_report(L, g.goldman);
  out["zeta is ddf"] = g.zeta_is_ddf;
  out["cbd0"] = L.label(g.cbd0);
  out["soc0"] = L.label(g.soc0);
  out["C1"] = g.c1;
  out["CSP"] = g.csp;
  return out;
}

int cmd_check(const std::string& source) {
  Lattice L = load_lattice(source);
  Report r = report_idiom_check(L);
  std::cout << render_text(r);
  return r["is_lattice"].get<bool>() && r["is_modular"].get<bool>()
             ? kExitOk
             : kExitViolation;
}

int cmd_nuclei(const std::string& source, int cap, bool count_only) {
  Lattice L = load_lattice(source);
  require_idiom(L);
  AssemblyFrame assembly = enumerate_nuclei(L, cap);
  if (count_only) {
    std::cout << assembly.count() << "\n";
    return kExitOk;
  }
  for (const Nucleus& j : assembly.nuclei)
    std::cout << format_nucleus(L, j) << "\n";
  return kExitOk;
}

int cmd_assembly(const std::string& source, int cap, bool emit) {
  Lattice L = load_lattice(source);
  require_idiom(L);
  AssemblyFrame assembly = enumerate_nuclei(L, cap);
  if (emit) {
    std::cout << emit_lattice(assembly.as_lattice);
    return kExitOk;
  }
  Report out;
  out["lattice"] = L.name;
  out["nuclei"] = assembly.count();
  IdiomReport r = validate_idiom(assembly.as_lattice);
  out["distributive"] = r.is_distributive;
  out["boolean"] = r.is_boolean;
  std::cout << render_text(out);
  return r.is_distributive ? kExitOk : kExitViolation;
}

int cmd_goldie(const std::string& source, int cap) {
  Lattice L = load_lattice(source);
  require_idiom(L);
  IntervalIndex idx = enumerate_intervals(L);
  AssemblyFrame assembly = enumerate_nuclei(L, cap);
  GoldieAnalysis g = analyze_goldie(L, idx, assembly);
  std::cout << render_text(goldie_report(L, idx, g));
  return kExitOk;
}

int cmd_quotients(const std::string& source, int cap,
                  const std::vector<std::string>& spec) {
  Lattice L = load_lattice(source);
  require_idiom(L);
  IntervalIndex idx = enumerate_intervals(L);
  AssemblyFrame assembly = enumerate_nuclei(L, cap);
  Nucleus j = parse_nucleus_spec(L, idx, assembly, spec);
  QuotientIdiom Q = quotient_idiom(L, j);

  Report out;
  out["lattice"] = L.name;
  out["nucleus"] = nucleus_report(L, j);
  Report fixed = Report::array();
  for (Elem x : Q.fixed) fixed.push_back(L.label(x));
  out["fixed points"] = fixed;
  out["quotient size"] = static_cast<int>(Q.fixed.size());
  IdiomReport r = validate_idiom(Q.induced);
  out["quotient modular"] = r.is_modular;
  out["quotient distributive"] = r.is_distributive;
  out["division set"] = interval_set_report(L, idx, dset_of(L, idx, j));
  out["free set"] = interval_set_report(L, idx, fset_of(L, idx, j));
  std::cout << render_text(out);
  return kExitOk;
}

int cmd_reproduce(const std::string& name) {
  ReproduceResult r = reproduce(name);
  std::cout << render_text(r.report);
  for (const std::string& w : r.warnings)
    std::cout << "warning: " << w << "\n";
  return r.ok ? kExitOk : kExitViolation;
}

int cmd_report(const std::string& source, int cap, const std::string& format) {
  Lattice L = load_lattice(source);
  if (format == "dot") {
    std::cout << emit_dot(L);
    return kExitOk;
  }
  Report out;
  out["idiom"] = report_idiom_check(L);
  bool usable = out["idiom"]["is_lattice"].get<bool>() &&
                out["idiom"]["is_modular"].get<bool>();
  if (usable) {
    IntervalIndex idx = enumerate_intervals(L);
    out["intervals"] = idx.count();
    if (L.size <= cap) {
      AssemblyFrame assembly = enumerate_nuclei(L, cap);
      out["nuclei"] = assembly.count();
      out["goldie"] = goldie_report(L, idx, analyze_goldie(L, idx, assembly));
    } else {
      out["nuclei"] = "skipped: size " + std::to_string(L.size) +
                      " above cap " + std::to_string(cap);
    }
    out["uniform dimension"] = uniform_dimension(L);
  }
  std::cout << (format == "json" ? render_json(out) : render_text(out));
  return usable ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite modular lattice toolkit: nuclei, division sets, "
               "Goldie analysis, quotients"};
  app.require_subcommand(1);
  int cap = kDefaultSizeCap;
  app.add_option("--cap", cap, "refuse nucleus enumeration above this size");

  std::string source, format = "text", name;
  bool count_only = false, emit = false;
  std::vector<std::string> spec;

  auto* check = app.add_subcommand("check", "validate the lattice axioms");
  check->add_option("file", source, "lattice file or built-in name")
      ->required();

  auto* nuclei = app.add_subcommand("nuclei", "list every nucleus");
  nuclei->add_option("file", source)->required();
  nuclei->add_flag("--count-only", count_only);

  auto* assembly = app.add_subcommand("assembly", "the lattice of nuclei");
  assembly->add_option("file", source)->required();
  assembly->add_flag("--emit-lattice", emit);

  auto* goldie = app.add_subcommand("goldie", "Goldie nucleus analysis");
  goldie->add_option("file", source)->required();

  auto* quotients = app.add_subcommand("quotients", "quotient by a nucleus");
  quotients->add_option("file", source)->required();
  quotients
      ->add_option("--nucleus", spec,
                   "zeta | chi A B | xi A B | explicit a=b entries")
      ->required();

  auto* repro = app.add_subcommand("reproduce", "check a reference example");
  repro->add_option("name", name, "exa1 | ex2 | diamond")->required();

  auto* report = app.add_subcommand("report", "full analysis report");
  report->add_option("file", source)->required();
  report->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(source);
    if (nuclei->parsed()) return cmd_nuclei(source, cap, count_only);
    if (assembly->parsed()) return cmd_assembly(source, cap, emit);
    if (goldie->parsed()) return cmd_goldie(source, cap);
    if (quotients->parsed()) return cmd_quotients(source, cap, spec);
    if (repro->parsed()) return cmd_reproduce(name);
    if (report->parsed()) return cmd_report(source, cap, format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IdiomError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == Err::Syntax ? kExitUsage : kExitViolation;
  }
  return kExitUsage;
}
