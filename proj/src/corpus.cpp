#include "idiom/corpus.hpp"

#include "idiom/errors.hpp"

namespace idiom {

Lattice make_exa1() {
  return build_lattice("exa1", {"0", "S", "T", "U", "I", "R"},
                       {{"0", "S"},
                        {"0", "T"},
                        {"0", "U"},
                        {"S", "I"},
                        {"T", "I"},
                        {"U", "I"},
                        {"I", "R"}});
}

Lattice make_ex2() {
  return build_lattice("ex2", {"0", "I", "S", "T", "U", "1"},
                       {{"0", "I"},
                        {"I", "S"},
                        {"I", "T"},
                        {"I", "U"},
                        {"S", "1"},
                        {"T", "1"},
                        {"U", "1"}});
}

Lattice make_diamond_example() {
  return build_lattice(
      "diamond", {"0", "a", "b", "c", "d", "1"},
      {{"0", "a"}, {"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"d", "1"}});
}

Lattice make_chain(int length) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < length; ++i) {
    labels.push_back("c" + std::to_string(i));
    if (i > 0) covers.emplace_back(labels[i - 1], labels[i]);
  }
  return build_lattice("chain" + std::to_string(length), labels, covers);
}

Lattice make_boolean_cube(int atoms) {
  const int n = 1 << atoms;
  auto name_of = [&](int mask) {
    if (mask == 0) return std::string("0");
    std::string s;
    for (int i = 0; i < atoms; ++i)
      if (mask & (1 << i)) s += static_cast<char>('p' + i);
    return s;
  };
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int mask = 0; mask < n; ++mask) labels.push_back(name_of(mask));
  for (int mask = 0; mask < n; ++mask)
    for (int i = 0; i < atoms; ++i)
      if (!(mask & (1 << i)))
        covers.emplace_back(name_of(mask), name_of(mask | (1 << i)));
  return build_lattice("cube" + std::to_string(atoms), labels, covers);
}

Lattice make_m3() {
  return build_lattice("M3", {"0", "x", "y", "z", "1"},
                       {{"0", "x"},
                        {"0", "y"},
                        {"0", "z"},
                        {"x", "1"},
                        {"y", "1"},
                        {"z", "1"}});
}

Lattice make_m3_stacked() {
  // Two diamonds sharing a midpoint m.
  return build_lattice("M3stk", {"0", "x", "y", "z", "m", "u", "v", "1"},
                       {{"0", "x"},
                        {"0", "y"},
                        {"0", "z"},
                        {"x", "m"},
                        {"y", "m"},
                        {"z", "m"},
                        {"m", "u"},
                        {"m", "v"},
                        {"u", "1"},
                        {"v", "1"}});
}

Lattice make_product(const Lattice& A, const Lattice& B) {
  const int n = A.size * B.size;
  std::vector<std::string> labels(n);
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  auto id = [&](Elem a, Elem b) { return a * B.size + b; };
  for (Elem a = 0; a < A.size; ++a)
    for (Elem b = 0; b < B.size; ++b) {
      labels[id(a, b)] = "(" + A.label(a) + "," + B.label(b) + ")";
      for (Elem a2 = 0; a2 < A.size; ++a2)
        for (Elem b2 = 0; b2 < B.size; ++b2)
          leq[id(a, b)][id(a2, b2)] = A.le(a, a2) && B.le(b, b2);
    }
  return lattice_from_order(A.name + "x" + B.name, std::move(labels),
                            std::move(leq));
}

namespace {

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> c;
  c.push_back({"exa1", make_exa1(),
               "ideal lattice of the trivial extension Z2 by (Z2 (+) Z2)"});
  c.push_back({"ex2", make_ex2(), "order dual of exa1"});
  c.push_back({"diamond", make_diamond_example(),
               "diamond with a pendant bottom and top"});
  for (int n = 2; n <= 6; ++n)
    c.push_back({"chain" + std::to_string(n), make_chain(n),
                 "generator: chain of " + std::to_string(n) + " elements"});
  for (int k = 1; k <= 4; ++k)
    c.push_back({"cube" + std::to_string(k), make_boolean_cube(k),
                 "generator: Boolean cube on " + std::to_string(k) + " atoms"});
  c.push_back({"M3", make_m3(), "generator: diamond M3"});
  c.push_back({"M3stk", make_m3_stacked(),
               "generator: M3 with a diamond stacked on top"});
  c.push_back({"chain2xchain3", make_product(make_chain(2), make_chain(3)),
               "generator: product of chains"});
  c.push_back({"M3xchain2", make_product(make_m3(), make_chain(2)),
               "generator: product of M3 with a chain"});
  c.push_back({"diamond^op", dual(make_diamond_example()),
               "generator: dual of the diamond example"});
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = build_corpus();
  return c;
}

bool corpus_has(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return true;
  return false;
}

const Lattice& corpus_lattice(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e.lattice;
  fail(Err::UnknownLabel, "no corpus lattice named '" + name + "'");
}

}  // namespace idiom
