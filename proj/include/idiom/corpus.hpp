#pragma once

#include <string>
#include <vector>

#include "idiom/lattice.hpp"

namespace idiom {

/// Curated modular lattices for exhaustive property sweeps. Random modular
/// lattices are hard to sample, so the corpus is fixed: the two reference
/// ideal lattices and their companion diamond, chains, Boolean cubes, M3 and
/// a stacked variant, and a couple of products.
struct CorpusEntry {
  std::string name;
  Lattice lattice;
  std::string provenance;
};

const std::vector<CorpusEntry>& corpus();
const Lattice& corpus_lattice(const std::string& name);
bool corpus_has(const std::string& name);

Lattice make_exa1();
Lattice make_ex2();
Lattice make_diamond_example();
Lattice make_chain(int length);        // `length` elements
Lattice make_boolean_cube(int atoms);  // 2^atoms elements
Lattice make_m3();
Lattice make_m3_stacked();
Lattice make_product(const Lattice& A, const Lattice& B);

}  // namespace idiom
