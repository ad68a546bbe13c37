#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace idiom {

/// Elements are dense indices 0..size-1; labels are presentation-only.
using Elem = int;

/// Operations that enumerate all nuclei refuse lattices above this cap.
inline constexpr int kDefaultSizeCap = 14;

/// A finite bounded lattice: full order table plus meet/join tables.
struct Lattice {
  std::string name;
  int size = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<char>> leq;        // leq[x][y] != 0  iff  x <= y
  std::vector<std::vector<Elem>> meet_table;
  std::vector<std::vector<Elem>> join_table;
  Elem bottom = 0;
  Elem top = 0;

  bool le(Elem x, Elem y) const { return leq[x][y] != 0; }
  bool lt(Elem x, Elem y) const { return x != y && leq[x][y] != 0; }
  Elem meet(Elem x, Elem y) const { return meet_table[x][y]; }
  Elem join(Elem x, Elem y) const { return join_table[x][y]; }
  const std::string& label(Elem x) const { return labels[x]; }
  std::optional<Elem> element_of(const std::string& label) const;
  /// element_of, throwing UnknownLabel instead of returning nullopt.
  Elem require(const std::string& label) const;

  /// True when hi covers lo: lo < hi with nothing strictly between.
  bool covers(Elem lo, Elem hi) const;
  std::vector<Elem> atoms() const;
};

struct Witness {
  Elem a = 0, b = 0, c = 0;
};

struct IdiomReport {
  bool is_lattice = false;
  bool is_modular = false;
  bool is_distributive = false;
  bool is_boolean = false;
  std::optional<Witness> first_violation;
};

/// Builds a lattice from a Hasse diagram given as (lower, upper) label pairs.
Lattice build_lattice(std::string name, const std::vector<std::string>& labels,
                      const std::vector<std::pair<std::string, std::string>>& covers);

/// Builds tables from a complete order relation; validates glb/lub existence
/// and unique bounds.
Lattice lattice_from_order(std::string name, std::vector<std::string> labels,
                           std::vector<std::vector<char>> leq);

/// Checks the modular law, binary distributivity and complementation.
/// Upper continuity is not checked: every directed subset of a finite lattice
/// has a maximum, so it holds by finiteness. Binary distributivity likewise
/// suffices for the full distributive law over arbitrary subsets.
IdiomReport validate_idiom(const Lattice& L);

Elem meet_all(const Lattice& L, std::span<const Elem> xs);  // empty -> top
Elem join_all(const Lattice& L, std::span<const Elem> xs);  // empty -> bottom

/// x is essential in [a,b]: every y in [a,b] with x /\ y = a is a itself.
bool is_essential(const Lattice& L, Elem x, Elem a, Elem b);

/// Maximal y in [a,b] with x /\ y = a.
std::vector<Elem> pseudocomplements(const Lattice& L, Elem x, Elem a, Elem b);
/// y in [a,b] with x /\ y = a and x \/ y = b.
std::vector<Elem> complements_in(const Lattice& L, Elem x, Elem a, Elem b);
bool has_complement(const Lattice& L, Elem x);

bool is_meet_irreducible(const Lattice& L, Elem a);

/// Largest n such that some independent family of n nonbottom elements
/// exists: x /\ \/(rest) = bottom for each member.
int uniform_dimension(const Lattice& L);

Lattice dual(const Lattice& L);

/// Meet of all elements essential in [0,1].
Elem cbd0(const Lattice& L);
/// Join of all atoms.
Elem soc0(const Lattice& L);

/// Every a has a complemented c with a essential in [0,c].
bool satisfies_C1(const Lattice& L);
/// The join of complemented elements is complemented (binary, or all
/// families when strong).
bool satisfies_CSP(const Lattice& L, bool strong = false);

}  // namespace idiom
