#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "idiom/interval_set.hpp"
#include "idiom/lattice.hpp"

namespace idiom {

/// A nucleus as its value table: an inflating, idempotent, meet-preserving
/// self-map. The fixed-point set is meet-closed and contains top.
struct Nucleus {
  std::vector<Elem> table;

  Elem operator()(Elem x) const { return table[x]; }
  std::vector<Elem> fixed_points() const;
  auto operator<=>(const Nucleus&) const = default;
};

bool is_nucleus(const Lattice& L, const std::vector<Elem>& f);
/// Inflating, monotone, meet-preserving; idempotence not required.
bool is_prenucleus(const Lattice& L, const std::vector<Elem>& f);

Nucleus identity_nucleus(const Lattice& L);
Nucleus const_top_nucleus(const Lattice& L);

/// All nuclei on a host lattice under the pointwise order, with the induced
/// lattice structure (a distributive lattice; identity at the bottom,
/// constant-top at the top). Nuclei are sorted lexicographically by table.
struct AssemblyFrame {
  std::vector<Nucleus> nuclei;
  Lattice as_lattice;

  int count() const { return static_cast<int>(nuclei.size()); }
  /// Index in the sorted list, or -1.
  int index_of(const Nucleus& j) const;
};

/// Enumerates meet-closed subsets containing top and keeps the induced
/// closures that satisfy the meet law. Complete: a nucleus is determined by
/// its meet-closed fixed set.
AssemblyFrame enumerate_nuclei(const Lattice& L, int cap = kDefaultSizeCap);

/// Least nucleus above a prenucleus: iterate composition to the fixpoint.
Nucleus idempotent_closure(const Lattice& L, const std::vector<Elem>& k);

Nucleus nucleus_meet(const Lattice& L, std::span<const Nucleus> js);

enum class JoinMethod { ChiFormula, Iterative };

/// Join in N(A). Iterative: idempotent closure of the pointwise sup.
/// ChiFormula: /\{chi(a,1) : a fixed by every member}. The two agree.
Nucleus nucleus_join(const Lattice& L, const AssemblyFrame& assembly,
                     std::span<const Nucleus> js,
                     JoinMethod method = JoinMethod::ChiFormula);

/// The largest nucleus j with j(a) /\ b = a: pointwise maximum over the
/// qualifying members of the assembly, asserted to qualify itself.
Nucleus chi(const Lattice& L, const AssemblyFrame& assembly, Elem a, Elem b);

/// Least nucleus collapsing every seed interval; computed through the
/// division closure.
Nucleus xi(const Lattice& L, const IntervalIndex& idx, const IntervalSet& seed);
Nucleus xi(const Lattice& L, const IntervalIndex& idx, Elem a, Elem b);

/// D_j = {[a,b] : b <= j(a)}.
IntervalSet dset_of(const Lattice& L, const IntervalIndex& idx,
                    const Nucleus& j);
/// F_j = {[a,b] : j(a) /\ b = a}.
IntervalSet fset_of(const Lattice& L, const IntervalIndex& idx,
                    const Nucleus& j);

/// j(a) = \/{x : [a,x] in D}; validates the division clauses first.
Nucleus nucleus_from_dset(const Lattice& L, const IntervalIndex& idx,
                          const IntervalSet& D);
/// j(a) = /\{x >= a : [x,1] in F}; validates the free clauses first.
Nucleus nucleus_from_fset(const Lattice& L, const IntervalIndex& idx,
                          const IntervalSet& F);

/// Largest k with pointwise meet k /\ j = identity, computed in N(A).
Nucleus heyting_negation(const Lattice& L, const AssemblyFrame& assembly,
                         const Nucleus& j);

/// `j: a↦j(a), ...` over labels.
std::string format_nucleus(const Lattice& L, const Nucleus& j,
                           const std::string& name = "j");

}  // namespace idiom
