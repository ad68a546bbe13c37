#pragma once

#include "idiom/interval_set.hpp"
#include "idiom/lattice.hpp"
#include "idiom/nucleus.hpp"

namespace idiom {

/// The Goldie nucleus zeta of a modular lattice plus everything hanging off
/// it: its division set (the essential intervals), its free set (the
/// nonsingular intervals), the Goldman nucleus, and the decomposition flags.
struct GoldieAnalysis {
  Nucleus zeta;
  IntervalSet dset;  // {[a,b] : a essential in [0,b]}
  IntervalSet fset;  // nonsingular intervals
  Nucleus goldman;   // least nucleus collapsing nonsingular simple intervals
  bool zeta_is_ddf = false;
  Elem cbd0 = 0;
  Elem soc0 = 0;
  bool c1 = false;
  bool csp = false;
};

/// The set {[a,b] : a essential in [0,b]}.
IntervalSet essential_intervals(const Lattice& L, const IntervalIndex& idx);

/// Computes zeta three independent ways (from the nonsingular free set, as
/// chi(0,1), and from the essential division set) and requires agreement.
GoldieAnalysis analyze_goldie(const Lattice& L, const IntervalIndex& idx,
                              const AssemblyFrame& assembly);

Nucleus goldman_nucleus(const Lattice& L, const IntervalIndex& idx);

/// D_j closed under essential extensions.
bool is_stable_nucleus(const Lattice& L, const IntervalIndex& idx,
                       const Nucleus& j);
/// Stable and D_j closed under binary bottom-meets.
bool is_ddf_nucleus(const Lattice& L, const IntervalIndex& idx,
                    const Nucleus& j);

/// The nucleus k with D_k = F_{not zeta}; the least DDF nucleus above zeta.
Nucleus lowest_ddf_above_zeta(const Lattice& L, const IntervalIndex& idx,
                              const AssemblyFrame& assembly);

}  // namespace idiom
