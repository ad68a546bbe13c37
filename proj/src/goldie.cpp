#include "idiom/goldie.hpp"

#include "idiom/errors.hpp"

namespace idiom {

IntervalSet essential_intervals(const Lattice& L, const IntervalIndex& idx) {
  IntervalSet S(idx.count());
  for (int i = 0; i < idx.count(); ++i) {
    Interval I = idx.at(i);
    if (is_essential(L, I.lo, L.bottom, I.hi)) S.add(i);
  }
  return S;
}

GoldieAnalysis analyze_goldie(const Lattice& L, const IntervalIndex& idx,
                              const AssemblyFrame& assembly) {
  GoldieAnalysis g;
  g.fset = nonsingular_intervals(L, idx);
  g.dset = essential_intervals(L, idx);

  Nucleus via_fset = nucleus_from_fset(L, idx, g.fset);
  Nucleus via_chi = chi(L, assembly, L.bottom, L.top);
  Nucleus via_dset = nucleus_from_dset(L, idx, g.dset);
  if (!(via_fset == via_chi) || !(via_chi == via_dset))
    fail(Err::InternalDisagreement,
         "the three routes to the Goldie nucleus disagree on '" + L.name + "'");
  g.zeta = via_chi;

  g.goldman = goldman_nucleus(L, idx);
  g.zeta_is_ddf = is_ddf_nucleus(L, idx, g.zeta);
  g.cbd0 = cbd0(L);
  g.soc0 = soc0(L);
  g.c1 = satisfies_C1(L);
  g.csp = satisfies_CSP(L);
  return g;
}

Nucleus goldman_nucleus(const Lattice& L, const IntervalIndex& idx) {
  IntervalSet nonsing = nonsingular_intervals(L, idx);
  IntervalSet seed(idx.count());
  for (int i : nonsing.members())
    if (is_simple(L, idx.at(i))) seed.add(i);
  return xi(L, idx, seed);
}

bool is_stable_nucleus(const Lattice& L, const IntervalIndex& idx,
                       const Nucleus& j) {
  IntervalSet D = dset_of(L, idx, j);
  for (int i : D.members()) {
    Interval I = idx.at(i);
    for (Elem c = 0; c < L.size; ++c)
      if (L.le(I.hi, c) && is_essential(L, I.hi, I.lo, c) &&
          !D.contains(idx.of(Interval{I.lo, c})))
        return false;
  }
  return true;
}

bool is_ddf_nucleus(const Lattice& L, const IntervalIndex& idx,
                    const Nucleus& j) {
  if (!is_stable_nucleus(L, idx, j)) return false;
  IntervalSet D = dset_of(L, idx, j);
  for (int i : D.members())
    for (int q : D.members()) {
      Interval I = idx.at(i), J = idx.at(q);
      if (I.hi == J.hi &&
          !D.contains(idx.of(Interval{L.meet(I.lo, J.lo), I.hi})))
        return false;
    }
  return true;
}

Nucleus lowest_ddf_above_zeta(const Lattice& L, const IntervalIndex& idx,
                              const AssemblyFrame& assembly) {
  Nucleus zeta = chi(L, assembly, L.bottom, L.top);
  Nucleus neg = heyting_negation(L, assembly, zeta);
  Nucleus k = nucleus_from_dset(L, idx, fset_of(L, idx, neg));
  bool above = true;
  for (Elem a = 0; a < L.size && above; ++a)
    above = L.le(zeta.table[a], k.table[a]);
  if (!above || !is_ddf_nucleus(L, idx, k))
    fail(Err::InternalDisagreement,
         "F_{not zeta} did not induce a DDF nucleus above zeta on '" + L.name +
             "'");
  return k;
}

}  // namespace idiom
