#include "idiom/interval_set.hpp"

#include <algorithm>

#include "idiom/errors.hpp"

namespace idiom {

int IntervalSet::count() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<int> IntervalSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < capacity(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

bool IntervalSet::subset_of(const IntervalSet& other) const {
  for (int i = 0; i < capacity(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  IntervalSet out(capacity());
  for (int i = 0; i < capacity(); ++i)
    if (bits_[i] && other.bits_[i]) out.add(i);
  return out;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  IntervalSet out(capacity());
  for (int i = 0; i < capacity(); ++i)
    if (bits_[i] || other.bits_[i]) out.add(i);
  return out;
}

IntervalSet trivial_intervals(const Lattice& L, const IntervalIndex& idx) {
  IntervalSet S(idx.count());
  for (Elem x = 0; x < L.size; ++x) S.add(idx.of(Interval{x, x}));
  return S;
}

IntervalSet all_intervals(const IntervalIndex& idx) {
  IntervalSet S(idx.count());
  for (int i = 0; i < idx.count(); ++i) S.add(i);
  return S;
}

IntervalSet with_trivials(const Lattice& L, const IntervalIndex& idx,
                          IntervalSet seed) {
  return seed.unite(trivial_intervals(L, idx));
}

namespace {

bool closed_under_similarity(const Lattice& L, const IntervalIndex& idx,
                             const IntervalSet& S) {
  for (int i : S.members())
    for (int q = 0; q < idx.count(); ++q)
      if (are_similar(L, idx.at(i), idx.at(q)) && !S.contains(q)) return false;
  return true;
}

bool closed_under_subintervals(const Lattice& L, const IntervalIndex& idx,
                               const IntervalSet& S) {
  for (int i : S.members())
    for (int q = 0; q < idx.count(); ++q)
      if (is_subinterval(L, idx.at(q), idx.at(i)) && !S.contains(q))
        return false;
  return true;
}

bool closed_under_abutting(const Lattice& L, const IntervalIndex& idx,
                           const IntervalSet& S) {
  for (int i : S.members())
    for (int q : S.members()) {
      Interval I = idx.at(i), J = idx.at(q);
      if (I.hi == J.lo && !S.contains(idx.of(Interval{I.lo, J.hi})))
        return false;
    }
  return true;
}

bool closed_under_top_joins(const Lattice& L, const IntervalIndex& idx,
                            const IntervalSet& S) {
  for (int i : S.members())
    for (int q : S.members()) {
      Interval I = idx.at(i), J = idx.at(q);
      if (I.lo == J.lo &&
          !S.contains(idx.of(Interval{I.lo, L.join(I.hi, J.hi)})))
        return false;
    }
  return true;
}

bool closed_under_bottom_meets(const Lattice& L, const IntervalIndex& idx,
                               const IntervalSet& S) {
  for (int i : S.members())
    for (int q : S.members()) {
      Interval I = idx.at(i), J = idx.at(q);
      if (I.hi == J.hi &&
          !S.contains(idx.of(Interval{L.meet(I.lo, J.lo), I.hi})))
        return false;
    }
  return true;
}

bool closed_under_top_shrink(const Lattice& L, const IntervalIndex& idx,
                             const IntervalSet& S) {
  for (int i : S.members()) {
    Interval I = idx.at(i);
    for (Elem x = 0; x < L.size; ++x)
      if (L.le(I.lo, x) && L.le(x, I.hi) &&
          !S.contains(idx.of(Interval{I.lo, x})))
        return false;
  }
  return true;
}

bool closed_under_essential_extensions(const Lattice& L,
                                       const IntervalIndex& idx,
                                       const IntervalSet& S) {
  for (int i : S.members()) {
    Interval I = idx.at(i);
    for (Elem c = 0; c < L.size; ++c)
      if (L.le(I.hi, c) && is_essential(L, I.hi, I.lo, c) &&
          !S.contains(idx.of(Interval{I.lo, c})))
        return false;
  }
  return true;
}

bool has_all_trivials(const Lattice& L, const IntervalIndex& idx,
                      const IntervalSet& S) {
  for (Elem x = 0; x < L.size; ++x)
    if (!S.contains(idx.of(Interval{x, x}))) return false;
  return true;
}

}  // namespace

SetFlags classify_set(const Lattice& L, const IntervalIndex& idx,
                      const IntervalSet& S) {
  SetFlags f;
  const bool trivials = has_all_trivials(L, idx, S);
  f.abstract_set = S.count() > 0 && closed_under_similarity(L, idx, S);
  f.basic = f.abstract_set && closed_under_subintervals(L, idx, S);
  f.congruence = f.basic && closed_under_abutting(L, idx, S);
  f.predivision = f.basic && closed_under_top_joins(L, idx, S);
  f.division = f.congruence && f.predivision && trivials;
  f.free_set = trivials && closed_under_similarity(L, idx, S) &&
               closed_under_top_shrink(L, idx, S) &&
               closed_under_abutting(L, idx, S) &&
               closed_under_essential_extensions(L, idx, S) &&
               closed_under_bottom_meets(L, idx, S);
  f.stable = f.division && closed_under_essential_extensions(L, idx, S);
  f.ddf = f.stable && closed_under_bottom_meets(L, idx, S);
  return f;
}

IntervalSet division_closure(const Lattice& L, const IntervalIndex& idx,
                             const IntervalSet& seed) {
  IntervalSet S = with_trivials(L, idx, seed);
  bool changed = true;
  while (changed) {
    changed = false;
    auto add = [&](int q) {
      if (!S.contains(q)) {
        S.add(q);
        changed = true;
      }
    };
    auto ms = S.members();
    for (int i : ms) {
      Interval I = idx.at(i);
      for (int q = 0; q < idx.count(); ++q) {
        if (are_similar(L, I, idx.at(q))) add(q);
        if (is_subinterval(L, idx.at(q), I)) add(q);
      }
      for (int q : ms) {
        Interval J = idx.at(q);
        if (I.hi == J.lo) add(idx.of(Interval{I.lo, J.hi}));
        if (I.lo == J.lo) add(idx.of(Interval{I.lo, L.join(I.hi, J.hi)}));
      }
    }
  }
  return S;
}

IntervalSet free_set_from_tops(const Lattice& L, const IntervalIndex& idx,
                               const std::vector<Elem>& tops) {
  if (std::find(tops.begin(), tops.end(), L.top) == tops.end())
    fail(Err::MissingTop, "seed does not contain the top element");
  std::vector<Elem> j(L.size);
  for (Elem a = 0; a < L.size; ++a) {
    Elem acc = L.top;
    for (Elem x : tops)
      if (L.le(a, x)) acc = L.meet(acc, x);
    j[a] = acc;
  }
  for (Elem a = 0; a < L.size; ++a) {
    if (!L.le(a, j[a]) || j[j[a]] != j[a])
      fail(Err::NotAFreeSeed, "induced map is not a closure at " + L.label(a));
    for (Elem b = 0; b < L.size; ++b)
      if (j[L.meet(a, b)] != L.meet(j[a], j[b]))
        fail(Err::NotAFreeSeed, "induced map violates the meet law at (" +
                                    L.label(a) + "," + L.label(b) + ")");
  }
  IntervalSet F(idx.count());
  for (int i = 0; i < idx.count(); ++i) {
    Interval I = idx.at(i);
    if (L.meet(j[I.lo], I.hi) == I.lo) F.add(i);
  }
  return F;
}

IntervalSet nonsingular_intervals(const Lattice& L, const IntervalIndex& idx) {
  IntervalSet G(idx.count());
  for (int i = 0; i < idx.count(); ++i) {
    Interval I = idx.at(i);
    bool nonsingular = true;
    for (Elem x = 0; x < L.size && nonsingular; ++x) {
      if (!(L.le(I.lo, x) && L.le(x, I.hi))) continue;
      for (int q = 0; q < idx.count() && nonsingular; ++q) {
        Interval C = idx.at(q);
        if (are_similar(L, C, Interval{I.lo, x}) &&
            is_essential(L, C.lo, L.bottom, C.hi) && !C.trivial())
          nonsingular = false;
      }
    }
    if (nonsingular) G.add(i);
  }
  return G;
}

std::string format_interval_set(const Lattice& L, const IntervalIndex& idx,
                                const IntervalSet& S, bool elide_trivials) {
  std::string out = "{";
  bool first = true;
  for (int i : S.members()) {
    if (elide_trivials && idx.at(i).trivial()) continue;
    if (!first) out += ",";
    out += format_interval(L, idx.at(i));
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace idiom
