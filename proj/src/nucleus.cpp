#include "idiom/nucleus.hpp"

#include <algorithm>

#include "idiom/errors.hpp"

namespace idiom {

std::vector<Elem> Nucleus::fixed_points() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < static_cast<Elem>(table.size()); ++x)
    if (table[x] == x) out.push_back(x);
  return out;
}

bool is_prenucleus(const Lattice& L, const std::vector<Elem>& f) {
  if (static_cast<int>(f.size()) != L.size) return false;
  for (Elem a = 0; a < L.size; ++a) {
    if (!L.le(a, f[a])) return false;
    for (Elem b = 0; b < L.size; ++b) {
      if (L.le(a, b) && !L.le(f[a], f[b])) return false;
      if (f[L.meet(a, b)] != L.meet(f[a], f[b])) return false;
    }
  }
  return true;
}

bool is_nucleus(const Lattice& L, const std::vector<Elem>& f) {
  if (!is_prenucleus(L, f)) return false;
  for (Elem a = 0; a < L.size; ++a)
    if (f[f[a]] != f[a]) return false;
  return true;
}

Nucleus identity_nucleus(const Lattice& L) {
  Nucleus j;
  j.table.resize(L.size);
  for (Elem x = 0; x < L.size; ++x) j.table[x] = x;
  return j;
}

Nucleus const_top_nucleus(const Lattice& L) {
  Nucleus j;
  j.table.assign(L.size, L.top);
  return j;
}

int AssemblyFrame::index_of(const Nucleus& j) const {
  auto it = std::lower_bound(nuclei.begin(), nuclei.end(), j);
  if (it == nuclei.end() || !(*it == j)) return -1;
  return static_cast<int>(it - nuclei.begin());
}

AssemblyFrame enumerate_nuclei(const Lattice& L, int cap) {
  if (L.size > cap)
    fail(Err::SizeCapExceeded,
         "lattice '" + L.name + "' has " + std::to_string(L.size) +
             " elements, above the nucleus-enumeration cap of " +
             std::to_string(cap));

  std::vector<Elem> rest;  // everything except top
  for (Elem x = 0; x < L.size; ++x)
    if (x != L.top) rest.push_back(x);
  const int m = static_cast<int>(rest.size());

  AssemblyFrame af;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<char> in(L.size, 0);
    in[L.top] = 1;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) in[rest[i]] = 1;

    bool meet_closed = true;
    for (Elem x = 0; x < L.size && meet_closed; ++x)
      for (Elem y = x; y < L.size && meet_closed; ++y)
        if (in[x] && in[y] && !in[L.meet(x, y)]) meet_closed = false;
    if (!meet_closed) continue;

    // j(a) = least member of the fixed set above a.
    Nucleus j;
    j.table.resize(L.size);
    for (Elem a = 0; a < L.size; ++a) {
      Elem acc = L.top;
      for (Elem x = 0; x < L.size; ++x)
        if (in[x] && L.le(a, x)) acc = L.meet(acc, x);
      j.table[a] = acc;
    }
    bool meet_law = true;
    for (Elem a = 0; a < L.size && meet_law; ++a)
      for (Elem b = 0; b < L.size && meet_law; ++b)
        if (j.table[L.meet(a, b)] != L.meet(j.table[a], j.table[b]))
          meet_law = false;
    if (meet_law) af.nuclei.push_back(std::move(j));
  }
  std::sort(af.nuclei.begin(), af.nuclei.end());

  const int n = af.count();
  std::vector<std::string> labels(n);
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int p = 0; p < n; ++p) {
    labels[p] = "j" + std::to_string(p);
    for (int q = 0; q < n; ++q) {
      bool below = true;
      for (Elem a = 0; a < L.size && below; ++a)
        below = L.le(af.nuclei[p].table[a], af.nuclei[q].table[a]);
      leq[p][q] = below;
    }
  }
  af.as_lattice =
      lattice_from_order("N(" + L.name + ")", std::move(labels), std::move(leq));
  return af;
}

Nucleus idempotent_closure(const Lattice& L, const std::vector<Elem>& k) {
  if (!is_prenucleus(L, k))
    fail(Err::NotAFreeSeed, "idempotent closure applied to a non-prenucleus");
  std::vector<Elem> cur = k;
  for (;;) {
    std::vector<Elem> next(L.size);
    for (Elem a = 0; a < L.size; ++a) next[a] = k[cur[a]];
    if (next == cur) break;
    cur = std::move(next);
  }
  return Nucleus{std::move(cur)};
}

Nucleus nucleus_meet(const Lattice& L, std::span<const Nucleus> js) {
  Nucleus acc = const_top_nucleus(L);
  for (const Nucleus& j : js)
    for (Elem a = 0; a < L.size; ++a)
      acc.table[a] = L.meet(acc.table[a], j.table[a]);
  return acc;
}

Nucleus nucleus_join(const Lattice& L, const AssemblyFrame& assembly,
                     std::span<const Nucleus> js, JoinMethod method) {
  if (js.empty()) return identity_nucleus(L);
  if (method == JoinMethod::Iterative) {
    // Iterate the pointwise sup to its fixpoint. The sup is inflating and
    // monotone but not meet-preserving in general, so this bypasses
    // idempotent_closure; the result must still come out a nucleus.
    std::vector<Elem> sup(L.size, L.bottom);
    for (Elem a = 0; a < L.size; ++a) {
      sup[a] = a;
      for (const Nucleus& j : js) sup[a] = L.join(sup[a], j.table[a]);
    }
    std::vector<Elem> cur = sup;
    for (;;) {
      std::vector<Elem> next(L.size);
      for (Elem a = 0; a < L.size; ++a) next[a] = sup[cur[a]];
      if (next == cur) break;
      cur = std::move(next);
    }
    if (!is_nucleus(L, cur))
      fail(Err::InternalDisagreement,
           "iterated sup of nuclei did not close to a nucleus");
    return Nucleus{std::move(cur)};
  }
  // Meet of chi(a,1) over the common fixed points of the family.
  Nucleus acc = const_top_nucleus(L);
  for (Elem a = 0; a < L.size; ++a) {
    bool fixed_by_all = true;
    for (const Nucleus& j : js) fixed_by_all = fixed_by_all && j.table[a] == a;
    if (!fixed_by_all) continue;
    Nucleus c = chi(L, assembly, a, L.top);
    for (Elem x = 0; x < L.size; ++x) acc.table[x] = L.meet(acc.table[x], c.table[x]);
  }
  return acc;
}

Nucleus chi(const Lattice& L, const AssemblyFrame& assembly, Elem a, Elem b) {
  if (!L.le(a, b))
    fail(Err::OutOfInterval,
         "chi(" + L.label(a) + "," + L.label(b) + "): not an interval");
  Nucleus best;
  best.table.assign(L.size, L.bottom);
  bool any = false;
  for (const Nucleus& j : assembly.nuclei) {
    if (L.meet(j.table[a], b) != a) continue;
    any = true;
    for (Elem x = 0; x < L.size; ++x)
      best.table[x] = L.join(best.table[x], j.table[x]);
  }
  if (!any || assembly.index_of(best) < 0 || L.meet(best.table[a], b) != a)
    fail(Err::InternalDisagreement,
         "pointwise maximum for chi(" + L.label(a) + "," + L.label(b) +
             ") is not itself a qualifying nucleus");
  return best;
}

IntervalSet dset_of(const Lattice& L, const IntervalIndex& idx,
                    const Nucleus& j) {
  IntervalSet D(idx.count());
  for (int i = 0; i < idx.count(); ++i)
    if (L.le(idx.at(i).hi, j.table[idx.at(i).lo])) D.add(i);
  return D;
}

IntervalSet fset_of(const Lattice& L, const IntervalIndex& idx,
                    const Nucleus& j) {
  IntervalSet F(idx.count());
  for (int i = 0; i < idx.count(); ++i)
    if (L.meet(j.table[idx.at(i).lo], idx.at(i).hi) == idx.at(i).lo) F.add(i);
  return F;
}

Nucleus nucleus_from_dset(const Lattice& L, const IntervalIndex& idx,
                          const IntervalSet& D) {
  SetFlags f = classify_set(L, idx, D);
  if (!f.division) {
    std::string clause = !f.abstract_set ? "similarity closure"
                         : !f.basic      ? "subinterval closure"
                         : !f.congruence ? "abutting closure"
                         : !f.predivision ? "join closure"
                                          : "trivial-interval membership";
    fail(Err::NotADivisionSet, "not a division set: " + clause + " fails");
  }
  Nucleus j;
  j.table.resize(L.size);
  for (Elem a = 0; a < L.size; ++a) {
    Elem acc = a;
    for (Elem x = 0; x < L.size; ++x)
      if (L.le(a, x) && D.contains(idx.of(Interval{a, x}))) acc = L.join(acc, x);
    j.table[a] = acc;
  }
  if (!is_nucleus(L, j.table) || !(dset_of(L, idx, j) == D))
    fail(Err::NotADivisionSet, "division set does not induce a nucleus");
  return j;
}

Nucleus nucleus_from_fset(const Lattice& L, const IntervalIndex& idx,
                          const IntervalSet& F) {
  SetFlags f = classify_set(L, idx, F);
  if (!f.free_set)
    fail(Err::NotAFreeSet, "free-set clauses fail for the given set");
  Nucleus j;
  j.table.resize(L.size);
  for (Elem a = 0; a < L.size; ++a) {
    Elem acc = L.top;
    for (Elem x = 0; x < L.size; ++x)
      if (L.le(a, x) && F.contains(idx.of(Interval{x, L.top})))
        acc = L.meet(acc, x);
    j.table[a] = acc;
  }
  if (!is_nucleus(L, j.table) || !(fset_of(L, idx, j) == F))
    fail(Err::NotAFreeSet, "free set does not round-trip through its nucleus");
  return j;
}

Nucleus xi(const Lattice& L, const IntervalIndex& idx, const IntervalSet& seed) {
  return nucleus_from_dset(L, idx, division_closure(L, idx, seed));
}

Nucleus xi(const Lattice& L, const IntervalIndex& idx, Elem a, Elem b) {
  IntervalSet seed(idx.count());
  int i = idx.of(Interval{a, b});
  if (i < 0)
    fail(Err::OutOfInterval,
         "xi(" + L.label(a) + "," + L.label(b) + "): not an interval");
  seed.add(i);
  return xi(L, idx, seed);
}

Nucleus heyting_negation(const Lattice& L, const AssemblyFrame& assembly,
                         const Nucleus& j) {
  const Nucleus id = identity_nucleus(L);
  std::vector<Elem> cands;
  for (int p = 0; p < assembly.count(); ++p) {
    const Nucleus& k = assembly.nuclei[p];
    bool meets_to_id = true;
    for (Elem a = 0; a < L.size && meets_to_id; ++a)
      meets_to_id = L.meet(k.table[a], j.table[a]) == a;
    if (meets_to_id) cands.push_back(p);
  }
  Elem neg = join_all(assembly.as_lattice, cands);
  return assembly.nuclei[neg];
}

std::string format_nucleus(const Lattice& L, const Nucleus& j,
                           const std::string& name) {
  std::string out = name + ":";
  for (Elem a = 0; a < L.size; ++a) {
    out += (a == 0 ? " " : ", ");
    out += L.label(a) + "↦" + L.label(j.table[a]);
  }
  return out;
}

}  // namespace idiom
