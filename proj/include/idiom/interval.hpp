#pragma once

#include <compare>
#include <string>
#include <vector>

#include "idiom/lattice.hpp"

namespace idiom {

struct Interval {
  Elem lo = 0;
  Elem hi = 0;
  bool trivial() const { return lo == hi; }
  auto operator<=>(const Interval&) const = default;
};

/// Dense bijection between the intervals of a lattice and 0..count-1,
/// ordered lexicographically by (lo, hi).
struct IntervalIndex {
  std::vector<Interval> list;
  std::vector<std::vector<int>> pos;  // pos[lo][hi], -1 when incomparable

  int count() const { return static_cast<int>(list.size()); }
  Interval at(int i) const { return list[i]; }
  int of(Interval I) const { return pos[I.lo][I.hi]; }
  bool valid(Interval I) const {
    return I.lo >= 0 && I.hi < static_cast<int>(pos.size()) && of(I) >= 0;
  }
};

IntervalIndex enumerate_intervals(const Lattice& L);

/// I ~ J: {I,J} = {[l, l\/r], [l/\r, r]} for some l, r. Decided by the O(1)
/// algebraic test; reflexive and symmetric, not transitive in general.
bool are_similar(const Lattice& L, Interval I, Interval J);

/// Nontrivial with nothing strictly between.
bool is_simple(const Lattice& L, Interval I);
bool is_complemented_interval(const Lattice& L, Interval I);
/// Every nontrivial subinterval contains a simple one. Constantly true on
/// finite lattices; kept as an executable sanity predicate.
bool is_weakly_atomic(const Lattice& L, Interval I);

bool is_subinterval(const Lattice& L, Interval inner, Interval outer);

std::string format_interval(const Lattice& L, Interval I);

}  // namespace idiom
