#include "idiom/interval.hpp"

namespace idiom {

IntervalIndex enumerate_intervals(const Lattice& L) {
  IntervalIndex idx;
  idx.pos.assign(L.size, std::vector<int>(L.size, -1));
  for (Elem lo = 0; lo < L.size; ++lo)
    for (Elem hi = 0; hi < L.size; ++hi)
      if (L.le(lo, hi)) {
        idx.pos[lo][hi] = idx.count();
        idx.list.push_back(Interval{lo, hi});
      }
  return idx;
}

bool are_similar(const Lattice& L, Interval I, Interval J) {
  // One side plays [l/\r, r], the other [l, l\/r], with l = high.lo, r = low.hi.
  auto match = [&](Interval low, Interval high) {
    return L.join(high.lo, low.hi) == high.hi &&
           L.meet(high.lo, low.hi) == low.lo;
  };
  return match(I, J) || match(J, I);
}

bool is_simple(const Lattice& L, Interval I) {
  if (I.trivial()) return false;
  return L.covers(I.lo, I.hi);
}

bool is_complemented_interval(const Lattice& L, Interval I) {
  for (Elem x = 0; x < L.size; ++x)
    if (L.le(I.lo, x) && L.le(x, I.hi) &&
        complements_in(L, x, I.lo, I.hi).empty())
      return false;
  return true;
}

bool is_weakly_atomic(const Lattice& L, Interval I) {
  for (Elem c = 0; c < L.size; ++c)
    for (Elem d = 0; d < L.size; ++d) {
      if (!(L.le(I.lo, c) && L.lt(c, d) && L.le(d, I.hi))) continue;
      bool has_simple = false;
      for (Elem x = 0; x < L.size && !has_simple; ++x)
        for (Elem y = 0; y < L.size && !has_simple; ++y)
          has_simple = L.le(c, x) && L.le(y, d) && L.covers(x, y);
      if (!has_simple) return false;
    }
  return true;
}

bool is_subinterval(const Lattice& L, Interval inner, Interval outer) {
  return L.le(outer.lo, inner.lo) && L.le(inner.hi, outer.hi);
}

std::string format_interval(const Lattice& L, Interval I) {
  return "[" + L.label(I.lo) + "," + L.label(I.hi) + "]";
}

}  // namespace idiom
