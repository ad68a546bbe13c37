#pragma once

#include <string>
#include <vector>

#include "idiom/interval.hpp"
#include "idiom/lattice.hpp"

namespace idiom {

/// Membership bitset over an IntervalIndex.
class IntervalSet {
public:
  IntervalSet() = default;
  explicit IntervalSet(int n) : bits_(n, 0) {}

  int capacity() const { return static_cast<int>(bits_.size()); }
  bool contains(int i) const { return bits_[i] != 0; }
  void add(int i) { bits_[i] = 1; }
  void remove(int i) { bits_[i] = 0; }
  int count() const;
  std::vector<int> members() const;

  bool subset_of(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet unite(const IntervalSet& other) const;

  bool operator==(const IntervalSet&) const = default;

private:
  std::vector<char> bits_;
};

/// The set of all trivial intervals [x,x].
IntervalSet trivial_intervals(const Lattice& L, const IntervalIndex& idx);
/// The full set of intervals.
IntervalSet all_intervals(const IntervalIndex& idx);
/// seed plus all trivial intervals.
IntervalSet with_trivials(const Lattice& L, const IntervalIndex& idx,
                          IntervalSet seed);

struct SetFlags {
  bool abstract_set = false;  // nonempty and closed under similarity
  bool basic = false;         // abstract, closed under subintervals
  bool congruence = false;    // basic, closed under abutting composition
  bool predivision = false;   // basic, closed under binary top-joins
  bool division = false;      // congruence and pre-division, trivials present
  bool free_set = false;      // division-free clauses (i)-(v), trivials present
  bool stable = false;        // division, closed under essential extensions
  bool ddf = false;           // stable, closed under binary bottom-meets
};

/// Decides every clause by exhaustive scan. The directed-join and
/// arbitrary-meet clauses reduce to their binary forms on a finite lattice.
SetFlags classify_set(const Lattice& L, const IntervalIndex& idx,
                      const IntervalSet& S);

/// Least division set containing seed: fixpoint of the similarity,
/// subinterval, abutting and binary-join rules, trivials included.
IntervalSet division_closure(const Lattice& L, const IntervalIndex& idx,
                             const IntervalSet& seed);

/// The free set of the map j(a) = /\{x in T : a <= x}. T must contain top and
/// induce a meet-preserving closure.
IntervalSet free_set_from_tops(const Lattice& L, const IntervalIndex& idx,
                               const std::vector<Elem>& tops);

/// Intervals none of whose subintervals is similar to an interval [c,d] with
/// c essential in [0,d], except trivially.
IntervalSet nonsingular_intervals(const Lattice& L, const IntervalIndex& idx);

/// Sorted label-pair list; trivial intervals elided by default.
std::string format_interval_set(const Lattice& L, const IntervalIndex& idx,
                                const IntervalSet& S,
                                bool elide_trivials = true);

}  // namespace idiom
