#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "idiom/corpus.hpp"
#include "idiom/errors.hpp"
#include "idiom/interval_set.hpp"
#include "idiom/nucleus.hpp"
#include "oracles.hpp"

using namespace idiom;

namespace {

IntervalSet by_labels(const Lattice& L, const IntervalIndex& idx,
                      std::vector<std::pair<std::string, std::string>> pairs) {
  IntervalSet S(idx.count());
  for (auto& [lo, hi] : pairs) S.add(idx.of({L.require(lo), L.require(hi)}));
  return S;
}

}  // namespace

TEST_CASE("set algebra") {
  Lattice L = corpus_lattice("exa1");
  IntervalIndex idx = enumerate_intervals(L);
  IntervalSet A = by_labels(L, idx, {{"0", "S"}, {"0", "T"}});
  IntervalSet B = by_labels(L, idx, {{"0", "T"}, {"I", "R"}});
  CHECK(A.count() == 2);
  CHECK(A.intersect(B) == by_labels(L, idx, {{"0", "T"}}));
  CHECK(A.unite(B).count() == 3);
  CHECK(A.intersect(B).subset_of(A));
  CHECK(!A.subset_of(B));
  CHECK(A.members().size() == 2);
}

TEST_CASE("the trivial intervals form the least division set") {
  for (const CorpusEntry& e : corpus()) {
    if (e.lattice.size > 8) continue;
    CAPTURE(e.name);
    IntervalIndex idx = enumerate_intervals(e.lattice);
    IntervalSet T = trivial_intervals(e.lattice, idx);
    SetFlags f = classify_set(e.lattice, idx, T);
    CHECK(f.abstract_set);
    CHECK(f.basic);
    CHECK(f.congruence);
    CHECK(f.division);
    CHECK(f.free_set);
    IntervalSet empty(idx.count());
    CHECK(division_closure(e.lattice, idx, empty) == T);
  }
}

TEST_CASE("the full interval set is a division set") {
  Lattice L = corpus_lattice("M3");
  IntervalIndex idx = enumerate_intervals(L);
  SetFlags f = classify_set(L, idx, all_intervals(idx));
  CHECK(f.division);
  CHECK(f.stable);
  CHECK(f.ddf);
}

TEST_CASE("classification distinguishes the hierarchy levels") {
  Lattice L = corpus_lattice("exa1");
  IntervalIndex idx = enumerate_intervals(L);

  // Similarity-closed but missing a subinterval: abstract, not basic.
  IntervalSet sim = with_trivials(
      L, idx, by_labels(L, idx, {{"0", "I"}, {"S", "R"}, {"T", "R"}, {"U", "R"}}));
  SetFlags f1 = classify_set(L, idx, sim);
  CHECK(f1.abstract_set);
  CHECK(!f1.basic);

  // {trivials, [I,R]}: similarity gives nothing new, closed under everything.
  IntervalSet dzeta = with_trivials(L, idx, by_labels(L, idx, {{"I", "R"}}));
  SetFlags f2 = classify_set(L, idx, dzeta);
  CHECK(f2.division);
  CHECK(f2.stable);
  CHECK(f2.ddf);

  // An atom interval alone is not similarity closed.
  IntervalSet one = with_trivials(L, idx, by_labels(L, idx, {{"0", "S"}}));
  CHECK(!classify_set(L, idx, one).abstract_set);

  // Without the trivial intervals the division flag must refuse.
  IntervalSet bare = by_labels(L, idx, {{"I", "R"}});
  SetFlags f3 = classify_set(L, idx, bare);
  CHECK(!f3.division);
  CHECK(!f3.free_set);
}

TEST_CASE("division closure is the least closed superset") {
  for (const CorpusEntry& e : corpus()) {
    if (e.lattice.size > 8) continue;
    CAPTURE(e.name);
    const Lattice& L = e.lattice;
    IntervalIndex idx = enumerate_intervals(L);
    AssemblyFrame assembly = enumerate_nuclei(L);
    for (int i = 0; i < idx.count(); ++i) {
      IntervalSet seed(idx.count());
      seed.add(i);
      IntervalSet C = division_closure(L, idx, seed);
      CHECK(oracle::division_closed_superset(L, idx, seed, C));
      CHECK(classify_set(L, idx, C).division);
      // Least: contained in every D_j that collapses the seed interval.
      for (const Nucleus& j : assembly.nuclei) {
        IntervalSet D = dset_of(L, idx, j);
        if (D.contains(i)) CHECK(C.subset_of(D));
      }
    }
  }
}

TEST_CASE("closure of the exa1 seed reproduces the Goldie division set") {
  Lattice L = corpus_lattice("exa1");
  IntervalIndex idx = enumerate_intervals(L);
  IntervalSet C = division_closure(L, idx, by_labels(L, idx, {{"I", "R"}}));
  CHECK(C == with_trivials(L, idx, by_labels(L, idx, {{"I", "R"}})));

  IntervalSet C2 = division_closure(L, idx, by_labels(L, idx, {{"0", "S"}}));
  CHECK(C2 == with_trivials(L, idx,
                            by_labels(L, idx, {{"0", "S"},
                                               {"0", "T"},
                                               {"0", "U"},
                                               {"S", "I"},
                                               {"T", "I"},
                                               {"U", "I"},
                                               {"0", "I"}})));
}

TEST_CASE("free sets from closure tops") {
  Lattice L = corpus_lattice("exa1");
  IntervalIndex idx = enumerate_intervals(L);
  // Fixed set of zeta: everything except I.
  IntervalSet F = free_set_from_tops(L, idx, {L.bottom, L.require("S"),
                                              L.require("T"), L.require("U"),
                                              L.require("R")});
  CHECK(classify_set(L, idx, F).free_set);
  CHECK(F == with_trivials(L, idx,
                           by_labels(L, idx, {{"0", "S"},
                                              {"0", "T"},
                                              {"0", "U"},
                                              {"S", "I"},
                                              {"T", "I"},
                                              {"U", "I"},
                                              {"0", "I"},
                                              {"0", "R"},
                                              {"S", "R"},
                                              {"T", "R"},
                                              {"U", "R"}})));

  CHECK_THROWS_AS(free_set_from_tops(L, idx, {L.bottom}), IdiomError);
  // {S, R}: meet-closed, but the induced closure breaks the meet law.
  CHECK_THROWS_AS(free_set_from_tops(L, idx, {L.require("S"), L.top}),
                  IdiomError);
}

TEST_CASE("nonsingular intervals of the reference examples") {
  Lattice L = corpus_lattice("exa1");
  IntervalIndex idx = enumerate_intervals(L);
  CHECK(nonsingular_intervals(L, idx) ==
        with_trivials(L, idx,
                      by_labels(L, idx, {{"0", "S"},
                                         {"0", "T"},
                                         {"0", "U"},
                                         {"S", "I"},
                                         {"T", "I"},
                                         {"U", "I"},
                                         {"0", "I"},
                                         {"0", "R"},
                                         {"S", "R"},
                                         {"T", "R"},
                                         {"U", "R"}})));
}

TEST_CASE("formatting") {
  Lattice L = corpus_lattice("exa1");
  IntervalIndex idx = enumerate_intervals(L);
  IntervalSet S = with_trivials(L, idx, by_labels(L, idx, {{"I", "R"}}));
  CHECK(format_interval_set(L, idx, S) == "{[I,R]}");
  CHECK(format_interval_set(L, idx, S, /*elide_trivials=*/false) ==
        "{[0,0],[S,S],[T,T],[U,U],[I,I],[I,R],[R,R]}");
}
