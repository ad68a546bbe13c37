#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "idiom/corpus.hpp"
#include "idiom/interval.hpp"
#include "oracles.hpp"

using namespace idiom;

TEST_CASE("interval enumeration matches the comparable-pair count") {
  for (const CorpusEntry& e : corpus()) {
    CAPTURE(e.name);
    const Lattice& L = e.lattice;
    IntervalIndex idx = enumerate_intervals(L);
    int pairs = 0;
    for (Elem x = 0; x < L.size; ++x)
      for (Elem y = 0; y < L.size; ++y)
        if (L.le(x, y)) ++pairs;
    CHECK(idx.count() == pairs);
    for (int i = 0; i < idx.count(); ++i) {
      Interval I = idx.at(i);
      CHECK(idx.of(I) == i);
      CHECK(idx.valid(I));
    }
    CHECK(!idx.valid({L.top, L.bottom}));
  }
  CHECK(enumerate_intervals(corpus_lattice("exa1")).count() == 18);
}

TEST_CASE("similarity agrees with the generating-pair scan") {
  for (const CorpusEntry& e : corpus()) {
    if (e.lattice.size > 8) continue;
    CAPTURE(e.name);
    IntervalIndex idx = enumerate_intervals(e.lattice);
    for (const Interval& I : idx.list)
      for (const Interval& J : idx.list) {
        CAPTURE(I.lo);
        CAPTURE(I.hi);
        CAPTURE(J.lo);
        CAPTURE(J.hi);
        CHECK(are_similar(e.lattice, I, J) ==
              oracle::similar_by_scan(e.lattice, I, J));
      }
  }
}

TEST_CASE("similarity is reflexive and symmetric") {
  Lattice L = corpus_lattice("exa1");
  IntervalIndex idx = enumerate_intervals(L);
  for (const Interval& I : idx.list) {
    CHECK(are_similar(L, I, I));
    for (const Interval& J : idx.list)
      CHECK(are_similar(L, I, J) == are_similar(L, J, I));
  }
}

TEST_CASE("perspectivity in exa1") {
  Lattice L = corpus_lattice("exa1");
  Elem O = L.bottom, S = L.require("S"), T = L.require("T"), I = L.require("I");
  CHECK(are_similar(L, {O, S}, {T, I}));   // S \/ T = I, S /\ T = 0
  CHECK(are_similar(L, {O, T}, {S, I}));
  CHECK(!are_similar(L, {O, S}, {I, L.require("R")}));
  CHECK(!are_similar(L, {O, S}, {O, T}));  // same-floor distinct atoms
}

TEST_CASE("simple intervals are the nontrivial covers") {
  for (const CorpusEntry& e : corpus()) {
    CAPTURE(e.name);
    const Lattice& L = e.lattice;
    for (const Interval& I : enumerate_intervals(L).list) {
      CHECK(is_simple(L, I) == (!I.trivial() && L.covers(I.lo, I.hi)));
      if (I.trivial()) CHECK(!is_simple(L, I));  // never both trivial and simple
      CHECK(is_weakly_atomic(L, I));             // finite, hence always
    }
  }
}

TEST_CASE("complemented intervals") {
  Lattice L = corpus_lattice("exa1");
  CHECK(is_complemented_interval(L, {L.bottom, L.require("I")}));  // a copy of M3
  CHECK(!is_complemented_interval(L, {L.bottom, L.top}));
  CHECK(is_complemented_interval(L, {L.require("S"), L.require("S")}));
}

TEST_CASE("subintervals") {
  Lattice L = corpus_lattice("diamond");
  Elem a = L.require("a"), b = L.require("b"), d = L.require("d");
  CHECK(is_subinterval(L, {a, b}, {L.bottom, L.top}));
  CHECK(is_subinterval(L, {a, b}, {a, b}));
  CHECK(!is_subinterval(L, {L.bottom, b}, {a, d}));
}

TEST_CASE("formatting") {
  Lattice L = corpus_lattice("exa1");
  CHECK(format_interval(L, {L.bottom, L.require("I")}) == "[0,I]");
  CHECK(format_interval(L, {L.require("S"), L.require("S")}) == "[S,S]");
}
