#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "idiom/corpus.hpp"
#include "idiom/errors.hpp"
#include "idiom/nucleus.hpp"
#include "oracles.hpp"

using namespace idiom;

namespace {

const std::vector<std::string> kSmall = {"chain2", "chain3", "chain4",
                                         "M3",     "diamond", "exa1",
                                         "ex2",    "chain5"};

}  // namespace

TEST_CASE("nucleus enumeration matches the all-self-maps oracle") {
  for (const std::string& name : kSmall) {
    CAPTURE(name);
    const Lattice& L = corpus_lattice(name);
    AssemblyFrame assembly = enumerate_nuclei(L);
    std::vector<Nucleus> brute = oracle::all_nuclei(L);
    CHECK(assembly.nuclei == brute);
  }
}

TEST_CASE("known nucleus counts") {
  // On a chain every meet-closed subset containing top works: 2^(n-1) nuclei.
  CHECK(enumerate_nuclei(corpus_lattice("chain2")).count() == 2);
  CHECK(enumerate_nuclei(corpus_lattice("chain4")).count() == 8);
  CHECK(enumerate_nuclei(corpus_lattice("M3")).count() == 2);
  CHECK(enumerate_nuclei(corpus_lattice("exa1")).count() == 4);
}

TEST_CASE("the size cap is enforced") {
  CHECK_THROWS_AS(enumerate_nuclei(corpus_lattice("cube4")), IdiomError);
  try {
    enumerate_nuclei(corpus_lattice("cube4"));
  } catch (const IdiomError& e) {
    CHECK(e.kind() == Err::SizeCapExceeded);
  }
  // The assembly of a finite Boolean algebra is a copy of itself.
  CHECK(enumerate_nuclei(corpus_lattice("cube2"), 4).count() == 4);
  CHECK_THROWS_AS(enumerate_nuclei(corpus_lattice("cube2"), 3), IdiomError);
}

TEST_CASE("the assembly is a distributive lattice with the right bounds") {
  for (const std::string& name : kSmall) {
    CAPTURE(name);
    const Lattice& L = corpus_lattice(name);
    AssemblyFrame assembly = enumerate_nuclei(L);
    IdiomReport r = validate_idiom(assembly.as_lattice);
    CHECK(r.is_lattice);
    CHECK(r.is_distributive);
    CHECK(assembly.nuclei[assembly.as_lattice.bottom] == identity_nucleus(L));
    CHECK(assembly.nuclei[assembly.as_lattice.top] == const_top_nucleus(L));
    for (const Nucleus& j : assembly.nuclei)
      CHECK(assembly.index_of(j) >= 0);
    CHECK(assembly.index_of(Nucleus{std::vector<Elem>(L.size, -1)}) == -1);
  }
}

TEST_CASE("nuclei round-trip through division and free sets") {
  for (const std::string& name : kSmall) {
    CAPTURE(name);
    const Lattice& L = corpus_lattice(name);
    IntervalIndex idx = enumerate_intervals(L);
    for (const Nucleus& j : enumerate_nuclei(L).nuclei) {
      IntervalSet D = dset_of(L, idx, j);
      IntervalSet F = fset_of(L, idx, j);
      SetFlags fd = classify_set(L, idx, D);
      CHECK(fd.division);
      CHECK(classify_set(L, idx, F).free_set);
      CHECK(nucleus_from_dset(L, idx, D) == j);
      CHECK(nucleus_from_fset(L, idx, F) == j);
    }
  }
}

TEST_CASE("the nucleus-to-division-set bijection is an order isomorphism") {
  const Lattice& L = corpus_lattice("exa1");
  IntervalIndex idx = enumerate_intervals(L);
  AssemblyFrame assembly = enumerate_nuclei(L);
  for (const Nucleus& j : assembly.nuclei)
    for (const Nucleus& k : assembly.nuclei) {
      bool pointwise = true;
      for (Elem x = 0; x < L.size; ++x)
        if (!L.le(j(x), k(x))) pointwise = false;
      CHECK(pointwise == dset_of(L, idx, j).subset_of(dset_of(L, idx, k)));
    }
}

TEST_CASE("nucleus_from_dset rejects non-division sets") {
  const Lattice& L = corpus_lattice("exa1");
  IntervalIndex idx = enumerate_intervals(L);
  IntervalSet bad(idx.count());
  bad.add(idx.of({L.bottom, L.require("S")}));
  CHECK_THROWS_AS(nucleus_from_dset(L, idx, bad), IdiomError);
  try {
    nucleus_from_dset(L, idx, bad);
  } catch (const IdiomError& e) {
    CHECK(e.kind() == Err::NotADivisionSet);
  }
  CHECK_THROWS_AS(nucleus_from_fset(L, idx, bad), IdiomError);
}

TEST_CASE("idempotent closure of a prenucleus") {
  const Lattice& L = corpus_lattice("chain3");
  // x -> min(x+1, top) is a prenucleus on a chain but not idempotent.
  std::vector<Elem> bump = {1, 2, 2};
  CHECK(is_prenucleus(L, bump));
  CHECK(!is_nucleus(L, bump));
  CHECK(idempotent_closure(L, bump) == const_top_nucleus(L));
  CHECK_THROWS_AS(idempotent_closure(L, {2, 1, 2}), IdiomError);
}

TEST_CASE("meets and joins in the assembly") {
  for (const std::string& name : kSmall) {
    CAPTURE(name);
    const Lattice& L = corpus_lattice(name);
    AssemblyFrame assembly = enumerate_nuclei(L);
    const Lattice& NA = assembly.as_lattice;
    for (int p = 0; p < assembly.count(); ++p)
      for (int q = 0; q < assembly.count(); ++q) {
        std::vector<Nucleus> pair = {assembly.nuclei[p], assembly.nuclei[q]};
        Nucleus m = nucleus_meet(L, pair);
        CHECK(assembly.index_of(m) == NA.meet(p, q));
        Nucleus j1 = nucleus_join(L, assembly, pair, JoinMethod::Iterative);
        Nucleus j2 = nucleus_join(L, assembly, pair, JoinMethod::ChiFormula);
        CHECK(j1 == j2);
        CHECK(assembly.index_of(j1) == NA.join(p, q));
      }
    CHECK(nucleus_meet(L, {}) == const_top_nucleus(L));
    CHECK(nucleus_join(L, assembly, {}) == identity_nucleus(L));
  }
}

TEST_CASE("chi is the largest nucleus fixing the division") {
  for (const std::string& name : kSmall) {
    CAPTURE(name);
    const Lattice& L = corpus_lattice(name);
    AssemblyFrame assembly = enumerate_nuclei(L);
    for (Elem a = 0; a < L.size; ++a)
      for (Elem b = 0; b < L.size; ++b) {
        if (!L.le(a, b)) continue;
        Nucleus c = chi(L, assembly, a, b);
        CHECK(L.meet(c(a), b) == a);
        for (const Nucleus& j : assembly.nuclei)
          if (L.meet(j(a), b) == a)
            for (Elem x = 0; x < L.size; ++x) CHECK(L.le(j(x), c(x)));
      }
  }
}

TEST_CASE("xi agrees with the meet over collapsing nuclei") {
  for (const std::string& name : kSmall) {
    CAPTURE(name);
    const Lattice& L = corpus_lattice(name);
    IntervalIndex idx = enumerate_intervals(L);
    AssemblyFrame assembly = enumerate_nuclei(L);
    for (int i = 0; i < idx.count(); ++i) {
      IntervalSet seed(idx.count());
      seed.add(i);
      CHECK(xi(L, idx, seed) == oracle::xi_by_meet(L, idx, assembly, seed));
      Interval I = idx.at(i);
      CHECK(xi(L, idx, I.lo, I.hi) == xi(L, idx, seed));
    }
  }
}

TEST_CASE("Heyting negation in the assembly") {
  const Lattice& L = corpus_lattice("exa1");
  AssemblyFrame assembly = enumerate_nuclei(L);
  CHECK(heyting_negation(L, assembly, identity_nucleus(L)) ==
        const_top_nucleus(L));
  CHECK(heyting_negation(L, assembly, const_top_nucleus(L)) ==
        identity_nucleus(L));
  for (const Nucleus& j : assembly.nuclei) {
    Nucleus n = heyting_negation(L, assembly, j);
    CHECK(nucleus_meet(L, std::vector<Nucleus>{j, n}) == identity_nucleus(L));
  }
}

TEST_CASE("formatting") {
  const Lattice& L = corpus_lattice("chain2");
  CHECK(format_nucleus(L, const_top_nucleus(L)) == "j: c0↦c1, c1↦c1");
  CHECK(format_nucleus(L, identity_nucleus(L), "id") == "id: c0↦c0, c1↦c1");
}
