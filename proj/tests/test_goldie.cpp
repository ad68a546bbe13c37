#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "idiom/corpus.hpp"
#include "idiom/goldie.hpp"
#include "oracles.hpp"

using namespace idiom;

namespace {

struct Setup {
  const Lattice& L;
  IntervalIndex idx;
  AssemblyFrame assembly;
  GoldieAnalysis g;

  explicit Setup(const std::string& name)
      : L(corpus_lattice(name)),
        idx(enumerate_intervals(L)),
        assembly(enumerate_nuclei(L)),
        g(analyze_goldie(L, idx, assembly)) {}
};

const std::vector<std::string> kHosts = {"chain2", "chain3", "chain4", "chain5",
                                         "M3",     "diamond", "exa1",  "ex2",
                                         "cube2",  "cube3",   "M3stk"};

}  // namespace

TEST_CASE("the three routes to zeta agree on the whole corpus") {
  // analyze_goldie throws InternalDisagreement if its three computations of
  // zeta differ; surviving the call is the check.
  for (const std::string& name : kHosts) {
    CAPTURE(name);
    Setup s(name);
    CHECK(s.assembly.index_of(s.g.zeta) >= 0);
    CHECK(dset_of(s.L, s.idx, s.g.zeta) == s.g.dset);
    CHECK(fset_of(s.L, s.idx, s.g.zeta) == s.g.fset);
    CHECK(s.g.dset == essential_intervals(s.L, s.idx));
    CHECK(s.g.fset == nonsingular_intervals(s.L, s.idx));
  }
}

TEST_CASE("zeta on complemented hosts is the identity") {
  // No proper essential intervals in a Boolean algebra or M3.
  for (const std::string& name : {"cube2", "cube3", "M3"}) {
    CAPTURE(name);
    Setup s(name);
    CHECK(s.g.zeta == identity_nucleus(s.L));
    CHECK(s.g.fset == all_intervals(s.idx));
  }
}

TEST_CASE("zeta on a chain collapses everything above the bottom") {
  // [x,y] is essential for x > 0; 0 is essential in [0,y] only for y = 0.
  Setup s("chain4");
  CHECK(s.g.zeta(s.L.bottom) == s.L.bottom);
  for (Elem x = 1; x < s.L.size; ++x) CHECK(s.g.zeta(x) == s.L.top);
  for (const Interval& I : s.idx.list)
    CHECK(s.g.dset.contains(s.idx.of(I)) == (I.lo > 0 || I.trivial()));
}

TEST_CASE("reference example values") {
  Setup a("exa1");
  CHECK(a.L.label(a.g.zeta(a.L.require("I"))) == "R");
  CHECK(a.g.zeta(a.L.require("S")) == a.L.require("S"));
  CHECK(a.g.zeta_is_ddf);
  CHECK(a.L.label(a.g.cbd0) == "I");
  CHECK(a.L.label(a.g.soc0) == "I");

  Setup b("ex2");
  CHECK(b.g.zeta(b.L.require("I")) == b.L.top);
  CHECK(b.g.zeta(b.L.bottom) == b.L.bottom);
}

TEST_CASE("the Goldman nucleus is the negation of zeta") {
  for (const std::string& name : kHosts) {
    CAPTURE(name);
    Setup s(name);
    CHECK(s.g.goldman == goldman_nucleus(s.L, s.idx));
    CHECK(s.g.goldman == heyting_negation(s.L, s.assembly, s.g.zeta));
    // Their meet is the identity: no nucleus lies under both.
    std::vector<Nucleus> pair = {s.g.goldman, s.g.zeta};
    CHECK(nucleus_meet(s.L, pair) == identity_nucleus(s.L));
  }
}

TEST_CASE("stability and the DDF property") {
  for (const std::string& name : kHosts) {
    CAPTURE(name);
    Setup s(name);
    CHECK(is_stable_nucleus(s.L, s.idx, s.g.zeta));
    CHECK(is_stable_nucleus(s.L, s.idx, identity_nucleus(s.L)));
    CHECK(is_ddf_nucleus(s.L, s.idx, const_top_nucleus(s.L)));
    // zeta is stable; DDF can fail, and the flag must match the predicate.
    CHECK(s.g.zeta_is_ddf == is_ddf_nucleus(s.L, s.idx, s.g.zeta));

    Nucleus k = lowest_ddf_above_zeta(s.L, s.idx, s.assembly);
    CHECK(is_ddf_nucleus(s.L, s.idx, k));
    for (Elem x = 0; x < s.L.size; ++x) CHECK(s.L.le(s.g.zeta(x), k(x)));
    // Least: any DDF nucleus above zeta dominates k.
    for (const Nucleus& j : s.assembly.nuclei) {
      bool above = true;
      for (Elem x = 0; x < s.L.size; ++x)
        if (!s.L.le(s.g.zeta(x), j(x))) above = false;
      if (above && is_ddf_nucleus(s.L, s.idx, j))
        for (Elem x = 0; x < s.L.size; ++x) CHECK(s.L.le(k(x), j(x)));
    }
  }
}

TEST_CASE("decomposition flags on the corpus") {
  Setup c("cube3");
  CHECK(c.g.c1);
  CHECK(c.g.csp);
  CHECK(c.g.cbd0 == c.L.top);
  CHECK(c.g.soc0 == c.L.top);

  Setup m("M3stk");
  CHECK(m.L.label(m.g.cbd0) == m.L.label(cbd0(m.L)));
  CHECK(m.g.soc0 == soc0(m.L));
}
