#pragma once

#include <optional>

#include "idiom/interval.hpp"
#include "idiom/interval_set.hpp"
#include "idiom/lattice.hpp"
#include "idiom/nucleus.hpp"

namespace idiom {

/// The fixed points of a nucleus as a lattice: meet as in the host, join of
/// x,y is j(x \/ y). The surjection a -> j(a) preserves host joins.
struct QuotientIdiom {
  Lattice host;
  Nucleus j;
  std::vector<Elem> fixed;  // ascending host elements
  Lattice induced;          // lattice over the fixed points

  /// Index in `induced` of a fixed host element.
  int quotient_of(Elem host_elem) const;
  Elem host_of(int q) const { return fixed[q]; }
};

QuotientIdiom quotient_idiom(const Lattice& L, const Nucleus& j);

/// An interval [j(a), j(b)] of the quotient, kept as host elements.
struct QuotientInterval {
  Interval in_host;  // both ends fixed by j
};

/// Q_j([a,b]) = [j(a), j(b)].
QuotientInterval interval_of_quotients(const Lattice& L, const Nucleus& j,
                                       Interval I);
/// Reads a quotient interval back as a host interval. Q_j . u_j = id and
/// u_j(Q_j(I)) lands in F_j.
Interval u_j(const QuotientInterval& Q);

/// {x in [a,b] : [x,b] in F_j}, i.e. j(x) /\ b = x; order-isomorphic to
/// Q_j(I) via x -> j(x) with inverse y -> y /\ b.
std::vector<Elem> saturated_elements(const Lattice& L, const Nucleus& j,
                                     Interval I);

/// j(x) essential in [j(a), j(b)] within the quotient.
bool is_j_essential(const Lattice& L, const Nucleus& j, Elem x, Interval I);

/// Maximal d in I with [lo, c /\ d] in D_j; nonempty, and each member
/// satisfies j(d) /\ hi = d.
std::vector<Elem> j_pseudocomplements(const Lattice& L, const Nucleus& j,
                                      Elem c, Interval I);

/// Every x in [a,b] is a itself or has [x,b] in D_j.
bool is_j_cocritical(const Lattice& L, const Nucleus& j, Interval I);

/// Some independent family of atoms of the quotient joins to its top. True
/// by convention on the one-point quotient.
bool is_semisimple_finite(const QuotientIdiom& Q);

struct SsidReport {
  int udim = 0;                 // uniform dimension of the host
  bool semisimple = false;      // quotient by zeta is semisimple finite
  int quotient_atom_family = 0; // size of a maximal independent atom family
};

SsidReport check_ssid(const Lattice& L, const IntervalIndex& idx,
                      const AssemblyFrame& assembly);

struct BooleanQuotientReport {
  bool host_boolean = false;
  // The U_j.Q_j image exhausts F_j up to similarity (checked when boolean).
  bool all_nuclei_satisfy_uq_equals_f = false;
  bool double_negation_uq_equals_f = false;
  std::optional<Interval> witness;  // an F_{~~} member missed by the image
};

/// Requires a distributive host. The image U_j.Q_j(I(A)) always lands in F_j
/// and F_j is similarity closed; the host is Boolean exactly when the
/// similarity closure of the image is all of F_j, tested for every nucleus on
/// Boolean hosts and for the double-negation nucleus in general.
BooleanQuotientReport boolean_quotient_checks(const Lattice& L,
                                              const IntervalIndex& idx,
                                              const AssemblyFrame& assembly);

/// The double-negation nucleus of a distributive lattice,
/// x -> neg(neg(x)) with neg(y) = \/{z : z /\ y = 0}.
Nucleus double_negation_nucleus(const Lattice& L);

}  // namespace idiom
