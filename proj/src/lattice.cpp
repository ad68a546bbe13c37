#include "idiom/lattice.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "idiom/errors.hpp"

namespace idiom {

std::optional<Elem> Lattice::element_of(const std::string& label) const {
  for (Elem x = 0; x < size; ++x)
    if (labels[x] == label) return x;
  return std::nullopt;
}

Elem Lattice::require(const std::string& label) const {
  if (auto x = element_of(label)) return *x;
  fail(Err::UnknownLabel, "no element labelled '" + label + "' in " + name);
}

bool Lattice::covers(Elem lo, Elem hi) const {
  if (!lt(lo, hi)) return false;
  for (Elem z = 0; z < size; ++z)
    if (lt(lo, z) && lt(z, hi)) return false;
  return true;
}

std::vector<Elem> Lattice::atoms() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < size; ++x)
    if (covers(bottom, x)) out.push_back(x);
  return out;
}

Lattice lattice_from_order(std::string name, std::vector<std::string> labels,
                           std::vector<std::vector<char>> leq) {
  const int n = static_cast<int>(labels.size());
  Lattice L;
  L.name = std::move(name);
  L.size = n;
  L.labels = std::move(labels);
  L.leq = std::move(leq);

  for (Elem x = 0; x < n; ++x) {
    if (!L.le(x, x)) fail(Err::NotALattice, "order is not reflexive");
    for (Elem y = 0; y < n; ++y) {
      if (x != y && L.le(x, y) && L.le(y, x))
        fail(Err::NotALattice, "order is not antisymmetric at " + L.label(x) +
                                   "," + L.label(y));
      for (Elem z = 0; z < n; ++z)
        if (L.le(x, y) && L.le(y, z) && !L.le(x, z))
          fail(Err::NotALattice, "order is not transitive");
    }
  }

  auto bound = [&](bool below) -> std::optional<Elem> {
    for (Elem x = 0; x < n; ++x) {
      bool ok = true;
      for (Elem y = 0; y < n && ok; ++y)
        ok = below ? L.le(x, y) : L.le(y, x);
      if (ok) return x;
    }
    return std::nullopt;
  };
  auto bot = bound(true);
  if (!bot) fail(Err::NoBoundedBottom, "no bottom element in " + L.name);
  auto top = bound(false);
  if (!top) fail(Err::NoBoundedTop, "no top element in " + L.name);
  L.bottom = *bot;
  L.top = *top;

  L.meet_table.assign(n, std::vector<Elem>(n, 0));
  L.join_table.assign(n, std::vector<Elem>(n, 0));
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      std::optional<Elem> glb, lub;
      for (Elem z = 0; z < n; ++z) {
        if (L.le(z, x) && L.le(z, y)) {
          bool greatest = true;
          for (Elem w = 0; w < n && greatest; ++w)
            if (L.le(w, x) && L.le(w, y) && !L.le(w, z)) greatest = false;
          if (greatest) glb = z;
        }
        if (L.le(x, z) && L.le(y, z)) {
          bool least = true;
          for (Elem w = 0; w < n && least; ++w)
            if (L.le(x, w) && L.le(y, w) && !L.le(z, w)) least = false;
          if (least) lub = z;
        }
      }
      if (!glb)
        fail(Err::NotALattice, "pair (" + L.label(x) + "," + L.label(y) +
                                   ") has no greatest lower bound");
      if (!lub)
        fail(Err::NotALattice, "pair (" + L.label(x) + "," + L.label(y) +
                                   ") has no least upper bound");
      L.meet_table[x][y] = *glb;
      L.join_table[x][y] = *lub;
    }
  }
  return L;
}

Lattice build_lattice(std::string name, const std::vector<std::string>& labels,
                      const std::vector<std::pair<std::string, std::string>>& covers) {
  const int n = static_cast<int>(labels.size());
  std::map<std::string, Elem> index;
  for (Elem x = 0; x < n; ++x) {
    if (index.count(labels[x]))
      fail(Err::DuplicateLabel, "duplicate element label '" + labels[x] + "'");
    index[labels[x]] = x;
  }

  std::vector<std::vector<char>> step(n, std::vector<char>(n, 0));
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) fail(Err::UnknownLabel, "unknown element '" + lo + "'");
    if (b == index.end()) fail(Err::UnknownLabel, "unknown element '" + hi + "'");
    step[a->second][b->second] = 1;
  }

  // Reflexive-transitive closure; a cycle shows up as x < y < x.
  std::vector<std::vector<char>> leq = step;
  for (Elem x = 0; x < n; ++x) leq[x][x] = 1;
  for (Elem k = 0; k < n; ++k)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (leq[x][k] && leq[k][y]) leq[x][y] = 1;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (x != y && leq[x][y] && leq[y][x])
        fail(Err::CyclicCovers, "cover relation has a cycle through '" +
                                    labels[x] + "'");

  return lattice_from_order(std::move(name), labels, std::move(leq));
}

IdiomReport validate_idiom(const Lattice& L) {
  IdiomReport r;
  r.is_lattice = true;
  r.is_modular = true;
  r.is_distributive = true;
  const int n = L.size;

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!L.le(a, b)) continue;
      for (Elem c = 0; c < n; ++c)
        if (L.meet(L.join(a, c), b) != L.join(a, L.meet(c, b))) {
          if (r.is_modular) r.first_violation = Witness{a, b, c};
          r.is_modular = false;
        }
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) {
          if (r.is_modular && r.is_distributive)
            r.first_violation = Witness{a, b, c};
          r.is_distributive = false;
        }

  r.is_boolean = r.is_distributive;
  for (Elem x = 0; x < n && r.is_boolean; ++x)
    if (!has_complement(L, x)) {
      r.is_boolean = false;
      if (!r.first_violation) r.first_violation = Witness{x, L.bottom, L.top};
    }
  return r;
}

Elem meet_all(const Lattice& L, std::span<const Elem> xs) {
  Elem acc = L.top;
  for (Elem x : xs) acc = L.meet(acc, x);
  return acc;
}

Elem join_all(const Lattice& L, std::span<const Elem> xs) {
  Elem acc = L.bottom;
  for (Elem x : xs) acc = L.join(acc, x);
  return acc;
}

static void require_in_interval(const Lattice& L, Elem x, Elem a, Elem b) {
  if (!L.le(a, x) || !L.le(x, b))
    fail(Err::OutOfInterval, L.label(x) + " is not in [" + L.label(a) + "," +
                                 L.label(b) + "]");
}

bool is_essential(const Lattice& L, Elem x, Elem a, Elem b) {
  require_in_interval(L, x, a, b);
  for (Elem y = 0; y < L.size; ++y)
    if (L.le(a, y) && L.le(y, b) && L.meet(x, y) == a && y != a) return false;
  return true;
}

std::vector<Elem> pseudocomplements(const Lattice& L, Elem x, Elem a, Elem b) {
  require_in_interval(L, x, a, b);
  std::vector<Elem> candidates;
  for (Elem y = 0; y < L.size; ++y)
    if (L.le(a, y) && L.le(y, b) && L.meet(x, y) == a) candidates.push_back(y);
  std::vector<Elem> maximal;
  for (Elem y : candidates) {
    bool is_max = true;
    for (Elem z : candidates)
      if (z != y && L.lt(y, z)) is_max = false;
    if (is_max) maximal.push_back(y);
  }
  return maximal;
}

std::vector<Elem> complements_in(const Lattice& L, Elem x, Elem a, Elem b) {
  require_in_interval(L, x, a, b);
  std::vector<Elem> out;
  for (Elem y = 0; y < L.size; ++y)
    if (L.le(a, y) && L.le(y, b) && L.meet(x, y) == a && L.join(x, y) == b)
      out.push_back(y);
  return out;
}

bool has_complement(const Lattice& L, Elem x) {
  return !complements_in(L, x, L.bottom, L.top).empty();
}

bool is_meet_irreducible(const Lattice& L, Elem a) {
  for (Elem x = 0; x < L.size; ++x)
    for (Elem y = 0; y < L.size; ++y)
      if (L.le(L.meet(x, y), a) && !L.le(x, a) && !L.le(y, a)) return false;
  return true;
}

int uniform_dimension(const Lattice& L) {
  std::vector<Elem> nonbottom;
  for (Elem x = 0; x < L.size; ++x)
    if (x != L.bottom) nonbottom.push_back(x);
  const int m = static_cast<int>(nonbottom.size());
  int best = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    const int k = std::popcount(mask);
    if (k <= best) continue;
    bool independent = true;
    for (int i = 0; i < m && independent; ++i) {
      if (!(mask & (1u << i))) continue;
      Elem rest = L.bottom;
      for (int j = 0; j < m; ++j)
        if (j != i && (mask & (1u << j))) rest = L.join(rest, nonbottom[j]);
      independent = L.meet(nonbottom[i], rest) == L.bottom;
    }
    if (independent) best = k;
  }
  return best;
}

Lattice dual(const Lattice& L) {
  Lattice D;
  D.name = L.name + "^op";
  D.size = L.size;
  D.labels = L.labels;
  D.leq.assign(L.size, std::vector<char>(L.size, 0));
  for (Elem x = 0; x < L.size; ++x)
    for (Elem y = 0; y < L.size; ++y) D.leq[x][y] = L.leq[y][x];
  D.meet_table = L.join_table;
  D.join_table = L.meet_table;
  D.bottom = L.top;
  D.top = L.bottom;
  return D;
}

Elem cbd0(const Lattice& L) {
  Elem acc = L.top;
  for (Elem x = 0; x < L.size; ++x)
    if (is_essential(L, x, L.bottom, L.top)) acc = L.meet(acc, x);
  return acc;
}

Elem soc0(const Lattice& L) {
  auto a = L.atoms();
  return join_all(L, a);
}

bool satisfies_C1(const Lattice& L) {
  for (Elem a = 0; a < L.size; ++a) {
    bool found = false;
    for (Elem c = 0; c < L.size && !found; ++c)
      found = L.le(a, c) && has_complement(L, c) &&
              is_essential(L, a, L.bottom, c);
    if (!found) return false;
  }
  return true;
}

bool satisfies_CSP(const Lattice& L, bool strong) {
  std::vector<Elem> comp;
  for (Elem x = 0; x < L.size; ++x)
    if (has_complement(L, x)) comp.push_back(x);
  auto complemented = [&](Elem x) {
    return std::find(comp.begin(), comp.end(), x) != comp.end();
  };
  if (!strong) {
    for (Elem x : comp)
      for (Elem y : comp)
        if (!complemented(L.join(x, y))) return false;
    return true;
  }
  const int m = static_cast<int>(comp.size());
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    Elem acc = L.bottom;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) acc = L.join(acc, comp[i]);
    if (!complemented(acc)) return false;
  }
  return true;
}

}  // namespace idiom
