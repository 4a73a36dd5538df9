#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pgi/genenum.hpp"
#include "pgi/series_canon.hpp"

namespace pgi {

enum class Route { Series, GenEnum };

struct RouteDecision {
  int n = 0;
  int p = 0;
  double alpha = 0.0;  // log2 n / log2 log2 n; +inf at n = 2
  Route chosen = Route::Series;
  std::optional<Route> forced;
};

// Series route iff p <= alpha, ties included; force overrides. Requires
// n >= 2 (the trivial group short-circuits in iso/canon).
RouteDecision decide_route(const GroupProfile& pr, std::optional<Route> force = {});

// Isomorphism through the chosen route. Series route: fix the first
// enumerated series of g and scan all series of h; generator route: delegate.
std::optional<IsoMap> iso(const GroupTable& g, const GroupTable& h,
                          std::optional<Route> force = {});

// Canonical form through the chosen route. Series route: lexicographically
// least table over the canonized series; generator route: gen_enum_canon.
GroupTable canon(const GroupTable& g, std::optional<Route> force = {});

enum class Family {
  Cyclic,
  ElementaryAbelian,
  Dihedral,
  Quaternion,
  Heisenberg,
  DirectProduct,
};

struct FamilySpec {
  Family family;
  int p = 0;                 // prime parameter (cyclic, elementary-abelian, heisenberg)
  int k = 0;                 // exponent or degree
  std::vector<int> factors;  // cyclic factor orders (direct-product)
};

// Deterministic element numbering per family: cyclic p^k by generator powers;
// elementary abelian by lexicographic vectors; dihedral rotations then
// reflections; quaternion 1,-1,i,-i,j,-j,k,-k; heisenberg by lexicographic
// (m12, m13, m23) entries; direct-product by lexicographic tuples.
GroupTable generate_family(const FamilySpec& spec);

// table'[perm(a)][perm(b)] = perm(table[a][b]); perm is 1-based with slot 0
// unused, like IsoMap.
GroupTable relabel(const GroupTable& g, const std::vector<int>& perm);

// Fisher-Yates over mt19937_64, fully specified so seeds give identical
// permutations everywhere. Returns a 1-based permutation (slot 0 = 0).
std::vector<int> random_permutation(int n, std::uint64_t seed);

}  // namespace pgi
